//! Empirical zero-freeness check: `|per(I + zA)|` on a polar grid.

use std::f64::consts::PI;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::array::SquareArray;
use crate::dominance::DominanceReport;
use crate::error::{Error, Result};
use crate::types::{Complex, WorkCaps};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanGrid {
    pub radial: usize,
    pub angular: usize,
}

impl Default for ScanGrid {
    fn default() -> Self {
        Self { radial: 64, angular: 64 }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ZeroScanReport {
    pub radius: f64,
    pub radial: usize,
    pub angular: usize,
    pub min_modulus: f64,
    /// Grid point where `min_modulus` was attained (first in scan order).
    pub argmin: Complex,
    /// `|g|` at every grid point, radial-major: ring `i` has radius
    /// `radius·(i+1)/radial`, ray `j` has angle `2πj/angular`.
    pub moduli: Vec<f64>,
}

/// `0.99/λ_eff`, or 1 when `λ_eff = 0`.
pub fn default_scan_radius(report: &DominanceReport) -> f64 {
    if report.effective_lambda > 0.0 {
        0.99 / report.effective_lambda
    } else {
        1.0
    }
}

pub fn zero_scan<A: SquareArray>(a: &A, radius: f64, grid: ScanGrid, caps: &WorkCaps) -> Result<ZeroScanReport> {
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::InvalidParameter(format!("scan radius must be positive, got {radius}")));
    }
    if grid.radial == 0 || grid.angular == 0 {
        return Err(Error::InvalidParameter("scan grid must be non-empty".into()));
    }
    let point = |p: usize| {
        let (i, j) = (p / grid.angular, p % grid.angular);
        let r = radius * (i + 1) as f64 / grid.radial as f64;
        Complex::from_polar(r, 2.0 * PI * j as f64 / grid.angular as f64)
    };
    let moduli = (0..grid.radial * grid.angular)
        .into_par_iter()
        .map(|p| a.shifted_permanent(point(p), caps).map(|g| g.norm()))
        .collect::<Result<Vec<f64>>>()?;
    let (best, &min_modulus) = moduli
        .iter()
        .enumerate()
        .min_by(|x, y| x.1.total_cmp(y.1))
        .expect("grid is non-empty");
    Ok(ZeroScanReport {
        radius,
        radial: grid.radial,
        angular: grid.angular,
        min_modulus,
        argmin: point(best),
        moduli,
    })
}
