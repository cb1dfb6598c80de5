//! Taylor interpolation of `f(z) = ln per(I + zA)` at `z = 0`.
//!
//! The derivatives `g^(k)(0) = k! Σ_{|I| = k} per A_I` of `g(z) = per(I + zA)`
//! come from enumerating principal restrictions; the derivatives of `f`
//! follow from the triangular system
//! `Σ_{j<k} C(k-1, j) f^(k-j)(0) g^(j)(0) = g^(k)(0)`; and `f(1)` is
//! approximated by `T_m(1) = Σ_{k≤m} f^(k)(0)/k!`. When every row or axis-0
//! slice of `A` has ℓ1 mass at most `λ < 1`, `g` has no zeros in
//! `|z| < 1/λ` and
//!
//! ```text
//! |f(1) - T_m(1)| <= n λ^(m+1) / ((m+1)(1-λ)).
//! ```
//!
//! Tensors use the same bound with the axis-0 slice sums as `λ`; their `g`
//! also has degree at most `n`.

mod scan;

pub use scan::{default_scan_radius, zero_scan, ScanGrid, ZeroScanReport};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::array::SquareArray;
use crate::combin::{binomial, binomial_f64, factorials, next_combination, pascal_rows, unrank_combination};
use crate::error::{Error, Result};
use crate::sum::{sum_complex, ComplexSum};
use crate::types::{ApproxConfig, Complex, ComplexMatrix, ComplexTensor, WorkCaps, ONE, ZERO};

/// Highest Taylor order accepted; keeps the exact binomials in range.
pub const MAX_ORDER: usize = 120;

/// Subsets handed to one worker. Fixed so that the reduction tree, and hence
/// every bit of the result, is independent of the thread count.
const SUBSETS_PER_CHUNK: u128 = 256;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaylorResult {
    #[serde(rename = "m")]
    pub order_m: usize,
    /// `T_m(1)`.
    pub value: Complex,
    /// Certified bound on `|f(1) - T_m(1)|`.
    pub error_bound: f64,
    /// The λ that went into the order choice and the bound.
    pub lambda: f64,
    pub g_derivs: Vec<Complex>,
    pub f_derivs: Vec<Complex>,
}

/// `n λ^(m+1) / ((m+1)(1-λ))`.
pub fn error_bound(n: usize, lambda: f64, m: usize) -> f64 {
    n as f64 * lambda.powi(m as i32 + 1) / ((m as f64 + 1.0) * (1.0 - lambda))
}

/// Smallest `m ≥ 0` whose [`error_bound`] is at most `epsilon`.
pub fn choose_order(n: usize, lambda: f64, epsilon: f64) -> usize {
    assert!((0.0..1.0).contains(&lambda), "lambda must lie in [0, 1)");
    assert!(epsilon > 0.0, "epsilon must be positive");
    let mut m = 0;
    while error_bound(n, lambda, m) > epsilon {
        m += 1;
    }
    m
}

/// Total enumeration work for orders `1..=min(m, n)`.
pub fn taylor_work<A: SquareArray>(a: &A, m: usize) -> f64 {
    let n = a.side();
    (1..=m.min(n)).map(|k| binomial_f64(n, k) * a.subset_work(k)).sum()
}

/// `g^(k)(0)` for `k = 0..=m`; orders above `n` are zero since `deg g ≤ n`.
pub fn g_derivatives<A: SquareArray>(a: &A, m: usize, caps: &WorkCaps) -> Result<Vec<Complex>> {
    let n = a.side();
    let work = taylor_work(a, m);
    if work > caps.taylor_work {
        return Err(Error::SizeCap { what: "Taylor subset enumeration", needed: work, cap: caps.taylor_work });
    }
    let fact = factorials(m);
    let mut out = Vec::with_capacity(m + 1);
    out.push(ONE);
    for k in 1..=m {
        if k > n {
            out.push(ZERO);
        } else {
            out.push(fact[k] * principal_sum(a, k));
        }
    }
    Ok(out)
}

pub fn g_derivatives_matrix(a: &ComplexMatrix, m: usize, caps: &WorkCaps) -> Result<Vec<Complex>> {
    g_derivatives(a, m, caps)
}

pub fn g_derivatives_tensor(a: &ComplexTensor, m: usize, caps: &WorkCaps) -> Result<Vec<Complex>> {
    g_derivatives(a, m, caps)
}

/// `Σ_{|I| = k} per A_I`, summed over contiguous lexicographic chunks in
/// parallel and reduced in chunk order.
fn principal_sum<A: SquareArray>(a: &A, k: usize) -> Complex {
    let n = a.side();
    let total = binomial(n as u64, k as u64).expect("subset count overflow");
    let chunks = total.div_ceil(SUBSETS_PER_CHUNK);
    let partials: Vec<Complex> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let start = c * SUBSETS_PER_CHUNK;
            let len = SUBSETS_PER_CHUNK.min(total - start);
            let mut subset = unrank_combination(n, k, start);
            let mut acc = ComplexSum::new();
            for i in 0..len {
                acc.add(a.principal_permanent(&subset));
                if i + 1 < len {
                    next_combination(&mut subset, n);
                }
            }
            acc.value()
        })
        .collect();
    sum_complex(partials)
}

/// Solve for `f^(k)(0)`, `k = 0..=m`, given `g^(k)(0)` with `g(0) = 1`, by
/// forward substitution.
pub fn log_derivatives(g_derivs: &[Complex]) -> Result<Vec<Complex>> {
    match g_derivs.first() {
        Some(&g0) if g0 == ONE => {}
        Some(&g0) => return Err(Error::Normalization(g0)),
        None => return Err(Error::Normalization(ZERO)),
    }
    let m = g_derivs.len() - 1;
    if m > MAX_ORDER {
        return Err(Error::SizeCap { what: "Taylor order", needed: m as f64, cap: MAX_ORDER as f64 });
    }
    let binom = pascal_rows(m.saturating_sub(1));
    let mut f = vec![ZERO; m + 1];
    for k in 1..=m {
        let mut acc = ComplexSum::new();
        acc.add(g_derivs[k]);
        for j in 1..k {
            acc.sub(binom[k - 1][j] * f[k - j] * g_derivs[j]);
        }
        f[k] = acc.value();
    }
    Ok(f)
}

/// `T_m(1) = Σ_k f^(k)(0) / k!`.
pub fn taylor_value(f_derivs: &[Complex]) -> Complex {
    let fact = factorials(f_derivs.len().saturating_sub(1));
    sum_complex(f_derivs.iter().zip(&fact).map(|(&f, &k)| f / k))
}

/// Approximate `ln per(I + A)` (or `ln PER(I + A)`) on the branch continued
/// from `ln per(I) = 0` along `z ∈ [0, 1]`.
///
/// The input must be admissible. If `cfg.lambda` is set, the measured
/// effective λ may not exceed it; the measured value is what enters the order
/// choice and the certificate.
pub fn approx_log_permanent<A: SquareArray>(a: &A, cfg: &ApproxConfig) -> Result<TaylorResult> {
    let report = a.dominance();
    if !report.admissible {
        return Err(Error::Inadmissible(format!(
            "largest row/slice l1 mass is {}, must be < 1",
            report.effective_lambda
        )));
    }
    let measured = report.effective_lambda;
    if let Some(l) = cfg.lambda {
        if measured > l {
            return Err(Error::Inadmissible(format!("measured lambda {measured} exceeds the requested bound {l}")));
        }
    }
    let n = a.side();
    let m = match cfg.order_override {
        Some(m) => m,
        None => choose_order(n, measured, cfg.epsilon),
    };
    if m > MAX_ORDER {
        return Err(Error::SizeCap { what: "Taylor order", needed: m as f64, cap: MAX_ORDER as f64 });
    }
    let g_derivs = g_derivatives(a, m, &cfg.caps)?;
    let f_derivs = log_derivatives(&g_derivs)?;
    Ok(TaylorResult {
        order_m: m,
        value: taylor_value(&f_derivs),
        error_bound: error_bound(n, measured, m),
        lambda: measured,
        g_derivs,
        f_derivs,
    })
}
