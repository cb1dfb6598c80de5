//! Collapse of a linear form onto a single coordinate without increasing the
//! ℓ1 norm of the point.
//!
//! Given coefficients `α` and a point `z`, [`collapse`] returns `z*` with
//! `Σ α_k z*_k = Σ α_k z_k`, `Σ |z*_k| ≤ Σ |z_k|`, and at most one nonzero
//! coordinate. Coordinates are merged pairwise: the contribution `α_p z_p`
//! is moved onto the partner `q` with the larger `|α|` as
//! `z_q ← z_q + α_p z_p / α_q`, which keeps the form and adds at most
//! `|α_p| |z_p| / |α_q| ≤ |z_p|` to the norm.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::sum::{sum_complex, sum_real};
use crate::types::{check_finite, Complex, ZERO};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearFormInstance {
    pub alphas: Vec<Complex>,
    pub zs: Vec<Complex>,
}

impl LinearFormInstance {
    pub fn new(alphas: Vec<Complex>, zs: Vec<Complex>) -> Result<Self> {
        if alphas.len() != zs.len() {
            return Err(Error::Dimension(format!(
                "{} coefficients but {} points",
                alphas.len(),
                zs.len()
            )));
        }
        check_finite(&alphas)?;
        check_finite(&zs)?;
        Ok(Self { alphas, zs })
    }

    pub fn value(&self) -> Complex {
        linear_form(&self.alphas, &self.zs)
    }
}

pub fn linear_form(alphas: &[Complex], zs: &[Complex]) -> Complex {
    sum_complex(alphas.iter().zip(zs).map(|(&a, &z)| a * z))
}

pub fn l1_norm(zs: &[Complex]) -> f64 {
    sum_real(zs.iter().map(|z| z.norm()))
}

pub fn collapse(inst: &LinearFormInstance) -> Vec<Complex> {
    let alphas = &inst.alphas;
    let mut out = inst.zs.clone();
    let mut carrier: Option<usize> = None;
    for k in 0..out.len() {
        if alphas[k] == ZERO {
            out[k] = ZERO;
            continue;
        }
        if out[k] == ZERO {
            continue;
        }
        let Some(q) = carrier else {
            carrier = Some(k);
            continue;
        };
        // keep the larger |α|; ties keep the lower index, which is q
        let (keep, drop) = if alphas[k].norm() > alphas[q].norm() { (k, q) } else { (q, k) };
        let moved = alphas[drop] * out[drop] / alphas[keep];
        out[keep] += moved;
        out[drop] = ZERO;
        carrier = (out[keep] != ZERO).then_some(keep);
    }
    out
}
