//! Dominance checks and reduction to the `I + A` form.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::types::{Complex, ComplexMatrix, ComplexTensor, ZERO};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DominanceForm {
    /// `A` of `I + A` with an exactly-zero diagonal.
    ZeroDiagonalA,
    /// `A` of `I + A` with some nonzero diagonal entry.
    ShiftedIPlusA,
    /// A general matrix `B`; sums are `Σ_{j≠i} |b_ij| / |b_ii|`.
    GeneralB,
}

/// Per-row (per axis-0 slice) ℓ1 mass and the resulting admissibility.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DominanceReport {
    pub row_sums: Vec<f64>,
    pub effective_lambda: f64,
    pub admissible: bool,
    pub form: DominanceForm,
}

impl DominanceReport {
    fn from_sums(row_sums: Vec<f64>, form: DominanceForm) -> Self {
        let effective_lambda = row_sums.iter().copied().fold(0.0, f64::max);
        // NaN/inf never count as admissible
        let admissible = effective_lambda < 1.0 && row_sums.iter().all(|s| s.is_finite());
        Self { row_sums, effective_lambda, admissible, form }
    }
}

fn l1(entries: &[Complex]) -> f64 {
    crate::sum::sum_real(entries.iter().map(|z| z.norm()))
}

pub fn check_dominance_matrix(a: &ComplexMatrix) -> DominanceReport {
    let n = a.n();
    let sums = (0..n).map(|i| l1(a.row(i))).collect();
    let zero_diag = (0..n).all(|i| a.get(i, i) == ZERO);
    let form = if zero_diag { DominanceForm::ZeroDiagonalA } else { DominanceForm::ShiftedIPlusA };
    DominanceReport::from_sums(sums, form)
}

pub fn check_dominance_tensor(a: &ComplexTensor) -> DominanceReport {
    let n = a.n();
    let sums = (0..n).map(|i| l1(a.slice0(i))).collect();
    let zero_diag = (0..n).all(|i| a.get(&vec![i; a.d()]) == ZERO);
    let form = if zero_diag { DominanceForm::ZeroDiagonalA } else { DominanceForm::ShiftedIPlusA };
    DominanceReport::from_sums(sums, form)
}

/// Strong diagonal dominance of a general `B`: row `i` reports
/// `Σ_{j≠i} |b_ij| / |b_ii|` (infinite when `b_ii = 0`).
pub fn check_strong_dominance(b: &ComplexMatrix) -> DominanceReport {
    let n = b.n();
    let sums = (0..n)
        .map(|i| {
            let diag = b.get(i, i).norm();
            let off = crate::sum::sum_real((0..n).filter(|&j| j != i).map(|j| b.get(i, j).norm()));
            if diag == 0.0 {
                if off == 0.0 { 0.0 } else { f64::INFINITY }
            } else {
                off / diag
            }
        })
        .collect();
    DominanceReport::from_sums(sums, DominanceForm::GeneralB)
}

/// An `I + A` problem with zero-diagonal `A`, plus the log of the factor
/// that was divided out: `per(original) = exp(log_prefactor) · per(I + a)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct NormalizedProblem<T> {
    pub a: T,
    /// Sum of per-factor principal logs; the imaginary part is not reduced
    /// mod 2π.
    pub log_prefactor: Complex,
    pub report: DominanceReport,
}

/// Row-scale a strongly diagonally dominant `B` (`λ|b_ii| ≥ Σ_{j≠i}|b_ij|`)
/// to `I + A`, `a_ij = b_ij / b_ii` off the diagonal.
pub fn normalize_strongly_dominant(b: &ComplexMatrix, lambda: f64) -> Result<NormalizedProblem<ComplexMatrix>> {
    if !(lambda > 0.0 && lambda < 1.0) {
        return Err(Error::InvalidParameter(format!("lambda must lie in (0, 1), got {lambda}")));
    }
    let n = b.n();
    if let Some(i) = (0..n).find(|&i| b.get(i, i) == ZERO) {
        return Err(Error::SingularScaling(i));
    }
    for i in 0..n {
        let off = crate::sum::sum_real((0..n).filter(|&j| j != i).map(|j| b.get(i, j).norm()));
        if off > lambda * b.get(i, i).norm() {
            return Err(Error::Inadmissible(format!(
                "row {i}: off-diagonal mass {off} exceeds lambda * |b_ii| = {}",
                lambda * b.get(i, i).norm()
            )));
        }
    }
    let a = ComplexMatrix::from_fn(n, |i, j| if i == j { ZERO } else { b.get(i, j) / b.get(i, i) });
    let log_prefactor = crate::sum::sum_complex((0..n).map(|i| b.get(i, i).ln()));
    let report = check_dominance_matrix(&a);
    Ok(NormalizedProblem { a, log_prefactor, report })
}

fn require_admissible(report: &DominanceReport) -> Result<()> {
    if report.admissible {
        Ok(())
    } else {
        Err(Error::Inadmissible(format!(
            "largest row/slice l1 mass is {}, must be < 1",
            report.effective_lambda
        )))
    }
}

/// Divide row `i` of `I + A` by `1 + a_ii`, leaving `I + A'` with zero-diagonal `A'`.
pub fn strip_diagonal_matrix(a: &ComplexMatrix) -> Result<NormalizedProblem<ComplexMatrix>> {
    require_admissible(&check_dominance_matrix(a))?;
    let n = a.n();
    let out = ComplexMatrix::from_fn(n, |i, j| if i == j { ZERO } else { a.get(i, j) / (1.0 + a.get(i, i)) });
    let log_prefactor = crate::sum::sum_complex((0..n).map(|i| (1.0 + a.get(i, i)).ln()));
    let report = check_dominance_matrix(&out);
    Ok(NormalizedProblem { a: out, log_prefactor, report })
}

/// Tensor analogue: every non-diagonal entry of axis-0 slice `i` is divided
/// by `1 + a_{i…i}`.
pub fn strip_diagonal_tensor(a: &ComplexTensor) -> Result<NormalizedProblem<ComplexTensor>> {
    require_admissible(&check_dominance_tensor(a))?;
    let (d, n) = (a.d(), a.n());
    let diag: Vec<Complex> = (0..n).map(|i| a.get(&vec![i; d])).collect();
    let mut out = a.clone();
    let slice_len = out.entries().len() / n.max(1);
    for (i, &di) in diag.iter().enumerate() {
        let diag_off = a.offset(&vec![i; d]);
        let scale = 1.0 + di;
        for p in i * slice_len..(i + 1) * slice_len {
            let e = &mut out.entries_mut()[p];
            *e = if p == diag_off { ZERO } else { *e / scale };
        }
    }
    let log_prefactor = crate::sum::sum_complex(diag.iter().map(|&di| (1.0 + di).ln()));
    let report = check_dominance_tensor(&out);
    Ok(NormalizedProblem { a: out, log_prefactor, report })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::types::ONE;

    fn c(re: f64, im: f64) -> Complex {
        Complex::new(re, im)
    }

    #[test]
    fn zero_matrix_is_admissible() {
        let r = check_dominance_matrix(&ComplexMatrix::zeros(3));
        assert_eq!(r.effective_lambda, 0.0);
        assert!(r.admissible);
        assert_eq!(r.form, DominanceForm::ZeroDiagonalA);
        let r = check_dominance_tensor(&ComplexTensor::zeros(3, 2).unwrap());
        assert!(r.admissible);
        assert_eq!(r.effective_lambda, 0.0);
    }

    #[test]
    fn heavy_row_is_inadmissible() {
        let m = ComplexMatrix::from_fn(4, |i, _| if i == 2 { c(0.3, 0.0) } else { ZERO });
        let r = check_dominance_matrix(&m);
        assert!((r.row_sums[2] - 1.2).abs() < 1e-15);
        assert!(!r.admissible);
        assert_eq!(r.form, DominanceForm::ShiftedIPlusA);
    }

    #[test]
    fn equality_is_rejected() {
        let m = ComplexMatrix::new(2, vec![ZERO, ONE, ZERO, ZERO]).unwrap();
        let r = check_dominance_matrix(&m);
        assert_eq!(r.effective_lambda, 1.0);
        assert!(!r.admissible);
    }

    #[test]
    fn block_family_lambda() {
        let lambda = 0.5;
        let m = ComplexMatrix::from_fn(6, |i, j| {
            if i != j && i / 2 == j / 2 {
                c(0.0, lambda)
            } else {
                ZERO
            }
        });
        let r = check_dominance_matrix(&m);
        assert_eq!(r.effective_lambda, lambda);
        assert!(r.admissible);
    }

    #[test]
    fn tensor_slice_sums() {
        let mut t = ComplexTensor::zeros(3, 3).unwrap();
        let off = t.offset(&[0, 1, 2]);
        t.entries_mut()[off] = c(0.9, 0.0);
        let r = check_dominance_tensor(&t);
        assert_eq!(r.row_sums, vec![0.9, 0.0, 0.0]);
        assert!(r.admissible);
    }

    #[test]
    fn diagonal_b_normalizes_to_zero() {
        let diag = [c(2.0, 1.0), c(-1.0, 0.5), c(0.3, -3.0)];
        let b = ComplexMatrix::from_fn(3, |i, j| if i == j { diag[i] } else { ZERO });
        let p = normalize_strongly_dominant(&b, 0.5).unwrap();
        assert_eq!(p.a, ComplexMatrix::zeros(3));
        let prod: Complex = diag.iter().product();
        assert!((p.log_prefactor.exp() - prod).norm() < 1e-14);
        assert_eq!(p.report.form, DominanceForm::ZeroDiagonalA);
    }

    #[test]
    fn scaled_identity_plus_a() {
        let a0 = ComplexMatrix::new(2, vec![ZERO, c(0.1, 0.2), c(-0.3, 0.0), ZERO]).unwrap();
        let b = a0.shifted(ONE).scale(c(2.0, 0.0));
        let p = normalize_strongly_dominant(&b, 0.5).unwrap();
        assert_eq!(p.a, a0);
        assert!((p.log_prefactor - c(2.0 * 2f64.ln(), 0.0)).norm() < 1e-15);
    }

    #[test]
    fn normalize_errors() {
        let b = ComplexMatrix::new(2, vec![ONE, c(0.1, 0.0), c(0.1, 0.0), ZERO]).unwrap();
        assert_eq!(normalize_strongly_dominant(&b, 0.5), Err(Error::SingularScaling(1)));
        let b = ComplexMatrix::new(2, vec![ONE, c(0.6, 0.0), ZERO, ONE]).unwrap();
        assert!(matches!(normalize_strongly_dominant(&b, 0.5), Err(Error::Inadmissible(_))));
        assert!(normalize_strongly_dominant(&b, 1.0).is_err());
        let r = check_strong_dominance(&b);
        assert_eq!(r.form, DominanceForm::GeneralB);
        assert!((r.row_sums[0] - 0.6).abs() < 1e-15);
    }

    #[test]
    fn strip_zero_diagonal_is_noop() {
        let a = ComplexMatrix::new(2, vec![ZERO, c(0.2, 0.1), c(0.3, 0.0), ZERO]).unwrap();
        let p = strip_diagonal_matrix(&a).unwrap();
        assert_eq!(p.a, a);
        assert_eq!(p.log_prefactor, ZERO);
    }

    #[test]
    fn strip_diagonal_only() {
        let diag = [c(0.2, 0.1), c(-0.5, 0.0), c(0.0, 0.7)];
        let a = ComplexMatrix::from_fn(3, |i, j| if i == j { diag[i] } else { ZERO });
        let p = strip_diagonal_matrix(&a).unwrap();
        assert_eq!(p.a, ComplexMatrix::zeros(3));
        let expect = crate::sum::sum_complex(diag.iter().map(|&x| (ONE + x).ln()));
        assert!((p.log_prefactor - expect).norm() < 1e-15);
    }

    #[test]
    fn strip_rejects_inadmissible() {
        let a = ComplexMatrix::new(1, vec![c(-1.0, 0.0)]).unwrap();
        assert!(matches!(strip_diagonal_matrix(&a), Err(Error::Inadmissible(_))));
        let t = ComplexTensor::from_fn(3, 2, |_| c(0.3, 0.0)).unwrap();
        assert!(matches!(strip_diagonal_tensor(&t), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn report_json_keys() {
        let r = check_dominance_matrix(&ComplexMatrix::zeros(1));
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["row_sums"], serde_json::json!([0.0]));
        assert_eq!(v["effective_lambda"], serde_json::json!(0.0));
        assert_eq!(v["admissible"], serde_json::json!(true));
    }
}
