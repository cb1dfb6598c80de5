//! Operations shared by matrices and tensors, so the approximation pipeline
//! and the zero scan are written once.

use crate::dominance::{self, DominanceReport, NormalizedProblem};
use crate::error::Result;
use crate::exact;
use crate::types::{Complex, ComplexMatrix, ComplexTensor, WorkCaps};

pub trait SquareArray: Clone + Send + Sync {
    /// Side length `n`.
    fn side(&self) -> usize;

    /// Number of axes; 2 for matrices.
    fn dimension(&self) -> usize;

    fn dominance(&self) -> DominanceReport;

    /// Exact `per(I + zA)` (or `PER` for tensors), subject to `caps`.
    fn shifted_permanent(&self, z: Complex, caps: &WorkCaps) -> Result<Complex>;

    /// Exact permanent of the principal restriction to `idx`, uncapped.
    /// Callers bound the work beforehand with [`SquareArray::subset_work`].
    fn principal_permanent(&self, idx: &[usize]) -> Complex;

    /// Nominal product count for one `k`-subset in [`SquareArray::principal_permanent`].
    fn subset_work(&self, k: usize) -> f64;

    fn strip_diagonal(&self) -> Result<NormalizedProblem<Self>>;
}

impl SquareArray for ComplexMatrix {
    fn side(&self) -> usize {
        self.n()
    }

    fn dimension(&self) -> usize {
        2
    }

    fn dominance(&self) -> DominanceReport {
        dominance::check_dominance_matrix(self)
    }

    fn shifted_permanent(&self, z: Complex, caps: &WorkCaps) -> Result<Complex> {
        exact::permanent_ryser_capped(&self.shifted(z), caps.ryser_max_n)
    }

    fn principal_permanent(&self, idx: &[usize]) -> Complex {
        exact::ryser_on(self, idx)
    }

    fn subset_work(&self, k: usize) -> f64 {
        k as f64 * 2f64.powi(k as i32)
    }

    fn strip_diagonal(&self) -> Result<NormalizedProblem<Self>> {
        dominance::strip_diagonal_matrix(self)
    }
}

impl SquareArray for ComplexTensor {
    fn side(&self) -> usize {
        self.n()
    }

    fn dimension(&self) -> usize {
        self.d()
    }

    fn dominance(&self) -> DominanceReport {
        dominance::check_dominance_tensor(self)
    }

    fn shifted_permanent(&self, z: Complex, caps: &WorkCaps) -> Result<Complex> {
        exact::permanent_tensor_capped(&self.shifted(z), caps.tensor_products)
    }

    fn principal_permanent(&self, idx: &[usize]) -> Complex {
        exact::tensor_permanent_on(self, idx)
    }

    fn subset_work(&self, k: usize) -> f64 {
        k as f64 * exact::tensor_product_count(self.d(), k)
    }

    fn strip_diagonal(&self) -> Result<NormalizedProblem<Self>> {
        dominance::strip_diagonal_tensor(self)
    }
}
