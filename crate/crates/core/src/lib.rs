//! Approximate `ln per(I + A)` for complex matrices, and `ln PER(I + A)` for
//! `d`-dimensional tensors, when each row (axis-0 slice) of `A` has ℓ1 mass
//! below 1. The log-permanent is replaced by a low-order Taylor polynomial of
//! `z ↦ ln per(I + zA)` at `z = 0`, with a certified additive error bound.
//!
//! Exact permanents ([`exact`]) serve as oracles, [`dominance`] checks and
//! normalizes inputs, [`taylor`] runs the approximation, [`hypergraph`]
//! applies it to weighted perfect-matching counts, and [`reduction`] holds
//! the linear-form collapse used in the zero-freeness argument.

pub mod array;
pub mod combin;
pub mod dominance;
pub mod error;
pub mod exact;
pub mod generate;
pub mod hypergraph;
pub mod reduction;
pub mod sum;
pub mod taylor;
pub mod types;

pub use array::SquareArray;
pub use dominance::{
    check_dominance_matrix, check_dominance_tensor, check_strong_dominance, normalize_strongly_dominant,
    strip_diagonal_matrix, strip_diagonal_tensor, DominanceForm, DominanceReport, NormalizedProblem,
};
pub use error::{Error, Result};
pub use exact::{
    branch_tracked_log_permanent, permanent_definitional, permanent_ryser, permanent_tensor,
    permanent_tensor_slice_expansion, principal_submatrix, principal_subtensor,
};
pub use hypergraph::{
    encode_tensor, enumerate_matchings, matching_stats, normalize_base_matching, DPartiteHypergraph, Matching,
    MatchingStatsResult,
};
pub use reduction::{collapse, LinearFormInstance};
pub use taylor::{
    approx_log_permanent, choose_order, error_bound, g_derivatives_matrix, g_derivatives_tensor, log_derivatives,
    zero_scan, ScanGrid, TaylorResult, ZeroScanReport,
};
pub use types::{
    identity_matrix, identity_tensor, ApproxConfig, Complex, ComplexMatrix, ComplexTensor, SubsetIndex, WorkCaps,
};
