//! Seeded fixtures shared by the benchmarks.

use ddperm::generate::{random_admissible_matrix, random_admissible_tensor};
use ddperm::{ComplexMatrix, ComplexTensor};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const APPROX_SIZES: [usize; 3] = [10, 15, 20];
pub const APPROX_ORDERS: [usize; 3] = [4, 6, 8];

pub fn matrix(n: usize, lambda: f64) -> ComplexMatrix {
    random_admissible_matrix(&mut ChaCha8Rng::seed_from_u64(n as u64), n, lambda, false)
}

pub fn tensor(d: usize, n: usize, lambda: f64) -> ComplexTensor {
    random_admissible_tensor(&mut ChaCha8Rng::seed_from_u64((d * 1000 + n) as u64), d, n, lambda, false)
}
