//! Reproducible instance generators for tests, benchmarks and the CLI.

use std::collections::HashSet;

use rand::Rng;

use crate::hypergraph::DPartiteHypergraph;
use crate::reduction::LinearFormInstance;
use crate::types::{Complex, ComplexMatrix, ComplexTensor, ZERO};

/// Keeps generated instances strictly inside the requested bound after rounding.
const MARGIN: f64 = 1.0 - 1e-12;

fn random_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex {
    Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
}

/// Block-diagonal `A` with 2×2 blocks `[[0, a], [b, 0]]`; the last row and
/// column are zero when `n` is odd. `per(I + A) = (1 + ab)^⌊n/2⌋`.
pub fn block_family(n: usize, a: Complex, b: Complex) -> ComplexMatrix {
    ComplexMatrix::from_fn(n, |i, j| {
        if i == j || i / 2 != j / 2 || i / 2 == n / 2 {
            ZERO
        } else if i < j {
            a
        } else {
            b
        }
    })
}

/// The two extremes of the block family at row mass `λ`:
/// `|per(I + A)| = (1 + λ²)^⌊n/2⌋` and `(1 − λ²)^⌊n/2⌋`.
pub fn extremal_pair(n: usize, lambda: f64) -> (ComplexMatrix, ComplexMatrix) {
    let l = Complex::new(lambda, 0.0);
    (block_family(n, l, l), block_family(n, l, -l))
}

fn scale_row(row: &mut [Complex], target: f64) {
    let mass: f64 = row.iter().map(|z| z.norm()).sum();
    if mass > 0.0 {
        for z in row.iter_mut() {
            *z *= target / mass;
        }
    }
}

/// Random complex `A` whose row ℓ1 masses lie in `[λ/2, λ)`, with row 0
/// just below `λ`.
pub fn random_admissible_matrix<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    lambda: f64,
    zero_diagonal: bool,
) -> ComplexMatrix {
    let mut rows: Vec<Vec<Complex>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row: Vec<Complex> = (0..n)
            .map(|j| if zero_diagonal && i == j { ZERO } else { random_complex(rng) })
            .collect();
        let u = if i == 0 { 1.0 } else { rng.gen_range(0.5..1.0) };
        scale_row(&mut row, lambda * u * MARGIN);
        rows.push(row);
    }
    ComplexMatrix::from_rows(rows).expect("square by construction")
}

/// Random Hermitian zero-diagonal `A` scaled so its largest row mass is just
/// below `λ`.
pub fn random_hermitian_admissible<R: Rng + ?Sized>(rng: &mut R, n: usize, lambda: f64) -> ComplexMatrix {
    let mut entries = vec![ZERO; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let z = random_complex(rng);
            entries[i * n + j] = z;
            entries[j * n + i] = z.conj();
        }
    }
    let m = ComplexMatrix::new(n, entries).expect("square by construction");
    let max = (0..n).map(|i| m.row(i).iter().map(|z| z.norm()).sum::<f64>()).fold(0.0, f64::max);
    if max == 0.0 {
        return m;
    }
    m.scale(Complex::new(lambda * MARGIN / max, 0.0))
}

/// Random tensor whose axis-0 slice masses lie in `[λ/2, λ)`.
pub fn random_admissible_tensor<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    n: usize,
    lambda: f64,
    zero_diagonal: bool,
) -> ComplexTensor {
    let mut t = ComplexTensor::from_fn(d, n, |idx| {
        if zero_diagonal && idx.iter().all(|&v| v == idx[0]) {
            ZERO
        } else {
            random_complex(rng)
        }
    })
    .expect("valid shape");
    let slice_len = t.entries().len() / n.max(1);
    for i in 0..n {
        let u = if i == 0 { 1.0 } else { rng.gen_range(0.5..1.0) };
        scale_row(&mut t.entries_mut()[i * slice_len..(i + 1) * slice_len], lambda * u * MARGIN);
    }
    t
}

/// Random `B` with `Σ_{j≠i} |b_ij| < λ |b_ii|` and `|b_ii| ∈ [0.5, 2)`.
pub fn random_strongly_dominant<R: Rng + ?Sized>(rng: &mut R, n: usize, lambda: f64) -> ComplexMatrix {
    let mut rows = Vec::with_capacity(n);
    for i in 0..n {
        let diag = Complex::from_polar(rng.gen_range(0.5..2.0), rng.gen_range(-3.0..3.0));
        let mut off: Vec<Complex> = (0..n).map(|j| if j == i { ZERO } else { random_complex(rng) }).collect();
        scale_row(&mut off, lambda * diag.norm() * rng.gen_range(0.5..1.0) * MARGIN);
        off[i] = diag;
        rows.push(off);
    }
    ComplexMatrix::from_rows(rows).expect("square by construction")
}

/// Hypergraph containing the diagonal matching plus up to `extra` random
/// non-diagonal edges, with every part-1 degree at most `max_degree`.
pub fn random_hypergraph<R: Rng + ?Sized>(
    rng: &mut R,
    d: usize,
    n: usize,
    extra: usize,
    max_degree: usize,
) -> DPartiteHypergraph {
    let mut edges: Vec<Vec<usize>> = (0..n).map(|i| vec![i; d]).collect();
    let mut seen: HashSet<Vec<usize>> = edges.iter().cloned().collect();
    let mut degree = vec![1usize; n];
    let mut attempts = 0;
    while edges.len() < n + extra && attempts < 100 * (extra + 1) {
        attempts += 1;
        let e: Vec<usize> = (0..d).map(|_| rng.gen_range(0..n)).collect();
        if degree[e[0]] >= max_degree || seen.contains(&e) {
            continue;
        }
        degree[e[0]] += 1;
        seen.insert(e.clone());
        edges.push(e);
    }
    DPartiteHypergraph::new(d, n, edges).expect("generated edges are valid")
}

pub fn random_linear_form<R: Rng + ?Sized>(rng: &mut R, n: usize) -> LinearFormInstance {
    let alphas = (0..n).map(|_| random_complex(rng)).collect();
    let zs = (0..n).map(|_| random_complex(rng)).collect();
    LinearFormInstance::new(alphas, zs).expect("equal lengths")
}
