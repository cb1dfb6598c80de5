#![allow(dead_code)]

use ddperm::Complex;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn c(re: f64, im: f64) -> Complex {
    Complex::new(re, im)
}

pub fn rel_err(got: Complex, want: Complex) -> f64 {
    (got - want).norm() / want.norm().max(f64::MIN_POSITIVE)
}

/// Coefficients of the degree-`(len-1)` polynomial through `(nodes, values)`,
/// by Gaussian elimination with partial pivoting on the Vandermonde system.
pub fn interpolate(nodes: &[f64], values: &[Complex]) -> Vec<Complex> {
    let n = nodes.len();
    let mut rows: Vec<Vec<Complex>> = nodes
        .iter()
        .zip(values)
        .map(|(&x, &v)| {
            let mut row: Vec<Complex> = (0..n).map(|k| c(x.powi(k as i32), 0.0)).collect();
            row.push(v);
            row
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).max_by(|&a, &b| rows[a][col].norm().total_cmp(&rows[b][col].norm())).unwrap();
        rows.swap(col, piv);
        for r in col + 1..n {
            let f = rows[r][col] / rows[col][col];
            for k in col..=n {
                let sub = f * rows[col][k];
                rows[r][k] -= sub;
            }
        }
    }
    let mut out = vec![c(0.0, 0.0); n];
    for r in (0..n).rev() {
        let mut acc = rows[r][n];
        for k in r + 1..n {
            acc -= rows[r][k] * out[k];
        }
        out[r] = acc / rows[r][r];
    }
    out
}

/// Chebyshev nodes of the first kind mapped onto [0, 1].
pub fn chebyshev_nodes(count: usize) -> Vec<f64> {
    (0..count)
        .map(|i| {
            let t = (std::f64::consts::PI * (2 * i + 1) as f64 / (2 * count) as f64).cos();
            (1.0 - t) / 2.0
        })
        .collect()
}

pub fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

/// Forward direction of the log-derivative system: derivatives of `exp(f)`
/// from derivatives of `f` with `f(0) = 0`.
pub fn exp_derivatives(f: &[Complex]) -> Vec<Complex> {
    let m = f.len() - 1;
    let mut g = vec![c(0.0, 0.0); m + 1];
    g[0] = c(1.0, 0.0);
    for k in 1..=m {
        let mut acc = c(0.0, 0.0);
        for j in 0..k {
            let binom = (0..j).fold(1.0, |b, i| b * (k - 1 - i) as f64 / (i + 1) as f64);
            acc += binom * f[k - j] * g[j];
        }
        g[k] = acc;
    }
    g
}
