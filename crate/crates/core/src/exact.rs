//! Exact permanents: the ground-truth oracles for every approximation test.
//!
//! * [`permanent_definitional`] enumerates `S_n` in lexicographic order.
//! * [`permanent_ryser`] is inclusion–exclusion over column subsets in
//!   Gray-code order, `O(n 2^n)`.
//! * [`permanent_tensor`] enumerates `(σ2, …, σd)` depth-first over rows.
//! * [`permanent_tensor_slice_expansion`] expands along one slice and recurses
//!   on the crossed-out subtensors.
//!
//! All sums are Neumaier-compensated in a fixed order. The empty permanent is 1.

use crate::array::SquareArray;
use crate::error::{Error, Result};
use crate::sum::ComplexSum;
use crate::types::{Complex, ComplexMatrix, ComplexTensor, SubsetIndex, WorkCaps, ONE, ZERO};

fn cap_error(what: &'static str, needed: f64, cap: f64) -> Error {
    Error::SizeCap { what, needed, cap }
}

pub fn permanent_definitional(m: &ComplexMatrix) -> Result<Complex> {
    permanent_definitional_capped(m, WorkCaps::default().definitional_max_n)
}

pub fn permanent_definitional_capped(m: &ComplexMatrix, max_n: usize) -> Result<Complex> {
    let n = m.n();
    if n > max_n {
        return Err(cap_error("definitional permanent (side)", n as f64, max_n as f64));
    }
    let mut acc = ComplexSum::new();
    let mut used = vec![false; n];
    permutations(m, 0, ONE, &mut used, &mut acc);
    Ok(acc.value())
}

fn permutations(m: &ComplexMatrix, row: usize, prefix: Complex, used: &mut [bool], acc: &mut ComplexSum) {
    let n = m.n();
    if row == n {
        acc.add(prefix);
        return;
    }
    for col in 0..n {
        if used[col] {
            continue;
        }
        used[col] = true;
        permutations(m, row + 1, prefix * m.get(row, col), used, acc);
        used[col] = false;
    }
}

pub fn permanent_ryser(m: &ComplexMatrix) -> Result<Complex> {
    permanent_ryser_capped(m, WorkCaps::default().ryser_max_n)
}

pub fn permanent_ryser_capped(m: &ComplexMatrix, max_n: usize) -> Result<Complex> {
    if m.n() > max_n.min(63) {
        return Err(cap_error("Ryser permanent (side)", m.n() as f64, max_n.min(63) as f64));
    }
    let idx: Vec<usize> = (0..m.n()).collect();
    Ok(ryser_on(m, &idx))
}

/// Ryser's formula on the principal submatrix indexed by `idx`, without
/// copying it out:
/// `per = (-1)^k Σ_{S ⊆ idx} (-1)^{|S|} Π_{r ∈ idx} Σ_{c ∈ S} a_{rc}`.
pub(crate) fn ryser_on(m: &ComplexMatrix, idx: &[usize]) -> Complex {
    let k = idx.len();
    if k == 0 {
        return ONE;
    }
    debug_assert!(k < 64);
    let mut row_sums = vec![ZERO; k];
    let mut members = 0u64;
    let mut acc = ComplexSum::new();
    for step in 1..(1u64 << k) {
        let bit = step.trailing_zeros() as usize;
        let col = idx[bit];
        let adding = members & (1 << bit) == 0;
        members ^= 1 << bit;
        for (sum, &row) in row_sums.iter_mut().zip(idx) {
            if adding {
                *sum += m.get(row, col);
            } else {
                *sum -= m.get(row, col);
            }
        }
        let prod: Complex = row_sums.iter().product();
        if (k - members.count_ones() as usize) % 2 == 0 {
            acc.add(prod);
        } else {
            acc.sub(prod);
        }
    }
    acc.value()
}

/// `(n!)^(d-1)` as a float; the nominal number of products in the
/// definitional tensor permanent.
pub fn tensor_product_count(d: usize, n: usize) -> f64 {
    let fact: f64 = (1..=n).map(|i| i as f64).product();
    fact.powi(d as i32 - 1)
}

pub fn permanent_tensor(t: &ComplexTensor) -> Result<Complex> {
    permanent_tensor_capped(t, WorkCaps::default().tensor_products)
}

pub fn permanent_tensor_capped(t: &ComplexTensor, max_products: f64) -> Result<Complex> {
    let needed = tensor_product_count(t.d(), t.n());
    if needed > max_products || t.n() >= 64 {
        return Err(cap_error("tensor permanent (products)", needed, max_products));
    }
    let idx: Vec<usize> = (0..t.n()).collect();
    Ok(tensor_permanent_on(t, &idx))
}

/// Definitional tensor permanent of the principal subtensor on `idx`.
/// Zero entries cut the search; they contribute nothing to the sum.
pub(crate) fn tensor_permanent_on(t: &ComplexTensor, idx: &[usize]) -> Complex {
    let mut dfs = TensorDfs {
        t,
        idx,
        used: vec![0u64; t.d()],
        tuples: vec![vec![0; t.d()]; idx.len()],
        acc: ComplexSum::new(),
    };
    dfs.row(0, ONE);
    dfs.acc.value()
}

struct TensorDfs<'a> {
    t: &'a ComplexTensor,
    idx: &'a [usize],
    used: Vec<u64>,
    // one index tuple per row, so deeper rows never clobber a shallower one
    tuples: Vec<Vec<usize>>,
    acc: ComplexSum,
}

impl TensorDfs<'_> {
    fn row(&mut self, r: usize, prefix: Complex) {
        if r == self.idx.len() {
            self.acc.add(prefix);
            return;
        }
        self.tuples[r][0] = self.idx[r];
        self.axis(r, 1, prefix);
    }

    fn axis(&mut self, r: usize, a: usize, prefix: Complex) {
        if a == self.t.d() {
            let v = self.t.get(&self.tuples[r]);
            if v != ZERO {
                self.row(r + 1, prefix * v);
            }
            return;
        }
        for pos in 0..self.idx.len() {
            let bit = 1u64 << pos;
            if self.used[a] & bit != 0 {
                continue;
            }
            self.used[a] |= bit;
            self.tuples[r][a] = self.idx[pos];
            self.axis(r, a + 1, prefix);
            self.used[a] &= !bit;
        }
    }
}

/// Permanent via the `(k, j)`-slice expansion
/// `PER A = Σ_{i : i_k = j} a_i · PER A_i`, where `A_i` crosses out the `d`
/// slices through entry `i`. Sub-permanents are expanded along the first
/// remaining coordinate of the same axis, down to the empty tensor.
pub fn permanent_tensor_slice_expansion(t: &ComplexTensor, axis: usize, coord: usize) -> Result<Complex> {
    permanent_tensor_slice_expansion_capped(t, axis, coord, WorkCaps::default().tensor_products)
}

pub fn permanent_tensor_slice_expansion_capped(
    t: &ComplexTensor,
    axis: usize,
    coord: usize,
    max_products: f64,
) -> Result<Complex> {
    if axis >= t.d() {
        return Err(Error::InvalidParameter(format!("axis {axis} out of range for d = {}", t.d())));
    }
    if t.n() > 0 && coord >= t.n() {
        return Err(Error::InvalidParameter(format!("coordinate {coord} out of range for n = {}", t.n())));
    }
    let needed = tensor_product_count(t.d(), t.n());
    if needed > max_products {
        return Err(cap_error("tensor slice expansion (products)", needed, max_products));
    }
    let remaining: Vec<Vec<usize>> = vec![(0..t.n()).collect(); t.d()];
    Ok(expand_slice(t, &remaining, axis, coord))
}

fn expand_slice(t: &ComplexTensor, remaining: &[Vec<usize>], axis: usize, coord: usize) -> Complex {
    let size = remaining[0].len();
    if size == 0 {
        return ONE;
    }
    let d = t.d();
    // positions into each axis' remaining list; the fixed axis stays put
    let fixed_pos = remaining[axis].iter().position(|&v| v == coord).expect("coordinate not remaining");
    let mut pos = vec![0usize; d];
    pos[axis] = fixed_pos;
    let mut tuple = vec![0usize; d];
    let mut acc = ComplexSum::new();
    loop {
        for a in 0..d {
            tuple[a] = remaining[a][pos[a]];
        }
        let v = t.get(&tuple);
        if v != ZERO {
            let minor: Vec<Vec<usize>> = remaining
                .iter()
                .zip(&tuple)
                .map(|(list, &drop)| list.iter().copied().filter(|&x| x != drop).collect())
                .collect();
            let sub = match minor[axis].first() {
                Some(&next) => expand_slice(t, &minor, axis, next),
                None => ONE,
            };
            acc.add(v * sub);
        }
        // odometer over the free axes, last axis fastest
        let mut a = d;
        loop {
            if a == 0 {
                return acc.value();
            }
            a -= 1;
            if a == axis {
                continue;
            }
            pos[a] += 1;
            if pos[a] < size {
                break;
            }
            pos[a] = 0;
        }
    }
}

/// Rows and columns of `m` indexed by `s`. Panics if `s` has a member `≥ n`.
pub fn principal_submatrix(m: &ComplexMatrix, s: &SubsetIndex) -> ComplexMatrix {
    let idx = s.members();
    assert!(idx.iter().all(|&i| i < m.n()), "subset out of range");
    ComplexMatrix::from_fn(idx.len(), |i, j| m.get(idx[i], idx[j]))
}

/// Entries with every axis index in `s`. Panics if `s` has a member `≥ n`.
pub fn principal_subtensor(t: &ComplexTensor, s: &SubsetIndex) -> ComplexTensor {
    let idx = s.members();
    assert!(idx.iter().all(|&i| i < t.n()), "subset out of range");
    let mut mapped = vec![0usize; t.d()];
    ComplexTensor::from_fn(t.d(), idx.len(), |pos| {
        for (m, &p) in mapped.iter_mut().zip(pos) {
            *m = idx[p];
        }
        t.get(&mapped)
    })
    .expect("subtensor of a valid tensor is valid")
}

/// `ln per(I + A)` on the branch continued from `ln per(I) = 0`: the argument
/// is accumulated from principal-branch increments of `per(I + zA)` over
/// `steps` uniform steps of `z` on `[0, 1]`.
pub fn branch_tracked_log_permanent<A: SquareArray>(a: &A, steps: usize, caps: &WorkCaps) -> Result<Complex> {
    let steps = steps.max(1);
    let mut prev = ONE;
    let mut arg = 0.0;
    for s in 1..=steps {
        let z = Complex::new(s as f64 / steps as f64, 0.0);
        let g = a.shifted_permanent(z, caps)?;
        if g == ZERO {
            return Err(Error::Inadmissible(format!("per(I + zA) vanishes at z = {}", z.re)));
        }
        arg += (g / prev).arg();
        prev = g;
    }
    Ok(Complex::new(prev.norm().ln(), arg))
}
