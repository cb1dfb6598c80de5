//! Shared numeric containers and configuration.
//!
//! Matrices and tensors are dense, immutable after construction, and
//! validated on the way in: lengths must match the declared shape and every
//! component must be finite.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Complex = num_complex::Complex64;

pub const ONE: Complex = Complex::new(1.0, 0.0);
pub const ZERO: Complex = Complex::new(0.0, 0.0);

pub(crate) fn check_finite(entries: &[Complex]) -> Result<()> {
    match entries.iter().position(|z| !z.re.is_finite() || !z.im.is_finite()) {
        Some(p) => Err(Error::NonFinite(p)),
        None => Ok(()),
    }
}

/// Dense `n × n` complex matrix, row-major.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawMatrix")]
pub struct ComplexMatrix {
    n: usize,
    entries: Vec<Complex>,
}

#[derive(Deserialize)]
struct RawMatrix {
    n: usize,
    entries: Vec<Complex>,
}

impl TryFrom<RawMatrix> for ComplexMatrix {
    type Error = Error;

    fn try_from(raw: RawMatrix) -> Result<Self> {
        ComplexMatrix::new(raw.n, raw.entries)
    }
}

impl ComplexMatrix {
    pub fn new(n: usize, entries: Vec<Complex>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::Dimension(format!(
                "matrix of side {n} needs {} entries, got {}",
                n * n,
                entries.len()
            )));
        }
        check_finite(&entries)?;
        Ok(Self { n, entries })
    }

    pub fn zeros(n: usize) -> Self {
        Self { n, entries: vec![ZERO; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, |i, j| if i == j { ONE } else { ZERO })
    }

    /// Panics if `f` produces a non-finite value.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> Complex) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        check_finite(&entries).expect("from_fn produced a non-finite entry");
        Self { n, entries }
    }

    /// Build from nested rows; every row must have the same length as the
    /// number of rows.
    pub fn from_rows(rows: Vec<Vec<Complex>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().position(|r| r.len() != n) {
            return Err(Error::Dimension(format!("row {bad} has wrong length")));
        }
        Self::new(n, rows.into_iter().flatten().collect())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Complex {
        self.entries[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[Complex] {
        &self.entries[i * self.n..(i + 1) * self.n]
    }

    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self::from_fn(self.n, |i, j| s * self.get(i, j))
    }

    /// `I + z·A`.
    pub fn shifted(&self, z: Complex) -> Self {
        Self::from_fn(self.n, |i, j| {
            let v = z * self.get(i, j);
            if i == j {
                ONE + v
            } else {
                v
            }
        })
    }

    /// Replace row `i`; the new row must have length `n`.
    pub fn with_row(&self, i: usize, row: &[Complex]) -> Result<Self> {
        if row.len() != self.n {
            return Err(Error::Dimension(format!("row of length {}", row.len())));
        }
        check_finite(row)?;
        let mut entries = self.entries.clone();
        entries[i * self.n..(i + 1) * self.n].copy_from_slice(row);
        Ok(Self { n: self.n, entries })
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| (self.get(i, j) - self.get(j, i).conj()).norm() <= tol))
    }
}

/// `n × n` identity matrix.
pub fn identity_matrix(n: usize) -> ComplexMatrix {
    ComplexMatrix::identity(n)
}

/// Dense cubical `n × … × n` tensor of dimension `d ≥ 2`, stored
/// lexicographically over `(i1, …, id)` with `i1` most significant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawTensor")]
pub struct ComplexTensor {
    d: usize,
    n: usize,
    entries: Vec<Complex>,
}

#[derive(Deserialize)]
struct RawTensor {
    d: usize,
    n: usize,
    entries: Vec<Complex>,
}

impl TryFrom<RawTensor> for ComplexTensor {
    type Error = Error;

    fn try_from(raw: RawTensor) -> Result<Self> {
        ComplexTensor::new(raw.d, raw.n, raw.entries)
    }
}

fn tensor_len(d: usize, n: usize) -> Result<usize> {
    u32::try_from(d)
        .ok()
        .and_then(|d| n.checked_pow(d))
        .ok_or_else(|| Error::Dimension(format!("tensor {n}^{d} is too large")))
}

impl ComplexTensor {
    pub fn new(d: usize, n: usize, entries: Vec<Complex>) -> Result<Self> {
        if d < 2 {
            return Err(Error::Dimension(format!("tensor dimension must be at least 2, got {d}")));
        }
        let len = tensor_len(d, n)?;
        if entries.len() != len {
            return Err(Error::Dimension(format!(
                "tensor {n}^{d} needs {len} entries, got {}",
                entries.len()
            )));
        }
        check_finite(&entries)?;
        Ok(Self { d, n, entries })
    }

    pub fn zeros(d: usize, n: usize) -> Result<Self> {
        Self::new(d, n, vec![ZERO; tensor_len(d, n)?])
    }

    pub fn identity(d: usize, n: usize) -> Result<Self> {
        let mut t = Self::zeros(d, n)?;
        for i in 0..n {
            let off = t.offset(&vec![i; d]);
            t.entries[off] = ONE;
        }
        Ok(t)
    }

    /// Fails if `f` produces a non-finite value.
    pub fn from_fn(d: usize, n: usize, mut f: impl FnMut(&[usize]) -> Complex) -> Result<Self> {
        let len = tensor_len(d, n)?;
        let mut idx = vec![0usize; d];
        let mut entries = Vec::with_capacity(len);
        for _ in 0..len {
            entries.push(f(&idx));
            increment_index(&mut idx, n);
        }
        Self::new(d, n, entries)
    }

    /// View a matrix as a `d = 2` tensor.
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        Self { d: 2, n: m.n(), entries: m.entries().to_vec() }
    }

    pub fn to_matrix(&self) -> Option<ComplexMatrix> {
        (self.d == 2).then(|| ComplexMatrix { n: self.n, entries: self.entries.clone() })
    }

    #[inline]
    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Complex] {
        &self.entries
    }

    #[inline]
    pub fn offset(&self, idx: &[usize]) -> usize {
        debug_assert_eq!(idx.len(), self.d);
        idx.iter().fold(0, |acc, &i| acc * self.n + i)
    }

    #[inline]
    pub fn get(&self, idx: &[usize]) -> Complex {
        self.entries[self.offset(idx)]
    }

    /// Entries of the axis-0 slice `i`, i.e. all `a_{i i2 … id}`.
    pub fn slice0(&self, i: usize) -> &[Complex] {
        let len = self.entries.len() / self.n.max(1);
        &self.entries[i * len..(i + 1) * len]
    }

    pub fn scale(&self, s: Complex) -> Self {
        Self { d: self.d, n: self.n, entries: self.entries.iter().map(|&v| s * v).collect() }
    }

    /// `I + z·A`.
    pub fn shifted(&self, z: Complex) -> Self {
        let mut out = self.scale(z);
        for i in 0..self.n {
            let off = out.offset(&vec![i; self.d]);
            out.entries[off] += ONE;
        }
        out
    }

    pub(crate) fn entries_mut(&mut self) -> &mut [Complex] {
        &mut self.entries
    }
}

/// Odometer increment over `0..n` in each coordinate, last coordinate fastest.
pub(crate) fn increment_index(idx: &mut [usize], n: usize) {
    for slot in idx.iter_mut().rev() {
        *slot += 1;
        if *slot < n {
            return;
        }
        *slot = 0;
    }
}

/// `d`-dimensional identity tensor: ones on `(i, …, i)`, zeros elsewhere.
pub fn identity_tensor(d: usize, n: usize) -> Result<ComplexTensor> {
    ComplexTensor::identity(d, n)
}

/// A strictly increasing set of indices into `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SubsetIndex {
    members: Vec<usize>,
}

impl SubsetIndex {
    pub fn new(members: Vec<usize>, n: usize) -> Result<Self> {
        if members.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidSubset("members must be strictly increasing".into()));
        }
        if let Some(&last) = members.last() {
            if last >= n {
                return Err(Error::InvalidSubset(format!("member {last} out of range for n = {n}")));
            }
        }
        Ok(Self { members })
    }

    pub fn full(n: usize) -> Self {
        Self { members: (0..n).collect() }
    }

    pub fn empty() -> Self {
        Self { members: Vec::new() }
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }
}

/// Limits that keep the factorial and exponential paths from hanging.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct WorkCaps {
    /// Largest side accepted by the permutation-enumeration permanent.
    pub definitional_max_n: usize,
    /// Largest side accepted by Ryser's formula.
    pub ryser_max_n: usize,
    /// Upper bound on `(n!)^(d-1)` for the tensor permanent.
    pub tensor_products: f64,
    /// Upper bound on the subset-enumeration work of the Taylor path.
    pub taylor_work: f64,
    /// Brute-force matching enumeration limits.
    pub matching_max_n: usize,
    pub matching_max_edges: usize,
}

impl Default for WorkCaps {
    fn default() -> Self {
        Self {
            definitional_max_n: 10,
            ryser_max_n: 30,
            tensor_products: 1e8,
            taylor_work: 1e9,
            matching_max_n: 8,
            matching_max_edges: 64,
        }
    }
}

/// Parameters of the Taylor approximation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ApproxConfig {
    /// Dominance bound λ. `None` means "use the measured effective λ".
    pub lambda: Option<f64>,
    /// Target additive error on the logarithm.
    pub epsilon: f64,
    /// Forces the Taylor order instead of deriving it from `epsilon`.
    pub order_override: Option<usize>,
    pub caps: WorkCaps,
}

impl ApproxConfig {
    pub fn new(lambda: Option<f64>, epsilon: f64) -> Result<Self> {
        if let Some(l) = lambda {
            if !(l > 0.0 && l < 1.0) {
                return Err(Error::InvalidParameter(format!("lambda must lie in (0, 1), got {l}")));
            }
        }
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::InvalidParameter(format!("epsilon must lie in (0, 1), got {epsilon}")));
        }
        Ok(Self { lambda, epsilon, order_override: None, caps: WorkCaps::default() })
    }

    pub fn with_order(mut self, m: usize) -> Self {
        self.order_override = Some(m);
        self
    }

    pub fn with_caps(mut self, caps: WorkCaps) -> Self {
        self.caps = caps;
        self
    }
}
