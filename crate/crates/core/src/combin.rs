//! Small combinatorial helpers: exact binomials, factorials, and
//! lexicographic k-subset enumeration with ranked entry points.

/// Exact binomial coefficient, `None` on overflow.
pub fn binomial(n: u64, k: u64) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        // acc * (n - i) is divisible by (i + 1) after the multiply
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Binomial as a float, for work estimates where overflow of the exact
/// value is itself the answer ("too much").
pub fn binomial_f64(n: usize, k: usize) -> f64 {
    match binomial(n as u64, k as u64) {
        Some(v) => v as f64,
        None => f64::INFINITY,
    }
}

/// Rows `0..=max` of Pascal's triangle, exact, then converted once.
pub fn pascal_rows(max: usize) -> Vec<Vec<f64>> {
    let mut rows: Vec<Vec<u128>> = Vec::with_capacity(max + 1);
    for r in 0..=max {
        let mut row = vec![1u128; r + 1];
        for j in 1..r {
            row[j] = rows[r - 1][j - 1]
                .checked_add(rows[r - 1][j])
                .expect("binomial overflow in Pascal table");
        }
        rows.push(row);
    }
    rows.into_iter()
        .map(|row| row.into_iter().map(|v| v as f64).collect())
        .collect()
}

/// `k!` for `k = 0..=max` as floats.
pub fn factorials(max: usize) -> Vec<f64> {
    let mut out = Vec::with_capacity(max + 1);
    let mut acc = 1.0f64;
    out.push(acc);
    for k in 1..=max {
        acc *= k as f64;
        out.push(acc);
    }
    out
}

/// Advance `c` to the next k-subset of `0..n` in lexicographic order.
/// Returns `false` when `c` was the last one.
pub fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

/// The k-subset of `0..n` with lexicographic rank `rank`.
pub fn unrank_combination(n: usize, k: usize, mut rank: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(k);
    let mut next = 0usize;
    for slot in 0..k {
        let remaining = k - slot - 1;
        loop {
            let count = binomial((n - next - 1) as u64, remaining as u64)
                .expect("rank too large to unrank");
            if rank < count {
                break;
            }
            rank -= count;
            next += 1;
        }
        out.push(next);
        next += 1;
    }
    out
}

/// Iterator over all k-subsets of `0..n` in lexicographic order.
#[derive(Debug, Clone)]
pub struct Combinations {
    n: usize,
    current: Option<Vec<usize>>,
}

impl Combinations {
    pub fn new(n: usize, k: usize) -> Self {
        let current = (k <= n).then(|| (0..k).collect());
        Self { n, current }
    }
}

impl Iterator for Combinations {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let out = self.current.clone()?;
        let cur = self.current.as_mut().unwrap();
        if cur.is_empty() || !next_combination(cur, self.n) {
            self.current = None;
        }
        Some(out)
    }
}
