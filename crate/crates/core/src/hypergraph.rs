//! Perfect matchings of a d-partite hypergraph weighted by their distance to
//! a known matching `M0`.
//!
//! With `A` the 0/1 encoding of the edges and `M0` relabelled onto the
//! diagonal,
//!
//! ```text
//! PER(I + λ²(A − I)) = Σ_M λ^{|M Δ M0|}
//! ```
//!
//! over all perfect matchings `M`. A matching that uses `k` edges outside
//! `M0` differs from it in `2k` edges of the symmetric difference and
//! contributes `λ^{2k}`, which is why the distance is `|M Δ M0|` rather than
//! `k`. The axis-0 slice sums of `λ²(A − I)` are `λ²(deg(i) − 1)` for part-1
//! vertices, so the Taylor path applies when `λ²(Δ − 1) < 1`.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::dominance::check_dominance_tensor;
use crate::error::{Error, Result};
use crate::taylor::approx_log_permanent;
use crate::types::{ApproxConfig, Complex, ComplexTensor, WorkCaps, ONE};

/// Vertices `0..n` in each of `d` parts; each edge is a `d`-tuple whose
/// `k`-th component is a vertex of part `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DPartiteHypergraph {
    d: usize,
    n: usize,
    edges: Vec<Vec<usize>>,
}

/// On-disk form: `{"d", "n", "edges", "m0"?}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphFile {
    pub d: usize,
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m0: Option<Vec<Vec<usize>>>,
}

impl HypergraphFile {
    pub fn into_parts(self) -> Result<(DPartiteHypergraph, Option<Vec<Vec<usize>>>)> {
        Ok((DPartiteHypergraph::new(self.d, self.n, self.edges)?, self.m0))
    }
}

impl DPartiteHypergraph {
    pub fn new(d: usize, n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if d < 2 || n == 0 {
            return Err(Error::Dimension(format!("need d >= 2 and n >= 1, got d = {d}, n = {n}")));
        }
        let mut seen = HashSet::new();
        for (p, e) in edges.iter().enumerate() {
            if e.len() != d {
                return Err(Error::Dimension(format!("edge {p} has {} vertices, expected {d}", e.len())));
            }
            if let Some(&v) = e.iter().find(|&&v| v >= n) {
                return Err(Error::Dimension(format!("edge {p} has vertex {v} out of range")));
            }
            if !seen.insert(e.as_slice()) {
                return Err(Error::Dimension(format!("edge {p} is a duplicate")));
            }
        }
        Ok(Self { d, n, edges })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// Number of edges through each vertex of the first part.
    pub fn part1_degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            deg[e[0]] += 1;
        }
        deg
    }

    /// `Δ`: the largest part-1 degree.
    pub fn max_part1_degree(&self) -> usize {
        self.part1_degrees().into_iter().max().unwrap_or(0)
    }

    pub fn has_diagonal_matching(&self) -> bool {
        let set: HashSet<&[usize]> = self.edges.iter().map(Vec::as_slice).collect();
        (0..self.n).all(|i| set.contains(vec![i; self.d].as_slice()))
    }
}

/// The 0/1 tensor with ones exactly at edge tuples.
pub fn encode_tensor(h: &DPartiteHypergraph) -> ComplexTensor {
    let mut t = ComplexTensor::zeros(h.d, h.n).expect("hypergraph shape is valid");
    for e in &h.edges {
        let off = t.offset(e);
        t.entries_mut()[off] = ONE;
    }
    t
}

/// Relabel vertices within each part so that `m0` becomes the diagonal
/// matching `{(i, …, i)}`. Part-1 labels are kept; in part `k` the vertex
/// `e[k]` of each `m0` edge `e` is renamed `e[0]`.
pub fn normalize_base_matching(h: &DPartiteHypergraph, m0: &[Vec<usize>]) -> Result<DPartiteHypergraph> {
    let (d, n) = (h.d, h.n);
    if m0.len() != n {
        return Err(Error::InvalidMatching(format!("expected {n} edges, got {}", m0.len())));
    }
    let edge_set: HashSet<&[usize]> = h.edges.iter().map(Vec::as_slice).collect();
    let mut relabel = vec![vec![usize::MAX; n]; d];
    for e in m0 {
        if e.len() != d || !edge_set.contains(e.as_slice()) {
            return Err(Error::InvalidMatching(format!("{e:?} is not an edge of the hypergraph")));
        }
        for k in 0..d {
            if relabel[k][e[k]] != usize::MAX {
                return Err(Error::InvalidMatching(format!("vertex {} of part {k} is covered twice", e[k])));
            }
            relabel[k][e[k]] = e[0];
        }
    }
    let edges = h
        .edges
        .iter()
        .map(|e| e.iter().enumerate().map(|(k, &v)| relabel[k][v]).collect())
        .collect();
    DPartiteHypergraph::new(d, n, edges)
}

/// One perfect matching, its edges listed by part-1 vertex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Matching {
    pub edges: Vec<Vec<usize>>,
    /// `|M Δ M0|` against the diagonal matching.
    pub distance: usize,
}

/// All perfect matchings by backtracking over part-1 vertices in order.
pub fn enumerate_matchings(h: &DPartiteHypergraph) -> Result<Vec<Matching>> {
    enumerate_matchings_capped(h, &WorkCaps::default())
}

pub fn enumerate_matchings_capped(h: &DPartiteHypergraph, caps: &WorkCaps) -> Result<Vec<Matching>> {
    if h.n > caps.matching_max_n {
        return Err(Error::SizeCap {
            what: "matching enumeration (vertices per part)",
            needed: h.n as f64,
            cap: caps.matching_max_n as f64,
        });
    }
    if h.edges.len() > caps.matching_max_edges {
        return Err(Error::SizeCap {
            what: "matching enumeration (edges)",
            needed: h.edges.len() as f64,
            cap: caps.matching_max_edges as f64,
        });
    }
    let mut by_first = vec![Vec::new(); h.n];
    for (p, e) in h.edges.iter().enumerate() {
        by_first[e[0]].push(p);
    }
    let mut search = MatchingSearch {
        h,
        by_first,
        used: vec![vec![false; h.n]; h.d],
        stack: Vec::with_capacity(h.n),
        found: Vec::new(),
    };
    search.extend(0);
    Ok(search.found)
}

struct MatchingSearch<'a> {
    h: &'a DPartiteHypergraph,
    by_first: Vec<Vec<usize>>,
    used: Vec<Vec<bool>>,
    stack: Vec<usize>,
    found: Vec<Matching>,
}

impl MatchingSearch<'_> {
    fn extend(&mut self, vertex: usize) {
        if vertex == self.h.n {
            let edges: Vec<Vec<usize>> = self.stack.iter().map(|&p| self.h.edges[p].clone()).collect();
            let distance = symmetric_difference_to_diagonal(&edges, self.h.n);
            self.found.push(Matching { edges, distance });
            return;
        }
        for c in 0..self.by_first[vertex].len() {
            let p = self.by_first[vertex][c];
            let e = &self.h.edges[p];
            if (1..self.h.d).any(|k| self.used[k][e[k]]) {
                continue;
            }
            for k in 1..self.h.d {
                self.used[k][e[k]] = true;
            }
            self.stack.push(p);
            self.extend(vertex + 1);
            self.stack.pop();
            let e = &self.h.edges[p];
            for k in 1..self.h.d {
                self.used[k][e[k]] = false;
            }
        }
    }
}

fn symmetric_difference_to_diagonal(edges: &[Vec<usize>], n: usize) -> usize {
    let on_diag = edges.iter().filter(|e| e.iter().all(|&v| v == e[0])).count();
    (edges.len() - on_diag) + (n - on_diag)
}

/// `Σ_M λ^{dist(M, M0)}` over an explicit list of matchings.
pub fn weighted_matching_sum(matchings: &[Matching], lambda: f64) -> f64 {
    crate::sum::sum_real(matchings.iter().map(|m| lambda.powi(m.distance as i32)))
}

/// `λ²(A − I)` for the encoded hypergraph.
pub fn matching_tensor(h: &DPartiteHypergraph, lambda: f64) -> ComplexTensor {
    // I - A, then scaled by -λ²
    encode_tensor(h).shifted(Complex::new(-1.0, 0.0)).scale(Complex::new(-lambda * lambda, 0.0))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatchingStatsResult {
    pub lambda: f64,
    /// Approximation of `Σ_M λ^{dist(M, M0)}`.
    pub value: Complex,
    /// `T_m(1)`, the approximate log of `value`.
    pub log_value: Complex,
    /// Additive bound on the log.
    pub error_bound_log: f64,
    /// `e^{error_bound_log} − 1`, a relative bound on `value`.
    pub relative_error_bound: f64,
    pub delta: usize,
    pub admissible: bool,
    #[serde(rename = "m")]
    pub order_m: usize,
}

/// Approximate `Σ_M λ^{dist(M, M0)}` for a hypergraph whose base matching
/// is already the diagonal.
pub fn matching_stats(h: &DPartiteHypergraph, lambda: f64, epsilon: f64) -> Result<MatchingStatsResult> {
    matching_stats_capped(h, lambda, epsilon, &WorkCaps::default())
}

pub fn matching_stats_capped(
    h: &DPartiteHypergraph,
    lambda: f64,
    epsilon: f64,
    caps: &WorkCaps,
) -> Result<MatchingStatsResult> {
    if !(lambda.is_finite() && lambda > 0.0) {
        return Err(Error::InvalidParameter(format!("lambda must be positive, got {lambda}")));
    }
    if !h.has_diagonal_matching() {
        return Err(Error::InvalidMatching("the diagonal matching is not contained in the edge set".into()));
    }
    let delta = h.max_part1_degree();
    let mass = lambda * lambda * (delta as f64 - 1.0);
    if mass >= 1.0 {
        return Err(Error::Inadmissible(format!(
            "lambda = {lambda} with max part-1 degree {delta} needs lambda^2 (delta - 1) < 1, got {mass}"
        )));
    }
    let t = matching_tensor(h, lambda);
    let report = check_dominance_tensor(&t);
    if !report.admissible {
        return Err(Error::Inadmissible(format!("slice mass {} is not below 1", report.effective_lambda)));
    }
    let cfg = ApproxConfig::new(None, epsilon)?.with_caps(*caps);
    let r = approx_log_permanent(&t, &cfg)?;
    Ok(MatchingStatsResult {
        lambda,
        value: r.value.exp(),
        log_value: r.value,
        error_bound_log: r.error_bound,
        relative_error_bound: r.error_bound.exp_m1(),
        delta,
        admissible: true,
        order_m: r.order_m,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::permanent_tensor;
    use crate::types::identity_tensor;

    fn diag(d: usize, n: usize) -> Vec<Vec<usize>> {
        (0..n).map(|i| vec![i; d]).collect()
    }

    #[test]
    fn validation() {
        assert!(DPartiteHypergraph::new(1, 2, vec![]).is_err());
        assert!(DPartiteHypergraph::new(2, 2, vec![vec![0, 2]]).is_err());
        assert!(DPartiteHypergraph::new(2, 2, vec![vec![0]]).is_err());
        assert!(DPartiteHypergraph::new(2, 2, vec![vec![0, 1], vec![0, 1]]).is_err());
    }

    #[test]
    fn encodings() {
        let h = DPartiteHypergraph::new(3, 3, diag(3, 3)).unwrap();
        assert_eq!(encode_tensor(&h), identity_tensor(3, 3).unwrap());
        let h = DPartiteHypergraph::new(3, 2, vec![]).unwrap();
        assert_eq!(encode_tensor(&h), ComplexTensor::zeros(3, 2).unwrap());
        let h = DPartiteHypergraph::new(3, 2, vec![vec![0, 0, 0], vec![1, 1, 1], vec![0, 1, 1]]).unwrap();
        let t = encode_tensor(&h);
        assert_eq!(t.entries().iter().filter(|&&v| v == ONE).count(), 3);
        assert_eq!(t.get(&[0, 1, 1]), ONE);
    }

    #[test]
    fn relabelling() {
        let h = DPartiteHypergraph::new(2, 2, diag(2, 2)).unwrap();
        assert_eq!(normalize_base_matching(&h, &diag(2, 2)).unwrap(), h);

        let h = DPartiteHypergraph::new(2, 2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        let g = normalize_base_matching(&h, &[vec![0, 1], vec![1, 0]]).unwrap();
        assert!(g.has_diagonal_matching());
        assert_eq!(g.edges(), &[vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn relabelling_rejects_non_matchings() {
        let h = DPartiteHypergraph::new(2, 2, vec![vec![0, 0], vec![1, 0], vec![1, 1]]).unwrap();
        assert!(matches!(
            normalize_base_matching(&h, &[vec![0, 0], vec![1, 0]]),
            Err(Error::InvalidMatching(_))
        ));
        assert!(matches!(normalize_base_matching(&h, &[vec![0, 0]]), Err(Error::InvalidMatching(_))));
        assert!(matches!(
            normalize_base_matching(&h, &[vec![0, 1], vec![1, 0]]),
            Err(Error::InvalidMatching(_))
        ));
    }

    #[test]
    fn diagonal_only() {
        let h = DPartiteHypergraph::new(3, 4, diag(3, 4)).unwrap();
        let ms = enumerate_matchings(&h).unwrap();
        assert_eq!(ms.len(), 1);
        assert_eq!(ms[0].distance, 0);
        let r = matching_stats(&h, 0.7, 0.01).unwrap();
        assert!((r.value - ONE).norm() < 1e-15);
        assert_eq!(r.delta, 1);
    }

    #[test]
    fn bipartite_four_edges() {
        let mut edges = diag(2, 2);
        edges.extend([vec![0, 1], vec![1, 0]]);
        let h = DPartiteHypergraph::new(2, 2, edges).unwrap();
        let ms = enumerate_matchings(&h).unwrap();
        let mut dists: Vec<usize> = ms.iter().map(|m| m.distance).collect();
        dists.sort();
        // the swapped matching shares no edge with M0: |M Δ M0| = 4
        assert_eq!(dists, vec![0, 4]);
        let lambda: f64 = 0.4;
        let brute = weighted_matching_sum(&ms, lambda);
        assert!((brute - (1.0 + lambda.powi(4))).abs() < 1e-15);
        let per = permanent_tensor(&matching_tensor(&h, lambda).shifted(ONE)).unwrap();
        assert!((per.re - brute).abs() < 1e-15 && per.im == 0.0);
        let r = matching_stats(&h, lambda, 0.01).unwrap();
        assert!((r.value.re / brute - 1.0).abs() <= r.relative_error_bound);
    }

    #[test]
    fn slice_sums_follow_degrees() {
        let edges = vec![
            vec![0, 0, 0],
            vec![1, 1, 1],
            vec![2, 2, 2],
            vec![0, 1, 2],
            vec![0, 2, 1],
            vec![2, 0, 1],
        ];
        let h = DPartiteHypergraph::new(3, 3, edges).unwrap();
        let lambda: f64 = 0.3;
        let r = check_dominance_tensor(&matching_tensor(&h, lambda));
        for (i, &deg) in h.part1_degrees().iter().enumerate() {
            assert!((r.row_sums[i] - lambda * lambda * (deg as f64 - 1.0)).abs() < 1e-15);
        }
        assert_eq!(h.max_part1_degree(), 3);
    }

    #[test]
    fn stats_errors() {
        let h = DPartiteHypergraph::new(2, 2, vec![vec![0, 1], vec![1, 0]]).unwrap();
        assert!(matches!(matching_stats(&h, 0.5, 0.01), Err(Error::InvalidMatching(_))));
        let mut edges = diag(2, 3);
        edges.extend([vec![0, 1], vec![0, 2]]);
        let h = DPartiteHypergraph::new(2, 3, edges).unwrap();
        // Δ = 3 needs λ < 1/√2
        assert!(matches!(matching_stats(&h, 0.8, 0.01), Err(Error::Inadmissible(_))));
        assert!(matching_stats(&h, 0.6, 0.01).is_ok());
        assert!(matching_stats(&h, -0.1, 0.01).is_err());
    }

    #[test]
    fn enumeration_caps() {
        let h = DPartiteHypergraph::new(2, 9, diag(2, 9)).unwrap();
        assert!(enumerate_matchings(&h).unwrap_err().is_size_cap());
    }
}
