//! Partitions contained in the staircase, the correspondence with weakly
//! increasing interval sequences, and incomparability graphs of the natural
//! unit interval orders.

use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("parts must be weakly decreasing, got {0:?}")]
    NotWeaklyDecreasing(Vec<usize>),
    #[error("invalid partition syntax: {0:?}")]
    Syntax(String),
}

/// A weakly decreasing sequence of nonnegative integers. Trailing zeros are
/// accepted on input and normalized away, so `(3,2,0,0)` and `(3,2)` are the
/// same value.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Panics when the parts are not weakly decreasing; use [`Partition::try_new`]
    /// or [`Partition::parse`] for fallible construction.
    pub fn new(parts: Vec<usize>) -> Self {
        Partition::try_new(parts).expect("partition parts must be weakly decreasing")
    }

    pub fn try_new(mut parts: Vec<usize>) -> Result<Self, PartitionError> {
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(PartitionError::NotWeaklyDecreasing(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// CLI syntax: comma-separated parts; the empty partition is `0` or the
    /// empty string. Non-decreasing inputs are rejected, never sorted.
    pub fn parse(text: &str) -> Result<Self, PartitionError> {
        let trimmed = text.trim();
        if trimmed.is_empty() || trimmed == "0" {
            return Ok(Partition::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|tok| tok.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| PartitionError::Syntax(text.to_string()))?;
        Partition::try_new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|λ|`, the sum of the parts.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// 1-indexed part with zero padding beyond the length.
    pub fn part(&self, i: usize) -> usize {
        assert!(i >= 1, "parts are 1-indexed");
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Whether `λ_i ≤ n - i` for all i, i.e. λ fits in the staircase δ_n.
    pub fn fits_staircase(&self, n: usize) -> bool {
        self.parts.iter().enumerate().all(|(i, &p)| p + i + 1 <= n)
    }

    /// Whether λ fits in a `rows × cols` box.
    pub fn fits_box(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.parts.first().map_or(true, |&p| p <= cols)
    }

    /// The interval sequence `m_i = n - λ_i` for `1 ≤ i ≤ n-1`, with λ padded
    /// by zeros. Weakly increasing with `i ≤ m_i ≤ n`.
    pub fn m_sequence(&self, n: usize) -> Vec<usize> {
        assert!(self.fits_staircase(n), "{self} does not fit the staircase of order {n}");
        let m: Vec<usize> = (1..n).map(|i| n - self.part(i)).collect();
        debug_assert!(m.windows(2).all(|w| w[0] <= w[1]));
        debug_assert!(m.iter().enumerate().all(|(i, &mi)| i + 1 <= mi && mi <= n));
        m
    }

    /// Area sequence `a_i = m_i - i` of the associated Dyck path.
    pub fn area_sequence(&self, n: usize) -> Vec<usize> {
        self.m_sequence(n)
            .iter()
            .enumerate()
            .map(|(i, &mi)| mi - (i + 1))
            .collect()
    }

    /// The incomparability graph of the natural unit interval order `P_λ` on
    /// `[n]`: `{i,j}` with `i<j` is an edge iff `j ≤ m_i`.
    pub fn inc_graph(&self, n: usize) -> IncGraph {
        let m = self.m_sequence(n);
        let mut g = IncGraph::empty(n);
        for i in 1..n {
            for j in (i + 1)..=m[i - 1] {
                g.add_edge(i, j);
            }
        }
        debug_assert_eq!(g.edge_count() + self.size(), n * (n - 1) / 2);
        g
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Partition {
        let rows = self.len();
        if rows == 0 {
            return Partition::empty();
        }
        let cols = self.parts[0];
        let parts = (1..=cols)
            .map(|j| (0..rows).take_while(|&i| self.parts[i] >= j).count())
            .collect();
        Partition { parts }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "0");
        }
        let strs: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", strs.join(","))
    }
}

/// Simple graph on vertices `1..=n`, stored as per-vertex adjacency bitmasks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncGraph {
    n: usize,
    adj: Vec<u32>,
}

impl IncGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n >= 1 && n <= 16, "vertex count {n} out of supported range");
        IncGraph { n, adj: vec![0; n + 1] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn add_edge(&mut self, i: usize, j: usize) {
        assert!(i != j && i >= 1 && j >= 1 && i <= self.n && j <= self.n);
        self.adj[i] |= 1 << j;
        self.adj[j] |= 1 << i;
    }

    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj[i] & (1 << j) != 0
    }

    /// Bitmask of neighbors of `v` with smaller label.
    pub fn neighbors_below(&self, v: usize) -> u32 {
        self.adj[v] & ((1 << v) - 1)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for i in 1..=self.n {
            for j in (i + 1)..=self.n {
                if self.has_edge(i, j) {
                    out.push((i, j));
                }
            }
        }
        out
    }
}

/// All partitions of `n`, in descending lexicographic order: `(n)` first,
/// `(1^n)` last.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(prefix.clone()));
            return;
        }
        for p in (1..=remaining.min(max)).rev() {
            prefix.push(p);
            rec(remaining - p, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions fitting in a `rows × cols` box (any size), descending lex.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    fn rec(rows_left: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(prefix.clone()));
        if rows_left == 0 {
            return;
        }
        for p in (1..=max).rev() {
            prefix.push(p);
            rec(rows_left - 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(rows, cols, &mut Vec::new(), &mut out);
    out.sort();
    out.reverse();
    out
}

/// All partitions contained in the staircase `δ_n = (n-1, n-2, ..., 1)`.
pub fn partitions_in_staircase(n: usize) -> Vec<Partition> {
    fn rec(n: usize, row: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        out.push(Partition::new(prefix.clone()));
        if row >= n {
            return;
        }
        let cap = max.min(n - row);
        for p in (1..=cap).rev() {
            prefix.push(p);
            rec(n, row + 1, p, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, 1, n, &mut Vec::new(), &mut out);
    out.sort();
    out.reverse();
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn staircase_containment() {
        assert!(Partition::new(vec![2, 2]).fits_staircase(5));
        assert!(!Partition::new(vec![5]).fits_staircase(5));
        assert!(Partition::new(vec![4, 3, 2, 1]).fits_staircase(5));
    }

    #[test]
    fn m_sequence_values() {
        // Figure fixture: λ = (3,2) in n = 5 has m = (2,3,5,5)
        assert_eq!(Partition::new(vec![3, 2, 0, 0]).m_sequence(5), vec![2, 3, 5, 5]);
        assert_eq!(Partition::empty().m_sequence(4), vec![4, 4, 4]);
        assert_eq!(Partition::new(vec![3, 2, 1]).m_sequence(4), vec![1, 2, 3]);
    }

    #[test]
    fn area_sequence_values() {
        assert_eq!(Partition::new(vec![3, 2]).area_sequence(5), vec![1, 1, 2, 1]);
        assert_eq!(Partition::new(vec![4, 3, 2, 1]).area_sequence(5), vec![0, 0, 0, 0]);
        assert_eq!(Partition::empty().area_sequence(4), vec![3, 2, 1]);
    }

    #[test]
    fn inc_graph_shapes() {
        let k3 = Partition::empty().inc_graph(3);
        assert_eq!(k3.edges(), vec![(1, 2), (1, 3), (2, 3)]);
        let chain = Partition::new(vec![3, 2, 1]).inc_graph(4);
        assert_eq!(chain.edge_count(), 0);
        let path = Partition::new(vec![1]).inc_graph(3);
        assert_eq!(path.edges(), vec![(1, 2), (2, 3)]);
    }

    #[test]
    fn conjugate_values() {
        assert_eq!(Partition::new(vec![2, 2]).conjugate(), Partition::new(vec![2, 2]));
        assert_eq!(Partition::new(vec![3, 1]).conjugate(), Partition::new(vec![2, 1, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn parse_syntax() {
        assert_eq!(Partition::parse("2,2").unwrap(), Partition::new(vec![2, 2]));
        assert_eq!(Partition::parse("0").unwrap(), Partition::empty());
        assert_eq!(Partition::parse("").unwrap(), Partition::empty());
        assert_eq!(Partition::parse("3,2,0,0").unwrap(), Partition::new(vec![3, 2]));
        assert!(Partition::parse("1,2").is_err());
        assert!(Partition::parse("a,b").is_err());
    }

    #[test]
    fn staircase_enumeration_is_catalan() {
        // #partitions inside δ_n is the n-th Catalan number
        let catalan = [1usize, 1, 2, 5, 14, 42, 132, 429];
        for n in 1..=7 {
            assert_eq!(partitions_in_staircase(n).len(), catalan[n]);
        }
    }

    #[test]
    fn m_sequence_bijection_and_edge_count() {
        for n in 1..=7 {
            for lam in partitions_in_staircase(n) {
                let m = lam.m_sequence(n);
                let recovered: Vec<usize> = m.iter().map(|&mi| n - mi).collect();
                assert_eq!(Partition::try_new(recovered).unwrap(), lam);
                let g = lam.inc_graph(n);
                assert_eq!(g.edge_count(), n * (n - 1) / 2 - lam.size());
            }
        }
    }

    proptest! {
        #[test]
        fn conjugate_is_involutive(parts in prop::collection::vec(0usize..9, 0..8)) {
            let mut sorted = parts.clone();
            sorted.sort_unstable_by(|a, b| b.cmp(a));
            let lam = Partition::new(sorted);
            prop_assert_eq!(lam.conjugate().conjugate(), lam.clone());
            prop_assert_eq!(lam.conjugate().size(), lam.size());
        }
    }
}
