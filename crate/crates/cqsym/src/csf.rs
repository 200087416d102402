//! The ground-truth engine: computes `X_λ(x,q)` by direct enumeration of
//! proper colorings weighted by the ascent statistic, then converts the
//! monomial data to the elementary symmetric basis.
//!
//! Nothing here is shared with the closed-form evaluators in `rectlemma`,
//! `rook` or `nonabelian`; independence is the point.

use crate::partition::{partitions_of, IncGraph, Partition};
use crate::qpoly::QPoly;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// A homogeneous symmetric function of degree `n` expanded in the elementary
/// basis: a map from partitions of `n` to polynomial coefficients in `q`.
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EExpansion {
    n: usize,
    terms: BTreeMap<Partition, QPoly>,
}

impl EExpansion {
    pub fn zero(n: usize) -> Self {
        EExpansion { n, terms: BTreeMap::new() }
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Partition, QPoly)>) -> Self {
        let mut out = EExpansion::zero(n);
        for (mu, c) in terms {
            out.add_term(&mu, &c);
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `e_μ` (zero when absent).
    pub fn coefficient(&self, mu: &Partition) -> QPoly {
        self.terms.get(mu).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn add_term(&mut self, mu: &Partition, c: &QPoly) {
        assert_eq!(mu.size(), self.n, "e_{mu} is not homogeneous of degree {}", self.n);
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(mu.clone()).or_insert_with(QPoly::zero);
        *entry = &*entry + c;
        if entry.is_zero() {
            self.terms.remove(mu);
        }
    }

    /// Terms in reverse-lexicographic (descending) partition order.
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &QPoly)> {
        self.terms.iter().rev()
    }

    pub fn scale(&self, c: &QPoly) -> EExpansion {
        let mut out = EExpansion::zero(self.n);
        for (mu, p) in &self.terms {
            out.add_term(mu, &(p * c));
        }
        out
    }

    pub fn add(&self, other: &EExpansion) -> EExpansion {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (mu, p) in &other.terms {
            out.add_term(mu, p);
        }
        out
    }

    /// First key where the two expansions disagree, with both coefficients.
    pub fn first_difference(&self, other: &EExpansion) -> Option<(Partition, QPoly, QPoly)> {
        let mut keys: Vec<&Partition> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        keys.reverse();
        for mu in keys {
            let (a, b) = (self.coefficient(mu), other.coefficient(mu));
            if a != b {
                return Some((mu.clone(), a, b));
            }
        }
        None
    }

    /// `{"n":6,"terms":[{"mu":[4,2],"coeffs":[...]}, ...]}` with terms in
    /// reverse-lexicographic order.
    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<serde_json::Value> = self
            .terms()
            .map(|(mu, c)| {
                serde_json::json!({
                    "mu": mu.parts(),
                    "coeffs": c.to_json(),
                })
            })
            .collect();
        serde_json::json!({ "n": self.n, "terms": terms })
    }

    pub fn from_json(value: &serde_json::Value) -> Option<EExpansion> {
        let n = value.get("n")?.as_u64()? as usize;
        let mut out = EExpansion::zero(n);
        for term in value.get("terms")?.as_array()? {
            let parts = term
                .get("mu")?
                .as_array()?
                .iter()
                .map(|v| v.as_u64().map(|x| x as usize))
                .collect::<Option<Vec<_>>>()?;
            let mu = Partition::try_new(parts).ok()?;
            let c = QPoly::from_json(term.get("coeffs")?)?;
            out.add_term(&mu, &c);
        }
        Some(out)
    }
}

impl fmt::Display for EExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (mu, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({c}) e_[{mu}]")?;
        }
        Ok(())
    }
}

/// Sum of `q^{asc(k)}` over proper colorings of `g` in which color `c` is
/// used exactly `counts[c]` times; `counts` may be any composition.
fn coloring_generating_function(g: &IncGraph, counts: &[usize]) -> QPoly {
    let n = g.n();
    assert_eq!(counts.iter().sum::<usize>(), n);
    let max_asc = g.edge_count();
    let mut acc = vec![BigInt::zero(); max_asc + 1];
    let mut remaining = counts.to_vec();
    let mut colors = vec![0usize; n + 1];

    fn rec(
        g: &IncGraph,
        v: usize,
        asc: usize,
        remaining: &mut [usize],
        colors: &mut [usize],
        acc: &mut [BigInt],
    ) {
        if v > g.n() {
            acc[asc] += 1;
            return;
        }
        'color: for c in 0..remaining.len() {
            if remaining[c] == 0 {
                continue;
            }
            let mut rises = 0;
            let mut below = g.neighbors_below(v);
            while below != 0 {
                let u = below.trailing_zeros() as usize;
                below &= below - 1;
                if colors[u] == c {
                    continue 'color;
                }
                if colors[u] < c {
                    rises += 1;
                }
            }
            remaining[c] -= 1;
            colors[v] = c;
            rec(g, v + 1, asc + rises, remaining, colors, acc);
            remaining[c] += 1;
        }
    }

    rec(g, 1, 0, &mut remaining, &mut colors, &mut acc);
    QPoly::from_bigints(acc)
}

/// Coefficient of the monomial `x_1^{μ_1} ... x_k^{μ_k}` in `X_G(x,q)`:
/// the generating function of proper colorings using color `c` exactly
/// `μ_c` times, weighted by ascents.
pub fn monomial_coefficient(g: &IncGraph, mu: &Partition) -> QPoly {
    assert_eq!(mu.size(), g.n(), "|mu| must equal the vertex count");
    coloring_generating_function(g, mu.parts())
}

/// Expansion of `e_μ` in the monomial basis: the coefficient of `m_ν` is the
/// number of 0-1 matrices with row sums μ and column sums ν.
pub fn e_in_m(mu: &Partition) -> BTreeMap<Partition, BigInt> {
    let n = mu.size();
    let mut out = BTreeMap::new();
    for nu in partitions_of(n) {
        let count = zero_one_matrix_count(mu.parts(), nu.parts());
        if !count.is_zero() {
            out.insert(nu, count);
        }
    }
    out
}

/// Number of 0-1 matrices with the given row and column sums.
fn zero_one_matrix_count(rows: &[usize], cols: &[usize]) -> BigInt {
    fn rec(
        rows: &[usize],
        idx: usize,
        cols: &mut Vec<usize>,
        memo: &mut HashMap<(usize, Vec<usize>), BigInt>,
    ) -> BigInt {
        if idx == rows.len() {
            return if cols.iter().all(|&c| c == 0) {
                BigInt::from(1)
            } else {
                BigInt::zero()
            };
        }
        let key = (idx, cols.clone());
        if let Some(v) = memo.get(&key) {
            return v.clone();
        }
        // choose the subset of columns receiving a 1 in this row
        let need = rows[idx];
        let m = cols.len();
        let mut total = BigInt::zero();
        let mut chosen: Vec<usize> = Vec::new();
        fn choose(
            start: usize,
            need: usize,
            m: usize,
            rows: &[usize],
            idx: usize,
            cols: &mut Vec<usize>,
            chosen: &mut Vec<usize>,
            total: &mut BigInt,
            memo: &mut HashMap<(usize, Vec<usize>), BigInt>,
        ) {
            if need == 0 {
                for &j in chosen.iter() {
                    cols[j] -= 1;
                }
                *total += rec(rows, idx + 1, cols, memo);
                for &j in chosen.iter() {
                    cols[j] += 1;
                }
                return;
            }
            if m - start < need {
                return;
            }
            for j in start..m {
                if cols[j] == 0 {
                    continue;
                }
                chosen.push(j);
                choose(j + 1, need - 1, m, rows, idx, cols, chosen, total, memo);
                chosen.pop();
            }
        }
        choose(0, need, m, rows, idx, cols, &mut chosen, &mut total, memo);
        memo.insert(key, total.clone());
        total
    }
    if rows.iter().sum::<usize>() != cols.iter().sum::<usize>() {
        return BigInt::zero();
    }
    let mut cols_vec = cols.to_vec();
    rec(rows, 0, &mut cols_vec, &mut HashMap::new())
}

/// Solves for the unique e-expansion reproducing the given monomial-basis
/// coefficients of a degree-`n` symmetric function.
///
/// The transition matrix is unitriangular when partitions are processed in
/// descending lexicographic order (`e_{ν'} = m_ν +` lexicographically lower
/// terms), so the solve is division-free over the integers.
pub fn to_e_basis(mono: &BTreeMap<Partition, QPoly>, n: usize) -> EExpansion {
    let order = partitions_of(n); // descending lex
    let mut solved: BTreeMap<Partition, QPoly> = BTreeMap::new();
    let mut transition: HashMap<Partition, BTreeMap<Partition, BigInt>> = HashMap::new();
    for nu in &order {
        let x_nu = mono.get(nu).cloned().unwrap_or_else(QPoly::zero);
        let mut residue = x_nu;
        for (mu, coeff) in &solved {
            let m = &transition[mu];
            if let Some(count) = m.get(nu) {
                let correction = coeff * &QPoly::from_bigints(vec![count.clone()]);
                residue = &residue - &correction;
            }
        }
        let key = nu.conjugate();
        transition.insert(key.clone(), e_in_m(&key));
        solved.insert(key, residue);
    }
    EExpansion::from_terms(n, solved)
}

/// Memoizing front end for the oracle; one cache is shared across a sweep.
#[derive(Default)]
pub struct OracleCache {
    map: HashMap<(Partition, usize), EExpansion>,
}

impl OracleCache {
    pub fn new() -> Self {
        OracleCache::default()
    }

    /// `X_λ(x,q)` in the e-basis, by brute-force coloring enumeration.
    pub fn expansion(&mut self, lam: &Partition, n: usize) -> EExpansion {
        if let Some(e) = self.map.get(&(lam.clone(), n)) {
            return e.clone();
        }
        let e = x_lambda_oracle(lam, n);
        self.map.insert((lam.clone(), n), e.clone());
        e
    }
}

/// The oracle: monomial coefficients of `inc(P_λ)` for every partition of
/// `n`, converted to the e-basis.
///
/// Includes a deterministic symmetry spot check (the coefficient of
/// `x_1^{n-1} x_2` must equal that of `x_1 x_2^{n-1}`); a violation would
/// mean the enumeration is broken, since the function is a theorem-backed
/// symmetric function.
pub fn x_lambda_oracle(lam: &Partition, n: usize) -> EExpansion {
    assert!(lam.fits_staircase(n), "{lam} does not fit the staircase of order {n}");
    let g = lam.inc_graph(n);
    if n >= 2 {
        let a = coloring_generating_function(&g, &{
            let mut v = vec![0; 2];
            v[0] = n - 1;
            v[1] = 1;
            v
        });
        let b = coloring_generating_function(&g, &[1, n - 1]);
        assert_eq!(a, b, "symmetry violation for lambda={lam}, n={n}");
    }
    let mut mono = BTreeMap::new();
    for mu in partitions_of(n) {
        let c = monomial_coefficient(&g, &mu);
        if !c.is_zero() {
            mono.insert(mu, c);
        }
    }
    to_e_basis(&mono, n)
}
