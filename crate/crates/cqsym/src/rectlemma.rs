//! Nesting graphs `G_I`, the edge-product `f`, the coefficient `c_G` (two
//! independent definitions), the exponent `d`, the rectangular decomposition
//! coefficients `F_r`, and the abelian two-row e-expansion coefficients `G_r`.
//!
//! The graph `G_I` for a subset `I = {a_1 < ... < a_r}` of `[ℓ]` lives on
//! vertices `0..=ℓ+1`. Each `a_i`, in increasing order, is joined to the
//! largest unused vertex of `{0} ∪ I^c` below it (0 stays reusable). The
//! vertices of `I^c` left unmatched are then joined to `ℓ+1`, and parallel
//! `(0, ℓ+1)` edges pad the edge count up to `ℓ`. The length of an edge is
//! the number of edges nested under it, itself included; the `x` parallel
//! padding edges get lengths `ℓ-x+1, ..., ℓ`.

use crate::csf::{EExpansion, OracleCache};
use crate::partition::Partition;
use crate::qpoly::{qfact, qfalling, qint, qmultinomial, QPoly};
use crate::report::{CheckReport, Mismatch};

/// One edge of a nesting graph, with its nesting length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NestEdge {
    pub lo: usize,
    pub hi: usize,
    pub len: usize,
}

/// The non-crossing edge diagram attached to a subset of `[ℓ]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NestGraph {
    ell: usize,
    subset: Vec<usize>,
    edges: Vec<NestEdge>,
}

impl NestGraph {
    pub fn ell(&self) -> usize {
        self.ell
    }

    pub fn subset(&self) -> &[usize] {
        &self.subset
    }

    pub fn edges(&self) -> &[NestEdge] {
        &self.edges
    }
}

/// Builds `G_I`. `subset` must be strictly increasing inside `[ℓ]`.
pub fn build_nest_graph(ell: usize, subset: &[usize]) -> NestGraph {
    assert!(ell >= 1);
    assert!(
        subset.windows(2).all(|w| w[0] < w[1])
            && subset.iter().all(|&a| a >= 1 && a <= ell),
        "subset must be strictly increasing inside [1, {ell}]"
    );
    let top = ell + 1;
    let in_subset = |v: usize| subset.binary_search(&v).is_ok();

    let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(ell);
    let mut used = vec![false; ell + 1];
    for &a in subset {
        let mut b = 0;
        for v in (1..a).rev() {
            if !in_subset(v) && !used[v] {
                b = v;
                break;
            }
        }
        if b > 0 {
            used[b] = true;
        }
        pairs.push((b, a));
    }
    for v in 1..=ell {
        if !in_subset(v) && !used[v] {
            pairs.push((v, top));
        }
    }
    while pairs.len() < ell {
        pairs.push((0, top));
    }

    // lengths: count of edges nested under each, with the special rule for
    // the parallel (0, ell+1) multi-edge
    let parallel = pairs.iter().filter(|&&(b, a)| b == 0 && a == top).count();
    let mut next_parallel_len = ell - parallel + 1;
    let mut edges = Vec::with_capacity(ell);
    for &(b, a) in &pairs {
        let len = if b == 0 && a == top {
            let l = next_parallel_len;
            next_parallel_len += 1;
            l
        } else {
            pairs
                .iter()
                .filter(|&&(b2, a2)| b <= b2 && a2 <= a && !(b2 == 0 && a2 == top))
                .count()
        };
        edges.push(NestEdge { lo: b, hi: a, len });
    }
    let g = NestGraph { ell, subset: subset.to_vec(), edges };
    debug_assert!(nest_graph_valid(&g), "invalid nest graph for ell={ell}, I={subset:?}");
    g
}

fn nest_graph_valid(g: &NestGraph) -> bool {
    let top = g.ell + 1;
    if g.edges.len() != g.ell {
        return false;
    }
    let in_subset = |v: usize| g.subset.binary_search(&v).is_ok();
    for e in &g.edges {
        if e.lo >= e.hi || e.hi > top {
            return false;
        }
        if !(e.lo == 0 || !in_subset(e.lo)) {
            return false;
        }
        if !(e.hi == top || in_subset(e.hi)) {
            return false;
        }
    }
    // no crossing p1 < p2 < q1 < q2
    for e in &g.edges {
        for f in &g.edges {
            if e.lo < f.lo && f.lo < e.hi && e.hi < f.hi {
                return false;
            }
        }
    }
    true
}

/// Zero-padded row access for the shape `(m, λ_1, ..., λ_ℓ, 0)`:
/// index 0 is the extra value `m`, indexes beyond the length of λ are 0.
#[derive(Debug, Clone)]
pub struct ExtendedShape {
    m: i64,
    parts: Vec<usize>,
    ell: usize,
}

impl ExtendedShape {
    pub fn new(lam: &Partition, ell: usize, m: i64) -> Self {
        ExtendedShape { m, parts: lam.parts().to_vec(), ell }
    }

    /// Row `j` for `0 ≤ j ≤ ℓ+1`.
    pub fn at(&self, j: usize) -> i64 {
        assert!(j <= self.ell + 1, "row index {j} out of range");
        if j == 0 {
            self.m
        } else {
            self.parts.get(j - 1).copied().unwrap_or(0) as i64
        }
    }
}

/// `f` evaluated with the annihilation convention, plus a flag recording
/// whether a factor with strictly negative q-integer argument occurred.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FEval {
    pub poly: QPoly,
    pub negative_arg: bool,
}

/// The edge product `f(ℓ, m, λ, I)`: over each edge `(b, a)` of `G_I` the
/// factor is the q-integer of `λ̂_{ℓ+1-a} - λ̂_{ℓ+1-b} - len + 1` with
/// `λ̂_0 = m`. A zero argument makes the product vanish; a negative argument
/// also yields zero by convention — that never happens in the regimes where
/// the decomposition theorems use `f`, and the flag records it when it does.
pub fn f_poly_eval(ell: usize, m: i64, lam: &Partition, subset: &[usize]) -> FEval {
    let g = build_nest_graph(ell, subset);
    let shape = ExtendedShape::new(lam, ell, m);
    let mut factors = Vec::with_capacity(ell);
    let mut negative_arg = false;
    let mut vanished = false;
    for e in g.edges() {
        let arg = shape.at(ell + 1 - e.hi) - shape.at(ell + 1 - e.lo) - e.len as i64 + 1;
        if arg < 0 {
            negative_arg = true;
        }
        if arg <= 0 {
            vanished = true;
        } else {
            factors.push(qint(arg as usize));
        }
    }
    let poly = if vanished {
        QPoly::zero()
    } else {
        crate::qpoly::product(&factors)
    };
    FEval { poly, negative_arg }
}

pub fn f_poly(ell: usize, m: i64, lam: &Partition, subset: &[usize]) -> QPoly {
    f_poly_eval(ell, m, lam, subset).poly
}

/// `c_G` by the inductive definition: normalize the `(0, ℓ+1)` multi-edge
/// to a single copy (adding one if absent), delete it, split the rest into
/// consecutive nesting blocks, and recurse with a q-multinomial over the
/// block edge counts. A single-edge graph has `c = 1`.
pub fn c_inductive(g: &NestGraph) -> QPoly {
    fn rec(edges: &[(usize, usize)], lo: usize, hi: usize) -> QPoly {
        let inner: Vec<(usize, usize)> = edges
            .iter()
            .copied()
            .filter(|&(b, a)| !(b == lo && a == hi))
            .collect();
        if inner.is_empty() {
            return QPoly::one();
        }
        // maximal edges, left to right; non-crossing makes any two edges
        // nested or disjoint, so each maximal edge spans one block
        let mut maximal: Vec<(usize, usize)> = inner
            .iter()
            .copied()
            .filter(|&(b, a)| {
                !inner
                    .iter()
                    .any(|&(b2, a2)| (b2, a2) != (b, a) && b2 <= b && a <= a2)
            })
            .collect();
        maximal.sort_unstable();
        maximal.dedup();
        let mut block_sizes = Vec::with_capacity(maximal.len());
        let mut acc = QPoly::one();
        for &(mb, ma) in &maximal {
            let block: Vec<(usize, usize)> = inner
                .iter()
                .copied()
                .filter(|&(b, a)| mb <= b && a <= ma)
                .collect();
            block_sizes.push(block.len());
            acc = &acc * &rec(&block, mb, ma);
        }
        &acc * &qmultinomial(&block_sizes)
    }
    let pairs: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.lo, e.hi)).collect();
    rec(&pairs, 0, g.ell() + 1)
}

/// `c_G` by the hook form: `[ℓ]_q!` divided by the product of the edge
/// length q-integers. Always equals [`c_inductive`]; an inexact division
/// here means the length computation is broken.
pub fn c_hook(g: &NestGraph) -> QPoly {
    let denom = crate::qpoly::product(&g.edges().iter().map(|e| qint(e.len)).collect::<Vec<_>>());
    qfact(g.ell())
        .exact_div(&denom)
        .expect("hook form of c_G must divide exactly")
}

/// The exponent `d = r·width - Σ_i (ℓ-r+i-a_i) - Σ_i λ_{ℓ-a_i+1}` for
/// `I = {a_1 < ... < a_r}`. May be negative outside the decomposition
/// regimes; callers assert nonnegativity where the theorems require it.
pub fn d_exp(lam: &Partition, subset: &[usize], ell: usize, width: i64) -> i64 {
    let r = subset.len();
    let mut d = width * r as i64;
    for (i, &a) in subset.iter().enumerate() {
        d -= (ell - r + (i + 1)) as i64 - a as i64;
        d -= lam.part(ell - a + 1) as i64;
    }
    d
}

/// All `r`-subsets of `[ℓ]` in colexicographic order: compare by the
/// largest element first, then recursively on the rest.
pub fn subsets_colex(ell: usize, r: usize) -> Vec<Vec<usize>> {
    fn rec(max: usize, r: usize, tail: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if r == 0 {
            let mut s: Vec<usize> = tail.clone();
            s.sort_unstable();
            out.push(s);
            return;
        }
        for t in r..=max {
            tail.push(t);
            rec(t - 1, r - 1, tail, out);
            tail.pop();
        }
    }
    let mut out = Vec::new();
    if r <= ell {
        rec(ell, r, &mut Vec::new(), &mut out);
    }
    out
}

/// The nonzero summands of `F_r`, keyed by their subset, with the aggregate
/// negative-argument flag.
pub struct BigFTerms {
    pub terms: Vec<(Vec<usize>, QPoly)>,
    pub negative_factor_seen: bool,
}

/// Per-subset terms `q^d · c_I · f(ℓ, n-s, λ, I)` of the rectangular
/// decomposition coefficient `F_r^{ℓ,n-s}(λ)`.
pub fn big_f_terms(lam: &Partition, ell: usize, n: usize, s: usize, r: usize) -> BigFTerms {
    assert!(ell >= 1 && r <= ell);
    assert!(s < n && ell <= n - s, "need ell <= n - s");
    assert!(lam.fits_box(ell, n - s), "lambda must fit the {ell} x {} box", n - s);
    let width = (n - s) as i64;
    let mut terms = Vec::new();
    let mut negative = false;
    for subset in subsets_colex(ell, r) {
        let f = f_poly_eval(ell, width, lam, &subset);
        negative |= f.negative_arg;
        if f.poly.is_zero() {
            continue;
        }
        let d = d_exp(lam, &subset, ell, width);
        assert!(
            d >= 0,
            "negative exponent d={d} with nonzero f at lambda={lam}, ell={ell}, n={n}, s={s}, I={subset:?}"
        );
        let c = c_inductive(&build_nest_graph(ell, &subset));
        let term = (&c * &f.poly).scale_power(d as usize);
        terms.push((subset, term));
    }
    BigFTerms { terms, negative_factor_seen: negative }
}

/// `F_r^{ℓ,n-s}(λ)`, the coefficient of `X_{((n-s)^r)}` in the rectangular
/// decomposition of `[n-s]_q ... [n-ℓ-s+1]_q · X_λ`.
pub fn big_f(lam: &Partition, ell: usize, n: usize, s: usize, r: usize) -> QPoly {
    big_f_terms(lam, ell, n, s, r)
        .terms
        .into_iter()
        .fold(QPoly::zero(), |acc, (_, t)| &acc + &t)
}

/// Verifies `[n-s]_q ... [n-ℓ-s+1]_q · X_λ = Σ_r F_r · X_{((n-s)^r)}` in the
/// e-basis against the coloring oracle.
pub fn rect_decompose_check(
    cache: &mut OracleCache,
    lam: &Partition,
    ell: usize,
    n: usize,
    s: usize,
) -> CheckReport {
    let label = format!("rect lambda={lam} n={n} ell={ell} s={s}");
    assert!(ell <= s, "rectangles (n-s)^r need r <= s to fit the staircase");
    let lhs = cache.expansion(lam, n).scale(&qfalling(n - s, ell));
    let mut rhs = EExpansion::zero(n);
    let mut negative = false;
    for r in 0..=ell {
        let terms = big_f_terms(lam, ell, n, s, r);
        negative |= terms.negative_factor_seen;
        let f_r = terms
            .terms
            .into_iter()
            .fold(QPoly::zero(), |acc, (_, t)| &acc + &t);
        if f_r.is_zero() {
            continue;
        }
        let rect = Partition::new(vec![n - s; r]);
        rhs = rhs.add(&cache.expansion(&rect, n).scale(&f_r));
    }
    match lhs.first_difference(&rhs) {
        None => CheckReport::pass(label).with_negative_flag(negative),
        Some((mu, l, r)) => CheckReport::fail(
            label,
            Mismatch { key: format!("mu=[{mu}]"), lhs: l.to_string(), rhs: r.to_string() },
        )
        .with_negative_flag(negative),
    }
}

/// The inner sum `G_r(λ)` of the abelian e-expansion: like `F_r` but with
/// width `n-r` in the exponent and `n-r-1` as the extra row of the shape.
pub fn g_r(lam: &Partition, ell: usize, n: usize, r: usize) -> QPoly {
    g_r_flagged(lam, ell, n, r).0
}

pub fn g_r_flagged(lam: &Partition, ell: usize, n: usize, r: usize) -> (QPoly, bool) {
    assert!(ell >= 1 && r <= ell);
    assert!(2 * ell <= n, "abelian expansion needs ell <= n/2");
    assert!(lam.fits_box(ell, n - ell), "lambda must fit the {ell} x {} box", n - ell);
    let mut sum = QPoly::zero();
    let mut negative = false;
    for subset in subsets_colex(ell, r) {
        let f = f_poly_eval(ell, (n - r - 1) as i64, lam, &subset);
        negative |= f.negative_arg;
        if f.poly.is_zero() {
            continue;
        }
        let d = d_exp(lam, &subset, ell, (n - r) as i64);
        assert!(d >= 0, "negative exponent in G_r at lambda={lam}, ell={ell}, n={n}, r={r}");
        let c = c_inductive(&build_nest_graph(ell, &subset));
        sum = &sum + &(&c * &f.poly).scale_power(d as usize);
    }
    (sum, negative)
}

/// The abelian e-expansion
/// `X_λ = Σ_r [n-2r]_q [n-r-ℓ-1]_q! [r]_q! G_r(λ) e_{(n-r,r)}`.
///
/// At the boundary `r = ℓ = n/2` the printed prefactor reads
/// `[0]_q · [-1]_q!`; the two factors are adjacent pieces of `[n-2r]_q!`,
/// which there equals `[0]_q! = 1`, and that combined reading is the one
/// the rectangle case forces.
pub fn e_expansion_abelian(lam: &Partition, ell: usize, n: usize) -> EExpansion {
    assert!(2 * ell <= n, "abelian expansion needs ell <= n/2");
    assert!(lam.fits_box(ell, n - ell));
    let mut out = EExpansion::zero(n);
    for r in 0..=ell {
        let g = g_r(lam, ell, n, r);
        if g.is_zero() {
            continue;
        }
        let pref = if n >= r + ell + 1 {
            &(&qint(n - 2 * r) * &qfact(n - r - ell - 1)) * &qfact(r)
        } else {
            // r = ell = n/2: [n-2r]·[n-r-ell-1]! collapses to [0]! = 1
            qfact(r)
        };
        out.add_term(&Partition::new(vec![n - r, r]), &(&pref * &g));
    }
    out
}

/// Compares the abelian e-expansion with the coloring oracle.
pub fn abelian_expansion_check(
    cache: &mut OracleCache,
    lam: &Partition,
    ell: usize,
    n: usize,
) -> CheckReport {
    let label = format!("theorem-e lambda={lam} n={n} ell={ell}");
    let closed = e_expansion_abelian(lam, ell, n);
    let oracle = cache.expansion(lam, n);
    match oracle.first_difference(&closed) {
        None => CheckReport::pass(label),
        Some((mu, l, r)) => CheckReport::fail(
            label,
            Mismatch { key: format!("mu=[{mu}]"), lhs: l.to_string(), rhs: r.to_string() },
        ),
    }
}
