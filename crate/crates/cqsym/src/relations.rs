//! The local linear relations between `X_λ` for partitions differing in one
//! row (and their column versions via conjugation), as executable checks on
//! oracle values, plus the palindromicity verdict.

use crate::csf::OracleCache;
use crate::partition::{partitions_in_staircase, Partition};
use crate::qpoly::{qint, HalfInt, QPoly};
use crate::report::{CheckOutcome, CheckReport, Mismatch};

/// Which identity an instance refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RelationKind {
    /// `X_{μ0} + q X_{μ2} = [2]_q X_{μ1}`, raising row `i` by 0, 1, 2.
    RowBasic,
    /// `[ℓ-k]_q X_{ν0} + q^{ℓ-k} [k]_q X_{νℓ} = [ℓ]_q X_{νk}`.
    RowGeneral,
    /// The conjugated version of `RowBasic`.
    ColumnBasic,
    /// The conjugated version of `RowGeneral`.
    ColumnGeneral,
}

/// A single relation instance. For the column kinds, `base`, `i`, `ell`,
/// `k` describe the *conjugated* partition, which is where the row-shaped
/// preconditions must hold.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationInstance {
    pub kind: RelationKind,
    pub base: Partition,
    /// Modified row (1-indexed, over the zero-padded partition).
    pub i: usize,
    /// Stretch of the general relation; 2 for the basic one.
    pub ell: usize,
    /// Interpolation point of the general relation; 1 for the basic one.
    pub k: usize,
    pub n: usize,
}

/// Zero-padded part access where indices outside `1..=n-1` read as 0.
fn padded_part(lam: &Partition, j: i64, n: usize) -> usize {
    if j < 1 || j > (n - 1) as i64 {
        0
    } else {
        lam.part(j as usize)
    }
}

/// Raises row `i` of `lam` by `a`; the caller guarantees the result is a
/// partition.
fn raise_row(lam: &Partition, i: usize, a: usize) -> Partition {
    let rows = lam.len().max(i);
    let mut parts: Vec<usize> = (1..=rows).map(|r| lam.part(r)).collect();
    parts[i - 1] += a;
    Partition::new(parts)
}

/// Why an instance fails its preconditions, or `None` if applicable.
fn row_inapplicability(inst: &RelationInstance) -> Option<String> {
    let (lam, i, ell, k, n) = (&inst.base, inst.i, inst.ell, inst.k, inst.n);
    if ell < 2 || k > ell {
        return Some(format!("need 2 <= ell and k <= ell, got ell={ell}, k={k}"));
    }
    if i < 2 || i > n - 1 {
        return Some(format!("row index i={i} outside 2..={}", n - 1));
    }
    if !lam.fits_staircase(n) {
        return Some(format!("base {lam} not inside the staircase"));
    }
    if lam.part(i) + ell > lam.part(i - 1) {
        return Some(format!("need lambda_{i} + {ell} <= lambda_{}", i - 1));
    }
    if !raise_row(lam, i, ell).fits_staircase(n) {
        return Some("raised partition leaves the staircase".into());
    }
    let anchor = (n as i64) - lam.part(i) as i64;
    let run: Vec<usize> = (0..ell as i64)
        .map(|t| padded_part(lam, anchor - t, n))
        .collect();
    if run.windows(2).any(|w| w[0] != w[1]) {
        return Some(format!("equal-parts run fails at indices ending {anchor}"));
    }
    None
}

/// Evaluates `[ℓ-k] X_{ν0} + q^{ℓ-k} [k] X_{νℓ} = [ℓ] X_{νk}` on the oracle.
fn check_row_identity(cache: &mut OracleCache, inst: &RelationInstance) -> CheckOutcome {
    if let Some(reason) = row_inapplicability(inst) {
        return CheckOutcome::NotApplicable(reason);
    }
    let (lam, i, ell, k, n) = (&inst.base, inst.i, inst.ell, inst.k, inst.n);
    let label = format!(
        "{:?} base={lam} i={i} ell={ell} k={k} n={n}",
        inst.kind
    );
    let nu0 = cache.expansion(lam, n);
    let nuk = cache.expansion(&raise_row(lam, i, k), n);
    let nul = cache.expansion(&raise_row(lam, i, ell), n);
    let lhs = nu0
        .scale(&qint(ell - k))
        .add(&nul.scale(&qint(k).scale_power(ell - k)));
    let rhs = nuk.scale(&qint(ell));
    match lhs.first_difference(&rhs) {
        None => CheckOutcome::Report(CheckReport::pass(label)),
        Some((mu, l, r)) => CheckOutcome::Report(CheckReport::fail(
            label,
            Mismatch { key: format!("mu=[{mu}]"), lhs: l.to_string(), rhs: r.to_string() },
        )),
    }
}

/// The basic row relation (raise one row by 0, 1, 2).
pub fn row_relation_check(cache: &mut OracleCache, inst: &RelationInstance) -> CheckOutcome {
    debug_assert_eq!(inst.kind, RelationKind::RowBasic);
    debug_assert_eq!((inst.ell, inst.k), (2, 1));
    check_row_identity(cache, inst)
}

/// The general row relation with stretch `ell` and point `k`.
pub fn general_relation_check(cache: &mut OracleCache, inst: &RelationInstance) -> CheckOutcome {
    debug_assert_eq!(inst.kind, RelationKind::RowGeneral);
    check_row_identity(cache, inst)
}

/// Column relations: the instance data describes the conjugate side, so the
/// check conjugates the family back and compares oracle values, after
/// verifying `X_λ = X_{λ'}` for every partition involved.
pub fn column_relation_check(cache: &mut OracleCache, inst: &RelationInstance) -> CheckOutcome {
    debug_assert!(matches!(
        inst.kind,
        RelationKind::ColumnBasic | RelationKind::ColumnGeneral
    ));
    if let Some(reason) = row_inapplicability(inst) {
        return CheckOutcome::NotApplicable(reason);
    }
    let (lam, i, ell, k, n) = (&inst.base, inst.i, inst.ell, inst.k, inst.n);
    let label = format!(
        "{:?} base'={lam} i={i} ell={ell} k={k} n={n}",
        inst.kind
    );
    for a in [0, k, ell] {
        let nu = raise_row(lam, i, a);
        let conj = nu.conjugate();
        if !conj.fits_staircase(n) {
            return CheckOutcome::NotApplicable(format!("conjugate {conj} leaves the staircase"));
        }
        let direct = cache.expansion(&nu, n);
        let through = cache.expansion(&conj, n);
        if let Some((mu, l, r)) = direct.first_difference(&through) {
            return CheckOutcome::Report(CheckReport::fail(
                label,
                Mismatch {
                    key: format!("conjugation at nu={nu}, mu=[{mu}]"),
                    lhs: l.to_string(),
                    rhs: r.to_string(),
                },
            ));
        }
    }
    check_row_identity(cache, inst)
}

/// Every e-coefficient of `X_λ` must be palindromic about
/// `(C(n,2) - |λ|)/2`, the half of the edge count of the graph.
pub fn palindromicity_check(cache: &mut OracleCache, lam: &Partition, n: usize) -> CheckReport {
    let label = format!("palindromic lambda={lam} n={n}");
    let center = HalfInt((n * (n - 1) / 2 - lam.size()) as i64);
    let exp = cache.expansion(lam, n);
    for (mu, c) in exp.terms() {
        let ok = c.palindrome_center().map_or(false, |pc| pc.matches(center));
        if !ok {
            return CheckReport::fail(
                label,
                Mismatch {
                    key: format!("mu=[{mu}]"),
                    lhs: c.to_string(),
                    rhs: format!("palindromic with center {center}"),
                },
            );
        }
    }
    CheckReport::pass(label)
}

/// Enumerates every applicable relation instance for partitions inside the
/// staircase of order `n`, rows and columns, basic and general.
pub fn enumerate_instances(n: usize) -> Vec<RelationInstance> {
    let mut out = Vec::new();
    for lam in partitions_in_staircase(n) {
        for kind in [RelationKind::RowBasic, RelationKind::ColumnBasic] {
            // for columns, the instance base is the conjugate side
            let base = match kind {
                RelationKind::RowBasic => lam.clone(),
                _ => lam.conjugate(),
            };
            for i in 2..n {
                let inst = RelationInstance { kind, base: base.clone(), i, ell: 2, k: 1, n };
                if row_inapplicability(&inst).is_none() {
                    out.push(inst);
                }
            }
        }
        for kind in [RelationKind::RowGeneral, RelationKind::ColumnGeneral] {
            let base = match kind {
                RelationKind::RowGeneral => lam.clone(),
                _ => lam.conjugate(),
            };
            for i in 2..n {
                for ell in 2..n {
                    for k in 0..=ell {
                        let inst =
                            RelationInstance { kind, base: base.clone(), i, ell, k, n };
                        if row_inapplicability(&inst).is_none() {
                            out.push(inst);
                        }
                    }
                }
            }
        }
    }
    out
}

/// Runs the right check for the instance's kind.
pub fn check_instance(cache: &mut OracleCache, inst: &RelationInstance) -> CheckOutcome {
    match inst.kind {
        RelationKind::RowBasic => row_relation_check(cache, inst),
        RelationKind::RowGeneral => general_relation_check(cache, inst),
        RelationKind::ColumnBasic | RelationKind::ColumnGeneral => {
            column_relation_check(cache, inst)
        }
    }
}
