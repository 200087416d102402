//! Dense univariate polynomials in `q` over arbitrary-precision integers,
//! plus the q-combinatorial constructors (`[n]_q`, `[n]_q!`, q-multinomials)
//! and the shape predicates (palindromic, unimodal, nonnegative) used by the
//! coefficient formulas.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum QPolyError {
    /// Division left a nonzero remainder or a non-integral quotient step.
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("division by the zero polynomial")]
    DivisionByZero,
}

/// A polynomial in `q`, stored dense and lowest-degree-first.
///
/// Trailing zero coefficients are trimmed; the zero polynomial is the empty
/// vector. Values are immutable after construction and all operations are
/// pure functions.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QPoly {
    coeffs: Vec<BigInt>,
}

/// A half-integer `n/2`, the natural value type for centers of palindromic
/// polynomials. Stores the numerator over 2.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInt(pub i64);

impl HalfInt {
    pub fn from_integer(n: i64) -> Self {
        HalfInt(2 * n)
    }
}

impl Add for HalfInt {
    type Output = HalfInt;
    fn add(self, rhs: HalfInt) -> HalfInt {
        HalfInt(self.0 + rhs.0)
    }
}

impl fmt::Display for HalfInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 % 2 == 0 {
            write!(f, "{}", self.0 / 2)
        } else {
            write!(f, "{}/2", self.0)
        }
    }
}

/// Center of symmetry of a palindromic coefficient sequence.
///
/// The zero polynomial is palindromic about every center.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PalindromeCenter {
    Any,
    At(HalfInt),
}

impl PalindromeCenter {
    /// Whether this center is compatible with the given one (`Any` matches
    /// everything).
    pub fn matches(&self, center: HalfInt) -> bool {
        match self {
            PalindromeCenter::Any => true,
            PalindromeCenter::At(c) => *c == center,
        }
    }
}

impl QPoly {
    pub fn zero() -> Self {
        QPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        QPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        QPoly::from_bigints(vec![BigInt::from(c)])
    }

    /// `q^k`.
    pub fn monomial(k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = BigInt::one();
        QPoly { coeffs }
    }

    pub fn from_coeffs(coeffs: Vec<i64>) -> Self {
        QPoly::from_bigints(coeffs.into_iter().map(BigInt::from).collect())
    }

    pub fn from_bigints(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        QPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of a nonzero polynomial; `None` is the degree of 0.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Index of the lowest nonzero coefficient; `None` for 0.
    pub fn low_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `q^i` (zero beyond the stored degree).
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Multiply by `q^k`.
    pub fn scale_power(&self, k: usize) -> QPoly {
        if self.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        QPoly { coeffs }
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact quotient `self / divisor`, or `InexactDivision` when no
    /// polynomial with integer coefficients satisfies `self = divisor * c`.
    ///
    /// Long division from the top coefficient; the divisor's leading
    /// coefficient need not be 1, so every step checks divisibility.
    pub fn exact_div(&self, divisor: &QPoly) -> Result<QPoly, QPolyError> {
        if divisor.is_zero() {
            return Err(QPolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(QPoly::zero());
        }
        let (da, db) = (self.coeffs.len() - 1, divisor.coeffs.len() - 1);
        if da < db {
            return Err(QPolyError::InexactDivision);
        }
        let lead = &divisor.coeffs[db];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); da - db + 1];
        for k in (0..=da - db).rev() {
            let top = rem[k + db].clone();
            if top.is_zero() {
                continue;
            }
            if !(&top % lead).is_zero() {
                return Err(QPolyError::InexactDivision);
            }
            let c = &top / lead;
            for (i, bc) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * bc;
            }
            quot[k] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(QPolyError::InexactDivision);
        }
        Ok(QPoly::from_bigints(quot))
    }

    /// Center of symmetry of the support, when the nonzero coefficient
    /// window reads the same in both directions; `Any` for the zero
    /// polynomial, `None` when not palindromic.
    ///
    /// A shifted palindrome like `q(1+q)^3` counts, with center `(low+deg)/2`.
    pub fn palindrome_center(&self) -> Option<PalindromeCenter> {
        let lo = match self.low_degree() {
            None => return Some(PalindromeCenter::Any),
            Some(lo) => lo,
        };
        let hi = self.coeffs.len() - 1;
        for i in 0..=(hi - lo) {
            if self.coeffs[lo + i] != self.coeffs[hi - i] {
                return None;
            }
        }
        Some(PalindromeCenter::At(HalfInt((lo + hi) as i64)))
    }

    /// Whether the full coefficient sequence rises then falls (internal
    /// zeros count as dips). The zero polynomial is unimodal.
    pub fn is_unimodal(&self) -> bool {
        let mut i = 1;
        while i < self.coeffs.len() && self.coeffs[i - 1] <= self.coeffs[i] {
            i += 1;
        }
        while i < self.coeffs.len() && self.coeffs[i - 1] >= self.coeffs[i] {
            i += 1;
        }
        i >= self.coeffs.len()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Canonical coefficient-array form, lowest degree first.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(bigint_to_json).collect())
    }

    pub fn from_json(value: &serde_json::Value) -> Option<QPoly> {
        let arr = value.as_array()?;
        let coeffs = arr.iter().map(bigint_from_json).collect::<Option<Vec<_>>>()?;
        Some(QPoly::from_bigints(coeffs))
    }
}

pub(crate) fn bigint_to_json(c: &BigInt) -> serde_json::Value {
    match i64::try_from(c.clone()) {
        Ok(v) => serde_json::Value::from(v),
        // out of i64 range: fall back to a decimal string
        Err(_) => serde_json::Value::String(c.to_string()),
    }
}

pub(crate) fn bigint_from_json(value: &serde_json::Value) -> Option<BigInt> {
    if let Some(v) = value.as_i64() {
        return Some(BigInt::from(v));
    }
    value.as_str()?.parse().ok()
}

impl Add for &QPoly {
    type Output = QPoly;
    fn add(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        QPoly::from_bigints(coeffs)
    }
}

impl Sub for &QPoly {
    type Output = QPoly;
    fn sub(self, rhs: &QPoly) -> QPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i] += c;
        }
        for (i, c) in rhs.coeffs.iter().enumerate() {
            coeffs[i] -= c;
        }
        QPoly::from_bigints(coeffs)
    }
}

impl Mul for &QPoly {
    type Output = QPoly;
    fn mul(self, rhs: &QPoly) -> QPoly {
        if self.is_zero() || rhs.is_zero() {
            return QPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        QPoly::from_bigints(coeffs)
    }
}

impl fmt::Display for QPoly {
    /// Pretty form, lowest degree first: `1 + q + 2q^2 + q^3 + q^4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let show_coeff = !mag.is_one() || i == 0;
            if show_coeff {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "q")?,
                _ => write!(f, "q^{i}")?,
            }
        }
        Ok(())
    }
}

/// The q-integer `[n]_q = 1 + q + ... + q^{n-1}`; `[0]_q = 0`.
pub fn qint(n: usize) -> QPoly {
    QPoly::from_bigints(vec![BigInt::one(); n])
}

/// The q-factorial `[n]_q! = [n]_q [n-1]_q ... [1]_q`; `[0]_q! = 1`.
pub fn qfact(n: usize) -> QPoly {
    let mut acc = QPoly::one();
    for k in 1..=n {
        acc = &acc * &qint(k);
    }
    acc
}

/// Falling product `[top]_q [top-1]_q ... [top-count+1]_q`.
///
/// Panics if the product would reach a negative q-integer.
pub fn qfalling(top: usize, count: usize) -> QPoly {
    assert!(count <= top + 1, "qfalling({top}, {count}) reaches below [0]_q");
    let mut acc = QPoly::one();
    for k in 0..count {
        acc = &acc * &qint(top - k);
    }
    acc
}

/// The q-multinomial coefficient of the given parts; its denominator always
/// divides exactly, so a division failure means corrupted arithmetic.
pub fn qmultinomial(parts: &[usize]) -> QPoly {
    let total: usize = parts.iter().sum();
    let mut num = qfact(total);
    for &p in parts {
        num = num
            .exact_div(&qfact(p))
            .expect("q-multinomial division is always exact");
    }
    num
}

/// Product of a sequence of polynomials.
pub fn product<'a>(factors: impl IntoIterator<Item = &'a QPoly>) -> QPoly {
    factors
        .into_iter()
        .fold(QPoly::one(), |acc, f| &acc * f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn qint_small_values() {
        assert_eq!(qint(3), QPoly::from_coeffs(vec![1, 1, 1]));
        assert_eq!(qint(0), QPoly::zero());
        assert_eq!(qint(1), QPoly::one());
    }

    #[test]
    fn qfact_small_values() {
        assert_eq!(qfact(0), QPoly::one());
        assert_eq!(qfact(2), QPoly::from_coeffs(vec![1, 1]));
        // (1+q)(1+q+q^2) expanded by hand
        assert_eq!(qfact(3), QPoly::from_coeffs(vec![1, 2, 2, 1]));
    }

    #[test]
    fn qmultinomial_values() {
        // [3]_q (1 + q^2)
        assert_eq!(qmultinomial(&[2, 2]), QPoly::from_coeffs(vec![1, 1, 2, 1, 1]));
        assert_eq!(qmultinomial(&[1, 2]), qint(3));
        assert_eq!(qmultinomial(&[7]), QPoly::one());
        assert_eq!(qmultinomial(&[]), QPoly::one());
    }

    #[test]
    fn ring_ops() {
        let a = QPoly::from_coeffs(vec![1, 1]);
        assert_eq!(&a + &QPoly::monomial(1), QPoly::from_coeffs(vec![1, 2]));
        assert_eq!(&a * &a, QPoly::from_coeffs(vec![1, 2, 1]));
        assert_eq!(a.scale_power(2), QPoly::from_coeffs(vec![0, 0, 1, 1]));
        assert_eq!(QPoly::zero().scale_power(3), QPoly::zero());
    }

    #[test]
    fn exact_div_values() {
        let sq = QPoly::from_coeffs(vec![1, 2, 1]);
        assert_eq!(sq.exact_div(&qint(2)).unwrap(), qint(2));
        // [6]/[3] = 1 + q^3 by long division
        assert_eq!(
            qint(6).exact_div(&qint(3)).unwrap(),
            QPoly::from_coeffs(vec![1, 0, 0, 1])
        );
        assert_eq!(
            QPoly::from_coeffs(vec![1, 0, 1]).exact_div(&qint(2)),
            Err(QPolyError::InexactDivision)
        );
        assert_eq!(QPoly::one().exact_div(&QPoly::zero()), Err(QPolyError::DivisionByZero));
    }

    #[test]
    fn palindrome_centers() {
        assert_eq!(
            qint(5).palindrome_center(),
            Some(PalindromeCenter::At(HalfInt::from_integer(2)))
        );
        // q(1+q)^3 = q + 3q^2 + 3q^3 + q^4, center 5/2
        let p = qfact(2).scale_power(1);
        let shifted = &(&p * &qint(2)) * &qint(2);
        assert_eq!(
            shifted.palindrome_center(),
            Some(PalindromeCenter::At(HalfInt(5)))
        );
        assert_eq!(QPoly::from_coeffs(vec![1, 2]).palindrome_center(), None);
        assert_eq!(QPoly::zero().palindrome_center(), Some(PalindromeCenter::Any));
        assert!(QPoly::zero().palindrome_center().unwrap().matches(HalfInt(7)));
    }

    #[test]
    fn unimodal_and_nonnegative() {
        let p = QPoly::from_coeffs(vec![1, 3, 2]);
        assert!(p.is_unimodal() && p.is_nonnegative());
        let dip = QPoly::from_coeffs(vec![1, 0, 1]);
        assert!(!dip.is_unimodal());
        assert!(dip.is_nonnegative());
        let neg = QPoly::from_coeffs(vec![1, -1]);
        assert!(!neg.is_nonnegative());
        assert!(QPoly::zero().is_unimodal() && QPoly::zero().is_nonnegative());
    }

    #[test]
    fn telescoping_identity() {
        // q^a [b]_q = [a+b]_q - [a]_q
        for a in 0..=30usize {
            for b in 0..=30usize {
                let lhs = qint(b).scale_power(a);
                let rhs = &qint(a + b) - &qint(a);
                assert_eq!(lhs, rhs, "telescoping failed at a={a} b={b}");
            }
        }
    }

    #[test]
    fn partial_fraction_sum_identity() {
        // Cleared form of the telescoping sum
        //   sum_i q^{S_{i-1}+1} [a_i] / ([S_{i-1}+1][S_i+1]) = 1 - 1/[S_k+1],
        // multiplied through by D = prod_j [S_j + 1].
        fn check(a: &[usize]) {
            let mut sums = vec![0usize];
            for &ai in a {
                sums.push(sums.last().unwrap() + ai);
            }
            let total: usize = *sums.last().unwrap();
            let d = product(&sums.iter().map(|&s| qint(s + 1)).collect::<Vec<_>>());
            let mut lhs = QPoly::zero();
            for i in 1..sums.len() {
                let skip: Vec<QPoly> = (0..sums.len())
                    .filter(|&j| j != i - 1 && j != i)
                    .map(|j| qint(sums[j] + 1))
                    .collect();
                let term = &qint(a[i - 1]).scale_power(sums[i - 1] + 1) * &product(&skip);
                lhs = &lhs + &term;
            }
            let rhs = &d
                - &product(
                    &(0..sums.len() - 1)
                        .map(|j| qint(sums[j] + 1))
                        .collect::<Vec<_>>(),
                );
            assert_eq!(lhs, rhs, "cleared sum identity failed at a={a:?} (total {total})");
        }
        for k in 1..=4usize {
            let mut tuple = vec![0usize; k];
            loop {
                check(&tuple);
                let mut pos = k;
                while pos > 0 {
                    if tuple[pos - 1] < 4 {
                        tuple[pos - 1] += 1;
                        break;
                    }
                    tuple[pos - 1] = 0;
                    pos -= 1;
                }
                if pos == 0 {
                    break;
                }
            }
        }
    }

    #[test]
    fn two_block_identity() {
        // [a+b+2] - [a+1] - [b+1] = q^{a+1}[b+1] - [b+1]
        for a in 0..=8usize {
            for b in 0..=8usize {
                let lhs = &(&qint(a + b + 2) - &qint(a + 1)) - &qint(b + 1);
                let rhs = &qint(b + 1).scale_power(a + 1) - &qint(b + 1);
                assert_eq!(lhs, rhs, "failed at a={a} b={b}");
            }
        }
    }

    #[test]
    fn display_pretty() {
        assert_eq!(qmultinomial(&[2, 2]).to_string(), "1 + q + 2q^2 + q^3 + q^4");
        assert_eq!(QPoly::zero().to_string(), "0");
        assert_eq!(QPoly::from_coeffs(vec![0, 1]).to_string(), "q");
        assert_eq!(QPoly::from_coeffs(vec![2, -3, 1]).to_string(), "2 - 3q + q^2");
    }

    #[test]
    fn json_roundtrip() {
        let p = qmultinomial(&[2, 2]);
        assert_eq!(p.to_json().to_string(), "[1,1,2,1,1]");
        assert_eq!(QPoly::from_json(&p.to_json()).unwrap(), p);
    }

    fn small_poly() -> impl Strategy<Value = QPoly> {
        prop::collection::vec(-6i64..=6, 0..6).prop_map(QPoly::from_coeffs)
    }

    proptest! {
        #[test]
        fn ring_axioms(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &QPoly::zero(), a.clone());
            prop_assert_eq!(&a * &QPoly::one(), a.clone());
        }

        #[test]
        fn exact_div_inverts_mul(a in small_poly(), b in small_poly()) {
            prop_assume!(!b.is_zero());
            let prod = &a * &b;
            prop_assert_eq!(prod.exact_div(&b).unwrap(), a);
        }

        #[test]
        fn palindromic_products(n in 1usize..7, m in 1usize..7, s in 0usize..4, t in 0usize..4) {
            // product of palindromic polynomials is palindromic with summed centers
            let p = qint(n).scale_power(s);
            let r = qint(m).scale_power(t);
            let (cp, cr) = match (p.palindrome_center().unwrap(), r.palindrome_center().unwrap()) {
                (PalindromeCenter::At(x), PalindromeCenter::At(y)) => (x, y),
                _ => unreachable!(),
            };
            let prod = &p * &r;
            prop_assert_eq!(prod.palindrome_center(), Some(PalindromeCenter::At(cp + cr)));
        }
    }
}
