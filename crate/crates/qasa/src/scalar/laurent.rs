//! Integer-exponent Laurent polynomials in `q` with exact rational
//! coefficients.
//!
//! A [`LaurentPoly`] is a finite map `exponent → coefficient` with no zero
//! coefficients stored, so structural equality is semantic equality. This is
//! the raw material for the canonical fractions in [`super::qscalar`].

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational coefficient type used throughout the crate.
pub type Q = BigRational;

/// Convenience constructor for a rational from an integer.
pub fn q_from_i64(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Convenience constructor for a rational `n/d`.
pub fn q_ratio(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// A Laurent polynomial `Σ c_e q^e` over the rationals.
///
/// Invariant: no stored coefficient is zero. Two values are equal exactly
/// when they are equal as Laurent polynomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, Q>,
}

impl LaurentPoly {
    /// The zero polynomial.
    pub fn zero() -> Self {
        LaurentPoly {
            terms: BTreeMap::new(),
        }
    }

    /// The constant polynomial `1`.
    pub fn one() -> Self {
        Self::monomial(0, Q::one())
    }

    /// The monomial `c·q^e` (the zero polynomial when `c = 0`).
    pub fn monomial(e: i64, c: Q) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(e, c);
        }
        LaurentPoly { terms }
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, Q::one())
    }

    /// The monomial `q^e`.
    pub fn q_power(e: i64) -> Self {
        Self::monomial(e, Q::one())
    }

    /// A constant polynomial.
    pub fn constant(c: Q) -> Self {
        Self::monomial(0, c)
    }

    /// A constant polynomial from an integer.
    pub fn from_int(n: i64) -> Self {
        Self::constant(q_from_i64(n))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&0)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    /// Number of stored (nonzero) terms.
    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Coefficient of `q^e` (zero when absent).
    pub fn coeff(&self, e: i64) -> Q {
        self.terms.get(&e).cloned().unwrap_or_else(Q::zero)
    }

    /// Lowest exponent with nonzero coefficient, if any.
    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    /// Highest exponent with nonzero coefficient, if any.
    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Iterate `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&i64, &Q)> {
        self.terms.iter()
    }

    /// Add `c·q^e` in place.
    pub fn add_term(&mut self, e: i64, c: &Q) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(e).or_insert_with(Q::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Multiply every coefficient by a nonzero rational (no-op structure
    /// change when `c = 0`: the result is then zero).
    pub fn scale(&self, c: &Q) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (*e, k * c))
                .collect(),
        }
    }

    /// Multiply by the monomial `q^e`.
    pub fn shift(&self, e: i64) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (k + e, c.clone())).collect(),
        }
    }

    /// Substitute `q ↦ q^{-1}` (exponent negation).
    pub fn invert_q(&self) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, c)| (-k, c.clone())).collect(),
        }
    }

    /// `true` when the polynomial is a single term `c·q^e`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// If the polynomial is a single term, return `(e, c)`.
    pub fn as_monomial(&self) -> Option<(i64, Q)> {
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            Some((*e, c.clone()))
        } else {
            None
        }
    }

    /// Dense view: `(lowest exponent, coefficients from that exponent up)`.
    /// Returns `(0, vec![])` for zero. The first and last entries of the
    /// returned vector are nonzero.
    pub fn to_dense(&self) -> (i64, Vec<Q>) {
        if self.is_zero() {
            return (0, Vec::new());
        }
        let lo = *self.terms.keys().next().unwrap();
        let hi = *self.terms.keys().next_back().unwrap();
        let mut v = vec![Q::zero(); (hi - lo + 1) as usize];
        for (e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    /// Rebuild from a dense view.
    pub fn from_dense(lo: i64, coeffs: &[Q]) -> Self {
        let mut p = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            p.add_term(lo + k as i64, c);
        }
        p
    }

    /// Evaluate the symmetry `q ↦ q^{-1}` fixedness: `true` for bar-invariant
    /// polynomials such as balanced q-integers.
    pub fn is_bar_invariant(&self) -> bool {
        *self == self.invert_q()
    }

    /// `true` when every coefficient is an integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, c);
        }
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(*e, &(-c.clone()));
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (*e, -c.clone()))
                .collect(),
        }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, &(c1 * c2));
            }
        }
        out
    }
}

/// Format one term of a Laurent polynomial. `lead` controls whether a
/// leading `+` is suppressed (first term) or signs are emitted as joiners.
fn fmt_term(f: &mut fmt::Formatter<'_>, e: i64, c: &Q, first: bool) -> fmt::Result {
    let neg = c.is_negative();
    if first {
        if neg {
            write!(f, "-")?;
        }
    } else if neg {
        write!(f, "-")?;
    } else {
        write!(f, "+")?;
    }
    let a = c.abs();
    let coeff_is_one = a.is_one();
    if e == 0 {
        // Constant term: always print the magnitude.
        if a.is_integer() {
            write!(f, "{}", a.numer())?;
        } else {
            write!(f, "{}/{}", a.numer(), a.denom())?;
        }
        return Ok(());
    }
    if !coeff_is_one {
        if a.is_integer() {
            write!(f, "{}", a.numer())?;
        } else {
            write!(f, "{}/{}", a.numer(), a.denom())?;
        }
    }
    if e == 1 {
        write!(f, "q")
    } else {
        write!(f, "q^{}", e)
    }
}

impl fmt::Display for LaurentPoly {
    /// Terms in decreasing exponent order, joined by `+`/`-`, e.g.
    /// `q^2-1`, `q+q^-1`, `-3q^4+q`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            fmt_term(f, *e, c, k == 0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn monomial_arithmetic_and_zero_pruning() {
        let a = LaurentPoly::monomial(2, q_from_i64(1));
        let b = LaurentPoly::monomial(2, q_from_i64(-1));
        assert!((&a + &b).is_zero());
        let c = &a * &a;
        assert_eq!(c.coeff(4), q_from_i64(1));
        assert_eq!(c.term_count(), 1);
    }

    #[test]
    fn dense_round_trip() {
        let mut p = LaurentPoly::zero();
        p.add_term(-2, &q_from_i64(3));
        p.add_term(1, &q_from_i64(-1));
        let (lo, v) = p.to_dense();
        assert_eq!(lo, -2);
        assert_eq!(v.len(), 4);
        assert_eq!(LaurentPoly::from_dense(lo, &v), p);
    }

    #[test]
    fn display_matches_grammar() {
        let mut p = LaurentPoly::zero();
        p.add_term(2, &q_from_i64(1));
        p.add_term(0, &q_from_i64(-1));
        assert_eq!(p.to_string(), "q^2-1");
        let mut r = LaurentPoly::zero();
        r.add_term(1, &q_from_i64(1));
        r.add_term(-1, &q_from_i64(1));
        assert_eq!(r.to_string(), "q+q^-1");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::from_int(7).to_string(), "7");
        let mut s = LaurentPoly::zero();
        s.add_term(4, &q_from_i64(-3));
        s.add_term(1, &q_from_i64(1));
        assert_eq!(s.to_string(), "-3q^4+q");
    }

    #[test]
    fn bar_invariance_of_balanced_shapes() {
        let mut p = LaurentPoly::zero();
        p.add_term(1, &q_from_i64(1));
        p.add_term(-1, &q_from_i64(1));
        assert!(p.is_bar_invariant());
        assert!(!LaurentPoly::q().is_bar_invariant());
    }
}
