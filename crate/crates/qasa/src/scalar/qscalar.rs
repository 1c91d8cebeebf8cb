//! Canonical fractions of Laurent polynomials: the exact scalar field
//! `Q(q)` every other module computes over.
//!
//! A [`QScalar`] is a reduced fraction `num/den` of [`LaurentPoly`]s in a
//! canonical form chosen so that two scalars are equal **iff their stored
//! representations are identical**:
//!
//! * the polynomial parts are coprime in `Q[q]` (monic gcd divided out),
//! * all monomial content `q^k` is carried by the numerator (the
//!   denominator has a nonzero constant term),
//! * both parts have integer coefficients with joint content 1,
//! * the denominator's lowest (constant) coefficient is positive,
//! * zero is stored as `0/1`.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use super::laurent::{q_from_i64, LaurentPoly, Q};

/// Errors from scalar construction and arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ScalarError {
    /// A fraction with zero denominator was requested.
    #[error("division by zero scalar")]
    DivisionByZero,
    /// `q_integer_base` was given a base that is not `±q^k` with `k ≠ 0`.
    #[error("q-integer base must be a unit monomial q^k (k ≠ 0) up to sign, got `{0}`")]
    BadQIntegerBase(String),
    /// Text that does not belong to the scalar grammar.
    #[error("cannot parse scalar text `{text}`: {reason}")]
    Parse { text: String, reason: String },
}

/// A canonical element of the field `Q(q)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QScalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

// ---------------------------------------------------------------------------
// dense polynomial helpers (over Q, ordinary polynomials, coeffs[0] = const)
// ---------------------------------------------------------------------------

fn dense_trim(v: &mut Vec<Q>) {
    while v.last().map(|c| c.is_zero()).unwrap_or(false) {
        v.pop();
    }
}

fn dense_is_zero(v: &[Q]) -> bool {
    v.is_empty()
}

/// Remainder of `a` by `b` (`b` nonzero), in place of long division.
fn dense_rem(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut r = a.to_vec();
    dense_trim(&mut r);
    let db = b.len() - 1;
    let lead_b = &b[db];
    while r.len() >= b.len() && !dense_is_zero(&r) {
        let dr = r.len() - 1;
        let factor = &r[dr] / lead_b;
        let shift = dr - db;
        for (k, bc) in b.iter().enumerate() {
            let t = &factor * bc;
            r[k + shift] -= t;
        }
        dense_trim(&mut r);
    }
    r
}

/// Exact quotient `a / b` (panics if not exact; callers divide by a gcd).
fn dense_div_exact(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut r = a.to_vec();
    dense_trim(&mut r);
    if dense_is_zero(&r) {
        return Vec::new();
    }
    let db = b.len() - 1;
    let lead_b = &b[db];
    let mut out = vec![Q::zero(); r.len() - db];
    while r.len() >= b.len() && !dense_is_zero(&r) {
        let dr = r.len() - 1;
        let factor = &r[dr] / lead_b;
        let shift = dr - db;
        out[shift] = factor.clone();
        for (k, bc) in b.iter().enumerate() {
            let t = &factor * bc;
            r[k + shift] -= t;
        }
        dense_trim(&mut r);
    }
    assert!(
        dense_is_zero(&r),
        "internal error: polynomial division was not exact"
    );
    out
}

/// Monic gcd over `Q[q]` by the Euclidean algorithm.
fn dense_gcd(a: &[Q], b: &[Q]) -> Vec<Q> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    dense_trim(&mut x);
    dense_trim(&mut y);
    while !dense_is_zero(&y) {
        let r = dense_rem(&x, &y);
        x = y;
        y = r;
    }
    // make monic
    if let Some(lead) = x.last().cloned() {
        for c in &mut x {
            *c = &*c / &lead;
        }
    }
    x
}

impl QScalar {
    // -- constructors -------------------------------------------------------

    pub fn zero() -> Self {
        QScalar {
            num: LaurentPoly::zero(),
            den: LaurentPoly::one(),
        }
    }

    pub fn one() -> Self {
        QScalar {
            num: LaurentPoly::one(),
            den: LaurentPoly::one(),
        }
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::from_poly(LaurentPoly::q())
    }

    /// The monomial `q^k`.
    pub fn q_power(k: i64) -> Self {
        Self::from_poly(LaurentPoly::q_power(k))
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_poly(LaurentPoly::from_int(n))
    }

    pub fn from_rational(r: Q) -> Self {
        Self::from_poly(LaurentPoly::constant(r))
    }

    /// A scalar from a Laurent polynomial (denominator 1).
    pub fn from_poly(p: LaurentPoly) -> Self {
        Self::canonical(p, LaurentPoly::one())
    }

    /// A fraction; errors when the denominator is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(num, den))
    }

    /// Canonicalize a raw fraction with a nonzero denominator.
    fn canonical(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator reached canonicalization");
        if num.is_zero() {
            return Self::zero();
        }
        // Split off monomial shifts so both parts have nonzero constant term.
        let (an, mut n) = num.to_dense();
        let (ad, mut d) = den.to_dense();
        // Divide out the monic polynomial gcd over Q[q].
        let g = dense_gcd(&n, &d);
        if g.len() > 1 {
            n = dense_div_exact(&n, &g);
            d = dense_div_exact(&d, &g);
        }
        // Joint rational content: scale both to integer coefficients with
        // joint integer content 1.
        let mut den_lcm = BigInt::one();
        for c in n.iter().chain(d.iter()) {
            if !c.is_zero() {
                den_lcm = den_lcm.lcm(c.denom());
            }
        }
        let scale = Q::from_integer(den_lcm);
        let mut gcd_all = BigInt::zero();
        let scaled = |c: &Q, s: &Q| -> BigInt {
            let v = c * s;
            debug_assert!(v.is_integer());
            v.to_integer()
        };
        for c in n.iter().chain(d.iter()) {
            if !c.is_zero() {
                gcd_all = gcd_all.gcd(&scaled(c, &scale));
            }
        }
        // Sign: denominator's lowest (constant) coefficient positive.
        if scaled(&d[0], &scale).is_negative() {
            gcd_all = -gcd_all;
        }
        let factor = scale / Q::from_integer(gcd_all);
        let n_final: Vec<Q> = n.iter().map(|c| c * &factor).collect();
        let d_final: Vec<Q> = d.iter().map(|c| c * &factor).collect();
        QScalar {
            num: LaurentPoly::from_dense(an - ad, &n_final),
            den: LaurentPoly::from_dense(0, &d_final),
        }
    }

    // -- views --------------------------------------------------------------

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// `true` when the scalar is a pure power `±c·q^k` (single-term numerator
    /// and constant denominator 1).
    pub fn as_monomial(&self) -> Option<(i64, Q)> {
        if !self.den.is_one() {
            return None;
        }
        self.num.as_monomial()
    }

    /// If the scalar equals `q^k` exactly, return `k`.
    pub fn as_q_power(&self) -> Option<i64> {
        match self.as_monomial() {
            Some((k, c)) if c.is_one() => Some(k),
            _ => None,
        }
    }

    /// If the scalar is a constant rational (no `q`), return it.
    pub fn as_rational(&self) -> Option<Q> {
        if !self.den.is_one() {
            // canonical forms keep rational constants as num/den of integers
            if let (Some((0, n)), Some((0, d))) = (self.num.as_monomial(), self.den.as_monomial())
            {
                return Some(n / d);
            }
            return None;
        }
        match self.num.as_monomial() {
            Some((0, c)) => Some(c),
            None if self.num.is_zero() => Some(Q::zero()),
            _ => None,
        }
    }

    // -- arithmetic ----------------------------------------------------------

    pub fn inv(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(Self::canonical(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self, ScalarError> {
        Ok(self * &rhs.inv()?)
    }

    /// Substitute `q ↦ q^{-1}` (the bar involution on scalars).
    pub fn invert_q(&self) -> Self {
        Self::canonical(self.num.invert_q(), self.den.invert_q())
    }

    /// `q^k · self`.
    pub fn mul_q_power(&self, k: i64) -> Self {
        // Shifting the numerator preserves every canonical invariant.
        QScalar {
            num: self.num.shift(k),
            den: self.den.clone(),
        }
    }

    // -- q-integers ----------------------------------------------------------

    /// The balanced q-integer `[m]_q = (q^m − q^{−m})/(q − q^{−1})`, i.e.
    /// `q^{m−1} + q^{m−3} + … + q^{1−m}` for `m > 0`, with `[0]_q = 0` and
    /// `[−m]_q = −[m]_q`.
    pub fn q_integer(m: i64) -> Self {
        let mut p = LaurentPoly::zero();
        let s = m.signum();
        let a = m.abs();
        let one = Q::one();
        let sign = q_from_i64(s);
        let mut e = a - 1;
        while e >= -(a - 1) && a > 0 {
            p.add_term(e, &(&one * &sign));
            e -= 2;
        }
        Self::from_poly(p)
    }

    /// The q-integer in a unit-monomial base: `[m]_b = (b^m − b^{−m})/(b − b^{−1})`.
    ///
    /// The base must be `±q^k` with `k ≠ 0` (so the defining denominator is
    /// nonzero); in particular `[m]_{q^{-1}} = [m]_q`.
    pub fn q_integer_base(m: i64, base: &QScalar) -> Result<Self, ScalarError> {
        let (k, c) = base
            .as_monomial()
            .ok_or_else(|| ScalarError::BadQIntegerBase(base.to_string()))?;
        if k == 0 || !(c.is_one() || (-c.clone()).is_one()) {
            return Err(ScalarError::BadQIntegerBase(base.to_string()));
        }
        // b = ±q^k: expand (b^m − b^{−m})/(b − b^{−1}) directly.
        let bm = base.pow_int(m);
        let bmneg = base.pow_int(-m);
        let b1 = base.clone();
        let b1neg = base.pow_int(-1);
        (&bm - &bmneg).checked_div(&(&b1 - &b1neg))
    }

    /// Integer power (negative exponents allowed for nonzero scalars;
    /// panics on `0^{-n}`).
    pub fn pow_int(&self, e: i64) -> Self {
        if e == 0 {
            return Self::one();
        }
        let base = if e < 0 {
            self.inv().expect("zero scalar raised to a negative power")
        } else {
            self.clone()
        };
        let mut out = Self::one();
        for _ in 0..e.abs() {
            out = &out * &base;
        }
        out
    }
}

impl Add for &QScalar {
    type Output = QScalar;
    fn add(self, rhs: &QScalar) -> QScalar {
        QScalar::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &QScalar {
    type Output = QScalar;
    fn sub(self, rhs: &QScalar) -> QScalar {
        QScalar::canonical(
            &(&self.num * &rhs.den) - &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Mul for &QScalar {
    type Output = QScalar;
    fn mul(self, rhs: &QScalar) -> QScalar {
        QScalar::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &QScalar {
    type Output = QScalar;
    fn neg(self) -> QScalar {
        QScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// Field division; panics on a zero divisor (use [`QScalar::checked_div`]
/// where the divisor may vanish).
impl Div for &QScalar {
    type Output = QScalar;
    fn div(self, rhs: &QScalar) -> QScalar {
        self.checked_div(rhs)
            .expect("scalar division by zero; use checked_div for fallible paths")
    }
}

impl fmt::Display for QScalar {
    /// Canonical text: numerator, then `/denominator` when the denominator is
    /// not 1; when a fraction bar is printed, any part with two or more terms
    /// is parenthesized. Examples: `0`, `q^2`, `q^2+1+q^-2`, `q^-1/2`,
    /// `(q^2-1)/(q+q^-1)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let wrap = |p: &LaurentPoly| p.term_count() >= 2;
        if wrap(&self.num) {
            write!(f, "({})", self.num)?;
        } else {
            write!(f, "{}", self.num)?;
        }
        if wrap(&self.den) {
            write!(f, "/({})", self.den)
        } else {
            write!(f, "/{}", self.den)
        }
    }
}

impl serde::Serialize for QScalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}
