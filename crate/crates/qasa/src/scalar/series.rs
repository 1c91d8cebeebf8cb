//! Truncated series in a formal variable `z` over [`QScalar`].
//!
//! A [`TruncSeries`] tracks exact coefficients up to a truncation order at a
//! chosen expansion point:
//!
//! * [`ExpansionPoint::AtZero`] — a (Laurent) power series in `z`; all
//!   exponents below the stored range are known to be zero.
//! * [`ExpansionPoint::AtInfinity`] — a series in `z^{-1}`, stored on the
//!   internal variable `τ = z^{-1}` with the same conventions.
//! * [`ExpansionPoint::TwoSided`] — a doubly infinite series known only on a
//!   window of `z`-exponents; coefficients outside the window are unknown,
//!   not zero.
//!
//! Truncation is never silent: every operation computes the exact range on
//! which the result is determined by its inputs, and comparisons only claim
//! what both sides know.

use std::fmt;

use thiserror::Error;

use super::laurent::{q_from_i64, Q};
use super::qscalar::QScalar;

/// Where a series is expanded.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum ExpansionPoint {
    /// Powers of `z` (exponent `e` means `z^e`).
    AtZero,
    /// Powers of `z^{-1}` (internal exponent `e` means `z^{-e}`).
    AtInfinity,
    /// A window of `z`-exponents of a doubly infinite series.
    TwoSided,
}

/// Errors from series construction and arithmetic.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeriesError {
    #[error("series expanded at different points cannot be combined ({0:?} vs {1:?})")]
    PointMismatch(ExpansionPoint, ExpansionPoint),
    #[error("series is not invertible to the requested order (lowest known coefficient is zero or the known range is empty)")]
    NotInvertible,
    #[error("series exponential requires a series supported in strictly positive exponents with nothing unknown below them")]
    ExpPrecondition,
    #[error("series logarithm requires constant term 1 with nothing unknown below it")]
    LogPrecondition,
    #[error("the requested coefficient range is not known to this truncation")]
    RangeUnknown,
}

/// A truncated series: exact coefficients for internal exponents
/// `lo ..= order`, at a given expansion point.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncSeries {
    point: ExpansionPoint,
    /// Lowest tracked internal exponent.
    lo: i64,
    /// Inclusive highest known internal exponent; `order ≥ lo - 1`
    /// (`order = lo - 1` means "nothing known", only possible two-sided after
    /// degenerate window intersections).
    order: i64,
    /// `coeffs[k]` is the coefficient of `τ^{lo + k}`.
    coeffs: Vec<QScalar>,
}

impl TruncSeries {
    // -- construction --------------------------------------------------------

    /// The zero series, known through `order`.
    pub fn zero(point: ExpansionPoint, order: i64) -> Self {
        match point {
            ExpansionPoint::TwoSided => TruncSeries {
                point,
                lo: -order,
                order,
                coeffs: vec![QScalar::zero(); (2 * order + 1).max(0) as usize],
            },
            _ => TruncSeries {
                point,
                lo: order + 1,
                order,
                coeffs: Vec::new(),
            },
        }
    }

    /// The constant series 1, known through `order ≥ 0`.
    pub fn one(point: ExpansionPoint, order: i64) -> Self {
        let mut s = Self::zero(point, order);
        s.set_coeff(0, QScalar::one());
        s
    }

    /// A single term `c·τ^e`, known through `order`.
    pub fn monomial(point: ExpansionPoint, e: i64, c: QScalar, order: i64) -> Self {
        let mut s = Self::zero(point, order);
        if e <= order {
            s.set_coeff(e, c);
        }
        s
    }

    /// Build from explicit coefficients on `lo ..= order`.
    pub fn from_coeffs(point: ExpansionPoint, lo: i64, coeffs: Vec<QScalar>) -> Self {
        let order = lo + coeffs.len() as i64 - 1;
        let mut s = TruncSeries {
            point,
            lo,
            order,
            coeffs,
        };
        s.normalize();
        s
    }

    /// Build from a coefficient function on `lo ..= order`.
    pub fn from_fn(
        point: ExpansionPoint,
        lo: i64,
        order: i64,
        mut f: impl FnMut(i64) -> QScalar,
    ) -> Self {
        let coeffs = (lo..=order).map(|e| f(e)).collect();
        Self::from_coeffs(point, lo, coeffs)
    }

    /// One-sided series drop leading stored zeros (they are implied); the
    /// two-sided window is kept verbatim (zeros inside a window are data).
    fn normalize(&mut self) {
        if self.point == ExpansionPoint::TwoSided {
            return;
        }
        while let Some(first) = self.coeffs.first() {
            if first.is_zero() {
                self.coeffs.remove(0);
                self.lo += 1;
            } else {
                break;
            }
        }
    }

    // -- views ---------------------------------------------------------------

    pub fn point(&self) -> ExpansionPoint {
        self.point
    }

    /// Inclusive upper bound of known internal exponents.
    pub fn order(&self) -> i64 {
        self.order
    }

    /// Lowest internal exponent with a stored coefficient. For one-sided
    /// series everything below is known-zero; for two-sided it is unknown.
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Coefficient of `τ^e`; `None` when unknown at this truncation.
    pub fn coeff(&self, e: i64) -> Option<QScalar> {
        if e > self.order {
            return None;
        }
        if e < self.lo {
            return match self.point {
                ExpansionPoint::TwoSided => None,
                _ => Some(QScalar::zero()),
            };
        }
        Some(self.coeffs[(e - self.lo) as usize].clone())
    }

    fn set_coeff(&mut self, e: i64, c: QScalar) {
        if e < self.lo {
            let mut pre = vec![QScalar::zero(); (self.lo - e) as usize];
            pre[0] = c;
            pre.extend(self.coeffs.drain(..));
            self.coeffs = pre;
            self.lo = e;
        } else {
            assert!(e <= self.order, "coefficient beyond truncation order");
            self.coeffs[(e - self.lo) as usize] = c;
        }
        self.normalize();
    }

    pub fn is_zero_to_order(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Lowest exponent with a nonzero known coefficient.
    pub fn lowest_nonzero(&self) -> Option<i64> {
        self.coeffs
            .iter()
            .position(|c| !c.is_zero())
            .map(|k| self.lo + k as i64)
    }

    /// Iterate known `(exponent, coefficient)` pairs in increasing order.
    pub fn iter_known(&self) -> impl Iterator<Item = (i64, &QScalar)> {
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(k, c)| (self.lo + k as i64, c))
    }

    // -- arithmetic ----------------------------------------------------------

    fn require_same_point(&self, rhs: &Self) -> Result<(), SeriesError> {
        if self.point != rhs.point {
            return Err(SeriesError::PointMismatch(self.point, rhs.point));
        }
        Ok(())
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.require_same_point(rhs)?;
        let order = self.order.min(rhs.order);
        let lo = match self.point {
            ExpansionPoint::TwoSided => self.lo.max(rhs.lo),
            _ => self.lo.min(rhs.lo),
        };
        Ok(Self::from_fn(self.point, lo, order, |e| {
            let a = self.coeff(e).unwrap_or_else(QScalar::zero);
            let b = rhs.coeff(e).unwrap_or_else(QScalar::zero);
            &a + &b
        }))
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            point: self.point,
            lo: self.lo,
            order: self.order,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        let mut s = TruncSeries {
            point: self.point,
            lo: self.lo,
            order: self.order,
            coeffs: self.coeffs.iter().map(|k| k * c).collect(),
        };
        s.normalize();
        s
    }

    /// Multiply; both series must be one-sided at the same point. The result
    /// is known through `min(order_a + lo_b, order_b + lo_a)`.
    pub fn mul(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.require_same_point(rhs)?;
        if self.point == ExpansionPoint::TwoSided {
            // Only multiplication by a polynomial-supported series keeps a
            // computable window; route through mul_finite for that.
            return Err(SeriesError::PointMismatch(self.point, rhs.point));
        }
        let order = (self.order + rhs.lo).min(rhs.order + self.lo);
        let lo = self.lo + rhs.lo;
        Ok(Self::from_fn(self.point, lo, order, |e| {
            let mut acc = QScalar::zero();
            for (i, a) in self.iter_known() {
                let j = e - i;
                if j < rhs.lo || j > rhs.order {
                    continue;
                }
                if let Some(b) = rhs.coeff(j) {
                    acc = &acc + &(a * &b);
                }
            }
            acc
        }))
    }

    /// Multiply by a finitely supported exponent/coefficient list, in the
    /// same internal variable. Works at every expansion point: the known
    /// window shrinks by the support span of the factor.
    pub fn mul_finite(&self, terms: &[(i64, QScalar)]) -> Self {
        let live: Vec<&(i64, QScalar)> = terms.iter().filter(|(_, c)| !c.is_zero()).collect();
        if live.is_empty() {
            // Multiplying by zero: known-zero everywhere we previously knew.
            return Self::zero(self.point, self.order);
        }
        let dmin = live.iter().map(|(e, _)| *e).min().unwrap();
        let dmax = live.iter().map(|(e, _)| *e).max().unwrap();
        let (lo, order) = match self.point {
            // unknown below self.lo ⇒ result exponent e is known only when
            // every summand index e - d (dmin ≤ d ≤ dmax) is known.
            ExpansionPoint::TwoSided => (self.lo + dmax, self.order + dmin),
            _ => (self.lo + dmin, self.order + dmin),
        };
        Self::from_fn(self.point, lo, order, |e| {
            let mut acc = QScalar::zero();
            for (d, c) in &live {
                if let Some(a) = self.coeff(e - d) {
                    acc = &acc + &(&a * c);
                } else if self.point != ExpansionPoint::TwoSided {
                    // e - d > order can only happen when e > order + dmin for
                    // some live d; excluded by the order bound above.
                    unreachable!("one-sided coefficient requested above order");
                }
            }
            acc
        })
    }

    /// Multiplicative inverse of a one-sided series whose lowest known
    /// coefficient is nonzero.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        if self.point == ExpansionPoint::TwoSided {
            return Err(SeriesError::NotInvertible);
        }
        let v = self.lowest_nonzero().ok_or(SeriesError::NotInvertible)?;
        if v != self.lo {
            // The series has stored zeros below its first nonzero coefficient
            // only two-sided; one-sided normalization removes them.
            return Err(SeriesError::NotInvertible);
        }
        let a0 = self.coeff(v).unwrap();
        let a0_inv = a0.inv().map_err(|_| SeriesError::NotInvertible)?;
        // (a0 τ^v (1 + u))^{-1} = a0^{-1} τ^{-v} Σ (-u)^k, u known to
        // relative order n = order - v.
        let n = self.order - v;
        let mut inv_rel = vec![QScalar::zero(); (n + 1) as usize];
        inv_rel[0] = a0_inv.clone();
        // Solve Σ_{j≤k} a_{v+j} b_{-v+k-j} = δ_{k,0} triangularly.
        for k in 1..=n {
            let mut acc = QScalar::zero();
            for j in 1..=k {
                let a = self.coeff(v + j).unwrap();
                let b = inv_rel[(k - j) as usize].clone();
                acc = &acc + &(&a * &b);
            }
            inv_rel[k as usize] = -&(&acc * &a0_inv);
        }
        Ok(Self::from_coeffs(self.point, -v, inv_rel))
    }

    /// `exp` of a one-sided series supported in strictly positive exponents.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if self.point == ExpansionPoint::TwoSided {
            return Err(SeriesError::ExpPrecondition);
        }
        if self.lo <= 0 && self.coeffs.iter().any(|c| !c.is_zero()) {
            return Err(SeriesError::ExpPrecondition);
        }
        let order = self.order;
        if order < 0 {
            return Err(SeriesError::ExpPrecondition);
        }
        let mut result = Self::one(self.point, order);
        let mut power = Self::one(self.point, order);
        let mut factorial = Q::from_integer(1.into());
        let kmax = order.max(0);
        for k in 1..=kmax {
            power = power.mul(self)?;
            factorial = factorial * q_from_i64(k);
            let inv_fact = QScalar::from_rational(Q::from_integer(1.into()) / factorial.clone());
            result = result.add(&power.scale(&inv_fact))?;
            if power.is_zero_to_order() {
                break;
            }
        }
        // `result.order` may have shrunk through mul; it is still ≥ the
        // honest bound because self.lo ≥ 1 keeps mul orders non-decreasing.
        Ok(result)
    }

    /// `log` of a one-sided series with constant term 1 and nothing below.
    pub fn log(&self) -> Result<Self, SeriesError> {
        if self.point == ExpansionPoint::TwoSided {
            return Err(SeriesError::LogPrecondition);
        }
        if self.lo < 0 || self.coeff(0).map(|c| !c.is_one()).unwrap_or(true) {
            return Err(SeriesError::LogPrecondition);
        }
        let order = self.order;
        // u = self - 1 is supported in exponents ≥ 1.
        let u = self.sub(&Self::one(self.point, order))?;
        let mut result = Self::zero(self.point, order);
        let mut power = Self::one(self.point, order);
        for k in 1..=order.max(0) {
            power = power.mul(&u)?;
            if power.is_zero_to_order() {
                break;
            }
            let c = QScalar::from_rational(
                Q::new(if k % 2 == 1 { 1 } else { -1 }.into(), k.into()),
            );
            result = result.add(&power.scale(&c))?;
        }
        Ok(result)
    }

    /// Exact equality of every coefficient with exponent ≤ `n`; errors when
    /// either side does not know that range.
    pub fn eq_to_order(&self, rhs: &Self, n: i64) -> Result<bool, SeriesError> {
        self.require_same_point(rhs)?;
        if self.order < n || rhs.order < n {
            return Err(SeriesError::RangeUnknown);
        }
        // One-sided: everything below min(lo) is known-zero on both sides.
        // Two-sided: compare on the common known window only.
        let lo = match self.point {
            ExpansionPoint::TwoSided => self.lo.max(rhs.lo),
            _ => self.lo.min(rhs.lo),
        };
        for e in lo..=n {
            let a = self.coeff(e);
            let b = rhs.coeff(e);
            match (a, b) {
                (Some(x), Some(y)) => {
                    if x != y {
                        return Ok(false);
                    }
                }
                _ => return Err(SeriesError::RangeUnknown),
            }
        }
        Ok(true)
    }
}

impl fmt::Display for TruncSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = match self.point {
            ExpansionPoint::AtZero | ExpansionPoint::TwoSided => "z",
            ExpansionPoint::AtInfinity => "z^-1",
        };
        let mut first = true;
        for (e, c) in self.iter_known() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if e == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "({c})·{var}^{e}")?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O({var}^{})", self.order + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(t: &str) -> QScalar {
        t.parse().unwrap()
    }

    #[test]
    fn exp_of_az_matches_the_closed_form() {
        // exp(a z) to order 3 = 1 + a z + a^2 z^2 / 2 + a^3 z^3 / 6, a = q^2
        let a = qs("q^2");
        let s = TruncSeries::monomial(ExpansionPoint::AtZero, 1, a.clone(), 3);
        let e = s.exp().unwrap();
        assert_eq!(e.coeff(0).unwrap(), QScalar::one());
        assert_eq!(e.coeff(1).unwrap(), a);
        assert_eq!(e.coeff(2).unwrap(), &(&a * &a) * &qs("1/2"));
        assert_eq!(
            e.coeff(3).unwrap(),
            &(&(&a * &a) * &a) * &QScalar::from_rational(num_rational::BigRational::new(
                1.into(),
                6.into()
            ))
        );
    }

    #[test]
    fn log_inverts_exp_to_order_20() {
        let a = qs("q-1");
        let mut s = TruncSeries::zero(ExpansionPoint::AtZero, 20);
        s.set_coeff(1, a.clone());
        s.set_coeff(3, qs("q^-2/3"));
        let round = s.exp().unwrap().log().unwrap();
        assert!(round.eq_to_order(&s, 20).unwrap());
    }

    #[test]
    fn inverse_of_geometric_series() {
        // 1/(1 - az) = Σ a^k z^k; check against the series inverse
        let a = qs("q^3");
        let one_minus = TruncSeries::from_fn(ExpansionPoint::AtZero, 0, 10, |k| match k {
            0 => QScalar::one(),
            1 => -&a,
            _ => QScalar::zero(),
        });
        let inv = one_minus.inverse().unwrap();
        for k in 0..=10 {
            assert_eq!(inv.coeff(k).unwrap(), a.pow_int(k), "coefficient {k}");
        }
    }

    #[test]
    fn two_sided_windows_track_knowledge() {
        // f(z) = Σ_{|t|≤4} a^t z^t, multiply by (1 - a z): the window shrinks
        // at the top but coefficients that remain are exactly zero except the
        // boundary effect at the bottom.
        let a = qs("q");
        let f = TruncSeries::from_fn(ExpansionPoint::TwoSided, -4, 4, |t| a.pow_int(t));
        let prod = f.mul_finite(&[(0, QScalar::one()), (1, -&a)]);
        assert_eq!(prod.lo(), -3);
        assert_eq!(prod.order(), 4);
        for t in -3..=4 {
            assert!(prod.coeff(t).unwrap().is_zero(), "t = {t}");
        }
        assert_eq!(f.coeff(-5), None);
        assert_eq!(f.coeff(0).unwrap(), QScalar::one());
    }

    #[test]
    fn at_infinity_series_invert() {
        // In τ = z^{-1}: P = τ^{-1}(q + τ) i.e. qz + 1 viewed at infinity.
        let s = TruncSeries::from_coeffs(
            ExpansionPoint::AtInfinity,
            -1,
            vec![qs("q"), QScalar::one(), QScalar::zero(), QScalar::zero()],
        );
        let inv = s.inverse().unwrap();
        assert_eq!(inv.lo(), 1);
        let prod = s.mul(&inv).unwrap();
        assert_eq!(prod.coeff(0).unwrap(), QScalar::one());
        assert!(prod.coeff(1).unwrap().is_zero());
    }

    #[test]
    fn exp_rejects_constant_terms_and_principal_parts() {
        let bad = TruncSeries::one(ExpansionPoint::AtZero, 5);
        assert!(matches!(bad.exp(), Err(SeriesError::ExpPrecondition)));
        let worse = TruncSeries::monomial(ExpansionPoint::AtZero, -1, qs("q"), 5);
        assert!(matches!(worse.exp(), Err(SeriesError::ExpPrecondition)));
        let ok = TruncSeries::monomial(ExpansionPoint::AtZero, 2, qs("q"), 5);
        assert!(ok.exp().is_ok());
    }

    #[test]
    fn log_requires_unit_constant_term() {
        let bad = TruncSeries::monomial(ExpansionPoint::AtZero, 1, qs("q"), 5);
        assert!(matches!(bad.log(), Err(SeriesError::LogPrecondition)));
    }
}
