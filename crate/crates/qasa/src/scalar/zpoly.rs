//! Ordinary polynomials in an auxiliary variable `z` over [`QScalar`],
//! used for the polynomial data of finite-dimensional modules (the `P_i`
//! and `Q` polynomials) and their expansions at `z = 0` and `z = ∞`.

use std::fmt;

use super::qscalar::QScalar;
use super::series::{ExpansionPoint, TruncSeries};

/// A polynomial `Σ_k c_k z^k`, trailing zero coefficients trimmed
/// (the zero polynomial stores no coefficients).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZPoly {
    coeffs: Vec<QScalar>,
}

impl ZPoly {
    pub fn zero() -> Self {
        ZPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        ZPoly {
            coeffs: vec![QScalar::one()],
        }
    }

    pub fn from_coeffs(coeffs: Vec<QScalar>) -> Self {
        let mut p = ZPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeff(&self, k: usize) -> QScalar {
        self.coeffs.get(k).cloned().unwrap_or_else(QScalar::zero)
    }

    pub fn coeffs(&self) -> &[QScalar] {
        &self.coeffs
    }

    /// Constant term is 1 (the normalization required of module data).
    pub fn is_monic_at_zero(&self) -> bool {
        self.coeffs.first().map(|c| c.is_one()).unwrap_or(false)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::from_coeffs(
            (0..n)
                .map(|k| &self.coeff(k) + &rhs.coeff(k))
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let n = self.coeffs.len() + rhs.coeffs.len() - 1;
        let mut out = vec![QScalar::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::from_coeffs(out)
    }

    pub fn scale(&self, c: &QScalar) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|k| k * c).collect())
    }

    /// Substitute `z ↦ c·z`: multiplies coefficient `k` by `c^k`.
    pub fn scale_z(&self, c: &QScalar) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, a)| a * &c.pow_int(k as i64))
                .collect(),
        )
    }

    /// Expand as a series at the given point, known through `order`.
    ///
    /// At `z = 0` this is the polynomial itself padded with known zeros; at
    /// `z = ∞` the internal variable is `τ = z^{-1}`, so `z^k` contributes at
    /// internal exponent `-k` and everything above the constant term is a
    /// known zero.
    pub fn to_series(&self, point: ExpansionPoint, order: i64) -> TruncSeries {
        match point {
            ExpansionPoint::AtZero => TruncSeries::from_fn(point, 0, order, |e| {
                if e >= 0 {
                    self.coeff(e as usize)
                } else {
                    QScalar::zero()
                }
            }),
            ExpansionPoint::AtInfinity => {
                let d = self.degree().map(|d| d as i64).unwrap_or(0);
                TruncSeries::from_fn(point, -d, order, |e| {
                    if e <= 0 {
                        self.coeff((-e) as usize)
                    } else {
                        QScalar::zero()
                    }
                })
            }
            ExpansionPoint::TwoSided => TruncSeries::from_fn(point, -order, order, |e| {
                if e >= 0 {
                    self.coeff(e as usize)
                } else {
                    QScalar::zero()
                }
            }),
        }
    }

    /// Finite support as `(z-exponent, coefficient)` pairs, for multiplying
    /// into two-sided series.
    pub fn support(&self) -> Vec<(i64, QScalar)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as i64, c.clone()))
            .collect()
    }

    /// Multiply into a series over the **same `z` variable**: at `z = ∞`
    /// expansions the internal exponents are negated accordingly.
    pub fn mul_series(&self, s: &TruncSeries) -> TruncSeries {
        let terms: Vec<(i64, QScalar)> = match s.point() {
            ExpansionPoint::AtInfinity => self
                .support()
                .into_iter()
                .map(|(e, c)| (-e, c))
                .collect(),
            _ => self.support(),
        };
        s.mul_finite(&terms)
    }
}

impl fmt::Display for ZPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                _ => {
                    if c.is_one() {
                        write!(f, "z")?
                    } else {
                        write!(f, "({c})z")?
                    }
                    if k > 1 {
                        write!(f, "^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl serde::Serialize for ZPoly {
    /// Serialized as the exact coefficient list `[c_0, c_1, …]` in canonical
    /// scalar text.
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn qs(t: &str) -> QScalar {
        t.parse().unwrap()
    }

    #[test]
    fn series_expansions_at_both_points() {
        // P = 1 - q^2 z
        let p = ZPoly::from_coeffs(vec![QScalar::one(), qs("-q^2")]);
        let s0 = p.to_series(ExpansionPoint::AtZero, 5);
        assert_eq!(s0.coeff(0).unwrap(), QScalar::one());
        assert_eq!(s0.coeff(1).unwrap(), qs("-q^2"));
        assert!(s0.coeff(2).unwrap().is_zero());
        let sinf = p.to_series(ExpansionPoint::AtInfinity, 5);
        // τ = z^{-1}: P = -q^2 τ^{-1} + 1
        assert_eq!(sinf.lo(), -1);
        assert_eq!(sinf.coeff(-1).unwrap(), qs("-q^2"));
        assert_eq!(sinf.coeff(0).unwrap(), QScalar::one());
        assert!(sinf.coeff(1).unwrap().is_zero());
    }

    #[test]
    fn ratio_of_shifted_polynomials_is_computable_both_ways() {
        // P(z q^{-1})/P(z q) for P = 1 - z: both expansions exist and agree
        // with the direct geometric-series calculation.
        let p = ZPoly::from_coeffs(vec![QScalar::one(), -&QScalar::one()]);
        let num = p.scale_z(&qs("q^-1"));
        let den = p.scale_z(&qs("q"));
        let t = 8;
        let at0 = num
            .to_series(ExpansionPoint::AtZero, t)
            .mul(&den.to_series(ExpansionPoint::AtZero, t).inverse().unwrap())
            .unwrap();
        // (1 - q^{-1}z)/(1 - qz) = 1 + (q - q^{-1})(qz + q^2z^2 + …)/1 …
        // spot check first coefficients exactly:
        assert_eq!(at0.coeff(0).unwrap(), QScalar::one());
        assert_eq!(at0.coeff(1).unwrap(), qs("q-q^-1"));
        assert_eq!(at0.coeff(2).unwrap(), &qs("q") * &qs("q-q^-1"));
        let atinf = num
            .to_series(ExpansionPoint::AtInfinity, t)
            .mul(
                &den.to_series(ExpansionPoint::AtInfinity, t)
                    .inverse()
                    .unwrap(),
            )
            .unwrap();
        // At infinity the ratio tends to q^{-1}/q = q^{-2}.
        assert_eq!(atinf.coeff(0).unwrap(), qs("q^-2"));
    }

    #[test]
    fn two_sided_annihilation() {
        // Q = 1 - a z annihilates f_t = a^t: (Q f)_t = f_t - a f_{t-1} = 0.
        let a = qs("q^5");
        let qpoly = ZPoly::from_coeffs(vec![QScalar::one(), -&a]);
        let f = TruncSeries::from_fn(ExpansionPoint::TwoSided, -6, 6, |t| a.pow_int(t));
        let prod = qpoly.mul_series(&f);
        assert!(prod.is_zero_to_order());
        assert_eq!(prod.lo(), -5);
        assert_eq!(prod.order(), 6);
    }

    #[test]
    fn display_shapes() {
        let p = ZPoly::from_coeffs(vec![QScalar::one(), qs("-q"), QScalar::zero(), qs("2")]);
        assert_eq!(p.to_string(), "1 + (-q)z + (2)z^3");
        assert_eq!(ZPoly::zero().to_string(), "0");
    }
}
