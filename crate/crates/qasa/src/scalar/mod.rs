//! Exact scalar arithmetic: Laurent polynomials in `q`, the canonical
//! fraction field `Q(q)`, balanced q-integers, truncated series, and the
//! bit-exact text grammar.
//!
//! The scalar level deliberately knows nothing about the algebra: the
//! central element `C^{±1/2}` of the loop presentation is *not* a scalar —
//! it lives in the generator alphabet of [`crate::algebra`] (where
//! `(C^{1/2})^2 = C` holds by word concatenation), keeping this field free
//! of fractional powers.

mod laurent;
mod qscalar;
mod series;
mod text;
mod zpoly;

pub use laurent::{q_from_i64, q_ratio, LaurentPoly, Q};
pub use qscalar::{QScalar, ScalarError};
pub use series::{ExpansionPoint, SeriesError, TruncSeries};
pub use text::parse_qscalar;
pub use zpoly::ZPoly;

/// The balanced q-integer `[m]_q`.
pub fn q_integer(m: i64) -> QScalar {
    QScalar::q_integer(m)
}

/// The balanced q-integer `[m]_b` in a unit-monomial base `b = ±q^k`, `k ≠ 0`.
pub fn q_integer_base(m: i64, base: &QScalar) -> Result<QScalar, ScalarError> {
    QScalar::q_integer_base(m, base)
}

/// `exp` of a series supported in strictly positive exponents.
pub fn series_exp(s: &TruncSeries) -> Result<TruncSeries, SeriesError> {
    s.exp()
}

/// `log` of a series with constant term 1.
pub fn series_log(s: &TruncSeries) -> Result<TruncSeries, SeriesError> {
    s.log()
}
