//! The generator alphabet.
//!
//! The declaration order of the variants fixes the canonical letter order
//! used for monomial comparison: `X^−` letters first, then `h`, then `K`,
//! then `C^{±1/2}`, then `D^{±1}`, then `X^+` — mirroring the triangular
//! shape (lowering, Cartan, raising) of the ordered monomial basis.  Within a
//! class, letters compare lexicographically on their fields.

use crate::root::RootDatum;

/// A single letter of the free algebra.
///
/// Field conventions: `i` is a node index (`1 ..= M+N−1`), `n` is a loop
/// degree, `s ≠ 0` a Cartan loop degree, and `e ∈ {+1, −1}` an exponent
/// selecting a generator or its inverse (`C^{+1/2}` vs `C^{−1/2}`, etc.).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    XMinus { i: u8, n: i64 },
    H { i: u8, s: i64 },
    K { i: u8, e: i8 },
    CHalf { e: i8 },
    Dgen { e: i8 },
    XPlus { i: u8, n: i64 },
}

impl Gen {
    pub fn xplus(i: usize, n: i64) -> Gen {
        Gen::XPlus { i: i as u8, n }
    }

    pub fn xminus(i: usize, n: i64) -> Gen {
        Gen::XMinus { i: i as u8, n }
    }

    /// `X^±_i(n)` with the sign chosen at runtime.
    pub fn x(sign: super::Sign, i: usize, n: i64) -> Gen {
        match sign {
            super::Sign::Plus => Gen::xplus(i, n),
            super::Sign::Minus => Gen::xminus(i, n),
        }
    }

    /// `h_i(s)`; panics on `s = 0`, which is not a generator.
    pub fn h(i: usize, s: i64) -> Gen {
        assert!(s != 0, "h_i(0) is not a generator");
        Gen::H { i: i as u8, s }
    }

    /// `K_i^{±1}`; `e` must be `±1`.
    pub fn k(i: usize, e: i8) -> Gen {
        assert!(e == 1 || e == -1, "K exponent must be ±1");
        Gen::K { i: i as u8, e }
    }

    /// `C^{±1/2}`; `e` must be `±1` (the exponent of the half power).
    pub fn c_half(e: i8) -> Gen {
        assert!(e == 1 || e == -1, "C^{{1/2}} exponent must be ±1");
        Gen::CHalf { e }
    }

    /// `D^{±1}`; `e` must be `±1`.
    pub fn d(e: i8) -> Gen {
        assert!(e == 1 || e == -1, "D exponent must be ±1");
        Gen::Dgen { e }
    }

    /// The node index carried by the letter, if any.
    pub fn node(&self) -> Option<usize> {
        match *self {
            Gen::XPlus { i, .. } | Gen::XMinus { i, .. } | Gen::H { i, .. } | Gen::K { i, .. } => {
                Some(i as usize)
            }
            Gen::CHalf { .. } | Gen::Dgen { .. } => None,
        }
    }

    /// ℤ-degree: `n` for `X^±_i(n)`, `s` for `h_i(s)`, `0` otherwise.
    pub fn z_degree(&self) -> i64 {
        match *self {
            Gen::XPlus { n, .. } | Gen::XMinus { n, .. } => n,
            Gen::H { s, .. } => s,
            _ => 0,
        }
    }

    /// Parity (0 even, 1 odd): only `X^±` at the odd node is odd.
    pub fn parity(&self, rd: &RootDatum) -> u8 {
        match *self {
            Gen::XPlus { i, .. } | Gen::XMinus { i, .. } => rd.node_parity(i as usize),
            _ => 0,
        }
    }

    /// `true` for `X^+` and `X^−` letters.
    pub fn is_x(&self) -> bool {
        matches!(self, Gen::XPlus { .. } | Gen::XMinus { .. })
    }
}

impl std::fmt::Display for Gen {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match *self {
            Gen::XPlus { i, n } => write!(f, "Xp({i},{n})"),
            Gen::XMinus { i, n } => write!(f, "Xm({i},{n})"),
            Gen::H { i, s } => write!(f, "h({i},{s})"),
            Gen::K { i, e } => {
                if e == 1 {
                    write!(f, "K({i})")
                } else {
                    write!(f, "Kinv({i})")
                }
            }
            Gen::CHalf { e } => {
                if e == 1 {
                    write!(f, "C2")
                } else {
                    write!(f, "C2inv")
                }
            }
            Gen::Dgen { e } => {
                if e == 1 {
                    write!(f, "D")
                } else {
                    write!(f, "Dinv")
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_order_matches_triangular_shape() {
        let xm = Gen::xminus(3, 7);
        let h = Gen::h(1, -2);
        let k = Gen::k(1, 1);
        let c = Gen::c_half(-1);
        let d = Gen::d(1);
        let xp = Gen::xplus(1, -9);
        let mut v = vec![xp, d, c, k, h, xm];
        v.sort();
        assert_eq!(v, vec![xm, h, k, c, d, xp]);
    }

    #[test]
    fn within_class_order_is_lexicographic_on_fields() {
        assert!(Gen::xplus(1, 5) < Gen::xplus(2, -5));
        assert!(Gen::xplus(1, -1) < Gen::xplus(1, 0));
        assert!(Gen::h(2, -3) < Gen::h(2, 3));
    }

    #[test]
    fn degrees_and_parities() {
        let rd = RootDatum::new(2, 2).unwrap();
        assert_eq!(Gen::xplus(1, 2).z_degree(), 2);
        assert_eq!(Gen::h(2, -1).z_degree(), -1);
        assert_eq!(Gen::k(1, -1).z_degree(), 0);
        assert_eq!(Gen::d(1).z_degree(), 0);
        assert_eq!(Gen::xplus(2, 0).parity(&rd), 1);
        assert_eq!(Gen::xminus(2, 4).parity(&rd), 1);
        assert_eq!(Gen::xplus(1, 0).parity(&rd), 0);
        assert_eq!(Gen::h(2, 1).parity(&rd), 0);
    }

    #[test]
    fn display_forms() {
        assert_eq!(Gen::xplus(1, -2).to_string(), "Xp(1,-2)");
        assert_eq!(Gen::xminus(3, 0).to_string(), "Xm(3,0)");
        assert_eq!(Gen::h(2, -1).to_string(), "h(2,-1)");
        assert_eq!(Gen::k(1, 1).to_string(), "K(1)");
        assert_eq!(Gen::k(1, -1).to_string(), "Kinv(1)");
        assert_eq!(Gen::c_half(1).to_string(), "C2");
        assert_eq!(Gen::c_half(-1).to_string(), "C2inv");
        assert_eq!(Gen::d(-1).to_string(), "Dinv");
    }
}
