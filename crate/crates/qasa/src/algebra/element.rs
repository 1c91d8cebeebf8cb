//! Monomials (words in the generators), elements (exact linear combinations
//! of monomials), the concatenation product, and the q-bracket.

use std::collections::BTreeMap;

use crate::root::RootDatum;
use crate::scalar::QScalar;

use super::{AlgebraError, Gen};

/// A word in the generator alphabet.  The empty word is the unit.
///
/// Monomials compare lexicographically letter by letter (with the canonical
/// letter order), shorter prefixes first; this gives the deterministic term
/// order used by element maps.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(Vec<Gen>);

impl Monomial {
    pub fn one() -> Monomial {
        Monomial(Vec::new())
    }

    pub fn from_gens(gens: impl Into<Vec<Gen>>) -> Monomial {
        Monomial(gens.into())
    }

    pub fn single(g: Gen) -> Monomial {
        Monomial(vec![g])
    }

    pub fn gens(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Concatenation of words.
    pub fn concat(&self, other: &Monomial) -> Monomial {
        let mut v = Vec::with_capacity(self.0.len() + other.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        Monomial(v)
    }

    /// ℤ-degree: sum of the letters' degrees.
    pub fn z_degree(&self) -> i64 {
        self.0.iter().map(Gen::z_degree).sum()
    }

    /// Parity: sum of the letters' parities mod 2.
    pub fn parity(&self, rd: &RootDatum) -> u8 {
        self.0.iter().map(|g| g.parity(rd)).sum::<u8>() % 2
    }
}

impl std::fmt::Display for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.0.iter().map(Gen::to_string).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// An exact linear combination of monomials; zero coefficients are trimmed.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Element {
    terms: BTreeMap<Monomial, QScalar>,
}

impl Element {
    pub fn zero() -> Element {
        Element::default()
    }

    pub fn one() -> Element {
        Element::from_scalar(QScalar::one())
    }

    pub fn from_scalar(c: QScalar) -> Element {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial::one(), c);
        }
        Element { terms }
    }

    pub fn from_gen(g: Gen) -> Element {
        Element::from_monomial(Monomial::single(g), QScalar::one())
    }

    /// One word with an explicit coefficient.
    pub fn from_monomial(m: Monomial, c: QScalar) -> Element {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Element { terms }
    }

    /// The product of a list of letters as a single word.
    pub fn from_gens(gens: &[Gen]) -> Element {
        Element::from_monomial(Monomial::from_gens(gens.to_vec()), QScalar::one())
    }

    pub fn from_terms(pairs: impl IntoIterator<Item = (Monomial, QScalar)>) -> Element {
        let mut out = Element::zero();
        for (m, c) in pairs {
            out.add_term(m, &c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &QScalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> QScalar {
        self.terms.get(m).cloned().unwrap_or_else(QScalar::zero)
    }

    /// Add `c · m` in place, trimming a cancelled coefficient.
    pub fn add_term(&mut self, m: Monomial, c: &QScalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(slot) => {
                slot.insert(c.clone());
            }
            Entry::Occupied(mut slot) => {
                let sum = &*slot.get() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Element) -> Element {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }

    pub fn neg(&self) -> Element {
        Element {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &QScalar) -> Element {
        if c.is_zero() {
            return Element::zero();
        }
        Element {
            terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect(),
        }
    }

    /// Bilinear concatenation product.
    pub fn mul(&self, other: &Element) -> Element {
        let mut out = Element::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                out.add_term(m1.concat(m2), &(c1 * c2));
            }
        }
        out
    }

    /// `true` when every word has the same parity (the zero element counts
    /// as homogeneous).
    pub fn is_z2_homogeneous(&self, rd: &RootDatum) -> bool {
        let mut seen: Option<u8> = None;
        for m in self.terms.keys() {
            let p = m.parity(rd);
            match seen {
                None => seen = Some(p),
                Some(prev) if prev != p => return false,
                _ => {}
            }
        }
        true
    }

    /// Common parity of all words; errors on a mixed-parity element.
    /// The zero element reports even.
    pub fn parity(&self, rd: &RootDatum) -> Result<u8, AlgebraError> {
        let mut seen: Option<u8> = None;
        for m in self.terms.keys() {
            let p = m.parity(rd);
            match seen {
                None => seen = Some(p),
                Some(prev) if prev != p => {
                    return Err(AlgebraError::NotZ2Homogeneous {
                        context: self.to_string(),
                    })
                }
                _ => {}
            }
        }
        Ok(seen.unwrap_or(0))
    }

    /// `true` when every word has the same ℤ-degree.
    pub fn is_z_homogeneous(&self) -> bool {
        let mut seen: Option<i64> = None;
        for m in self.terms.keys() {
            let d = m.z_degree();
            match seen {
                None => seen = Some(d),
                Some(prev) if prev != d => return false,
                _ => {}
            }
        }
        true
    }

    /// Common ℤ-degree of all words; errors on a mixed-degree element.
    /// The zero element reports degree 0.
    pub fn z_degree(&self) -> Result<i64, AlgebraError> {
        let mut seen: Option<i64> = None;
        for m in self.terms.keys() {
            let d = m.z_degree();
            match seen {
                None => seen = Some(d),
                Some(prev) if prev != d => {
                    return Err(AlgebraError::NotZHomogeneous {
                        context: self.to_string(),
                    })
                }
                _ => {}
            }
        }
        Ok(seen.unwrap_or(0))
    }

    /// If the element is a pure scalar (multiple of the empty word), return it.
    pub fn as_scalar(&self) -> Option<QScalar> {
        if self.terms.is_empty() {
            return Some(QScalar::zero());
        }
        if self.terms.len() == 1 {
            if let Some((m, c)) = self.terms.iter().next() {
                if m.is_empty() {
                    return Some(c.clone());
                }
            }
        }
        None
    }
}

/// Render a coefficient for the expression grammar: bare when it is a single
/// positive integer-coefficient monomial in `q` (like `3`, `q^2`, `3q`),
/// parenthesized otherwise so the canonical scalar text re-parses exactly.
fn coeff_text(c: &QScalar) -> String {
    let bare = c
        .as_monomial()
        .map(|(_, r)| {
            use num_traits::{One, Signed};
            r.denom().is_one() && r.is_positive()
        })
        .unwrap_or(false)
        && c.denom().is_one();
    if bare {
        c.to_string()
    } else {
        format!("({c})")
    }
}

impl std::fmt::Display for Element {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut parts: Vec<String> = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            if m.is_empty() {
                parts.push(coeff_text(c));
            } else if c.is_one() {
                parts.push(m.to_string());
            } else {
                parts.push(format!("{}*{}", coeff_text(c), m));
            }
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl std::ops::Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        Element::add(self, rhs)
    }
}

impl std::ops::Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        Element::sub(self, rhs)
    }
}

impl std::ops::Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        Element::mul(self, rhs)
    }
}

impl std::ops::Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::neg(self)
    }
}

/// The q-bracket `[a, b]_u = ab − (−1)^{|a||b|} u ba`.
///
/// Both arguments must be ℤ₂-homogeneous (the sign needs a definite parity)
/// and `u` must be nonzero.
pub fn qbracket(
    rd: &RootDatum,
    a: &Element,
    b: &Element,
    u: &QScalar,
) -> Result<Element, AlgebraError> {
    if u.is_zero() {
        return Err(AlgebraError::ZeroBracketScalar);
    }
    let pa = a.parity(rd)?;
    let pb = b.parity(rd)?;
    let ab = a.mul(b);
    let ba = b.mul(a).scale(u);
    Ok(if pa == 1 && pb == 1 {
        ab.add(&ba)
    } else {
        ab.sub(&ba)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q_ratio, QScalar};

    fn rd22() -> RootDatum {
        RootDatum::new(2, 2).unwrap()
    }

    #[test]
    fn unit_and_scaling() {
        let x = Element::from_gen(Gen::xplus(1, 2));
        assert_eq!(Element::one().mul(&x), x);
        assert_eq!(x.mul(&Element::one()), x);
        let two_x = x.scale(&QScalar::from_int(2));
        let three_y = Element::from_gen(Gen::h(2, -1)).scale(&QScalar::from_int(3));
        let prod = two_x.mul(&three_y);
        let expected = Element::from_monomial(
            Monomial::from_gens(vec![Gen::xplus(1, 2), Gen::h(2, -1)]),
            QScalar::from_int(6),
        );
        assert_eq!(prod, expected);
    }

    #[test]
    fn degree_and_parity_are_additive() {
        let rd = rd22();
        let a = Element::from_gens(&[Gen::xplus(1, 2), Gen::h(2, -1)]);
        assert_eq!(a.z_degree().unwrap(), 1);
        assert_eq!(a.parity(&rd).unwrap(), 0);
        let b = Element::from_gens(&[Gen::xplus(2, 3)]);
        let ab = a.mul(&b);
        assert_eq!(ab.z_degree().unwrap(), 4);
        assert_eq!(ab.parity(&rd).unwrap(), 1);
    }

    #[test]
    fn mixed_sums_fail_homogeneity() {
        let rd = rd22();
        let mixed = Element::from_gen(Gen::xplus(1, 0)).add(&Element::from_gen(Gen::xplus(2, 0)));
        assert!(!mixed.is_z2_homogeneous(&rd));
        assert!(mixed.parity(&rd).is_err());
        assert!(mixed.is_z_homogeneous());
        let mixed_deg =
            Element::from_gen(Gen::xplus(1, 0)).add(&Element::from_gen(Gen::xplus(1, 1)));
        assert!(!mixed_deg.is_z_homogeneous());
        assert!(mixed_deg.z_degree().is_err());
        assert!(mixed_deg.is_z2_homogeneous(&rd));
    }

    #[test]
    fn commutator_of_even_elements() {
        let rd = rd22();
        let a = Element::from_gen(Gen::xplus(1, 0));
        let b = Element::from_gen(Gen::h(2, 1));
        let br = qbracket(&rd, &a, &b, &QScalar::one()).unwrap();
        assert_eq!(br, a.mul(&b).sub(&b.mul(&a)));
    }

    #[test]
    fn odd_odd_bracket_picks_up_the_plus_sign() {
        // a = b = X^+_M(0) odd, u = 1: [a,a]_1 = aa + aa = 2aa.
        let rd = rd22();
        let a = Element::from_gen(Gen::xplus(rd.odd_node(), 0));
        let br = qbracket(&rd, &a, &a, &QScalar::one()).unwrap();
        assert_eq!(br, a.mul(&a).scale(&QScalar::from_int(2)));
    }

    #[test]
    fn bracket_antisymmetry_law() {
        // [a,b]_u = −(−1)^{|a||b|} u [b,a]_{u^{-1}} for homogeneous a, b.
        let rd = rd22();
        let cases = [
            (
                Element::from_gens(&[Gen::xplus(1, 2), Gen::xplus(2, 0)]),
                Element::from_gen(Gen::xplus(2, -1)),
            ),
            (
                Element::from_gen(Gen::xplus(2, 0)),
                Element::from_gen(Gen::xplus(2, 5)),
            ),
            (
                Element::from_gens(&[Gen::h(1, 1), Gen::k(3, -1)]),
                Element::from_gen(Gen::xminus(2, 0)),
            ),
        ];
        for u in [
            QScalar::q_power(2),
            QScalar::from_rational(q_ratio(3, 2)),
            QScalar::one(),
        ] {
            for (a, b) in &cases {
                let lhs = qbracket(&rd, a, b, &u).unwrap();
                let pa = a.parity(&rd).unwrap();
                let pb = b.parity(&rd).unwrap();
                let inner = qbracket(&rd, b, a, &u.inv().unwrap()).unwrap().scale(&u);
                let rhs = if pa == 1 && pb == 1 { inner } else { inner.neg() };
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn zero_bracket_scalar_is_rejected() {
        let rd = rd22();
        let a = Element::from_gen(Gen::xplus(1, 0));
        assert!(matches!(
            qbracket(&rd, &a, &a, &QScalar::zero()),
            Err(AlgebraError::ZeroBracketScalar)
        ));
    }

    #[test]
    fn associativity_on_a_triple() {
        let a = Element::from_gen(Gen::xplus(1, 0)).add(&Element::from_scalar(QScalar::q()));
        let b = Element::from_gens(&[Gen::h(2, -1), Gen::k(1, 1)])
            .sub(&Element::from_gen(Gen::xminus(3, 2)));
        let c = Element::from_gen(Gen::d(-1)).scale(&QScalar::q_power(-2));
        assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
    }

    #[test]
    fn display_round_shapes() {
        let x = Element::from_gen(Gen::xplus(1, 0));
        assert_eq!(x.to_string(), "Xp(1,0)");
        assert_eq!(Element::zero().to_string(), "0");
        assert_eq!(Element::one().to_string(), "1");
        let e = x
            .scale(&QScalar::q_power(2))
            .add(&Element::from_gens(&[Gen::k(1, -1), Gen::xplus(2, -3)]).neg());
        assert_eq!(e.to_string(), "(-1)*Kinv(1)*Xp(2,-3) + q^2*Xp(1,0)");
    }
}
