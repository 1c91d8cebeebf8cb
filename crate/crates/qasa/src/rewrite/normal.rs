//! Safe oriented rules and the triangular normal form.
//!
//! Target word shape (ascending class blocks):
//!
//! ```text
//! [lowering X^-] [h] [K^{±1}] [C^{±1/2}] [D^{±1}] [raising X^+]
//! ```
//!
//! Every rule below replaces an adjacent letter pair by a sum of strictly
//! smaller words under the lexicographic measure
//!
//! `(#X letters, #(X^+ before X^-), #(X^+ before h) + #(h before X^-),
//!   #cross-class inversions touching K or D, #same-class inversions,
//!   length, C bookkeeping)`,
//!
//! extended to linear combinations as a multiset order, so the pass
//! terminates.  Degree-shift and Serre relations are *not* oriented here —
//! they reduce leading words only in the identity prover, which keeps this
//! pass deterministic and obviously terminating.

use std::collections::BTreeMap;

use crate::algebra::{Element, Gen, Monomial};
use crate::scalar::{q_from_i64, q_ratio, Q, QScalar};

use super::{Budget, NormalForm, RewriteError, RewriteSystem};

/// `q − q^{-1}` as an exact scalar.
pub(crate) fn q_minus_qinv() -> QScalar {
    &QScalar::q() - &QScalar::q_power(-1)
}

fn rat(r: Q) -> QScalar {
    QScalar::from_rational(r)
}

/// `|k|` letters `C^{±1/2}` with the sign of `k`; this spells `C^{k/2}`.
pub(crate) fn chalf_word(k: i64) -> Vec<Gen> {
    let e: i8 = if k >= 0 { 1 } else { -1 };
    (0..k.unsigned_abs()).map(|_| Gen::c_half(e)).collect()
}

/// Partitions of `t ≥ 1` with parts in ascending order, in a fixed order.
fn partitions_asc(t: i64) -> Vec<Vec<i64>> {
    fn extend(t: i64, min_part: i64, prefix: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if t == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in min_part..=t {
            prefix.push(part);
            extend(t - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    extend(t, 1, &mut Vec::new(), &mut out);
    out
}

/// `∏_j m_j!` over the multiplicities of the (sorted) parts.
fn multiplicity_factorial(parts: &[i64]) -> i64 {
    let mut product = 1i64;
    let mut run = 1i64;
    for w in parts.windows(2) {
        if w[0] == w[1] {
            run += 1;
            product *= run;
        } else {
            run = 1;
        }
    }
    product
}

/// The Cartan-part right-hand side of the mixed relation:
/// `(C^{(m−n)/2} φ^+_i(m+n) − C^{−(m−n)/2} φ^-_i(m+n)) / (q_i − q_i^{-1})`
/// expanded into fully sorted words `h… K^{±1} C…`.
pub(crate) fn cartan_rhs(rd: &crate::root::RootDatum, i: usize, m: i64, n: i64) -> Element {
    let li = rd.l(i);
    // q_i − q_i^{-1} = l_i (q − q^{-1})
    let msq = &q_minus_qinv() * &rat(q_from_i64(li));
    let inv_msq = msq.inv().expect("q - q^{-1} is nonzero");
    let t = m + n;
    let mut out = Element::zero();
    if t == 0 {
        let mut w_plus = vec![Gen::k(i, 1)];
        w_plus.extend(chalf_word(m - n));
        out.add_term(Monomial::from_gens(w_plus), &inv_msq);
        let mut w_minus = vec![Gen::k(i, -1)];
        w_minus.extend(chalf_word(n - m));
        out.add_term(Monomial::from_gens(w_minus), &-&inv_msq);
        return out;
    }
    let positive = t > 0;
    for parts in partitions_asc(t.abs()) {
        let ell = parts.len() as i64;
        let fact = multiplicity_factorial(&parts);
        // φ^+: (q_i−q_i^{-1})^ℓ / ∏m_j!, overall ÷ (q_i−q_i^{-1});
        // φ^-: (−1)^ℓ of that, and the relation subtracts it.
        let mut coeff = &msq.pow_int(ell - 1) * &rat(q_ratio(1, fact));
        if !positive && ell % 2 == 0 {
            coeff = -&coeff;
        }
        let mut word: Vec<Gen> = Vec::with_capacity(parts.len() + 1 + (m - n).unsigned_abs() as usize);
        if positive {
            for s in &parts {
                word.push(Gen::h(i, *s));
            }
            word.push(Gen::k(i, 1));
            word.extend(chalf_word(m - n));
        } else {
            for s in parts.iter().rev() {
                word.push(Gen::h(i, -*s));
            }
            word.push(Gen::k(i, -1));
            word.extend(chalf_word(n - m));
        }
        out.add_term(Monomial::from_gens(word), &coeff);
    }
    out
}

/// Sort key for letters used by the X-block sorts and the identity prover:
/// class, node, |degree|, then negative degrees after positive ones.
pub(crate) fn letter_key(g: &Gen) -> (u8, u8, i64, u8, i8) {
    match *g {
        Gen::XMinus { i, n } => (0, i, n.abs(), u8::from(n < 0), 0),
        Gen::H { i, s } => (1, i, s.abs(), u8::from(s < 0), 0),
        Gen::K { i, e } => (2, i, 0, 0, e),
        Gen::CHalf { e } => (3, 0, 0, 0, e),
        Gen::Dgen { e } => (4, 0, 0, 0, e),
        Gen::XPlus { i, n } => (5, i, n.abs(), u8::from(n < 0), 0),
    }
}

type Replacement = Vec<(Vec<Gen>, QScalar)>;

fn swap_plain(g1: Gen, g2: Gen) -> Option<Replacement> {
    Some(vec![(vec![g2, g1], QScalar::one())])
}

fn swap_scaled(g1: Gen, g2: Gen, power: i64) -> Option<Replacement> {
    Some(vec![(vec![g2, g1], QScalar::q_power(power))])
}

impl RewriteSystem {
    /// First position (left to right) where a safe rule applies, with the
    /// replacement for the pair at that position.
    fn first_rewrite(&self, gens: &[Gen]) -> Option<(usize, Replacement)> {
        for pos in 0..gens.len().saturating_sub(1) {
            if let Some(repl) = self.pair_rule(gens[pos], gens[pos + 1]) {
                return Some((pos, repl));
            }
        }
        None
    }

    /// The safe rule for an adjacent pair, if any.
    fn pair_rule(&self, g1: Gen, g2: Gen) -> Option<Replacement> {
        use Gen::*;
        let rd = &self.rd;
        match (g1, g2) {
            // Inverse cancellations.
            (K { i: i1, e: e1 }, K { i: i2, e: e2 }) if i1 == i2 && e1 == -e2 => {
                Some(vec![(vec![], QScalar::one())])
            }
            (Dgen { e: e1 }, Dgen { e: e2 }) if e1 == -e2 => Some(vec![(vec![], QScalar::one())]),
            (CHalf { e: e1 }, CHalf { e: e2 }) if e1 == -e2 => Some(vec![(vec![], QScalar::one())]),
            // C^{±1/2} is central: move it into its own block.
            (CHalf { .. }, XMinus { .. } | H { .. } | K { .. }) => swap_plain(g1, g2),
            (Dgen { .. } | XPlus { .. }, CHalf { .. }) => swap_plain(g1, g2),
            // K commutes with h and with other K's.
            (K { .. }, H { .. }) => swap_plain(g1, g2),
            (K { i: i1, e: e1 }, K { i: i2, e: e2 }) if (i1, e1) > (i2, e2) => swap_plain(g1, g2),
            // K past X: K_i X^±_j = q^{∓a_ij} X^±_j K_i read in the sorting direction.
            (K { i, e }, XMinus { i: j, n: _ }) => {
                let a = rd.cartan_pairing(i as usize, j as usize);
                swap_scaled(g1, g2, -(e as i64) * a)
            }
            (XPlus { i: j, n: _ }, K { i, e }) => {
                let a = rd.cartan_pairing(i as usize, j as usize);
                swap_scaled(g1, g2, -(e as i64) * a)
            }
            // D past the rest: D h_i(s) = q^s h_i(s) D, D X^±_i(n) = q^n X^±_i(n) D.
            (Dgen { .. }, K { .. }) => swap_plain(g1, g2),
            (Dgen { e }, H { s, .. }) => swap_scaled(g1, g2, e as i64 * s),
            (Dgen { e }, XMinus { n, .. }) => swap_scaled(g1, g2, e as i64 * n),
            (XPlus { n, .. }, Dgen { e }) => swap_scaled(g1, g2, -(e as i64) * n),
            // h-sort with the central correction at opposite degrees.
            (H { i: i1, s: s1 }, H { i: i2, s: s2 }) if (i1, s1) > (i2, s2) => {
                let mut repl: Replacement = vec![(vec![g2, g1], QScalar::one())];
                if s1 + s2 == 0 {
                    let a = rd.cartan_pairing(i1 as usize, i2 as usize);
                    if a != 0 {
                        // [h_i(m), h_j(−m)] = [m a_ij]_q (C^m − C^{−m}) / (m (q − q^{-1}))
                        let m = s1;
                        let denom = &q_minus_qinv() * &rat(q_from_i64(m));
                        let c = &QScalar::q_integer(m * a)
                            * &denom.inv().expect("m (q - q^{-1}) is nonzero");
                        repl.push((chalf_word(2 * m), c.clone()));
                        repl.push((chalf_word(-2 * m), -&c));
                    }
                }
                Some(repl)
            }
            // h transported past X^-: h_i(s) X^-_j(n) =
            //   X^-_j(n) h_i(s) − (l_i [s a_ij]_q / s) C^{|s|/2} X^-_j(n+s).
            (H { i, s }, XMinus { i: j, n }) => {
                let a = rd.cartan_pairing(i as usize, j as usize);
                let mut repl: Replacement = vec![(vec![g2, g1], QScalar::one())];
                if a != 0 {
                    let c = &QScalar::q_integer(s * a) * &rat(q_ratio(rd.l(i as usize), s));
                    let mut word = chalf_word(s.abs());
                    word.push(Gen::xminus(j as usize, n + s));
                    repl.push((word, -&c));
                }
                Some(repl)
            }
            // X^+ transported past h: X^+_i(m) h_j(s) =
            //   h_j(s) X^+_i(m) − (l_j [s a_ji]_q / s) C^{−|s|/2} X^+_i(m+s).
            (XPlus { i, n: m }, H { i: j, s }) => {
                let a = rd.cartan_pairing(j as usize, i as usize);
                let mut repl: Replacement = vec![(vec![g2, g1], QScalar::one())];
                if a != 0 {
                    let c = &QScalar::q_integer(s * a) * &rat(q_ratio(rd.l(j as usize), s));
                    let mut word = chalf_word(-s.abs());
                    word.push(Gen::xplus(i as usize, m + s));
                    repl.push((word, -&c));
                }
                Some(repl)
            }
            // Straightening: X^+_i(m) X^-_j(n) = ±X^-_j(n) X^+_i(m) + δ_ij · Cartan part.
            (XPlus { i, n: m }, XMinus { i: j, n }) => {
                let odd_pair = i as usize == rd.odd_node() && j as usize == rd.odd_node();
                let sign = if odd_pair { -&QScalar::one() } else { QScalar::one() };
                let mut repl: Replacement = vec![(vec![g2, g1], sign)];
                if i == j {
                    for (mono, coeff) in cartan_rhs(rd, i as usize, m, n).iter() {
                        repl.push((mono.gens().to_vec(), coeff.clone()));
                    }
                }
                Some(repl)
            }
            // Within an X block: vanishing square at the odd node, and sorting
            // swaps for letter pairs whose Cartan pairing vanishes.
            (XPlus { i: i1, n: n1 }, XPlus { i: i2, n: n2 }) => {
                self.x_block_rule(i1, n1, i2, n2, g1, g2)
            }
            (XMinus { i: i1, n: n1 }, XMinus { i: i2, n: n2 }) => {
                self.x_block_rule(i1, n1, i2, n2, g1, g2)
            }
            _ => None,
        }
    }

    fn x_block_rule(&self, i1: u8, n1: i64, i2: u8, n2: i64, g1: Gen, g2: Gen) -> Option<Replacement> {
        let rd = &self.rd;
        if rd.cartan_pairing(i1 as usize, i2 as usize) != 0 {
            return None;
        }
        let both_odd = i1 as usize == rd.odd_node() && i2 as usize == rd.odd_node();
        if both_odd && n1 == n2 {
            // The square of the odd generator vanishes.
            return Some(vec![]);
        }
        if letter_key(&g1) > letter_key(&g2) {
            let sign = if both_odd { -&QScalar::one() } else { QScalar::one() };
            return Some(vec![(vec![g2, g1], sign)]);
        }
        None
    }

    /// Reduce to triangular normal form; the step count is the number of rule
    /// applications.  Budget exhaustion returns the partial result.
    pub fn normal_form(&self, e: &Element) -> Result<NormalForm, RewriteError> {
        let mut budget = Budget::new(self.budget);
        let element = self.normal_form_with(e, &mut budget)?;
        Ok(NormalForm {
            element,
            steps: budget.used,
        })
    }

    pub(crate) fn normal_form_with(
        &self,
        e: &Element,
        budget: &mut Budget,
    ) -> Result<Element, RewriteError> {
        let mut work: BTreeMap<Monomial, QScalar> = BTreeMap::new();
        for (mono, coeff) in e.iter() {
            work.insert(mono.clone(), coeff.clone());
        }
        let mut done = Element::zero();
        while let Some((mono, coeff)) = work.pop_first() {
            if coeff.is_zero() {
                continue;
            }
            let gens = mono.gens();
            let Some((pos, repl)) = self.first_rewrite(gens) else {
                done.add_term(mono, &coeff);
                continue;
            };
            if !budget.spend() {
                let mut partial = done;
                partial.add_term(mono, &coeff);
                for (m, c) in work {
                    partial.add_term(m, &c);
                }
                return Err(RewriteError::BudgetExhausted {
                    steps: budget.used,
                    partial,
                });
            }
            for (segment, factor) in repl {
                let mut word: Vec<Gen> =
                    Vec::with_capacity(gens.len() - 2 + segment.len());
                word.extend_from_slice(&gens[..pos]);
                word.extend_from_slice(&segment);
                word.extend_from_slice(&gens[pos + 2..]);
                let new_coeff = &coeff * &factor;
                let entry = work
                    .entry(Monomial::from_gens(word))
                    .or_insert_with(QScalar::zero);
                *entry = &*entry + &new_coeff;
            }
        }
        Ok(done)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::qbracket;
    use crate::root::RootDatum;

    fn rd22() -> RootDatum {
        RootDatum::new(2, 2).unwrap()
    }

    fn sys(rd: &RootDatum) -> RewriteSystem {
        RewriteSystem::new(*rd)
    }

    fn nf(rs: &RewriteSystem, e: &Element) -> Element {
        rs.normal_form(e).unwrap().element
    }

    #[test]
    fn inverse_pairs_cancel() {
        let rd = rd22();
        let rs = sys(&rd);
        for word in [
            vec![Gen::k(1, 1), Gen::k(1, -1)],
            vec![Gen::k(2, -1), Gen::k(2, 1)],
            vec![Gen::d(1), Gen::d(-1)],
            vec![Gen::c_half(1), Gen::c_half(-1)],
        ] {
            let e = Element::from_gens(&word);
            assert_eq!(nf(&rs, &e), Element::one(), "word {:?}", word);
        }
    }

    #[test]
    fn k_past_x_collects_the_cartan_power() {
        let rd = rd22();
        let rs = sys(&rd);
        // Both orders of K_i X^+_j(n) normalize to the same sorted word, so
        // the two sides of the commutation relation agree under normal form.
        for i in rd.nodes() {
            for j in rd.nodes() {
                let a = rd.cartan_pairing(i, j);
                let lhs = Element::from_gens(&[Gen::k(i, 1), Gen::xplus(j, -1)]);
                let rhs = Element::from_gens(&[Gen::xplus(j, -1), Gen::k(i, 1)])
                    .scale(&QScalar::q_power(a));
                assert_eq!(nf(&rs, &lhs), nf(&rs, &rhs));
                // The sorted side is already normal.
                assert_eq!(
                    nf(&rs, &lhs),
                    Element::from_gens(&[Gen::k(i, 1), Gen::xplus(j, -1)])
                );
            }
        }
    }

    #[test]
    fn odd_square_vanishes() {
        let rd = rd22();
        let rs = sys(&rd);
        let sq = Element::from_gens(&[Gen::xplus(2, 3), Gen::xplus(2, 3)]);
        assert!(nf(&rs, &sq).is_zero());
        let sq_minus = Element::from_gens(&[Gen::xminus(2, -1), Gen::xminus(2, -1)]);
        assert!(nf(&rs, &sq_minus).is_zero());
        // Distinct degrees at the odd node anticommute but do not vanish.
        let prod = Element::from_gens(&[Gen::xplus(2, 1), Gen::xplus(2, 0)]);
        let sorted = Element::from_gens(&[Gen::xplus(2, 0), Gen::xplus(2, 1)]);
        assert_eq!(nf(&rs, &prod), sorted.neg());
    }

    #[test]
    fn d_conjugation_scales_by_degree() {
        let rd = rd22();
        let rs = sys(&rd);
        // D X^+_1(3) D^{-1}  −  q^3 X^+_1(3)  reduces to zero.
        let lhs = Element::from_gens(&[Gen::d(1), Gen::xplus(1, 3), Gen::d(-1)]);
        let rhs = Element::from_gen(Gen::xplus(1, 3)).scale(&QScalar::q_power(3));
        assert!(nf(&rs, &lhs.sub(&rhs)).is_zero());
        // Same for h: D h_2(-2) D^{-1} = q^{-2} h_2(-2).
        let lhs = Element::from_gens(&[Gen::d(1), Gen::h(2, -2), Gen::d(-1)]);
        let rhs = Element::from_gen(Gen::h(2, -2)).scale(&QScalar::q_power(-2));
        assert!(nf(&rs, &lhs.sub(&rhs)).is_zero());
    }

    #[test]
    fn h_commutator_reproduces_the_central_term() {
        let rd = rd22();
        let rs = sys(&rd);
        // [h_i(m), h_j(−m)] normalizes to [m a_ij]_q (C^m − C^{−m}) / (m(q−q^{-1})).
        for (i, j, m) in [(1usize, 1usize, 1i64), (1, 2, 2), (3, 2, 1), (2, 2, 2)] {
            let bracket = qbracket(
                &rd,
                &Element::from_gen(Gen::h(i, m)),
                &Element::from_gen(Gen::h(j, -m)),
                &QScalar::one(),
            )
            .unwrap();
            let got = nf(&rs, &bracket);
            let a = rd.cartan_pairing(i, j);
            let mut want = Element::zero();
            if a != 0 {
                let denom = &q_minus_qinv() * &QScalar::from_rational(q_from_i64(m));
                let c = &QScalar::q_integer(m * a) * &denom.inv().unwrap();
                want.add_term(Monomial::from_gens(chalf_word(2 * m)), &c);
                want.add_term(Monomial::from_gens(chalf_word(-2 * m)), &-&c);
            }
            assert_eq!(got, want, "i={i} j={j} m={m}");
        }
        // Non-opposite degrees commute outright.
        let e = qbracket(
            &rd,
            &Element::from_gen(Gen::h(1, 1)),
            &Element::from_gen(Gen::h(2, 2)),
            &QScalar::one(),
        )
        .unwrap();
        assert!(nf(&rs, &e).is_zero());
    }

    #[test]
    fn h_transport_shifts_the_loop_degree() {
        let rd = rd22();
        let rs = sys(&rd);
        // [h_i(s), X^+_j(n)] = (l_i [s a_ij]_q / s) C^{−|s|/2} X^+_j(n+s).
        let (i, j, s, n) = (1usize, 2usize, 2i64, -1i64);
        let bracket = qbracket(
            &rd,
            &Element::from_gen(Gen::h(i, s)),
            &Element::from_gen(Gen::xplus(j, n)),
            &QScalar::one(),
        )
        .unwrap();
        let a = rd.cartan_pairing(i, j);
        let c = &QScalar::q_integer(s * a) * &QScalar::from_rational(q_ratio(rd.l(i), s));
        let mut word = chalf_word(-s.abs());
        word.push(Gen::xplus(j, n + s));
        let mut want = Element::zero();
        want.add_term(Monomial::from_gens(word), &c);
        assert_eq!(nf(&rs, &bracket), want);

        // Minus side picks up the opposite sign and C^{+|s|/2}.
        let bracket = qbracket(
            &rd,
            &Element::from_gen(Gen::h(i, s)),
            &Element::from_gen(Gen::xminus(j, n)),
            &QScalar::one(),
        )
        .unwrap();
        let mut word = vec![Gen::xminus(j, n + s)];
        word.extend(chalf_word(s.abs()));
        let mut want = Element::zero();
        want.add_term(Monomial::from_gens(word), &-&c);
        assert_eq!(nf(&rs, &bracket), want);
    }

    #[test]
    fn straightening_expands_the_series_part() {
        let rd = rd22();
        let rs = sys(&rd);
        // [X^+_i(1), X^-_i(0)] = C^{1/2} φ^+_i(1) / (q_i − q_i^{-1}) = C^{1/2} h_i(1) K_i.
        for i in rd.nodes() {
            let bracket = qbracket(
                &rd,
                &Element::from_gen(Gen::xplus(i, 1)),
                &Element::from_gen(Gen::xminus(i, 0)),
                &QScalar::one(),
            )
            .unwrap();
            let want = Element::from_gens(&[Gen::h(i, 1), Gen::k(i, 1), Gen::c_half(1)]);
            assert_eq!(nf(&rs, &bracket), want, "node {i}");
        }
        // Degree zero: (K_i − K_i^{-1}) / (q_i − q_i^{-1}).
        let i = 2usize;
        let bracket = qbracket(
            &rd,
            &Element::from_gen(Gen::xplus(i, 0)),
            &Element::from_gen(Gen::xminus(i, 0)),
            &QScalar::one(),
        )
        .unwrap();
        let msq = &q_minus_qinv() * &QScalar::from_rational(q_from_i64(rd.l(i)));
        let inv = msq.inv().unwrap();
        let mut want = Element::zero();
        want.add_term(Monomial::single(Gen::k(i, 1)), &inv);
        want.add_term(Monomial::single(Gen::k(i, -1)), &-&inv);
        assert_eq!(nf(&rs, &bracket), want);
        // Distinct nodes commute (plain or with sign, but with no Cartan part).
        let bracket = qbracket(
            &rd,
            &Element::from_gen(Gen::xplus(1, 2)),
            &Element::from_gen(Gen::xminus(3, -1)),
            &QScalar::one(),
        )
        .unwrap();
        assert!(nf(&rs, &bracket).is_zero());
    }

    #[test]
    fn phi_expansion_matches_the_exponential_series() {
        // Degree 2: φ^+_i(2)/(q_i−q_i^{-1}) = h_i(2) K_i + (q_i−q_i^{-1})/2 h_i(1)^2 K_i.
        let rd = rd22();
        let i = 1usize;
        let rhs = cartan_rhs(&rd, i, 2, 0);
        let msq = q_minus_qinv();
        let mut want = Element::zero();
        let mut w1 = vec![Gen::h(i, 2), Gen::k(i, 1)];
        w1.extend(chalf_word(2));
        want.add_term(Monomial::from_gens(w1), &QScalar::one());
        let mut w2 = vec![Gen::h(i, 1), Gen::h(i, 1), Gen::k(i, 1)];
        w2.extend(chalf_word(2));
        let half = QScalar::from_rational(q_ratio(1, 2));
        want.add_term(Monomial::from_gens(w2), &(&msq * &half));
        assert_eq!(rhs, want);

        // Negative degree, odd node: the leading minus on the lowering series
        // combines with the per-part sign, so a partition with ℓ parts gets
        // the sign −(−1)^ℓ — positive for (2), negative for (1,1).
        let rd = rd22();
        let rhs = cartan_rhs(&rd, 2, -1, -1);
        let msq2 = &q_minus_qinv() * &QScalar::from_rational(q_from_i64(rd.l(2)));
        let mut want = Element::zero();
        let w1 = vec![Gen::h(2, -2), Gen::k(2, -1)];
        want.add_term(Monomial::from_gens(w1), &QScalar::one());
        let w2 = vec![Gen::h(2, -1), Gen::h(2, -1), Gen::k(2, -1)];
        want.add_term(Monomial::from_gens(w2), &-&(&msq2 * &half));
        assert_eq!(rhs, want);
    }

    #[test]
    fn normal_form_is_idempotent_and_deterministic() {
        let rd = rd22();
        let rs = sys(&rd);
        let messy = Element::from_gens(&[
            Gen::xplus(1, 2),
            Gen::d(1),
            Gen::h(2, -1),
            Gen::xminus(1, 0),
            Gen::k(3, 1),
            Gen::c_half(-1),
        ]);
        let once = nf(&rs, &messy);
        let twice = nf(&rs, &once);
        assert_eq!(once, twice);
        assert_eq!(rs.normal_form(&once).unwrap().steps, 0);
        // Same input, fresh system: identical output.
        assert_eq!(nf(&sys(&rd), &messy), once);
    }

    #[test]
    fn budget_exhaustion_reports_partial_progress() {
        let rd = rd22();
        let rs = RewriteSystem::new(rd).with_budget(2);
        let messy = Element::from_gens(&[
            Gen::xplus(1, 2),
            Gen::h(2, -1),
            Gen::xminus(1, 0),
            Gen::k(3, 1),
        ]);
        match rs.normal_form(&messy) {
            Err(RewriteError::BudgetExhausted { steps, partial }) => {
                assert_eq!(steps, 2);
                assert!(!partial.is_zero());
            }
            other => panic!("expected budget exhaustion, got {other:?}"),
        }
    }

    #[test]
    fn class_blocks_are_sorted_in_every_normal_word() {
        let rd = rd22();
        let rs = sys(&rd);
        let messy = Element::from_gens(&[
            Gen::xplus(2, 1),
            Gen::k(1, -1),
            Gen::xminus(2, 0),
            Gen::d(1),
            Gen::h(1, 1),
        ]);
        let out = nf(&rs, &messy);
        assert!(!out.is_zero());
        for (mono, _) in out.iter() {
            let classes: Vec<u8> = mono.gens().iter().map(|g| letter_key(g).0).collect();
            let mut sorted = classes.clone();
            sorted.sort_unstable();
            assert_eq!(classes, sorted, "unsorted classes in {mono}");
        }
    }
}
