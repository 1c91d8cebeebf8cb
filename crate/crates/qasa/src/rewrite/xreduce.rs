//! Identity verification by leading-word reduction in the raising and
//! lowering sectors.
//!
//! After the triangular normal form, a vanishing identity can leave a
//! remainder supported on words whose letter pairs have nonzero Cartan
//! pairing — exactly the territory of the degree-shift relation, the Serre
//! relations, and the four-letter Serre relation at the odd node.  Those
//! relations are length-homogeneous, so each instance is oriented by its
//! *leading word* — the largest word under `(length, letterwise key)` where
//! the letter key is `(class, node, |degree|, sign of degree)` — and a word
//! containing that leading word as a contiguous segment is replaced by the
//! strictly smaller tail.  Instances are built on demand from the segment
//! in question, and a pool of previously proved identities (oriented the
//! same way) joins in, so long derivations can lean on short ones.
//!
//! Every step replaces one word occurrence by strictly smaller words, so
//! the space of reduction sequences is well founded; the prover explores it
//! depth first with backtracking (structural rules before shuffles, larger
//! words first), memoizing states already known to be dead ends.
//!
//! A `Proved` verdict means `LHS − RHS` reduced to the zero element using
//! only ideal members; `Inconclusive` means the budget ran out or no
//! oriented instance applied — never that the identity is false.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;

use crate::algebra::{qbracket, Element, Gen, Monomial, Sign};
use crate::root::RootDatum;
use crate::scalar::QScalar;

use super::normal::letter_key;
use super::{Budget, RewriteError, RewriteSystem};

/// Outcome of an identity verification.  `Inconclusive` is honest: the
/// engine makes no completeness claim.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Proved,
    Inconclusive,
}

/// Full record of one verification run.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub verdict: Verdict,
    /// Rule applications spent across both reduction passes.
    pub steps: u64,
    /// Remainder after the triangular normal form alone.
    pub normal_residual: Element,
    /// Remainder after leading-word reduction; zero exactly when proved.
    pub residual: Element,
}

/// Compare words by length, then letterwise by the letter key.
pub(crate) fn word_cmp(a: &[Gen], b: &[Gen]) -> Ordering {
    a.len().cmp(&b.len()).then_with(|| {
        for (ga, gb) in a.iter().zip(b.iter()) {
            let o = letter_key(ga).cmp(&letter_key(gb));
            if o != Ordering::Equal {
                return o;
            }
        }
        Ordering::Equal
    })
}

/// Leading word of a nonzero element under [`word_cmp`], with its coefficient.
fn leading_term(e: &Element) -> Option<(&Monomial, &QScalar)> {
    e.iter()
        .max_by(|(ma, _), (mb, _)| word_cmp(ma.gens(), mb.gens()))
}

/// An oriented rule `lead_coeff · key + tail = 0` with every tail word
/// strictly smaller than `key`.
#[derive(Debug, Clone)]
struct PoolRule {
    lead_coeff: QScalar,
    tail: Element,
}

/// Previously proved identities, oriented by their leading words.
#[derive(Debug, Clone, Default)]
pub struct Pool {
    rules: BTreeMap<Vec<Gen>, PoolRule>,
    lengths: BTreeSet<usize>,
}

impl Pool {
    pub fn new() -> Self {
        Pool::default()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// Orient a proved remainder as a rule.  Accepts only nonzero,
    /// length-homogeneous elements supported on single-sector words (all
    /// letters raising, or all lowering); returns whether a rule was added.
    pub fn absorb(&mut self, residual: &Element) -> bool {
        if residual.is_zero() {
            return false;
        }
        let mut length: Option<usize> = None;
        let mut sector: Option<bool> = None;
        for (mono, _) in residual.iter() {
            let gens = mono.gens();
            match length {
                None => length = Some(gens.len()),
                Some(l) if l == gens.len() => {}
                _ => return false,
            }
            for g in gens {
                let plus = match g {
                    Gen::XPlus { .. } => true,
                    Gen::XMinus { .. } => false,
                    _ => return false,
                };
                match sector {
                    None => sector = Some(plus),
                    Some(s) if s == plus => {}
                    _ => return false,
                }
            }
        }
        let (lead, coeff) = leading_term(residual).expect("nonzero element has a leading term");
        let key = lead.gens().to_vec();
        if self.rules.contains_key(&key) {
            return false;
        }
        let mut tail = residual.clone();
        tail.add_term(lead.clone(), &-coeff);
        self.lengths.insert(key.len());
        self.rules.insert(
            key,
            PoolRule {
                lead_coeff: coeff.clone(),
                tail,
            },
        );
        true
    }
}

/// The degree-shift relation
/// `[X_i(m+1), X_j(n)]_{q^{σ a_ij}} + [X_j(n+1), X_i(m)]_{q^{σ a_ij}} = 0`
/// for `a_ij ≠ 0`, with `σ = +1` in the raising sector and `−1` in the
/// lowering sector.
pub fn r9_element(rd: &RootDatum, sign: Sign, i: usize, j: usize, m: i64, n: i64) -> Element {
    let a = rd.cartan_pairing(i, j);
    debug_assert!(a != 0);
    let sigma = match sign {
        Sign::Plus => 1,
        Sign::Minus => -1,
    };
    let u = QScalar::q_power(sigma * a);
    let b1 = qbracket(
        rd,
        &Element::from_gen(Gen::x(sign, i, m + 1)),
        &Element::from_gen(Gen::x(sign, j, n)),
        &u,
    )
    .expect("homogeneous letters");
    let b2 = qbracket(
        rd,
        &Element::from_gen(Gen::x(sign, j, n + 1)),
        &Element::from_gen(Gen::x(sign, i, m)),
        &u,
    )
    .expect("homogeneous letters");
    b1.add(&b2)
}

/// The Serre relation
/// `Sym_{m,n} [X_i(m), [X_i(n), X_j(k)]_{q^{-1}}]_q = 0`
/// for `a_ij = ±1` and `i` not the odd node.  The symmetrization is the
/// plain two-term sum; coinciding degrees simply double the instance.
pub fn serre_element(
    rd: &RootDatum,
    sign: Sign,
    i: usize,
    j: usize,
    m: i64,
    n: i64,
    k: i64,
) -> Element {
    let one_term = |m: i64, n: i64| {
        let inner = qbracket(
            rd,
            &Element::from_gen(Gen::x(sign, i, n)),
            &Element::from_gen(Gen::x(sign, j, k)),
            &QScalar::q_power(-1),
        )
        .expect("homogeneous letters");
        qbracket(rd, &Element::from_gen(Gen::x(sign, i, m)), &inner, &QScalar::q())
            .expect("homogeneous inner bracket")
    };
    one_term(m, n).add(&one_term(n, m))
}

/// The four-letter Serre relation at the odd node `M` (requires `M, N > 1`):
/// `Sym_{n,u} [[[X_{M−1}(m), X_M(n)]_{q^{-1}}, X_{M+1}(k)]_q, X_M(u)] = 0`.
pub fn super_serre_element(
    rd: &RootDatum,
    sign: Sign,
    m: i64,
    n: i64,
    k: i64,
    u: i64,
) -> Element {
    let big_m = rd.odd_node();
    let one_term = |n: i64, u: i64| {
        let inner = qbracket(
            rd,
            &Element::from_gen(Gen::x(sign, big_m - 1, m)),
            &Element::from_gen(Gen::x(sign, big_m, n)),
            &QScalar::q_power(-1),
        )
        .expect("homogeneous letters");
        let middle = qbracket(
            rd,
            &inner,
            &Element::from_gen(Gen::x(sign, big_m + 1, k)),
            &QScalar::q(),
        )
        .expect("homogeneous inner bracket");
        qbracket(
            rd,
            &middle,
            &Element::from_gen(Gen::x(sign, big_m, u)),
            &QScalar::one(),
        )
        .expect("homogeneous middle bracket")
    };
    one_term(n, u).add(&one_term(u, n))
}

/// `(sign, node, degree)` of a raising or lowering letter.
fn x_letter(g: &Gen) -> Option<(Sign, usize, i64)> {
    match *g {
        Gen::XPlus { i, n } => Some((Sign::Plus, i as usize, n)),
        Gen::XMinus { i, n } => Some((Sign::Minus, i as usize, n)),
        _ => None,
    }
}

/// A segment of same-sector X letters, as `(sign, [(node, degree)…])`.
fn x_segment(gens: &[Gen]) -> Option<(Sign, Vec<(usize, i64)>)> {
    let mut sign = None;
    let mut letters = Vec::with_capacity(gens.len());
    for g in gens {
        let (s, i, n) = x_letter(g)?;
        match sign {
            None => sign = Some(s),
            Some(prev) if prev == s => {}
            _ => return None,
        }
        letters.push((i, n));
    }
    sign.map(|s| (s, letters))
}

/// Candidate relation instances whose support could contain `seg` — the
/// caller still checks that the instance's leading word *equals* `seg`.
fn scheme_candidates(rd: &RootDatum, seg: &[Gen]) -> Vec<Element> {
    let Some((sign, letters)) = x_segment(seg) else {
        return Vec::new();
    };
    let mut out = Vec::new();
    match letters.as_slice() {
        [(i1, d1), (i2, d2)] => {
            if rd.cartan_pairing(*i1, *i2) != 0 {
                // The four ways the pair can sit inside a degree-shift instance.
                out.push(r9_element(rd, sign, *i1, *i2, d1 - 1, *d2));
                out.push(r9_element(rd, sign, *i2, *i1, d2 - 1, *d1));
                out.push(r9_element(rd, sign, *i2, *i1, *d2, d1 - 1));
                out.push(r9_element(rd, sign, *i1, *i2, *d1, d2 - 1));
            }
        }
        [l1, l2, l3] => {
            // A Serre segment has node multiset {i, i, j} with a_ij = ±1, i ≠ M.
            let nodes = [l1.0, l2.0, l3.0];
            for (ia, ib, ic) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
                if nodes[ia] != nodes[ib] || nodes[ia] == nodes[ic] {
                    continue;
                }
                let i = nodes[ia];
                let j = nodes[ic];
                if i == rd.odd_node() || rd.cartan_pairing(i, j).abs() != 1 {
                    continue;
                }
                let letters3 = [*l1, *l2, *l3];
                let (da, db) = (letters3[ia].1, letters3[ib].1);
                let k = letters3[ic].1;
                out.push(serre_element(rd, sign, i, j, da.min(db), da.max(db), k));
            }
        }
        [l1, l2, l3, l4] => {
            if rd.has_super_serre() {
                let big_m = rd.odd_node();
                let mut m_deg = None;
                let mut k_deg = None;
                let mut mid = Vec::new();
                for (node, deg) in [*l1, *l2, *l3, *l4] {
                    if node + 1 == big_m {
                        // node == M−1
                        if m_deg.replace(deg).is_some() {
                            return out;
                        }
                    } else if node == big_m + 1 {
                        if k_deg.replace(deg).is_some() {
                            return out;
                        }
                    } else if node == big_m {
                        mid.push(deg);
                    } else {
                        return out;
                    }
                }
                if let (Some(m), Some(k), [n, u]) = (m_deg, k_deg, mid.as_slice()) {
                    out.push(super_serre_element(rd, sign, m, *n.min(u), k, *n.max(u)));
                }
            }
        }
        _ => {}
    }
    out
}

/// A single applicable reduction: drop `factor · word` and add the listed
/// replacement terms (already multiplied by `factor`).
struct Step {
    word: Monomial,
    factor: QScalar,
    replacement: Vec<(Monomial, QScalar)>,
}

/// Cap on the number of memoized dead-end states per verification.
const MEMO_CAP: usize = 50_000;

impl RewriteSystem {
    /// All single-occurrence reductions available on `e`, best first: larger
    /// words before smaller, pool rules before built-in schemes, longer
    /// matched segments before shorter (structural kills before shuffles),
    /// and left positions before right.
    fn enumerate_steps(&self, e: &Element, pool: &Pool) -> Vec<Step> {
        let mut words: Vec<(&Monomial, &QScalar)> = e.iter().collect();
        words.sort_by(|(ma, _), (mb, _)| word_cmp(mb.gens(), ma.gens()));
        let mut out = Vec::new();
        for (mono, coeff) in words {
            let gens = mono.gens();
            for &len in pool.lengths.iter().rev() {
                if len > gens.len() {
                    continue;
                }
                for pos in 0..=gens.len() - len {
                    let seg = &gens[pos..pos + len];
                    if let Some(rule) = pool.rules.get(seg) {
                        out.push(make_step(mono, coeff, pos, len, &rule.lead_coeff, &rule.tail));
                    }
                }
            }
            for len in (2..=4usize.min(gens.len())).rev() {
                for pos in 0..=gens.len() - len {
                    let seg = &gens[pos..pos + len];
                    for inst in scheme_candidates(&self.rd, seg) {
                        let Some((lead, lead_coeff)) = leading_term(&inst) else {
                            continue;
                        };
                        if lead.gens() != seg {
                            continue;
                        }
                        let mut tail = inst.clone();
                        tail.add_term(lead.clone(), &-lead_coeff);
                        out.push(make_step(mono, coeff, pos, len, lead_coeff, &tail));
                    }
                }
            }
        }
        out
    }

    /// Depth-first search for a reduction of `e` to zero.  Returns
    /// `Ok(true)` on success; `Ok(false)` records the first stuck element.
    /// Each applied step strictly shrinks the word multiset, so the search
    /// tree is finite; the budget bounds the explored portion.
    fn search(
        &self,
        e: Element,
        pool: &Pool,
        budget: &mut Budget,
        memo: &mut BTreeSet<String>,
        first_stuck: &mut Option<Element>,
    ) -> Result<bool, RewriteError> {
        if e.is_zero() {
            return Ok(true);
        }
        let key = e.to_string();
        if memo.contains(&key) {
            return Ok(false);
        }
        let steps = self.enumerate_steps(&e, pool);
        if steps.is_empty() {
            if first_stuck.is_none() {
                *first_stuck = Some(e);
            }
            if memo.len() < MEMO_CAP {
                memo.insert(key);
            }
            return Ok(false);
        }
        for step in steps {
            if !budget.spend() {
                return Err(RewriteError::BudgetExhausted {
                    steps: budget.used,
                    partial: e.clone(),
                });
            }
            let mut next = e.clone();
            next.add_term(step.word.clone(), &-&step.factor);
            for (mono, c) in &step.replacement {
                next.add_term(mono.clone(), c);
            }
            let next = self.normal_form_with(&next, budget)?;
            if self.search(next, pool, budget, memo, first_stuck)? {
                return Ok(true);
            }
        }
        if memo.len() < MEMO_CAP {
            memo.insert(key);
        }
        Ok(false)
    }

    /// Verify `lhs = rhs` by reducing the difference to zero.
    pub fn verify_identity(&self, lhs: &Element, rhs: &Element, pool: &Pool) -> Reduction {
        let diff = lhs.sub(rhs);
        let mut budget = Budget::new(self.budget);
        let normal_residual = match self.normal_form_with(&diff, &mut budget) {
            Ok(e) => e,
            Err(RewriteError::BudgetExhausted { steps, partial }) => {
                return Reduction {
                    verdict: Verdict::Inconclusive,
                    steps,
                    normal_residual: partial.clone(),
                    residual: partial,
                };
            }
            Err(RewriteError::Algebra(_)) => unreachable!("normal form is closed on elements"),
        };
        let mut memo = BTreeSet::new();
        let mut first_stuck = None;
        match self.search(normal_residual.clone(), pool, &mut budget, &mut memo, &mut first_stuck)
        {
            Ok(true) => Reduction {
                verdict: Verdict::Proved,
                steps: budget.used,
                normal_residual,
                residual: Element::zero(),
            },
            Ok(false) => {
                let residual = first_stuck.unwrap_or_else(|| normal_residual.clone());
                Reduction {
                    verdict: Verdict::Inconclusive,
                    steps: budget.used,
                    normal_residual,
                    residual,
                }
            }
            Err(RewriteError::BudgetExhausted { steps, partial }) => Reduction {
                verdict: Verdict::Inconclusive,
                steps,
                normal_residual,
                residual: partial,
            },
            Err(RewriteError::Algebra(_)) => unreachable!("normal form is closed on elements"),
        }
    }

    /// Convenience wrapper with an empty pool.
    pub fn prove(&self, lhs: &Element, rhs: &Element) -> Reduction {
        self.verify_identity(lhs, rhs, &Pool::new())
    }
}

/// Build the step replacing `word[pos..pos+len]` (the rule's leading word)
/// by `−tail / lead_coeff`, in context, times the word's own coefficient.
fn make_step(
    word: &Monomial,
    coeff: &QScalar,
    pos: usize,
    len: usize,
    lead_coeff: &QScalar,
    tail: &Element,
) -> Step {
    let gens = word.gens();
    let scale = &(-coeff) / lead_coeff;
    let mut replacement = Vec::with_capacity(tail.num_terms());
    for (tmono, tcoeff) in tail.iter() {
        let tg = tmono.gens();
        let mut out: Vec<Gen> = Vec::with_capacity(gens.len() - len + tg.len());
        out.extend_from_slice(&gens[..pos]);
        out.extend_from_slice(tg);
        out.extend_from_slice(&gens[pos + len..]);
        replacement.push((Monomial::from_gens(out), &scale * tcoeff));
    }
    Step {
        word: word.clone(),
        factor: coeff.clone(),
        replacement,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rd22() -> RootDatum {
        RootDatum::new(2, 2).unwrap()
    }

    #[test]
    fn degree_shift_instances_self_reduce() {
        let rd = rd22();
        let rs = RewriteSystem::new(rd);
        for (i, j) in [(1usize, 1usize), (1, 2), (2, 3), (3, 3), (2, 1)] {
            if rd.cartan_pairing(i, j) == 0 {
                continue;
            }
            for sign in [Sign::Plus, Sign::Minus] {
                let e = r9_element(&rd, sign, i, j, 1, -1);
                let red = rs.prove(&e, &Element::zero());
                assert_eq!(red.verdict, Verdict::Proved, "i={i} j={j} {sign}");
                assert!(red.residual.is_zero());
            }
        }
    }

    #[test]
    fn serre_instances_self_reduce() {
        let rd = rd22();
        let rs = RewriteSystem::new(rd);
        for (i, j) in [(1usize, 2usize), (3, 2)] {
            for (m, n, k) in [(0i64, 0i64, 0i64), (-1, 2, 1), (1, 1, -2)] {
                let e = serre_element(&rd, Sign::Plus, i, j, m, n, k);
                let red = rs.prove(&e, &Element::zero());
                assert_eq!(red.verdict, Verdict::Proved, "i={i} j={j} m={m} n={n} k={k}");
            }
        }
    }

    #[test]
    fn super_serre_instances_self_reduce() {
        let rd = rd22();
        let rs = RewriteSystem::new(rd);
        for (m, n, k, u) in [(0i64, 0i64, 0i64, 0i64), (1, -1, 0, 2), (0, 1, -1, 1)] {
            for sign in [Sign::Plus, Sign::Minus] {
                let e = super_serre_element(&rd, sign, m, n, k, u);
                let red = rs.prove(&e, &Element::zero());
                assert_eq!(red.verdict, Verdict::Proved, "m={m} n={n} k={k} u={u} {sign}");
            }
        }
    }

    #[test]
    fn pool_rules_apply_in_context() {
        let rd = rd22();
        let rs = RewriteSystem::new(rd);
        // Pool the degree-shift instance, then reduce it inside a context.
        let inst = r9_element(&rd, Sign::Plus, 1, 2, 0, 0);
        let mut pool = Pool::new();
        assert!(pool.absorb(&inst));
        assert!(!pool.absorb(&inst), "duplicate keys are rejected");
        let context = Element::from_gen(Gen::xplus(3, 0));
        let embedded = context.mul(&inst);
        let red = rs.verify_identity(&embedded, &Element::zero(), &pool);
        assert_eq!(red.verdict, Verdict::Proved);
    }

    #[test]
    fn pool_rejects_mixed_or_inhomogeneous_elements() {
        let mut pool = Pool::new();
        let mixed = Element::from_gens(&[Gen::xplus(1, 0), Gen::xminus(1, 0)]);
        assert!(!pool.absorb(&mixed));
        let cartan = Element::from_gen(Gen::k(1, 1));
        assert!(!pool.absorb(&cartan));
        let inhomogeneous = Element::from_gen(Gen::xplus(1, 0))
            .add(&Element::from_gens(&[Gen::xplus(1, 0), Gen::xplus(2, 0)]));
        assert!(!pool.absorb(&inhomogeneous));
        assert!(!pool.absorb(&Element::zero()));
    }

    #[test]
    fn honest_inconclusive_on_a_non_identity() {
        let rd = rd22();
        let rs = RewriteSystem::new(rd);
        // X^+_1(0) X^+_2(0) is not zero in the algebra; the prover must not
        // "prove" it and must leave a nonzero residual.
        let e = Element::from_gens(&[Gen::xplus(1, 0), Gen::xplus(2, 0)]);
        let red = rs.prove(&e, &Element::zero());
        assert_eq!(red.verdict, Verdict::Inconclusive);
        assert!(!red.residual.is_zero());
    }

    #[test]
    fn word_order_is_total_on_distinct_words() {
        let a = vec![Gen::xplus(1, 2), Gen::xplus(2, 0)];
        let b = vec![Gen::xplus(1, -2), Gen::xplus(2, 0)];
        assert_eq!(word_cmp(&a, &b), Ordering::Less);
        assert_eq!(word_cmp(&b, &a), Ordering::Greater);
        let shorter = vec![Gen::xplus(3, 5)];
        assert_eq!(word_cmp(&shorter, &a), Ordering::Less);
    }
}
