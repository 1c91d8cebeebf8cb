//! Contiguous node segments `(i, j)` with `i ≤ j`, standing for the positive
//! roots `α_i + α_{i+1} + ⋯ + α_j = ε_i − ε_{j+1}`, and the two total orders
//! used throughout:
//!
//! * the lexicographic order on all segments (the listing order of the
//!   positive roots), and
//! * the order on the distinguished set `S` of odd-node-spanning segments
//!   `{(a, b) : 1 ≤ a ≤ M ≤ b ≤ M+N−1, a < b}`, where `(a, b) > (a′, b′)`
//!   exactly when `b − a > b′ − a′`, or the spans tie and `a < a′`.

use std::cmp::Ordering;

use super::{RootDatum, RootError};
use crate::root::Weight;

/// A contiguous block of node indices `lo ..= hi` (`1 ≤ lo ≤ hi ≤ M+N−1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct RootSegment {
    lo: usize,
    hi: usize,
}

impl RootSegment {
    pub fn new(rd: &RootDatum, lo: usize, hi: usize) -> Result<Self, RootError> {
        rd.check_node(lo)?;
        rd.check_node(hi)?;
        if lo > hi {
            return Err(RootError::BadSegment {
                i: lo,
                j: hi,
                top: rd.rank(),
            });
        }
        Ok(RootSegment { lo, hi })
    }

    pub fn lo(&self) -> usize {
        self.lo
    }

    pub fn hi(&self) -> usize {
        self.hi
    }

    /// Number of nodes covered.
    pub fn len(&self) -> usize {
        self.hi - self.lo + 1
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, node: usize) -> bool {
        self.lo <= node && node <= self.hi
    }

    /// Node indices of the segment in increasing order.
    pub fn nodes(&self) -> impl Iterator<Item = usize> {
        self.lo..=self.hi
    }

    /// The corresponding weight `α_lo + ⋯ + α_hi = ε_lo − ε_{hi+1}`.
    pub fn weight(&self, rd: &RootDatum) -> Weight {
        Weight::beta(rd, self.lo, self.hi + 1).expect("segment bounds were validated")
    }

    /// Membership in `S`: the segment spans the odd node and has length ≥ 2.
    pub fn is_in_s(&self, rd: &RootDatum) -> bool {
        let m = rd.odd_node();
        self.lo <= m && m <= self.hi && self.lo < self.hi
    }

    /// All segments in lexicographic `(lo, hi)` order.
    pub fn all(rd: &RootDatum) -> Vec<RootSegment> {
        let mut out = Vec::new();
        for lo in 1..=rd.rank() {
            for hi in lo..=rd.rank() {
                out.push(RootSegment { lo, hi });
            }
        }
        out
    }

    /// The set `S`, sorted increasing in the span-then-left-endpoint order
    /// (`s_cmp`), so the last element is the longest segment starting at 1.
    pub fn s_set(rd: &RootDatum) -> Vec<RootSegment> {
        let mut out: Vec<RootSegment> = Self::all(rd)
            .into_iter()
            .filter(|seg| seg.is_in_s(rd))
            .collect();
        out.sort_by(s_cmp);
        out
    }
}

impl std::fmt::Display for RootSegment {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.lo, self.hi)
    }
}

/// Lexicographic order on `(lo, hi)`, used to list the positive roots.
pub fn segment_cmp(a: &RootSegment, b: &RootSegment) -> Ordering {
    (a.lo, a.hi).cmp(&(b.lo, b.hi))
}

/// The order on `S`: longer span is greater; on a span tie the smaller left
/// endpoint is greater.
pub fn s_cmp(a: &RootSegment, b: &RootSegment) -> Ordering {
    let span_a = a.hi - a.lo;
    let span_b = b.hi - b.lo;
    span_a.cmp(&span_b).then(b.lo.cmp(&a.lo))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_set_on_small_data() {
        let rd = RootDatum::new(1, 2).unwrap();
        let s: Vec<String> = RootSegment::s_set(&rd).iter().map(|x| x.to_string()).collect();
        assert_eq!(s, vec!["(1,2)"]);

        let rd = RootDatum::new(2, 1).unwrap();
        let s: Vec<String> = RootSegment::s_set(&rd).iter().map(|x| x.to_string()).collect();
        assert_eq!(s, vec!["(1,2)"]);

        let rd = RootDatum::new(2, 2).unwrap();
        let s: Vec<String> = RootSegment::s_set(&rd).iter().map(|x| x.to_string()).collect();
        assert_eq!(s, vec!["(2,3)", "(1,2)", "(1,3)"]);
    }

    #[test]
    fn s_order_is_strict_and_total() {
        let rd = RootDatum::new(3, 3).unwrap();
        let s = RootSegment::s_set(&rd);
        for (idx, a) in s.iter().enumerate() {
            assert_eq!(s_cmp(a, a), Ordering::Equal);
            for b in &s[idx + 1..] {
                assert_eq!(s_cmp(a, b), Ordering::Less);
                assert_eq!(s_cmp(b, a), Ordering::Greater);
            }
        }
        // |S| = M·N − (1 if the single-node segment (M,M) would qualify,
        // which it never does since a < b is required): count directly.
        let m = rd.m();
        let n = rd.n();
        assert_eq!(s.len(), m * n - 1);
    }

    #[test]
    fn segment_weights_match_epsilon_differences() {
        let rd = RootDatum::new(2, 2).unwrap();
        for seg in RootSegment::all(&rd) {
            let w = seg.weight(&rd);
            let expected = Weight::beta(&rd, seg.lo(), seg.hi() + 1).unwrap();
            assert_eq!(w, expected);
            assert!(w.is_in_q_plus());
        }
    }

    #[test]
    fn lex_order_lists_segments() {
        let rd = RootDatum::new(1, 2).unwrap();
        let all: Vec<String> = RootSegment::all(&rd).iter().map(|x| x.to_string()).collect();
        assert_eq!(all, vec!["(1,1)", "(1,2)", "(2,2)"]);
        let mut shuffled = RootSegment::all(&rd);
        shuffled.reverse();
        shuffled.sort_by(segment_cmp);
        assert_eq!(shuffled, RootSegment::all(&rd));
    }
}
