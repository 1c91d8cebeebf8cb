//! Composite root vectors and ordered-product (PBW-shape) enumeration.
//!
//! The composite root vector attached to a node segment `i ≤ j` is the
//! left-nested q-bracket
//!
//! ```text
//! X^+_{i,j}(n) = [⋯[[X^+_i(n), X^+_{i+1}(0)]_{q_{i+1}}, X^+_{i+2}(0)]_{q_{i+2}}, …, X^+_j(0)]_{q_j}
//! ```
//!
//! with the convention `X^+_{i,i}(n) = X^+_i(n)`; the bracket parameter at
//! step `k` is `q_k = q^{l_k}`.  The minus family uses the same bracket
//! parameters with `X^−` letters.

use crate::root::{segment_cmp, RootDatum, RootSegment};
use crate::scalar::QScalar;

use super::{qbracket, AlgebraError, Element, Gen, Sign};

/// `X^+_{i,j}(n)` as a free-algebra element.
pub fn composite_root_vector(
    rd: &RootDatum,
    i: usize,
    j: usize,
    n: i64,
) -> Result<Element, AlgebraError> {
    composite_root_vector_signed(rd, Sign::Plus, i, j, n)
}

/// `X^±_{i,j}(n)`: the same nested bracket with the letter family chosen by
/// `sign` (bracket parameters are identical for both families).
pub fn composite_root_vector_signed(
    rd: &RootDatum,
    sign: Sign,
    i: usize,
    j: usize,
    n: i64,
) -> Result<Element, AlgebraError> {
    rd.check_node(i)?;
    rd.check_node(j)?;
    if i > j {
        return Err(AlgebraError::BadComposite { i, j });
    }
    let mut acc = Element::from_gen(Gen::x(sign, i, n));
    for k in (i + 1)..=j {
        let next = Element::from_gen(Gen::x(sign, k, 0));
        acc = qbracket(rd, &acc, &next, &rd.q_node(k))?;
    }
    Ok(acc)
}

/// Bounds for the ordered-product enumeration.
#[derive(Clone, Copy, Debug)]
pub struct PbwBounds {
    /// Largest multiplicity `c_{ab}` allowed for each root segment.
    pub max_mult: usize,
    /// Largest `|n|` allowed for each loop index.
    pub max_abs_n: i64,
    /// When set, keep only products with exactly this many factors.
    pub total: Option<usize>,
}

/// Enumerate the ordered products `∏ X^+_{a,b}(n_{ab,1}) ⋯ X^+_{a,b}(n_{ab,c_{ab}})`
/// over the root segments in increasing lexicographic order, each factor
/// expanded as a free-algebra element.
///
/// Within one segment the loop indices are taken non-decreasing, so each
/// ordered product shape appears exactly once.  The enumeration order is
/// deterministic: segments left to right, multiplicities ascending, loop
/// index tuples in lexicographic order.
pub fn pbw_monomials(rd: &RootDatum, bounds: &PbwBounds) -> Vec<Element> {
    let mut segments = RootSegment::all(rd);
    segments.sort_by(segment_cmp);
    let mut out = Vec::new();
    let mut factors: Vec<(RootSegment, i64)> = Vec::new();
    extend(
        rd,
        bounds,
        &segments,
        0,
        -bounds.max_abs_n,
        0,
        &mut factors,
        &mut out,
    );
    out
}

/// Emit the current factor list if it satisfies the total-count constraint,
/// then try every lexicographically larger extension: the next factor comes
/// from the same segment with a loop index ≥ the last one, or from any later
/// segment.  Products therefore appear in lexicographic order of their factor
/// lists, shorter prefixes first.
#[allow(clippy::too_many_arguments)]
fn extend(
    rd: &RootDatum,
    bounds: &PbwBounds,
    segments: &[RootSegment],
    seg_idx: usize,
    min_n: i64,
    used_in_seg: usize,
    factors: &mut Vec<(RootSegment, i64)>,
    out: &mut Vec<Element>,
) {
    let emit = match bounds.total {
        Some(t) => factors.len() == t,
        None => true,
    };
    if emit {
        let mut acc = Element::one();
        for (seg, n) in factors.iter() {
            let factor = composite_root_vector(rd, seg.lo(), seg.hi(), *n)
                .expect("segment indices are valid by construction");
            acc = acc.mul(&factor);
        }
        out.push(acc);
    }
    if bounds.total.is_some_and(|t| factors.len() >= t) {
        return;
    }
    for s in seg_idx..segments.len() {
        let (lo_n, used) = if s == seg_idx {
            (min_n, used_in_seg)
        } else {
            (-bounds.max_abs_n, 0)
        };
        if used >= bounds.max_mult {
            continue;
        }
        for n in lo_n..=bounds.max_abs_n {
            factors.push((segments[s], n));
            extend(rd, bounds, segments, s, n, used + 1, factors, out);
            factors.pop();
        }
    }
}
