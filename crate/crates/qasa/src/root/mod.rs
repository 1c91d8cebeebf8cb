//! Root data for the `(M|N)` family: the symmetric bilinear form on the
//! `ε`-basis, the Cartan pairing, parities, and the distinguished odd node.
//!
//! Conventions (for `M + N ≥ 3`, the pair `M = N = 1` is rejected):
//!
//! * `ε`-indices run over `1 ..= M+N` with `(ε_k, ε_l) = l_k δ_{kl}` where
//!   `l_k = +1` for `k ≤ M` and `l_k = −1` for `k > M`;
//! * node indices run over `I = {1, …, M+N−1}`, with simple roots
//!   `α_i = ε_i − ε_{i+1}`; the node `i = M` is odd, all others even;
//! * the Cartan pairing `a_ij = (α_i, α_j)` is symmetric, with
//!   `a_ii = 2` for `i < M`, `a_MM = 0`, and `a_ii = −2` for `i > M`;
//! * `q_i = q^{l_i}`, so `q_i − q_i^{-1} = l_i (q − q^{-1})`.

mod segment;
mod weight;

pub use segment::{s_cmp, segment_cmp, RootSegment};
pub use weight::Weight;

use thiserror::Error;

use crate::scalar::QScalar;

/// Errors from root-datum construction and index validation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RootError {
    #[error("both M and N must be positive (got M={m}, N={n})")]
    NonPositiveRank { m: usize, n: usize },
    #[error("the (1|1) case is excluded: max(M, N) must exceed 1")]
    RankOneOne,
    #[error("node index {i} out of range 1..={top}")]
    NodeOutOfRange { i: usize, top: usize },
    #[error("epsilon index {k} out of range 1..={top}")]
    EpsilonOutOfRange { k: usize, top: usize },
    #[error("segment ({i},{j}) requires 1 ≤ i ≤ j ≤ {top}")]
    BadSegment { i: usize, j: usize, top: usize },
    #[error("weight has {got} alpha coordinates, expected {expected}")]
    WeightRankMismatch { got: usize, expected: usize },
    #[error("epsilon coordinates are in the root span only when they sum to zero")]
    EpsilonNotInRootSpan,
}

/// The `(M|N)` root datum.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct RootDatum {
    m: usize,
    n: usize,
}

impl RootDatum {
    /// Build a root datum; rejects non-positive ranks and the `(1|1)` case.
    pub fn new(m: usize, n: usize) -> Result<Self, RootError> {
        if m == 0 || n == 0 {
            return Err(RootError::NonPositiveRank { m, n });
        }
        if m == 1 && n == 1 {
            return Err(RootError::RankOneOne);
        }
        Ok(RootDatum { m, n })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of nodes: `|I| = M + N − 1`.
    pub fn rank(&self) -> usize {
        self.m + self.n - 1
    }

    /// Dimension of the natural module: `M + N`.
    pub fn dim_natural(&self) -> usize {
        self.m + self.n
    }

    /// Iterator over node indices `1 ..= M+N−1`.
    pub fn nodes(&self) -> impl Iterator<Item = usize> {
        1..=self.rank()
    }

    pub fn check_node(&self, i: usize) -> Result<(), RootError> {
        if i < 1 || i > self.rank() {
            return Err(RootError::NodeOutOfRange {
                i,
                top: self.rank(),
            });
        }
        Ok(())
    }

    pub fn check_epsilon(&self, k: usize) -> Result<(), RootError> {
        if k < 1 || k > self.dim_natural() {
            return Err(RootError::EpsilonOutOfRange {
                k,
                top: self.dim_natural(),
            });
        }
        Ok(())
    }

    /// `l_k = (ε_k, ε_k) ∈ {±1}` for an `ε`-index `1 ≤ k ≤ M+N`.
    pub fn l(&self, k: usize) -> i64 {
        debug_assert!(k >= 1 && k <= self.dim_natural());
        if k <= self.m {
            1
        } else {
            -1
        }
    }

    /// Pairing of `ε`-basis vectors: `(ε_k, ε_l) = l_k δ_{kl}`.
    pub fn eps_pairing(&self, k: usize, l: usize) -> i64 {
        if k == l {
            self.l(k)
        } else {
            0
        }
    }

    /// The symmetric Cartan pairing `a_ij = (α_i, α_j)`.
    pub fn cartan_pairing(&self, i: usize, j: usize) -> i64 {
        debug_assert!(i >= 1 && i <= self.rank() && j >= 1 && j <= self.rank());
        // (ε_i − ε_{i+1}, ε_j − ε_{j+1})
        self.eps_pairing(i, j) - self.eps_pairing(i, j + 1) - self.eps_pairing(i + 1, j)
            + self.eps_pairing(i + 1, j + 1)
    }

    /// The distinguished odd node.
    pub fn odd_node(&self) -> usize {
        self.m
    }

    /// Parity of the loop generators attached to node `i`: `X^±_i(n)` is odd
    /// exactly at the odd node; all Cartan-type generators are even.
    pub fn node_parity(&self, i: usize) -> u8 {
        debug_assert!(i >= 1 && i <= self.rank());
        u8::from(i == self.m)
    }

    /// Parity (0 even, 1 odd) of the `k`-th natural basis vector.
    pub fn basis_parity(&self, k: usize) -> u8 {
        debug_assert!(k >= 1 && k <= self.dim_natural());
        u8::from(k > self.m)
    }

    /// `q_i = q^{l_i}` as an exact scalar.
    pub fn q_node(&self, i: usize) -> QScalar {
        QScalar::q_power(self.l(i))
    }

    /// `true` when the super Serre relation is present (both sides of the odd
    /// node are nonempty): `M > 1` and `N > 1`.
    pub fn has_super_serre(&self) -> bool {
        self.m > 1 && self.n > 1
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constructor_guards() {
        assert!(RootDatum::new(0, 2).is_err());
        assert!(RootDatum::new(2, 0).is_err());
        assert!(matches!(RootDatum::new(1, 1), Err(RootError::RankOneOne)));
        assert!(RootDatum::new(1, 2).is_ok());
        assert!(RootDatum::new(2, 2).is_ok());
    }

    #[test]
    fn cartan_pairing_on_2_2() {
        let rd = RootDatum::new(2, 2).unwrap();
        assert_eq!(rd.cartan_pairing(1, 1), 2);
        assert_eq!(rd.cartan_pairing(2, 2), 0);
        assert_eq!(rd.cartan_pairing(3, 3), -2);
        assert_eq!(rd.cartan_pairing(1, 2), -1);
        assert_eq!(rd.cartan_pairing(2, 3), 1);
        assert_eq!(rd.cartan_pairing(1, 3), 0);
    }

    #[test]
    fn cartan_is_symmetric_with_zero_diagonal_exactly_at_odd_node() {
        for (m, n) in [(1usize, 2usize), (2, 1), (2, 2), (1, 3), (3, 2)] {
            let rd = RootDatum::new(m, n).unwrap();
            for i in rd.nodes() {
                for j in rd.nodes() {
                    assert_eq!(
                        rd.cartan_pairing(i, j),
                        rd.cartan_pairing(j, i),
                        "symmetry at ({i},{j}) for ({m}|{n})"
                    );
                }
                assert_eq!(
                    rd.cartan_pairing(i, i) == 0,
                    i == rd.odd_node(),
                    "zero diagonal exactly at the odd node, i = {i}, ({m}|{n})"
                );
            }
        }
    }

    #[test]
    fn adjacent_pairing_is_minus_l_of_the_larger_index() {
        for (m, n) in [(2usize, 2usize), (1, 3), (3, 1), (2, 3)] {
            let rd = RootDatum::new(m, n).unwrap();
            for i in 1..rd.rank() {
                assert_eq!(rd.cartan_pairing(i, i + 1), -rd.l(i + 1));
            }
        }
    }

    #[test]
    fn parities() {
        let rd = RootDatum::new(2, 2).unwrap();
        assert_eq!(rd.node_parity(1), 0);
        assert_eq!(rd.node_parity(2), 1);
        assert_eq!(rd.node_parity(3), 0);
        assert_eq!(rd.basis_parity(1), 0);
        assert_eq!(rd.basis_parity(2), 0);
        assert_eq!(rd.basis_parity(3), 1);
        assert_eq!(rd.basis_parity(4), 1);
    }

    #[test]
    fn super_serre_gate() {
        assert!(!RootDatum::new(1, 2).unwrap().has_super_serre());
        assert!(!RootDatum::new(2, 1).unwrap().has_super_serre());
        assert!(RootDatum::new(2, 2).unwrap().has_super_serre());
        assert!(RootDatum::new(3, 2).unwrap().has_super_serre());
    }
}
