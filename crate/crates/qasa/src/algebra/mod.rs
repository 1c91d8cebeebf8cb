//! The free ℤ₂-graded, ℤ-graded associative algebra on the loop generators
//! over the exact scalar field, together with the q-bracket calculus,
//! composite root vectors, and ordered-product enumeration.
//!
//! The generator alphabet is
//! `X^±_i(n)`, `K_i^{±1}`, `h_i(s)` (`s ≠ 0`), `C^{±1/2}`, `D^{±1}`,
//! with `i` a node index, `n ∈ ℤ`, and the ℤ-degree conventions
//! `deg X^±_i(n) = n`, `deg h_i(s) = s`, `deg K = deg C^{±1/2} = deg D = 0`.
//! Only the generators `X^±_i(n)` at the odd node are odd; everything else is
//! even.
//!
//! Everything in this module lives in the *free* algebra: no relations are
//! imposed here.  The q-bracket
//!
//! ```text
//! [X, Y]_u = XY − (−1)^{|X||Y|} u YX
//! ```
//!
//! is defined for ℤ₂-homogeneous arguments and a nonzero scalar `u`, and the
//! four mixed-bracket expansion identities (see the `free_qbracket` example)
//! hold exactly at this level — they are pure bookkeeping about signs and
//! scalars, valid before any relations enter.

mod composite;
mod element;
mod gen;
mod text;

pub use composite::{composite_root_vector, composite_root_vector_signed, pbw_monomials, PbwBounds};
pub use element::{qbracket, Element, Monomial};
pub use gen::Gen;
pub use text::{parse_element, parse_identity_line};

use thiserror::Error;

use crate::root::RootError;
use crate::scalar::ScalarError;

/// Sign selector for the two families of loop generators.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    /// `+1` or `−1` as an integer.
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl std::fmt::Display for Sign {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sign::Plus => write!(f, "+"),
            Sign::Minus => write!(f, "-"),
        }
    }
}

/// Errors from free-algebra operations and the expression grammar.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("element is not Z2-homogeneous: {context}")]
    NotZ2Homogeneous { context: String },
    #[error("element is not Z-homogeneous: {context}")]
    NotZHomogeneous { context: String },
    #[error("q-bracket scalar must be nonzero")]
    ZeroBracketScalar,
    #[error("composite root vector needs node indices i ≤ j (got i={i}, j={j})")]
    BadComposite { i: usize, j: usize },
    #[error("cannot parse expression {text:?}: {reason}")]
    Parse { text: String, reason: String },
    #[error("division by a non-scalar or zero element")]
    BadDivision,
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Root(#[from] RootError),
}
