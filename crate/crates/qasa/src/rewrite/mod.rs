//! The rewrite engine: orients the defining relations into reduction rules,
//! computes triangular normal forms, and verifies derived identities by
//! reducing `LHS − RHS` to zero.
//!
//! Two layers cooperate:
//!
//! 1. **`normal_form`** applies only *safe* oriented rules — inverse
//!    cancellations, centrality of `C^{±1/2}`, the `K`-, `D`-, and
//!    `h`-commutation moves, the `X^+X^−` straightening (with the `φ^±`
//!    series expanded eagerly into `K^{±1}` and `h` polynomials), the
//!    vanishing-bracket sorts for node pairs with zero Cartan pairing, and
//!    the vanishing square of the odd generator.  Every rule strictly
//!    decreases a well-founded measure, so reduction terminates (a step budget
//!    guards against mistakes and reports exhaustion explicitly).  The
//!    result has the triangular block shape: lowering letters, then Cartan
//!    letters, then raising letters.
//!
//! 2. **`verify_identity`** first normalizes `LHS − RHS`, then greedily
//!    reduces the leading words of the remainder using exact instances of
//!    the degree-shift relation, the Serre relations, the four-letter Serre
//!    relation at the odd node, and a pool of previously proved identities
//!    oriented by their leading words.  A `Proved` verdict is sound: every
//!    rewrite step stays inside the two-sided ideal generated by the
//!    defining relations.  `Inconclusive` is a first-class outcome —
//!    confluence is neither assumed nor claimed.

mod chains;
mod normal;
mod suite;
mod xreduce;

pub use suite::{
    appendix_a_suite, chain_auxiliary_suite, chains_suite, lemma42_suite, lemma_a2_suite,
    relation_suite, SuiteItem,
};
pub use xreduce::{
    r9_element, serre_element, super_serre_element, Pool, Reduction, Verdict,
};

use thiserror::Error;

use crate::algebra::{AlgebraError, Element};
use crate::root::RootDatum;

/// Default step budget per identity (rule applications).
pub const DEFAULT_STEP_BUDGET: u64 = 100_000;

/// Errors from reduction; budget exhaustion carries the partial result.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RewriteError {
    #[error("step budget exhausted after {steps} steps")]
    BudgetExhausted { steps: u64, partial: Element },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A normal-form result together with the number of rule applications used.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormalForm {
    pub element: Element,
    pub steps: u64,
}

/// Per-identity report row used by the command-line tools.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct IdentityReport {
    pub name: String,
    pub verdict: Verdict,
    pub steps: u64,
}

/// An identity verification outcome plus the wall-clock time it took.
#[derive(Debug, Clone)]
pub struct StageOutcome {
    pub report: IdentityReport,
    pub elapsed_ms: u128,
}

/// The oriented rewrite system for one root datum.
#[derive(Debug, Clone)]
pub struct RewriteSystem {
    rd: RootDatum,
    budget: u64,
}

impl RewriteSystem {
    pub fn new(rd: RootDatum) -> Self {
        RewriteSystem {
            rd,
            budget: DEFAULT_STEP_BUDGET,
        }
    }

    pub fn with_budget(mut self, budget: u64) -> Self {
        self.budget = budget;
        self
    }

    pub fn rd(&self) -> &RootDatum {
        &self.rd
    }

    pub fn budget(&self) -> u64 {
        self.budget
    }
}

/// Step accounting shared by the reduction passes.
#[derive(Debug, Clone)]
pub(crate) struct Budget {
    remaining: u64,
    pub(crate) used: u64,
}

impl Budget {
    pub(crate) fn new(limit: u64) -> Self {
        Budget {
            remaining: limit,
            used: 0,
        }
    }

    /// Spend one step; `false` when the budget is gone.
    pub(crate) fn spend(&mut self) -> bool {
        if self.remaining == 0 {
            return false;
        }
        self.remaining -= 1;
        self.used += 1;
        true
    }
}
