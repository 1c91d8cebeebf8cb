//! Exact computer algebra for the quantum affine special linear superalgebra
//! `U_q(sl^(M|N))` in its loop (current) presentation.
//!
//! Everything in this crate is exact: scalars live in the field of rational
//! functions `Q(q)` (represented as canonical fractions of integer Laurent
//! polynomials), modules are matrices over that field, and every verdict the
//! rewrite engine emits is backed by a terminating, relation-sound rewrite
//! trace. No floating point types appear anywhere in a computation path.
//!
//! The crate is organized bottom-up:
//!
//! * [`scalar`] — Laurent polynomials over `Q`, canonical fractions
//!   ([`scalar::QScalar`]), truncated power series at `z = 0`, `z = ∞`, or
//!   two-sided, balanced q-integers, and a bit-exact text grammar.
//! * [`root`] — root data for the `(M|N)` family: the symmetric Cartan
//!   pairing, parities, the distinguished odd node `M`, weights on the
//!   `{ω₀, δ, α_i}` basis, positive-root segments, and the two total orders
//!   (segment order and the order on the odd-sector index set `S`).
//! * [`algebra`] — the free superalgebra on the loop generators
//!   `X⁺_i(n), X⁻_i(n), K_i^{±1}, h_i(s), C^{±1/2}, D^{±1}`, with graded
//!   q-brackets, composite root vectors, PBW-style monomial enumeration, and
//!   a round-tripping expression grammar.
//! * [`rewrite`] — a terminating normal-form engine for the defining
//!   relations plus an identity prover (`verify_identity`) used to certify
//!   derived identities: transport/shift families, nested-vanishing lemmas,
//!   the anticommutation lemma, and degree-adjacent chain identities.
//! * [`repr`] — exact finite-dimensional modules (natural evaluation
//!   modules with a relation-check construction gate), highest-weight
//!   extraction, polynomial data extraction (the `(P_i, f, c, Q)` tuple),
//!   integrability checks, loop modules `L(V; b)`, loop decomposition, and
//!   evaluation maps.
//! * [`cli`] — a deterministic command-line front end with versioned JSON
//!   reports (subcommands `verify-relations`, `verify-identities`,
//!   `natural-module`, `loop`).
//!
//! # Runnable examples
//!
//! Each major capability has a runnable walkthrough under `examples/`:
//!
//! * `q_arithmetic` — canonical scalar arithmetic, q-integers, series.
//! * `free_qbracket` — the four free graded q-bracket expansion identities.
//! * `pbw_monomials` — root segments, composite root vectors, PBW words.
//! * `defining_relations` — the defining relation suite on small ranks.
//! * `derived_identities` — transport, nested-vanishing, anticommutation,
//!   and chain identities proved by the rewrite engine.
//! * `natural_module` — building a natural evaluation module through its
//!   relation gate and checking integrability.
//! * `drinfeld_data` — highest-weight lines and polynomial data extraction.
//! * `loop_module` — loop modules, decomposition, and evaluation maps.
//!
//! Run one with `cargo run -p qasa --example natural_module`.

pub mod algebra;
pub mod cli;
pub mod repr;
pub mod rewrite;
pub mod root;
pub mod scalar;
