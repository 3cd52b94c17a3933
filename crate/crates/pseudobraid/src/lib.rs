//! Computational algebra for braids with unresolved crossings.
//!
//! The pseudo braid monoid on `n` strands is generated by the classical
//! crossings `σ_i^{±1}` of the braid group together with pre-crossings `p_i`
//! whose over/under information is left open. This crate provides:
//!
//! - [`word`]: the token grammar, words, strand permutations and elementary
//!   statistics;
//! - [`garside`]: left-greedy canonical forms and decidable equality for the
//!   classical braid group;
//! - [`ring`]: the integral group ring of the braid group, the
//!   desingularization map `p_i ↦ σ_i − σ_i⁻¹`, and the word-equality
//!   decision procedure built on it;
//! - [`oracle`]: an independent bounded breadth-first prover over the
//!   defining relations, used as ground truth in tests;
//! - [`markov`]: the four Markov moves on the graded union of the monoids,
//!   with a bounded search for move certificates;
//! - [`closure`]: invariants of the braid closure — component counts and
//!   exact weighted linking profiles over all resolutions;
//! - [`cli`]: the batch command-line interface.
//!
//! All values are immutable after construction and every operation is a pure
//! function, so everything here is safe to share and send across threads.
//!
//! See the `examples/` directory for one runnable walkthrough per module.

pub mod cli;
pub mod closure;
pub mod garside;
pub mod markov;
pub mod oracle;
pub mod ring;
pub mod rng;
pub mod word;

use thiserror::Error as ThisError;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error("malformed token `{token}`")]
    MalformedToken { token: String },
    #[error("letter index {index} out of range 1..={} for {strands} strands", strands - 1)]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("need at least 2 strands, got {strands}")]
    TooFewStrands { strands: usize },
    #[error("strand counts differ: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },
    #[error("images do not form a permutation")]
    NotAPermutation,
    #[error("operation requires a classical word but a pre-crossing is present")]
    PreLetterPresent,
    #[error("term count {terms} exceeds expansion cap {cap}")]
    TermCapExceeded { terms: usize, cap: usize },
    #[error("resolution count 2^{pre_count} exceeds cap 2^{cap}")]
    ResolutionCapExceeded { pre_count: usize, cap: usize },
    #[error("resolution has {got} choices but the word has {expected} pre-crossings")]
    ResolutionLengthMismatch { expected: usize, got: usize },
    #[error("operation is specific to 2 strands, got {strands}")]
    NotTwoStrands { strands: usize },
    #[error("invalid Markov move: {reason}")]
    InvalidMove { reason: String },
}
