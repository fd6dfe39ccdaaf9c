//! Polyhedral realizations of crystal bases `B(λ)` and `B(∞)` for the
//! finite classical Lie algebras (types A, B, C, D).
//!
//! Given a periodic adapted sequence `ι` of simple-root indices, this crate
//! computes the system of linear inequalities cutting out the image of the
//! Kashiwara embedding inside the lattice `ℤ^∞`, both by closing seed forms
//! under piecewise-linear operators and by direct generation of column
//! tableaux, and cross-checks the two against brute-force crystal
//! enumeration.
//!
//! Module map:
//! - [`cartan`]: root-system data and the Weyl dimension formula.
//! - [`sequence`]: periodic sequences, adaptedness, derived index tables.
//! - [`linform`]: exact sparse linear forms and the operators `S_k`, `Ŝ_k`.
//! - [`closure`]: fixpoint closures of seed forms and positivity predicates.
//! - [`tableaux`]: box forms, column tableaux and the inequality families.
//! - [`crystal`]: Kashiwara operators on `ℤ^∞` and crystal enumeration.
//! - [`verify`]: executable equality/property checks tying it all together.
//! - [`cli`]: command-line front end with reproducible JSON output.

pub mod cartan;
pub mod cli;
pub mod closure;
pub mod crystal;
pub mod linform;
pub mod sequence;
pub mod tableaux;
pub mod verify;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("rank {rank} out of range for type {family}: {reason}")]
    RankOutOfRange {
        family: char,
        rank: usize,
        reason: String,
    },
    #[error("invalid word: {0}")]
    InvalidWord(String),
    #[error("sequence is not adapted: {0}")]
    NotAdapted(String),
    #[error("p-value undefined for pair ({i},{j}): {reason}")]
    BadPair { i: usize, j: usize, reason: String },
    #[error("index {0} out of range: {1}")]
    IndexOutOfRange(usize, String),
    #[error("window overflow: form {form} has support beyond flat index {window}")]
    WindowOverflow { form: String, window: usize },
    #[error("closure exceeded cap of {cap} forms")]
    CapExceeded { cap: usize },
    #[error("inadmissible tableau entry: {0}")]
    InadmissibleEntry(String),
    #[error("point is not a member of the B(∞) realization: violates {form}")]
    NotInBInfinity { form: String },
    #[error("malformed crystal point: {0}")]
    MalformedPoint(String),
    #[error("lattice enumeration hit the margin shell after {0} enlargements (unbounded direction?)")]
    UnboundedEnumeration(usize),
    #[error("non-integer coefficient in serialized form: {0}")]
    NonIntegerCoefficient(String),
    #[error("{0}")]
    Usage(String),
}

pub type Result<T> = std::result::Result<T, Error>;
