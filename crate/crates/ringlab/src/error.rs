//! Error type shared across the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, RingError>;

#[derive(Debug, Error)]
pub enum RingError {
    #[error("line {line}: malformed line: {msg}")]
    MalformedLine { line: usize, msg: String },
    #[error("missing product for basis pair ({i}, {j})")]
    MissingProduct { i: usize, j: usize },
    #[error("line {line}: duplicate product for basis pair ({i}, {j})")]
    DuplicateProduct { i: usize, j: usize, line: usize },
    #[error("line {line}: expected {expected} coordinates, got {got}")]
    BadArity {
        line: usize,
        expected: usize,
        got: usize,
    },
    #[error("coordinate vector has length {got}, ring has {expected} generators")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("ring order {order} exceeds the configured limit {limit}")]
    OrderLimitExceeded { order: u128, limit: u64 },
    #[error("ideal lattice exceeded {bound} members")]
    LatticeExplosion { bound: usize },
    #[error("malformed target set: {0}")]
    MalformedTarget(String),
    #[error("element {0} is not idempotent")]
    NotIdempotent(String),
    #[error("element {0} is not regular")]
    NotRegular(String),
    #[error("element {0} is not central")]
    NotCentral(String),
    #[error("element {0} has no quasi-inverse")]
    QuasiRegularityFails(String),
    #[error("incompatible bimodule action: {0}")]
    ActionIncompatible(String),
    #[error("invalid endomorphism: {0}")]
    BadEndomorphism(String),
    #[error("unknown check id {0:?}")]
    UnknownTheorem(String),
    #[error("corpus contains no rings")]
    EmptyCorpus,
    #[error("duplicate ring name {0:?} in corpus")]
    DuplicateRing(String),
    #[error("check {check} is vacuous on this corpus: no ring satisfies its hypothesis")]
    InsufficientCorpus { check: String },
    #[error("column {col}: unknown predicate {name:?}")]
    UnknownPredicate { name: String, col: usize },
    #[error("column {col}: {msg}")]
    SyntaxError { col: usize, msg: String },
    #[error("ring {0:?} failed validation")]
    InvalidRing(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
