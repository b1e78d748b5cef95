use thiserror::Error;

use crate::perm::Violation;

/// Errors raised by constructors, codecs and the series engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("repetition multiplicity k must be positive")]
    ZeroMultiplicity,

    #[error("size {0} is undefined for this class")]
    UndefinedSize(usize),

    #[error("invalid k-Stirling permutation: {0}")]
    InvalidPermutation(Violation),

    #[error("cannot insert label {label} at position {position}: only {available} available")]
    InsertionOutOfRange {
        label: usize,
        position: usize,
        available: usize,
    },

    #[error("invalid tree: {0}")]
    InvalidTree(String),

    #[error("invalid path diagram at step {step}: {reason}")]
    InvalidDiagram { step: usize, reason: String },

    #[error("operation requires k = {expected}, got k = {found}")]
    WrongArity { expected: usize, found: usize },

    #[error("unknown object class `{0}`")]
    UnknownClass(String),

    #[error("t-exponent {requested} exceeds truncation order {max_deg}")]
    BeyondTruncation { requested: u32, max_deg: u32 },

    #[error("exponent vector has {found} marker entries, expected {expected}")]
    MarkerMismatch { expected: usize, found: usize },

    #[error("ambiguous production: word {0} generated twice")]
    Ambiguous(String),

    #[error("{0}")]
    Parse(#[from] crate::io::ParseError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
