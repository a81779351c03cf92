use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^16")]
    NotPrime(u64),
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(u32, u32),
    #[error("non-invertible: {0} has no inverse mod {1}")]
    NonInvertible(u32, u32),
    #[error("digit {digit} out of range for base {base}")]
    DigitOutOfRange { digit: u32, base: u32 },
    #[error("composition undefined: inner series has nonzero constant term")]
    CompositionUndefined,
    #[error("not invertible under composition: {0}")]
    NotCompositionallyInvertible(&'static str),
    #[error("Newton inapplicable: {0}")]
    NewtonInapplicable(String),
    #[error("oracle mismatch for {what} at index {index}: {left} vs {right}")]
    OracleMismatch { what: String, index: usize, left: u32, right: u32 },
    #[error("not automatic at this budget: more than {0} states")]
    NotAutomatic(usize),
    #[error("insufficient terms: label ({k},{l}) would get signature depth {depth} < {min_depth}")]
    InsufficientTerms { k: u32, l: u64, depth: usize, min_depth: usize },
    #[error("synthesized machine disagrees with oracle at n = {0}")]
    SynthesisUnverified(u64),
    #[error("oracle supplies {have} terms but {need} are required")]
    OracleTooShort { have: usize, need: usize },
    #[error("undefined index: {0}")]
    UndefinedIndex(String),
    #[error("statement error: {0}")]
    Statement(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("invalid machine: {0}")]
    InvalidMachine(String),
    #[error("unknown sequence `{0}`")]
    UnknownSequence(String),
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
