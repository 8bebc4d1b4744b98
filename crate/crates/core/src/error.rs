use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("N = BᵀA has a non-integer entry for {0}")]
    NonIntegerN(String),
    #[error("no lattice translate of the point lies in the fundamental domain within radius {radius}")]
    NoReduction { radius: i64 },
    #[error("integration oracle did not stabilise: refinement changed the value by {delta:e}")]
    OracleAccuracy { delta: f64 },
    #[error("rule {tag} does not support n = {n}: {reason}")]
    UnsupportedN { tag: String, n: u32, reason: String },
    #[error("unknown tag {0:?}")]
    UnknownTag(String),
    #[error("rule {0} has no Chebyshev substitution")]
    NoSubstitution(String),
    #[error("index {0:?} lies outside the admissible cone")]
    IndexOutsideCone([i64; 3]),
    #[error("weight bracket is negative ({0:e}) for a negative exponent")]
    NegativeBracket(f64),
    #[error("compact kernel needs n divisible by 3, got {0}")]
    NotMultipleOf3(u32),
    #[error("expected {expected} samples, got {got}")]
    SampleCountMismatch { expected: usize, got: usize },
    #[error("index {index:?} out of range for n = {n}")]
    IndexOutOfRange { index: [i64; 2], n: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
