use thiserror::Error;

/// Errors shared across the toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("ln argument must be positive, got interval with lower end {0}")]
    LnDomain(String),
    #[error("sqrt argument must be nonnegative, got interval with lower end {0}")]
    SqrtDomain(String),
    #[error("division by an interval containing zero{0}")]
    IntervalDivisionByZero(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("exact division failed: {0}")]
    DivisibilityFailure(String),
    #[error("endpoint {0} is a root of the target polynomial")]
    EndpointRoot(String),
    #[error("precision budget exhausted at {bits} bits while {context}")]
    PrecisionExhausted { bits: u32, context: String },
    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("data mismatch: {0}")]
    DataMismatch(String),
    #[error("certification failed: {0}")]
    CertificationFailed(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
