use thiserror::Error;

/// Errors raised by the library. Every fallible public operation returns this type.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("index entries must be positive, got {0}")]
    NonPositiveIndex(i64),

    #[error("operation requires a nonempty index word")]
    EmptyWord,

    #[error("index word {0} is not admissible (first entry must be at least 2)")]
    NotAdmissible(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("guard exceeded: {0}")]
    Guard(String),

    #[error("inconsistent radicands in quadratic extension: {0} vs {1}")]
    InconsistentRadicand(String, String),

    #[error("precision unreachable: {0}")]
    PrecisionUnreachable(String),

    #[error("unknown identity id `{0}`")]
    UnknownIdentity(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
