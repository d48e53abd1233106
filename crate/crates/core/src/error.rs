use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic {0} is not a prime below 2^31")]
    InvalidCharacteristic(u64),
    #[error("duplicate variable `{0}`")]
    DuplicateVariable(String),
    #[error("a ring needs at least one variable")]
    NoVariables,
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("inhomogeneous input: {0}")]
    Inhomogeneous(String),
    #[error("degree mismatch: {0}")]
    DegreeMismatch(String),
    #[error("modules live over different rings")]
    ContextMismatch,
    #[error("matrix does not descend to a morphism of the presented modules")]
    NotWellDefined,
    #[error("module is not a generator (R is not a summand of a sum of copies)")]
    NotGenerator,
    #[error("module does not have finite length")]
    NotFiniteLength,
    #[error("not a short exact sequence: {0}")]
    NotExact(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("falsification event: {0}")]
    Falsified(String),
    #[error("internal error: {0}")]
    Internal(String),
    #[error("job error at {location}: {message}")]
    Job { location: String, message: String },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
