use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("integer overflow in {0}")]
    Overflow(&'static str),

    #[error("fiber {fiber} not coprime: ({alpha},{beta})")]
    NotCoprime { fiber: usize, alpha: i64, beta: i64 },

    #[error("fiber parameters must be positive for word decomposition, got ({alpha},{beta})")]
    NonPositive { alpha: i64, beta: i64 },

    #[error("parameters ({alpha},{beta}) reduce to the zero class mod 5")]
    ZeroClass { alpha: i64, beta: i64 },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("orbit inconsistency: {0}")]
    Orbit(String),

    #[error("no convention reconciles closed form with tensor route: {0}")]
    Reconcile(String),

    #[error("unknown convention id {0:?}")]
    UnknownConvention(String),
}
