use thiserror::Error;

/// Errors raised by every module of the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("incompatible operands: {0}")]
    IncompatibleOperands(String),
    #[error("not a unit: constant coefficient is zero")]
    NonUnit,
    #[error("out of range: {0}")]
    Range(String),
    #[error("invalid instance: {0}")]
    Instance(String),
    #[error("model mismatch: {0}")]
    Model(String),
    #[error("no proper jet fiber found up to horizon {0}")]
    Horizon(u32),
    #[error("invalid input: {0}")]
    Input(String),
    #[error("inconsistent input: {0}")]
    InconsistentInput(String),
    #[error("census of {size} matrices exceeds budget {budget}")]
    Budget { size: u128, budget: u128 },
    #[error("sampling error: {0}")]
    Sampling(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
