use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("table is not associative: ({a}+{b})+{c} != {a}+({b}+{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("invalid block sequence: {0}")]
    InvalidBlocks(String),
    #[error("pool exhausted after {chosen} of {wanted} elements")]
    PoolExhausted { chosen: usize, wanted: usize },
    #[error("search budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("certificate failed re-verification: {0}")]
    Verification(String),
    #[error("io error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Error {
        Error::Io(e.to_string())
    }
}
