use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not real: {0}")]
    NotReal(String),
    #[error("matrix is singular")]
    Singular,
    #[error("matrix is not traceless: trace = {0}")]
    NotTraceless(String),
    #[error("scalar domains differ")]
    DomainMismatch,
    #[error("subalgebra {0} is not closed under the bracket")]
    NotClosed(String),
    #[error("matrix is not in SL(3): det = {0}")]
    NotInSl3(String),
    #[error("not a cocycle: {0}")]
    NotACocycle(String),
    #[error("family sample {0} is singular or violates its constraint")]
    SingularSample(String),
    #[error("parameter {name} = {value} is out of range: {reason}")]
    OutOfRange {
        name: String,
        value: String,
        reason: String,
    },
    #[error("unknown case or family id: {0}")]
    UnknownCase(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o failure: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
