use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("denominator vanishes at q = {0}")]
    PoleAtValue(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("element is not in the monoid: {0}")]
    NotInMonoid(String),
    #[error("membership criteria disagree on {0}")]
    DefinitionMismatch(String),
    #[error("set {0} is not stable under the element")]
    InvalidK(String),
    #[error("A*Y differs from Y*B at ({row}, {col})")]
    DecompositionMismatch { row: String, col: String },
    #[error("entry at ({row}, {col}) is not an integer polynomial: {value}")]
    NonPolynomialEntry { row: String, col: String, value: String },
    #[error("transition coefficient for class {class} is nonzero outside its block at {label}")]
    SupportViolation { class: String, label: String },
    #[error("singular matrix")]
    Singular,
    #[error("requested size is beyond the supported work bound: {0}")]
    UnsupportedSize(String),
    #[error("cache entry is unusable: {0}")]
    CorruptCache(String),
    #[error("i/o error: {0}")]
    Io(String),
    #[error("label {0} is not part of this index set")]
    UnknownLabel(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
