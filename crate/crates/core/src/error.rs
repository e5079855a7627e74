use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: {0} vs {1}")]
    FieldMismatch(String, String),
    /// A documented precondition of the operation does not hold.
    #[error("{0}")]
    Precondition(String),
    /// Input data violates a structural invariant (grading, module law, ...).
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("size cap exceeded: {0}")]
    SizeCap(String),
    /// A search ran out of budget without deciding the question.
    #[error("inconclusive: {0}")]
    Inconclusive(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn pre<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Precondition(msg.into()))
}
