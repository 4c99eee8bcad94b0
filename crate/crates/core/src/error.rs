use thiserror::Error;

/// Errors raised by family operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoreError {
    #[error("element is not a unit: {0}")]
    NotAUnit(String),
    #[error("family `{0}` has no identity element")]
    NoIdentity(String),
    #[error("no exact solver for this operation in family `{family}`: {what}")]
    UnsupportedSolver { family: String, what: String },
    #[error("element does not belong to this family: {0}")]
    ForeignElement(String),
}

/// Parse failure for an element literal, with byte position.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse element at byte {pos}: {msg} (input `{input}`)")]
pub struct ElemParseError {
    pub input: String,
    pub pos: usize,
    pub msg: String,
}

impl ElemParseError {
    pub fn new(input: &str, pos: usize, msg: impl Into<String>) -> Self {
        ElemParseError {
            input: input.to_string(),
            pos,
            msg: msg.into(),
        }
    }
}
