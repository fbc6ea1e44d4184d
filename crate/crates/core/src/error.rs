use alloc::string::String;

/// Errors raised by the algebra, word and table layers.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial division is not exact over Z[x]")]
    NotDivisible,

    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,

    #[error("polynomial has odd-degree terms")]
    OddTerms,

    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("empty word requires an explicit strand count")]
    EmptyWord,

    #[error("format error at position {position}: {message}")]
    Format { position: usize, message: String },

    #[error("dataset line {line}: {message}")]
    Dataset { line: usize, message: String },

    #[error("index out of range: {0}")]
    Index(String),

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("internal error: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
