use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text that is not a decimal string or `p/q` fraction.
    #[error("invalid number {text:?} at {location}: {reason}")]
    InvalidNumber {
        location: String,
        text: String,
        reason: String,
    },

    #[error("value {text:?} at {location} is outside [0,1]")]
    OutOfRange { location: String, text: String },

    /// Malformed JSON or a missing/mistyped field.
    #[error("malformed instance: {0}")]
    Syntax(String),

    /// Ragged or empty matrices, or row counts that disagree with `b`.
    #[error("bad shape: {0}")]
    Shape(String),

    #[error("dimension mismatch: expected {expected} components, found {found}")]
    Dimension { expected: usize, found: usize },

    /// An operation was called outside its precondition.
    #[error("precondition violated: {0}")]
    Contract(String),

    #[error("{what}: {requested} exceeds the cap of {cap}")]
    ResourceLimit {
        what: &'static str,
        requested: u128,
        cap: u128,
    },
}

impl Error {
    pub(crate) fn contract(msg: impl Into<String>) -> Self {
        Error::Contract(msg.into())
    }
}
