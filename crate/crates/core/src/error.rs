use thiserror::Error;

/// Errors shared by every construction in the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("depth {have} is too small; {need} required ({context})")]
    DepthTooSmall {
        have: usize,
        need: usize,
        context: String,
    },

    #[error("enumeration budget of {budget} exceeded while {context}")]
    BudgetExceeded { budget: u64, context: String },

    #[error("Kan condition fails: horn {horn} at level {level} has no filler")]
    NotKan { level: usize, horn: String },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("unknown id {id:?} at level {level}")]
    UnknownId { level: usize, id: String },

    #[error("word is not composable at position {position}")]
    NotComposable { position: usize },

    #[error("free level {level} has no word-length cap")]
    Uncapped { level: usize },

    #[error("level {level} is free with a cycle in its generator graph; arrows are not finite")]
    InfiniteLevel { level: usize },

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Invalid(msg.into()))
}
