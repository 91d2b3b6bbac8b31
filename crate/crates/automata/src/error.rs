use thiserror::Error;

/// Errors shared by every operation in the crate.
#[derive(Debug, Error)]
pub enum AutomatonError {
    #[error("symbol index {index} out of range for alphabet of size {alphabet_size}")]
    InvalidSymbol { index: usize, alphabet_size: usize },

    #[error("unknown symbol name {name:?}")]
    UnknownSymbolName { name: String },

    #[error("state {state} out of range for automaton with {state_count} states")]
    InvalidState { state: usize, state_count: usize },

    #[error("alphabets differ: {left:?} vs {right:?}")]
    AlphabetMismatch { left: Vec<String>, right: Vec<String> },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("budget exceeded: {task} needs {needed} but the cap is {cap}")]
    BudgetExceeded {
        task: String,
        needed: u64,
        cap: u64,
    },

    #[error("malformed automaton: {0}")]
    Malformed(String),

    #[error("JSON error: {0}")]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, AutomatonError>;

impl AutomatonError {
    pub fn precondition(msg: impl Into<String>) -> Self {
        AutomatonError::Precondition(msg.into())
    }
}
