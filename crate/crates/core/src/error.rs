use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GarsideError {
    #[error("invalid strand count {0}: need 2 <= n <= {max}", max = crate::perm::MAX_STRANDS)]
    InvalidStrandCount(usize),
    #[error("not a permutation of 1..{n}: {detail}")]
    NotAPermutation { n: usize, detail: String },
    #[error("not a non-crossing partition: {0}")]
    NotNonCrossing(String),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("element is not in the set of sliding circuits")]
    NotInSlidingCircuits,
    #[error("budget exhausted: {what} exceeded limit {limit}")]
    BudgetExhausted { what: &'static str, limit: usize },
    #[error("witness verification failed: {0}")]
    WitnessMismatch(String),
    #[error("{0}")]
    Invalid(String),
}

impl GarsideError {
    pub fn is_budget(&self) -> bool {
        matches!(self, GarsideError::BudgetExhausted { .. })
    }
}

pub type Result<T> = std::result::Result<T, GarsideError>;
