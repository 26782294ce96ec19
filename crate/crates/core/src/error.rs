use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("enumeration budget exceeded: {required} elements requested, budget is {budget}")]
    BudgetExceeded { required: u128, budget: u128 },

    #[error("not a ghost vector: component {index} fails the divisibility congruence")]
    NotGhostVector { index: usize },

    #[error("symbolic value cannot be evaluated numerically: {0}")]
    Symbolic(String),

    /// A structural invariant failed; signals a bug rather than bad input.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// True for failures that indicate a bug in the engine rather than in the
    /// caller's input.
    pub fn is_internal(&self) -> bool {
        matches!(self, Error::Internal(_) | Error::NotGhostVector { .. })
    }

    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn internal(msg: impl Into<String>) -> Self {
        Error::Internal(msg.into())
    }
}
