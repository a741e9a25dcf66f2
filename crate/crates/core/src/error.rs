use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("malformed rational {0:?}")]
    ParseRational(String),

    #[error("negative value {value} at good {good}")]
    NegativeValue { good: usize, value: String },

    #[error("values sum to {sum}, expected exactly 1")]
    NotNormalized { sum: String },

    #[error("invalid profile: {0}")]
    InvalidProfile(String),

    #[error("invalid allocation: {0}")]
    InvalidAllocation(String),

    #[error("declared accuracy {declared} for agent {agent} exceeds realized accuracy {realized}")]
    AccuracyOverclaimed { agent: usize, declared: String, realized: String },

    #[error("envy graph has a cycle through agent {0}")]
    EnvyCycle(usize),

    #[error("enumeration budget exceeded: {0}")]
    BudgetExceeded(String),

    #[error("good {got} arrived out of order, expected {expected}")]
    OutOfOrder { expected: usize, got: usize },

    #[error("expected {expected} revealed values, got {got}")]
    WrongAgentCount { expected: usize, got: usize },

    #[error("allocator {allocator} incompatible with input: {reason}")]
    Incompatible { allocator: String, reason: String },

    #[error("unknown allocator {0:?}")]
    UnknownAllocator(String),

    #[error("unknown adversary {0:?}")]
    UnknownAdversary(String),

    #[error("unknown bound {0:?}")]
    UnknownBound(String),

    #[error("parameter out of domain: {0}")]
    Domain(String),

    #[error("inconsistent form input: {0}")]
    InconsistentForm(String),

    #[error("infeasible perturbation: {0}")]
    InfeasiblePerturbation(String),

    #[error("incomplete transcript: {0}")]
    IncompleteTranscript(String),

    #[error("adversary exhausted: {0}")]
    AdversaryExhausted(String),

    #[error("monotonicity check failed for {0}")]
    NotMonotone(String),

    #[error("json: {0}")]
    Json(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
