use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The exhaustive oracle would need to enumerate more tuples than allowed.
    #[error("brute-force budget exceeded: {n}^{d} tuples exceeds the budget of {budget}")]
    TupleBudget { n: u64, d: u64, budget: u64 },

    /// The DP frontier grew past the configured state cap.
    #[error(
        "state cap exceeded for n={n}: {states} states at depth {depth} (cap {cap}); \
         last completed depth {reached}"
    )]
    StateBudget {
        n: u64,
        depth: u64,
        reached: u64,
        states: usize,
        cap: usize,
    },

    #[error("interpolation for d={d} could not evaluate alpha at prime {prime}: {reason}")]
    InterpolationBudget { d: u32, prime: u64, reason: String },

    #[error("matrix rows have different lengths")]
    RaggedMatrix,

    #[error("integer overflow during exact elimination")]
    Overflow,

    #[error("interpolated polynomial failed its self-check: {0}")]
    NonIntegralPolynomial(String),

    #[error("cache error: {0}")]
    Cache(String),
}

impl Error {
    /// Resource refusals are the errors a larger budget could cure.
    pub fn is_resource_refusal(&self) -> bool {
        matches!(
            self,
            Error::TupleBudget { .. }
                | Error::StateBudget { .. }
                | Error::InterpolationBudget { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}
