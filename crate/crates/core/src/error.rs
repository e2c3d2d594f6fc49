use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parts must be positive and weakly decreasing: {0:?}")]
    InvalidPartition(Vec<u32>),

    #[error("cannot parse partition text {text:?}: {reason}")]
    Parse { text: String, reason: String },

    #[error("Frobenius {side} must be strictly decreasing and match in length")]
    InvalidFrobenius { side: &'static str },

    #[error("hook type must satisfy k_i >= k_(i+1) + 2 and k_r >= 1: {0:?}")]
    InvalidHookType(Vec<u32>),

    #[error("difference sequence entries must be positive: {0:?}")]
    InvalidDifferenceSequence(Vec<u32>),

    #[error("the empty partition has no {0}")]
    EmptyPartition(&'static str),

    #[error("{value:?} is not a member of the {set} index set for n = {n}")]
    NotInIndexSet {
        value: Vec<u32>,
        set: &'static str,
        n: u64,
    },

    #[error("series truncated at {bound} cannot supply degree {needed}")]
    TruncationTooSmall { needed: u64, bound: usize },

    #[error("multivariate expansion supports at most {max} variables, got {got}")]
    TooManyVariables { got: usize, max: usize },

    #[error("{0}")]
    InvalidArgument(String),

    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;
