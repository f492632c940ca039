use thiserror::Error;

/// Errors produced while building, transforming or checking labelings.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("labels are not a bijection onto 1..={expected_max}: {detail}")]
    NotBijective { expected_max: usize, detail: String },

    #[error(
        "edge sums differ: edge {first:?} sums to {first_sum}, edge {second:?} sums to {second_sum}"
    )]
    NonConstantValence {
        first: (usize, usize),
        first_sum: usize,
        second: (usize, usize),
        second_sum: usize,
    },

    #[error("vertex label sums are not consecutive ({detail}); sums = {sums:?}")]
    NotConsecutiveSums { sums: Vec<usize>, detail: String },

    #[error("invalid certificate: {0}")]
    InvalidCertificate(String),

    #[error("graph is not of the form H ⊙ K̄n with H 2-regular: {0}")]
    NotACrownShape(String),

    #[error("search space of {estimated} candidates exceeds the guard of {limit}")]
    GuardExceeded { estimated: u128, limit: u128 },

    /// A construction that is expected to be total produced something invalid.
    #[error("construction failed: {0}")]
    Construction(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn invalid<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::InvalidInput(msg.into()))
}
