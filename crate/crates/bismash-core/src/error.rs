use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("degree must be positive")]
    ZeroDegree,

    #[error("degree {0} is too large for permutation storage")]
    DegreeTooLarge(usize),

    #[error("not a permutation of 1..{n}: {reason}")]
    NotABijection { n: usize, reason: String },

    #[error("permutation does not fix n = {0}")]
    DoesNotFixN(usize),

    #[error("cannot parse permutation {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("{t} does not divide {n}")]
    NotADivisor { n: usize, t: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("workload of {required} candidates exceeds the limit of {limit}")]
    WorkloadExceeded { required: u128, limit: u128 },
}

pub type Result<T> = std::result::Result<T, Error>;
