use thiserror::Error;

use crate::reps::Weight;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("degree {degree} exceeds truncation degree {max_degree}")]
    Truncation { degree: u32, max_degree: u32 },

    #[error("polynomial is not symmetric: transposition (v{first} v{second}) changes it")]
    NotSymmetric { first: usize, second: usize },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("representation has the zero weight {0}: the torus has a fixed point on the unit sphere")]
    FixedPoint(Weight),

    #[error("invalid duality model: {0}")]
    InvalidModel(String),
}

pub type Result<T> = std::result::Result<T, Error>;
