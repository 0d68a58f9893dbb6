use thiserror::Error;

use crate::field::Level;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("ambient field size {size} exceeds the configured bound {bound}")]
    SizeBound { size: u128, bound: u64 },

    #[error("inversion of zero")]
    ZeroInverse,

    #[error("element {encoding} does not lie in level {level:?}")]
    NotInLevel { encoding: u32, level: Level },

    #[error("level {to:?} is not a subfield of level {from:?}")]
    LevelsNotNested { from: Level, to: Level },

    #[error("quadratic character needs a field of odd order, got {0}")]
    EvenOrder(u64),

    #[error("{0} must be nonzero")]
    ZeroArgument(&'static str),

    #[error("cyclotomic orders differ: {0} vs {1}")]
    CyclotomicMismatch(u32, u32),

    #[error("exponential sum did not reduce to a rational integer: {0}")]
    NonIntegerSum(String),

    #[error("empty defining set: c = 0 requires s > 1")]
    EmptyDefiningSet,

    #[error("parameters outside the closed-form statement: {0}")]
    OutsideTheorem(String),

    #[error("inconsistent weight distribution: {0}")]
    InconsistentDistribution(String),

    #[error("power moment identity violated: {0}")]
    MomentViolated(String),

    #[error("code is not projective")]
    NotProjective,

    #[error("connection set is not closed under negation")]
    NotSymmetric,

    #[error("degenerate graph: {0}")]
    DegenerateGraph(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// Errors caused by the caller's parameters rather than by a failed check.
    pub fn is_invalid_input(&self) -> bool {
        matches!(
            self,
            Error::NotPrime(_)
                | Error::InvalidParameter(_)
                | Error::SizeBound { .. }
                | Error::EmptyDefiningSet
                | Error::NotInLevel { .. }
                | Error::LevelsNotNested { .. }
                | Error::OutsideTheorem(_)
                | Error::NotProjective
                | Error::Io(_)
        )
    }
}
