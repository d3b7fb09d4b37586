use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cartan matrix rejected: {0}")]
    InvalidCartan(String),

    #[error("weight {weight} has length {got}, expected rank {rank}")]
    RankMismatch {
        weight: String,
        got: usize,
        rank: usize,
    },

    #[error("weight {0} is not dominant")]
    NotDominant(String),

    #[error("modules live over different root systems")]
    AmbientMismatch,

    #[error("weight multiset is not Weyl invariant: {0}")]
    NotWeylInvariant(String),

    #[error("non-integral coefficient in {0}")]
    NonIntegral(String),

    #[error("Adams operation requires k >= 1")]
    AdamsOrder,

    #[error("degree {degree} outside truncation order {truncation}")]
    OutOfRange { degree: usize, truncation: usize },

    #[error("series has no unit constant term")]
    NonUnitConstant,

    #[error("geometric factor needs p >= 1")]
    ZeroPower,

    #[error("not a consistent superalgebra grading at level {level}: {module}")]
    InconsistentGrading { level: usize, module: String },

    #[error("generator at level 0 is not allowed")]
    LevelZeroGenerator,

    #[error("pairing inconsistent at level {level}: {found} vs conjugate {expected}")]
    PairingInconsistent {
        level: i64,
        found: String,
        expected: String,
    },

    #[error("no E(5,10) generators at level {0}")]
    NoSuchLevel(i64),

    #[error("element violates constraint: {0}")]
    ConstraintViolated(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
