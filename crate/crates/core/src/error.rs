use thiserror::Error;

/// Errors raised by the engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unsupported root system {0}")]
    UnsupportedType(String),

    #[error("cannot parse `{0}` as a simple type")]
    ParseType(String),

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },

    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error("no sl2 triple has defining vector {0:?}")]
    NoSl2Triple(Vec<i64>),

    #[error("the given sl2 subalgebras do not commute")]
    NonCommuting,

    #[error("inconsistent weight multiset: {0}")]
    InconsistentMultiset(String),

    #[error("subalgebra is not reductive in the expected position: {0}")]
    NotReductive(String),

    #[error("could not identify the type of a subalgebra: {0}")]
    Unidentified(String),

    #[error("invalid partition {parts:?}: {reason}")]
    InvalidPartition { parts: Vec<u32>, reason: String },

    #[error("weight does not restrict to an integral weight")]
    NonIntegralWeight,

    #[error("representations over different algebras: {0} vs {1}")]
    MixedAlgebras(String, String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("engine disagrees with the cataloged case data: {0}")]
    Discrepancy(String),
}

pub type Result<T> = std::result::Result<T, Error>;
