use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("image array is not a bijection")]
    NotAPermutation,
    #[error("generators act on different numbers of points ({0} vs {1})")]
    DegreeMismatch(usize, usize),
    #[error("at least one generator is required")]
    NoGenerators,
    #[error("group order exceeds the enumeration bound {0}")]
    OrderBoundExceeded(usize),
    #[error("element index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("normal subgroup must be nontrivial")]
    TrivialNormalSubgroup,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modular splitting failed for every prime tried")]
    ModularSplitFailure,
    #[error("codegree of row {row} is not integral")]
    NonIntegral { row: usize },
    #[error("invalid action: {0}")]
    InvalidAction(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, GroupError>;
