use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Frobenius coordinates: {0}")]
    InvalidFrobenius(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("simple root index {index} is not valid for case {case}")]
    InvalidRootIndex { case: &'static str, index: i64 },

    #[error("weight is not X-dominant: {0}")]
    NonDominantWeight(String),

    #[error("non-dominant: {mu1}+{nu1} > {level}")]
    NonDominant { mu1: usize, nu1: usize, level: i64 },

    #[error("rank {rank} is too small, need at least {needed}")]
    RankTooSmall { rank: usize, needed: usize },

    #[error("weight multiset is not the character of a representation: {0}")]
    NotARepresentation(String),

    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
}
