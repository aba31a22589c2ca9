use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("invalid monad data: {0}")]
    InvalidSpec(String),

    #[error("not a genuine SL(2) character: {0}")]
    NotACharacter(String),

    #[error("the zero vector does not define a point")]
    ZeroVector,

    #[error("vector is not in the kernel of the dual operator")]
    NotInKernel,

    #[error("reduction stuck at coefficient {index}: {reason}")]
    ReductionStuck { index: usize, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
