use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// A size guard rejected the input; `guard` names the limit that fired.
    #[error("size guard `{guard}` violated: {value} exceeds limit {limit}")]
    SizeGuard {
        guard: &'static str,
        value: usize,
        limit: usize,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid set partition: {0}")]
    InvalidSetPartition(String),
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("slot {slot} out of range 1..={order}")]
    InvalidSlot { slot: usize, order: usize },
    #[error("invalid kernel witness: {0}")]
    InvalidWitness(String),
    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),
    #[error("invalid tensor: {0}")]
    InvalidTensor(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// An algebraic identity that must hold by construction did not.
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn guard(name: &'static str, value: usize, limit: usize) -> Result<()> {
    if value > limit {
        Err(Error::SizeGuard {
            guard: name,
            value,
            limit,
        })
    } else {
        Ok(())
    }
}
