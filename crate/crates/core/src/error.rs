use thiserror::Error;

/// Errors reported by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("invalid subgroup: {0}")]
    InvalidSubgroup(String),
    #[error("invalid context: {0}")]
    InvalidContext(String),
    #[error("invalid H-set: {0}")]
    InvalidHSet(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("group of order {order} exceeds the size bound {bound}")]
    ResourceLimit { order: u64, bound: u64 },
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
