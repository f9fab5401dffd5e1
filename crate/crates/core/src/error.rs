//! Shared error type for all modules.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("enumeration cap exceeded: size {size} > cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("division by zero series")]
    DivisionByZero,
    #[error("matrix has a -inf entry where a finite one is required")]
    InfiniteEntry,
    #[error("inconsistent input data: {0}")]
    InconsistentData(String),
    #[error("matrix is not Monge: {0}")]
    NotMonge(String),
    #[error("negative staircase coefficient at ({row}, {col})")]
    NegativeCoefficient { row: usize, col: usize },
    #[error("matrix is not totally nonnegative: {0}")]
    NotTn(String),
    #[error("matrix is not tropical totally positive")]
    NotTp,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("tropical permanent is -inf; no Jacobi factorization exists")]
    SingularPermanent,
    #[error("factor product does not reproduce the input matrix (internal error)")]
    FactorizationMismatch,
    #[error("index out of range: {0}")]
    Index(String),
    #[error("malformed Pluecker vector: {0}")]
    MalformedVector(String),
    #[error("parse error: {0}")]
    Parse(String),
}
