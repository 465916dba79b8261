use thiserror::Error;

use crate::network::ValidationReport;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("operation requires a non-empty matrix")]
    EmptyMatrix,
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("invalid subset: {0}")]
    InvalidSubset(String),
    #[error("subset sizes differ: |I| = {left}, |J| = {right}")]
    SubsetSizeMismatch { left: usize, right: usize },
    #[error("k = {k} out of range 0..={max}")]
    KOutOfRange { k: usize, max: usize },
    #[error("path matrix is singular")]
    SingularPathMatrix,
    #[error("invalid network: {0}")]
    InvalidNetwork(ValidationReport),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("capacity exceeded: {requested} candidates, limit {limit}")]
    CapacityExceeded { requested: u128, limit: u128 },
    #[error("invalid recurrence: {0}")]
    InvalidRecurrence(String),
    #[error("invalid polynomial: {0}")]
    InvalidPolynomial(String),
    #[error("invalid shape: {0}")]
    InvalidShape(String),
    #[error("invalid fan: {0}")]
    InvalidFan(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
