use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// Operands carry different `(N, d)` or vector lengths.
    #[error("dimension mismatch: {0}")]
    Dimension(String),

    /// Arguments outside the domain where the construction is defined,
    /// e.g. `N < r - 1` or `d < r`.
    #[error("domain error: {0}")]
    Domain(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("normalization error: {0}")]
    Normalization(String),

    #[error("degeneracy: {0}")]
    Degeneracy(String),

    #[error("unsupported: {0}")]
    Unsupported(String),

    /// Dense diagonalization envelope exceeded.
    #[error("size limit exceeded: {0}")]
    Size(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invariant violated: {0}")]
    Invariant(String),
}

pub type Result<T> = std::result::Result<T, Error>;
