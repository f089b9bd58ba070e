//! Error type shared by every module of the crate.

use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("polynomial must be monic")]
    NotMonic,
    #[error("polynomial has zero constant term")]
    ZeroConstantTerm,
    #[error("factorizations multiply to different polynomials")]
    DifferentTargets,
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("bracket ({i}, {j}) must have distinct indices in increasing order")]
    InvalidBracket { i: usize, j: usize },
    #[error("bracket ({i}, {j}) -> {k} given twice")]
    DuplicateBracket { i: usize, j: usize, k: usize },
    #[error("Jacobi identity fails on basis triple ({i}, {j}, {k}); residual {residual}")]
    JacobiViolation {
        i: usize,
        j: usize,
        k: usize,
        residual: String,
    },
    #[error("algebra is not nilpotent")]
    NotNilpotent,
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("basis is not nice")]
    NotNice,
    #[error("input basis {which} is not nice")]
    InputBasisNotNice { which: char },
    #[error("pre-Einstein verification failed: {0}")]
    PreEinsteinVerification(String),
    #[error("filiform family L_n needs n >= 3, got {0}")]
    LnTooSmall(usize),
    #[error("size {size} outside supported range {min}..={max}")]
    SizeOutOfRange { size: usize, min: usize, max: usize },
    #[error("algebra dimension {dim} exceeds cap {cap}")]
    DimensionCapExceeded { dim: usize, cap: usize },
    #[error("no nice basis exists for this graph and class")]
    PredicateFalse,
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
