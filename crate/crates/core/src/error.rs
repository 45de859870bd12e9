use thiserror::Error;

/// Errors raised by the supertropical algebra routines.
///
/// Indices carried in error payloads are 1-based, matching the public API.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TropError {
    #[error("division by -inf")]
    DivisionByNegInf,

    #[error("expected a square matrix, got {rows}x{cols}")]
    NonSquare { rows: usize, cols: usize },

    #[error("shape mismatch: {left_rows}x{left_cols} vs {right_rows}x{right_cols}")]
    ShapeMismatch {
        left_rows: usize,
        left_cols: usize,
        right_rows: usize,
        right_cols: usize,
    },

    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },

    #[error("vector length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("empty input: {0}")]
    Empty(&'static str),

    #[error("{op} refuses size {size} (limit {limit})")]
    SizeGuard {
        op: &'static str,
        size: usize,
        limit: usize,
    },

    #[error("matrix is tropically singular")]
    Singular,

    #[error("matrix is tropically nonsingular")]
    Nonsingular,

    #[error("vectors are tropically independent")]
    NotDependent,

    #[error("matrix has ghost entries; a real matrix is required")]
    GhostEntry,

    #[error("invalid scalar {token:?}: {reason}")]
    ParseScalar { token: String, reason: &'static str },

    #[error("internal validation failure: {0}")]
    Validation(String),
}

pub type Result<T> = std::result::Result<T, TropError>;
