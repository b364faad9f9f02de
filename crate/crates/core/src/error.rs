use thiserror::Error;

/// Errors produced anywhere in the library.
///
/// `Consistency` and `InexactDivision` signal that an algebraic identity
/// failed to hold on the computed values. They never arise from valid input
/// unless there is a bug, and the CLI maps them to exit code 1.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{op}: expected a square matrix, got {rows}x{cols}")]
    NotSquare {
        op: &'static str,
        rows: usize,
        cols: usize,
    },

    #[error("{op}: dimension mismatch ({detail})")]
    DimensionMismatch { op: &'static str, detail: String },

    #[error("matrix is singular (no pivot in column {column})")]
    Singular { column: usize },

    #[error("division is not exact, remainder {remainder}")]
    InexactDivision { remainder: String },

    #[error("interpolation residual at holdout point (u={u}, t={t}); degree bounds ({deg_u}, {deg_t}) are too small")]
    BoundViolation {
        u: i64,
        t: i64,
        deg_u: usize,
        deg_t: usize,
    },

    #[error("pair is not equitable: block ({cell_i}, {cell_j}) has row {vertex} summing to {found}, expected {expected}")]
    NotEquitable {
        cell_i: usize,
        cell_j: usize,
        vertex: usize,
        expected: String,
        found: String,
    },

    #[error("invalid input: {0}")]
    Validation(String),

    #[error("identity check failed: {0}")]
    Consistency(String),

    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
