use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("gcd of two zero polynomials is undefined")]
    ZeroGcd,

    #[error("division by zero polynomial")]
    DivisionByZero,

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("matrix must be square, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix is singular (determinant 0)")]
    SingularMatrix,

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("record {index}: {message}")]
    Record { index: usize, message: String },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("io error: {0}")]
    Io(String),

    /// An internal invariant of the computation was broken. These indicate
    /// either a bad input slipping past validation or an implementation bug.
    #[error("invariant violated: {0}")]
    Invariant(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
