use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unsupported degree {0}: expected 4, 2^k (k >= 2) or 3*2^k (k >= 2)")]
    UnsupportedDegree(u32),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("degree {from} does not divide degree {to}")]
    NotDivisible { from: u32, to: u32 },

    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),

    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },

    #[error("matrix is not unitary")]
    NotUnitary,

    #[error("vector is not a unit vector")]
    NotUnitVector,

    #[error("element is not integral")]
    NotIntegral,

    #[error("dimension {0} is not a power of two")]
    NotPowerOfTwo(usize),

    #[error("determinant is not 1")]
    DeterminantNotOne,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
