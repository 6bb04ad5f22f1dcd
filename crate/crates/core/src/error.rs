//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("ambient dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("operation requires a nonempty polyhedral set")]
    EmptySet,

    #[error("operation requires a nonempty basis")]
    EmptyBasis,

    #[error("negative tropical power of a non-monomial polynomial")]
    NegativePowerOfPolynomial,

    #[error("cannot invert the zero element of the fraction semifield")]
    InvertZero,

    #[error("denominator of a tropical rational function must not be -inf")]
    NegInfDenominator,

    #[error("basis generates the improper congruence")]
    ImproperBasis,

    #[error("congruence variety is empty; no such witness matrix exists")]
    EmptyVariety,

    #[error("matrix is not t-admissible: {0}")]
    NotTAdmissible(String),

    #[error("invalid row transform: {0}")]
    InvalidRowTransform(String),

    #[error("operation requires a variety of dimension at most one (got dimension {0})")]
    NotACurve(i64),

    #[error("cell list for variety construction contains an empty cell (index {0})")]
    EmptyCellInput(usize),

    #[error("evaluation of -inf is undefined here")]
    NegInfOperand,

    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },

    #[error("invalid document: {0}")]
    Document(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }

    /// Exit code contract for the CLI: 2 for malformed input, 1 for domain errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } | Error::Document(_) => 2,
            _ => 1,
        }
    }
}
