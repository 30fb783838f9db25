use thiserror::Error;

use crate::groebner::GbStats;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("variable {0} is not part of this ring")]
    UnknownVariable(String),

    #[error("index out of range: {0}")]
    BadIndex(String),

    #[error("invalid field specification `{0}`")]
    BadField(String),

    #[error("invalid monomial order `{0}`")]
    BadOrder(String),

    #[error("matrix is not square ({rows}x{cols})")]
    NonSquare { rows: usize, cols: usize },

    #[error("operation undefined for the zero polynomial: {0}")]
    ZeroPolynomial(&'static str),

    #[error("polynomials live in different rings")]
    RingMismatch,

    #[error("exponent overflow (16-bit exponents)")]
    ExponentOverflow,

    #[error("ideal is the whole ring")]
    ImproperIdeal,

    #[error("unknown family `{0}`")]
    UnknownFamily(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("saturation did not stabilise within {0} iterations")]
    IterationCap(usize),

    #[error("computation budget exhausted after {} pairs", .0.pairs_processed)]
    BudgetExceeded(GbStats),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}
