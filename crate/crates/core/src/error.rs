use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("modulus {0} outside the supported range 2 < p < 2^31")]
    ModulusOutOfRange(u64),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("field mismatch: F_{0} vs F_{1}")]
    FieldMismatch(u32, u32),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("variable index {index} out of range for {count} variables")]
    VariableOutOfRange { index: usize, count: usize },

    #[error("overlapping variables: Y{0} occurs in both summands")]
    OverlappingVariables(usize),

    #[error("empty generator list")]
    EmptyGenerators,

    #[error("zero algebra: every generator is constant")]
    ZeroAlgebra,

    #[error("not Artinian within truncation bound {0}")]
    NotArtinian(usize),

    #[error("generator {0} has a unit or linear term; defining ideals must lie in the square of the maximal ideal")]
    NotInSquare(String),

    #[error("invalid multiplication table: {0}")]
    InvalidTable(String),

    #[error("element does not lie in the maximal ideal")]
    NotInMaximalIdeal,

    #[error("not Gorenstein: socle dimension {0}")]
    NotGorenstein(usize),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no x with m^2 = x m found ({reason})")]
    ReductionNotFound { reason: String, exhaustive: bool },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("resource budget exceeded: {0}")]
    Budget(String),

    #[error("series error: {0}")]
    Series(String),
}

pub type Result<T> = std::result::Result<T, Error>;
