use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("p = {0} is not prime")]
    NonPrimeP(u32),
    #[error("the modulus does not define a primitive element")]
    NonPrimitiveModulus,
    #[error("basis elements are linearly dependent over F_p")]
    DependentBasis,
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("bad field element: {0}")]
    BadElement(String),
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("invalid code: {0}")]
    InvalidCode(String),
    #[error("a generator matrix is required")]
    MissingGenerator,
    #[error("brute-force search space of {0} candidate pairs exceeds the limit")]
    SearchSpaceTooLarge(u128),
    #[error("the characteristic-two shortcut needs a generalized code ideal over a field of characteristic 2")]
    WrongKindOrCharacteristic,
    #[error("{0}")]
    Overflow(String),
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("bad element token `{token}` at line {line}, column {column}")]
    BadElementToken { token: String, line: usize, column: usize },
    #[error("inconsistent dimensions: {0}")]
    InconsistentDimensions(String),
    #[error("cache entry {path} is corrupt: {reason}")]
    CacheCorrupt { path: String, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl Error {
    /// True for errors caused by malformed input documents.
    pub fn is_parse_error(&self) -> bool {
        matches!(self, Error::Parse { .. } | Error::BadElementToken { .. } | Error::InconsistentDimensions(_))
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
