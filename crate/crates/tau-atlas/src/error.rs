use thiserror::Error;

#[derive(Debug, Error)]
pub enum AtlasError {
    #[error("invalid permutation {0}")]
    InvalidPermutation(String),
    #[error("letter {letter} out of range for degree {degree}")]
    LetterOutOfRange { letter: usize, degree: usize },
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("invalid size: n = {0}")]
    InvalidSize(usize),
    #[error("modulus {0} is not prime")]
    NotPrime(u32),
    #[error("algebra mismatch")]
    AlgebraMismatch,
    #[error("subspace is not a two-sided ideal")]
    NotAnIdeal,
    #[error("summand {0} is not left-mutable")]
    NotLeftMutable(usize),
    #[error("module not matched by catalog: {0}")]
    NotInCatalog(String),
    #[error("count mismatch: expected {expected}, found {found}")]
    CountMismatch { expected: usize, found: usize },
    #[error("inconsistent result: {0}")]
    Inconsistent(String),
    #[error("homological degree {0} out of range")]
    DegreeOutOfRange(usize),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, AtlasError>;
