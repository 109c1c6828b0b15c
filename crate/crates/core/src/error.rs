use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("MALFORMED: {0}")]
    Malformed(String),
    #[error("SIMPLICITY_VIOLATION: {0}")]
    SimplicityViolation(String),
    #[error("CONVEXITY_VIOLATION: {0}")]
    ConvexityViolation(String),
    #[error("NOT_A_TREE: {0}")]
    NotATree(String),
    #[error("CORRUPT_CODEWORD: {0}")]
    CorruptCodeword(String),
    #[error("STRUCTURE_VIOLATION: {0}")]
    StructureViolation(String),
    #[error("INCONSISTENT_ANNOTATION: {0}")]
    InconsistentAnnotation(String),
    #[error("TOO_LARGE: {0}")]
    TooLarge(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::Malformed(_) => "MALFORMED",
            Error::SimplicityViolation(_) => "SIMPLICITY_VIOLATION",
            Error::ConvexityViolation(_) => "CONVEXITY_VIOLATION",
            Error::NotATree(_) => "NOT_A_TREE",
            Error::CorruptCodeword(_) => "CORRUPT_CODEWORD",
            Error::StructureViolation(_) => "STRUCTURE_VIOLATION",
            Error::InconsistentAnnotation(_) => "INCONSISTENT_ANNOTATION",
            Error::TooLarge(_) => "TOO_LARGE",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
