use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoeffError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at q = {0}")]
    Pole(String),
}

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error(transparent)]
    Coeff(#[from] CoeffError),
    #[error("degree violation: {0}")]
    Degree(String),
    #[error("wrong grade: expected {expected}, got {got}")]
    Grade { expected: u8, got: u8 },
    #[error("convention error: {0}")]
    Convention(String),
    #[error("singular Gram matrix for n = {n}")]
    SingularGram { n: i32 },
    #[error("block is not triangular: {0}")]
    NotTriangular(String),
    #[error("no primitive within filtration {0}; increase the filtration")]
    IncreaseFiltration(u32),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
