use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("zero denominator at position {position}")]
    ZeroDenominator { position: usize },

    #[error("element is not invertible: {0}")]
    NotInvertible(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("prime {0} is not valid (must be an odd prime congruent to 1 mod 4)")]
    InvalidPrime(u64),

    #[error("value {0} has a denominator divisible by the prime")]
    NotIntegralModP(String),

    #[error("degenerate presentation: relation rank {rank} < 6 ({detail})")]
    DegeneratePresentation { rank: usize, detail: String },

    #[error("precondition violated: {0}")]
    PreconditionViolated(String),

    #[error("no unique solution: {0}")]
    NoUniqueSolution(String),

    #[error("degree {requested} exceeds the cap {cap}; pass --force or raise QUADRALAB_DEGREE_CAP")]
    DegreeCapExceeded { requested: usize, cap: usize },

    #[error("singular matrix: {0}")]
    SingularMatrix(String),

    #[error("degenerate parameters: {0}")]
    DegenerateParameters(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
