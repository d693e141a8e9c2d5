use thiserror::Error;

/// Errors raised by the library. Verification failures are not errors; they
/// are reported through [`crate::report::VerificationReport`].
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("partition {partition} has a part that is not a power of {p}")]
    NotPrimePower { partition: String, p: u64 },
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("valuation of zero is infinite")]
    ZeroValuation,
    #[error("matrix is singular")]
    Singular,
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("matrix has non-integral entries")]
    NonIntegral,
    #[error("{core} is not a valid {ell}-core block for degree {n}")]
    InvalidCore { core: String, ell: u64, n: usize },
    #[error("ell must be at least 2 here, got {0}")]
    EllTooSmall(u64),
    #[error("unknown basis tag {0:?}")]
    UnknownBasis(String),
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
