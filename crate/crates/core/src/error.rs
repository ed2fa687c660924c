use thiserror::Error;

/// Every failure the library can report.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("extension degree must be at least 1")]
    ZeroDegree,
    #[error("base field characteristic {base} differs from requested {requested}")]
    CharacteristicMismatch { base: u32, requested: u32 },
    #[error("field tower deeper than two extension layers")]
    TowerTooDeep,
    #[error("modulus is not monic of the declared degree")]
    BadModulus,
    #[error("modulus is reducible over its base field")]
    ReducibleModulus,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero")]
    DivisionByZero,
    #[error("division by the zero polynomial")]
    ZeroDivisor,
    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,
    #[error("source field is not a subfield of the target")]
    NotASubfield,
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("terms have different bi-degrees: ({0},{1}) vs ({2},{3})")]
    MixedBidegree(usize, usize, usize, usize),
    #[error("bad coefficient: {0}")]
    BadCoefficient(String),
    #[error("bi-degrees differ: ({0},{1}) vs ({2},{3})")]
    BidegreeMismatch(usize, usize, usize, usize),
    #[error("polynomial is not filling")]
    NotFilling,
    #[error("bi-degree ({a},{b}) below the minimum ({min},{min})")]
    BidegreeTooSmall { a: usize, b: usize, min: usize },
    #[error("wrong shape: {0}")]
    BadShape(String),
    #[error("setup conditions violated: {0}")]
    SetupViolation(String),
    #[error("q = {0} has no generic family; use the dedicated constructor")]
    UnsupportedQ(u64),
    #[error("bad parameters: {0}")]
    BadParameters(String),
    #[error("work estimate {needed} exceeds budget {budget}")]
    Infeasible { needed: u128, budget: u128 },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
