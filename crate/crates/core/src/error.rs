use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaurentError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("{divisor} does not divide {dividend} exactly")]
    NotDivisible { dividend: String, divisor: String },
    #[error("cannot parse Laurent polynomial from {0:?}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CfError {
    #[error("{r}/{s} is not in lowest terms")]
    NotCoprime { r: u64, s: u64 },
    #[error("{r}/{s} is below 1; expected r >= s >= 1")]
    BelowOne { r: u64, s: u64 },
    #[error("denominator must be positive")]
    ZeroDenominator,
    #[error("continued fraction coefficients must be positive, got {0:?}")]
    NonPositiveCoefficient(Vec<i64>),
    #[error("empty continued fraction")]
    Empty,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SnakeError {
    #[error("continued fraction {0:?} has a single coefficient; its denominator snake is empty")]
    NoDenominatorSnake(Vec<i64>),
    #[error(transparent)]
    Cf(#[from] CfError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Laurent(#[from] LaurentError),
    #[error(transparent)]
    Cf(#[from] CfError),
    #[error(transparent)]
    Snake(#[from] SnakeError),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
