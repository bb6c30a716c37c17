use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("inexact division {0}")]
    NotDivisible(String),
    #[error("element is not grade-homogeneous")]
    NotHomogeneous,
    #[error("tensor arity mismatch: {0} vs {1}")]
    ArityMismatch(usize, usize),
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("matrix is not unipotent")]
    NotUnipotent,
    #[error("entry ({0}, {1}) violates the grading")]
    GradingViolation(usize, usize),
    #[error("leading coefficient {0} is not a unit")]
    NonUnitLeading(String),
    #[error("solution space has dimension {0}, expected 1")]
    SolutionSpace(usize),
    #[error("no square root of the constant term in the coefficient ring")]
    NoSquareRoot,
    #[error("constant term is not invertible")]
    NotInvertible,
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("completion did not converge below degree {0}")]
    Incomplete(usize),
    #[error("i/o failure: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;
