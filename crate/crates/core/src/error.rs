use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("index {index} out of range {min}..={max}")]
    IndexOutOfRange { index: usize, min: usize, max: usize },

    #[error("parity mismatch: n = {n}, through = {through}")]
    Parity { n: usize, through: usize },

    #[error("boundary mismatch: upper has {upper_bottom} bottom points, lower has {lower_top} top points")]
    BoundaryMismatch { upper_bottom: usize, lower_top: usize },

    #[error("invalid diagram: {0}")]
    InvalidDiagram(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("generator count mismatch: {left} vs {right}")]
    GeneratorCount { left: usize, right: usize },

    #[error("subspace not invariant under generator {generator} (witness vector {witness})")]
    NotInvariant { generator: usize, witness: usize },

    #[error("quotient action not well defined under generator {generator} at spanning element {witness}")]
    NotWellDefined { generator: usize, witness: usize },

    #[error("relation failed: {0}")]
    Relation(String),

    #[error("not divisible: {0}")]
    NotDivisible(String),

    #[error("invalid argument: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
