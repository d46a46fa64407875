use thiserror::Error;

use crate::scalars::Rational;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("discriminant mismatch: {0} vs {1}")]
    DiscriminantMismatch(Box<Rational>, Box<Rational>),
    #[error("pole at kappa = {0}")]
    PoleAtKappa(Rational),
    #[error("series is not a unit (vanishing constant term)")]
    NotAUnit,
    #[error("box ({0}, {1}) is not in the diagram")]
    BoxOutOfDiagram(usize, usize),
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degenerate partition exponent")]
    EmptyPartition,
    #[error("partition length {0} exceeds N = {1}")]
    LengthExceedsN(usize, usize),
    #[error("size guard exceeded: {0}")]
    SizeGuardExceeded(String),
    #[error("gamma function pole at {0}")]
    GammaPole(f64),
    #[error("p+ = {0} and p- = {1} are not coprime")]
    NotCoprime(i64, i64),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("constant term of the deformation does not match the model")]
    BadConstantTerm,
    #[error("first-order deformation coefficient vanishes")]
    ZeroFirstOrder,
    #[error("vectors are not proportional: {0}")]
    NotProportional(String),
    #[error("label outside the soliton sector: {0}")]
    OutOfSector(String),
    #[error("degree guard exceeded: {0}")]
    DegreeGuardExceeded(String),
    #[error("polynomial is not symmetric under beta -> alpha0 - beta")]
    NotSymmetric,
    #[error("factorization mismatch: {0}")]
    FactorizationMismatch(String),
    #[error("inconsistent relation table: {0}")]
    InconsistentTable(String),
    #[error("relation violated: {0}")]
    RelationViolated(String),
    #[error("triangularity violated: {0}")]
    TriangularityViolated(String),
    #[error("negative coefficient: {0}")]
    NegativeCoefficient(String),
    #[error("character mismatch: {0}")]
    CharacterMismatch(String),
    #[error("malformed input: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
