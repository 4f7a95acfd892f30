use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{a} and {b} are not coprime")]
    NotCoprime { a: BigInt, b: BigInt },
    #[error("matrix is not unimodular (det = {det})")]
    NotUnimodular { det: BigInt },
    #[error("vector ({0}, {1}) is not primitive")]
    NotPrimitive(BigInt, BigInt),
    #[error("matrix is not of rank one")]
    NotRankOne,
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("{a} is not congruent to {sign} modulo {b}")]
    CriterionFails { a: BigInt, b: BigInt, sign: i8 },
    #[error("{z} divides neither {x} - 1 nor {x} + 1")]
    DivisibilityFails { x: BigInt, z: BigInt },
    #[error("witness verification failed: {0}")]
    VerificationFailed(String),
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("modulus {n} exceeds the limit {max} for this mode")]
    ModulusTooLarge { n: u32, max: u32 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
