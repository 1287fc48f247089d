use thiserror::Error;

/// Errors raised by the arithmetic, geometry and verification routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus must be greater than 1, got {0}")]
    InvalidModulus(u64),

    #[error("operation requires a square-free modulus, but d = {d} has a repeated prime factor")]
    NotSquareFree { d: u64 },

    #[error("component index {index} out of range for {count} prime factors")]
    ComponentOutOfRange { index: usize, count: usize },

    #[error("{x} is not invertible modulo {d} (gcd = {gcd})")]
    NotInvertible { x: u64, d: u64, gcd: u64 },

    #[error("residue {value} is not reduced modulo {d}")]
    NotReduced { value: u64, d: u64 },

    #[error("d = {d} exceeds the supported bound {max} for {what}")]
    TooLarge { d: u64, max: u64, what: &'static str },

    #[error("vector {0:?} is not perpendicular to the base vector")]
    NotPerpendicular((u64, u64)),
}

pub type Result<T> = std::result::Result<T, Error>;
