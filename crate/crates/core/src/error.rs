//! Crate-wide error type.

use thiserror::Error as ThisError;

/// Errors produced by field construction, group operations, parameter
/// selection, and the conversion layer.
#[derive(Debug, Clone, PartialEq, Eq, ThisError)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("field order {0} exceeds the supported budget of 2^20 elements")]
    TooLarge(u64),
    #[error("extension degree must be at least 1")]
    InvalidDegree,
    #[error("operands belong to different fields")]
    FieldMismatch,
    #[error("division by zero in GF({0})")]
    DivisionByZero(u64),
    #[error("encoding {n} is out of range for GF({q})")]
    OutOfRange { n: u64, q: u64 },
    #[error("matrix determinant is not 1")]
    DetNotOne,
    #[error("no valid parameter a over GF({0})")]
    NoValidA(u64),
    #[error("a={0} fails the selection conditions")]
    InvalidA(u64),
    #[error("b={0} collides with the a-sequence")]
    InvalidB(u64),
    #[error("parameter b is only defined in odd characteristic")]
    NotOddCharacteristic,
    #[error("2 is not invertible in characteristic 2")]
    EvenCharacteristic,
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    #[error("internal invariant violated: {0}")]
    InternalInvariantViolation(String),
    #[error("q={q} is not supported by the {suite} suite")]
    UnsupportedQ { q: u64, suite: String },
}
