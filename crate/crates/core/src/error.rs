//! Error type shared by every module of the crate.

use num_bigint::BigInt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Binary series operation on operands truncated at different orders.
    #[error("truncation order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },

    /// The constant term is not a unit of Z, so no integer inverse exists.
    #[error("series with constant term {constant} has no inverse over the integers")]
    InvalidInversion { constant: BigInt },

    /// `shift_down` would discard a nonzero coefficient.
    #[error("cannot divide by q^{shift}: coefficient of q^{index} is nonzero")]
    NonZeroLowTerm { shift: usize, index: usize },

    /// An integer division that must be exact left a remainder.
    #[error("{what}: {numerator} is not divisible by {denominator}")]
    Divisibility {
        what: String,
        numerator: BigInt,
        denominator: BigInt,
    },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("parameters outside the domain of {id}: {reason}")]
    OutOfDomain { id: String, reason: String },

    /// Exponential enumeration refused because `n` exceeds the soft guard.
    #[error("n = {n} exceeds the enumeration guard of {limit} (override to force)")]
    GuardExceeded { n: usize, limit: usize },

    #[error("{0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
