//! Error type shared across the crate.
//!
//! Domain failures (invalid parameters, division by zero, exhausted
//! enumeration budgets, non-converging iterations) are reported through
//! [`Error`]. Structural misuse — mixing elements of different fields or
//! vectors of different ambient dimensions — is a programming error and
//! panics via debug-friendly assertions instead.

use num_bigint::BigUint;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// All recoverable failures produced by this crate.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A modulus that is not a prime number was supplied.
    #[error("{0} is not prime")]
    NotPrime(u64),

    /// Multiplicative inverse of zero was requested.
    #[error("division by zero in F_{modulus}")]
    DivisionByZero {
        /// Field modulus in which the inversion was attempted.
        modulus: u64,
    },

    /// An enumeration would visit more objects than the configured budget.
    #[error("enumeration of {required} objects exceeds budget {budget}")]
    BudgetExceeded {
        /// Exact number of objects the enumeration would visit.
        required: BigUint,
        /// Configured budget.
        budget: u64,
    },

    /// A parameter violates a documented precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// A code specification violates its family's constraints.
    #[error("invalid code specification: {0}")]
    InvalidCode(String),

    /// An iterative numeric routine failed to reach its tolerance.
    #[error("iteration failed to converge (residual {residual:e})")]
    NonConvergence {
        /// Residual at the final iterate.
        residual: f64,
    },

    /// Malformed JSON or a JSON document inconsistent with its schema.
    #[error("deserialization failed: {0}")]
    Deserialize(String),
}

impl Error {
    /// Convenience constructor for [`Error::InvalidParameter`].
    pub fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidParameter(msg.into())
    }
}
