//! Exact enumeration of middle-prime-factor statistics.
//!
//! A smallest-prime-factor table over 2..=N supports O(log n) factorization
//! of every integer in range; on top of it sit exact counters for the median
//! prime factor laws M_nu(x, p), the rough-number counts Phi_{nu,k}(x, y),
//! and the omega/Omega tail counts. These are the ground truth every
//! analytic prediction is compared against.

mod cache;
mod count;
mod factor;
mod sieve;

pub use cache::CacheError;
pub use count::{MedianCount, Spectrum};
pub use factor::Factorization;
pub use sieve::SpfSieve;

use thiserror::Error;

/// Counting convention, mirrored from the analytic kernel to keep this
/// crate free-standing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Nu {
    /// Distinct prime factors.
    Omega,
    /// Prime factors with multiplicity.
    BigOmega,
}

#[derive(Debug, Error)]
pub enum ExactError {
    #[error("value out of range: {0}")]
    Range(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error(transparent)]
    Cache(#[from] CacheError),
}

pub type Result<T> = std::result::Result<T, ExactError>;
