//! Exact values of lambda_nu(k, y) = sum over y-smooth n with nu(n) = k of
//! 1/n, by coefficient extraction from products over primes q <= y:
//!
//!   nu = omega:  prod (1 + z/(q-1))        (polynomial, degree pi(y))
//!   nu = Omega:  prod (1 - z/q)^{-1}       (power series)
//!
//! Factors are applied in increasing prime order with in-place updates that
//! never feed higher-degree terms into lower ones, so every coefficient of
//! index <= K is the exact infinite sum, not a truncation in n.
//!
//! The crate also evaluates the four asymptotic estimates of lambda (uniform
//! saddle form, small-k, big-k, critical-window) for cross-validation
//! against the exact tables.

mod estimate;
mod memo;
mod table;

pub use estimate::{lambda_estimate, EstimateParams, LambdaEstimate, LambdaVariant};
pub use memo::{read_memo, write_memo};
pub use table::{ArithmeticMode, CoefficientSeries, Coefficients};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum SmoothError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit exceeded: {0}")]
    Resource(String),
    #[error("kernel error: {0}")]
    Kernel(#[from] mpf_kernel::KernelError),
    #[error("memo io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("malformed memo file: {0}")]
    Memo(String),
}

pub type Result<T> = std::result::Result<T, SmoothError>;
