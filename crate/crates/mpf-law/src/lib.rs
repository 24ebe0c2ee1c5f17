//! Regime classification and evaluation of the local-law predictions for
//! the middle prime factor: the omega law, the three Omega branches around
//! the phase transition at beta = 1/5, the alternate critical-zone forms,
//! the rough-number law for Phi_{nu,k}, and the boundary stitching checks.
//!
//! All quantities are driven by iterated logarithms, so parameters accept
//! either a plain (x, p) pair or raw (ln x, ln p) values; the latter keeps
//! scans at x = e^{e^k} well inside floating-point range.

mod params;
mod predict;
mod primes;
mod stitch;

pub use params::{ErrorScales, Regime, RegimeLabel, RegimeParams, BETA_CRITICAL};
pub use predict::{predict_alternate, predict_local_law, predict_phi, AltVariant, Formula, Prediction};
pub use primes::{is_prime_u64, nearest_prime_by_log};
pub use stitch::{stitch_gap, StitchReport, StitchSide};

use thiserror::Error;

#[derive(Debug, Error)]
pub enum LawError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("kernel error: {0}")]
    Kernel(#[from] mpf_kernel::KernelError),
}

pub type Result<T> = std::result::Result<T, LawError>;
