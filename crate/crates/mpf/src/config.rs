use std::path::PathBuf;

use mpf_kernel::{Kernel, Nu, PrecisionContext};

use crate::error::CliError;
use crate::OutputFormat;

/// Resolved run configuration shared by every subcommand.
pub struct JobConfig {
    pub x: Option<f64>,
    pub nu: Nu,
    pub precision_bits: u32,
    pub prime_cutoff: u32,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub sieve_cache: Option<PathBuf>,
    pub svg: Option<PathBuf>,
}

impl JobConfig {
    pub fn kernel(&self) -> Result<Kernel, CliError> {
        let ctx = PrecisionContext::new(self.precision_bits, 1e-12)
            .map_err(|e| CliError::Config(e.to_string()))?;
        Ok(Kernel::new(ctx)?)
    }

    pub fn require_x(&self) -> Result<f64, CliError> {
        self.x
            .ok_or_else(|| CliError::Config("this command requires --x".into()))
    }

    /// x floored to the integer range bound used by the exact counters.
    pub fn require_x_int(&self) -> Result<u64, CliError> {
        let x = self.require_x()?;
        if !(x >= 2.0) {
            return Err(CliError::Config(format!("--x must be at least 2, got {x}")));
        }
        Ok(x.floor() as u64)
    }
}
