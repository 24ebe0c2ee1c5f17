use crate::error::{KernelError, Result};

/// Default working mantissa precision in bits.
pub const DEFAULT_BITS: u32 = 128;
/// Precision at which the shared constants table is computed.
pub const CONSTANT_BITS: u32 = 256;
/// Default target residual for iterative root finders.
pub const DEFAULT_TOLERANCE: f64 = 1e-12;

/// Working precision and tolerance for the kernel.
///
/// `bits` is the mantissa precision used for multiprecision evaluation;
/// `tolerance` is the target residual of the defining equation for the
/// iterative solvers (Lambert branch, implicit entropy equations).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PrecisionContext {
    bits: u32,
    tolerance: f64,
}

impl PrecisionContext {
    pub fn new(bits: u32, tolerance: f64) -> Result<Self> {
        if bits < 64 {
            return Err(KernelError::Context(format!(
                "mantissa precision must be at least 64 bits, got {bits}"
            )));
        }
        if !(tolerance > 0.0) {
            return Err(KernelError::Context(format!(
                "tolerance must be positive, got {tolerance}"
            )));
        }
        Ok(Self { bits, tolerance })
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn tolerance(&self) -> f64 {
        self.tolerance
    }

    /// Internal evaluation precision: requested bits plus guard digits,
    /// and never below the precision of the constants table.
    pub(crate) fn working_bits(&self) -> u32 {
        self.bits.max(CONSTANT_BITS) + 64
    }
}

impl Default for PrecisionContext {
    fn default() -> Self {
        Self {
            bits: DEFAULT_BITS,
            tolerance: DEFAULT_TOLERANCE,
        }
    }
}
