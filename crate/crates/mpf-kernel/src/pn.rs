//! Partial sums of the exponential series P_n(v) = sum_{j<=n} v^j/j!,
//! their three asymptotic regimes, and the relative error scale R(k, y)
//! attached to the uniform lambda estimate.

use rug::Float;

use crate::error::{KernelError, Result};
use crate::special::q_entropy;
use crate::Kernel;

/// Exact partial exponential sum with its consecutive-sum ratio.
#[derive(Debug, Clone)]
pub struct PnValue {
    pub n: u64,
    pub v: f64,
    value: Float,
    ratio: Option<Float>,
}

impl PnValue {
    /// P_n(v) at working precision.
    pub fn value(&self) -> &Float {
        &self.value
    }

    pub fn value_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn ln_value_f64(&self) -> f64 {
        self.value.clone().ln().to_f64()
    }

    /// R_n(v) = P_{n-1}(v)/P_n(v), defined for n >= 1; always in (0, 1).
    pub fn ratio(&self) -> Option<&Float> {
        self.ratio.as_ref()
    }

    pub fn ratio_f64(&self) -> Option<f64> {
        self.ratio.as_ref().map(|r| r.to_f64())
    }
}

/// Which asymptotic estimate of P_n(v) to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PnRegime {
    /// rho = n/v < 1: P_n(v) ~ v^n / ((1 - rho) n!).
    Small,
    /// v >= 1: P_n(v) ~ e^v Phi((n - v)/sqrt(v)).
    Uniform,
    /// rho > 1: P_n(v) ~ e^v.
    Big,
}

const MAX_TERMS: u64 = 10_000_000;

impl Kernel {
    /// Exact P_n(v) at the kernel's working precision.
    pub fn partial_exp_sum(&self, n: u64, v: f64) -> Result<PnValue> {
        self.partial_exp_sum_with_bits(n, v, self.working_bits())
    }

    /// Exact P_n(v) at caller-chosen precision. Needed when the quantity of
    /// interest is a relative gap of size e^{-v Q(n/v)}, which can lie far
    /// below any fixed precision.
    pub fn partial_exp_sum_with_bits(&self, n: u64, v: f64, bits: u32) -> Result<PnValue> {
        if !(v > 0.0) {
            return Err(KernelError::Domain(format!(
                "partial exponential sum requires v > 0, got {v}"
            )));
        }
        if n > MAX_TERMS {
            return Err(KernelError::Resource(format!(
                "partial exponential sum with n = {n} terms exceeds the budget"
            )));
        }
        let vb = Float::with_val(bits, v);
        let mut term = Float::with_val(bits, 1);
        let mut sum = Float::with_val(bits, 1);
        let mut prev = None;
        for j in 1..=n {
            if j == n {
                prev = Some(sum.clone());
            }
            term *= &vb;
            term /= j as u32;
            sum += &term;
        }
        let ratio = prev.map(|p| Float::with_val(bits, &p / &sum));
        Ok(PnValue {
            n,
            v,
            value: sum,
            ratio,
        })
    }

    /// Main term of the regime estimate of P_n(v), without the O-term.
    pub fn pn_estimate(&self, regime: PnRegime, n: u64, v: f64) -> Result<Float> {
        self.pn_estimate_with_bits(regime, n, v, self.working_bits())
    }

    /// As `pn_estimate`, at caller-chosen precision. The big-regime gap
    /// e^{-v Q(rho)} can sit far below the default working precision, so
    /// comparisons must evaluate both sides at matched resolution.
    pub fn pn_estimate_with_bits(
        &self,
        regime: PnRegime,
        n: u64,
        v: f64,
        bits: u32,
    ) -> Result<Float> {
        if !(v > 0.0) {
            return Err(KernelError::Domain(format!("requires v > 0, got {v}")));
        }
        let rho = n as f64 / v;
        match regime {
            PnRegime::Small => {
                if !(rho < 1.0) {
                    return Err(KernelError::Domain(format!(
                        "small regime requires n/v < 1, got {rho}"
                    )));
                }
                // v^n / ((1 - rho) n!)
                let ln = Float::with_val(bits, v).ln() * n as u32;
                let lg = Float::with_val(bits, n + 1).ln_gamma();
                let e = Float::with_val(bits, ln - lg).exp();
                Ok(e / Float::with_val(bits, 1.0 - rho))
            }
            PnRegime::Uniform => {
                if !(v >= 1.0) {
                    return Err(KernelError::Domain(format!(
                        "uniform regime requires v >= 1, got {v}"
                    )));
                }
                let phi = self.normal_cdf_big((n as f64 - v) / v.sqrt());
                let ev = Float::with_val(bits, v).exp();
                Ok(ev * phi)
            }
            PnRegime::Big => {
                if !(rho > 1.0) {
                    return Err(KernelError::Domain(format!(
                        "big regime requires n/v > 1, got {rho}"
                    )));
                }
                Ok(Float::with_val(bits, v).exp())
            }
        }
    }

    /// Magnitude of the relative O-term of the regime estimate.
    pub fn pn_error_scale(&self, regime: PnRegime, n: u64, v: f64) -> Result<f64> {
        Ok(self.ln_pn_error_scale(regime, n, v)?.exp())
    }

    /// Natural log of the O-term magnitude; finite even when the scale
    /// itself underflows (big regime at large v).
    pub fn ln_pn_error_scale(&self, regime: PnRegime, n: u64, v: f64) -> Result<f64> {
        if !(v > 0.0) {
            return Err(KernelError::Domain(format!("requires v > 0, got {v}")));
        }
        let rho = n as f64 / v;
        match regime {
            PnRegime::Small => {
                if !(rho < 1.0) {
                    return Err(KernelError::Domain("small regime requires n/v < 1".into()));
                }
                Ok((rho / (v * (1.0 - rho) * (1.0 - rho))).ln())
            }
            PnRegime::Uniform => Ok(-0.5 * v.ln()),
            PnRegime::Big => {
                if !(rho > 1.0) {
                    return Err(KernelError::Domain("big regime requires n/v > 1".into()));
                }
                let q = q_entropy(rho)?;
                Ok(0.5 * rho.ln() - v * q - (rho - 1.0).ln() - 0.5 * v.ln())
            }
        }
    }
}

/// Relative error scale R(k, y) of the uniform lambda_Omega estimate:
/// 1 / (ln_2 y + (ln y)^{2 Q(mu)} sqrt(ln_2 y)) with mu = max(1, k/(2 ln_2 y)).
pub fn error_scale_r(k: u64, y: f64) -> Result<f64> {
    if k < 1 {
        return Err(KernelError::Domain("error scale requires k >= 1".into()));
    }
    if !(y >= 3.0) {
        return Err(KernelError::Domain(format!(
            "error scale requires y >= 3, got {y}"
        )));
    }
    let log2y = y.ln().ln();
    let cap_y = 2.0 * log2y;
    let mu = (k as f64 / cap_y).max(1.0);
    let q = q_entropy(mu)?;
    // (ln y)^{2 Q(mu)}; saturates to +inf for huge exponents, driving the
    // scale to zero, which is the correct limit.
    let power = (2.0 * q * y.ln().ln()).exp();
    Ok(1.0 / (log2y + power * log2y.sqrt()))
}
