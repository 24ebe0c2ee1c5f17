//! Partial-exponential-sum estimates against exact values on the standard
//! (v, rho) grid plus the central uniform band.

use rug::Float;

use mpf_kernel::{Kernel, PnRegime};

use crate::config::JobConfig;
use crate::error::CliError;
use crate::table::{Cell, Table};

const CALIBRATED_C: f64 = 3.0;

pub fn run(config: &JobConfig) -> Result<(), CliError> {
    let kernel = config.kernel()?;
    let mut table = Table::new(vec![
        "regime",
        "n",
        "v",
        "rel_error",
        "error_scale",
        "ln_error_scale",
        "pass",
    ]);
    for &v in &[100.0f64, 400.0, 1600.0] {
        for &rho in &[0.3f64, 0.5, 2.0, 3.0] {
            let n = (rho * v).round() as u64;
            let regime = if rho < 1.0 { PnRegime::Small } else { PnRegime::Big };
            let (rel, ln_scale, pass) = check_regime(&kernel, regime, n, v)?;
            table.push(vec![
                Cell::Str(regime_name(regime).into()),
                Cell::U64(n),
                Cell::F64(v),
                Cell::F64(rel),
                Cell::F64(ln_scale.exp()),
                Cell::F64(ln_scale),
                Cell::Str(if pass { "pass" } else { "fail" }.into()),
            ]);
        }
        // uniform band |n - v| <= 2 sqrt(v); additive comparison on the
        // Phi scale
        for step in [-2.0f64, -1.0, 0.0, 1.0, 2.0] {
            let n = (v + step * v.sqrt()).round() as u64;
            let exact = kernel.partial_exp_sum(n, v)?;
            let scaled = Float::with_val(320, exact.value() / kernel.big(v).exp()).to_f64();
            let phi = kernel.normal_cdf((n as f64 - v) / v.sqrt());
            let rel = (scaled - phi).abs();
            let scale = 1.0 / v.sqrt();
            let pass = rel <= CALIBRATED_C * scale;
            table.push(vec![
                Cell::Str("uniform".into()),
                Cell::U64(n),
                Cell::F64(v),
                Cell::F64(rel),
                Cell::F64(scale),
                Cell::F64(scale.ln()),
                Cell::Str(if pass { "pass" } else { "fail" }.into()),
            ]);
        }
    }
    table.emit(config.out.as_deref(), config.format)
}

fn regime_name(regime: PnRegime) -> &'static str {
    match regime {
        PnRegime::Small => "small",
        PnRegime::Uniform => "uniform",
        PnRegime::Big => "big",
    }
}

/// Relative gap of the regime estimate to the exact sum, at precision
/// adapted to the size of the expected gap.
pub fn check_regime(
    kernel: &Kernel,
    regime: PnRegime,
    n: u64,
    v: f64,
) -> Result<(f64, f64, bool), CliError> {
    let ln_scale = kernel.ln_pn_error_scale(regime, n, v)?;
    let bits = (v * 3.0) as u32 + 256;
    let exact = kernel.partial_exp_sum_with_bits(n, v, bits)?;
    let est = kernel.pn_estimate(regime, n, v)?;
    let rel = (Float::with_val(bits, &est / exact.value()) - 1u32).abs();
    // the bound can undershoot f64 range (e^{-v Q(rho)} at large v), so it
    // is exponentiated at working precision
    let bound = Float::with_val(bits, ln_scale).exp() * CALIBRATED_C;
    let pass = rel <= bound;
    Ok((rel.to_f64(), ln_scale, pass))
}
