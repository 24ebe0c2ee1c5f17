//! Numeric consistency of the alternate forms at the edges of their
//! validity windows: the out-of-zone and critical-zone formulas must agree
//! up to their combined error scales where both apply.

use mpf_kernel::{Kernel, Nu};

use crate::params::RegimeParams;

use crate::predict::{predict_alternate, AltVariant};
use crate::primes::nearest_prime_by_log;
use crate::{LawError, Result};

/// Which shared boundary to probe.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StitchSide {
    /// delta = eps_x^{2/5}: upper edge of the critical window.
    Upper,
    /// delta = -sqrt(eps_x): lower edge; needs sqrt(eps_x) < 1/5.
    Lower,
}

/// Relative gap between the two alternate forms at a boundary prime.
#[derive(Debug, Clone)]
pub struct StitchReport {
    pub side: StitchSide,
    pub log_x: f64,
    pub log_p: f64,
    pub delta_p: f64,
    /// |out / in - 1| of the two main terms at the same (x, p).
    pub gap: f64,
    pub scale_out: f64,
    pub scale_in: f64,
    /// Decimal digit count of the boundary prime.
    pub prime_digits: u32,
}

/// Evaluate both alternate forms at the prime nearest to the indicated
/// boundary and report their relative gap.
pub fn stitch_gap(log_x: f64, side: StitchSide, kernel: &Kernel) -> Result<StitchReport> {
    let log2_x = log_x.ln();
    let eps = 1.0 / log2_x;
    let delta_target = match side {
        StitchSide::Upper => eps.powf(0.4),
        StitchSide::Lower => {
            let d = eps.sqrt();
            if d >= 0.2 {
                return Err(LawError::Domain(format!(
                    "lower boundary -sqrt(eps_x) = -{d} lies outside the delta range; \
                     needs ln_2 x > 25, got {log2_x}"
                )));
            }
            // nudged just past the window edge so the synthetic candidate
            // is not lost to rounding of the |delta| >= sqrt(eps) gate
            -d * (1.0 + 1e-9)
        }
    };
    let beta_target = 0.2 + delta_target;
    if beta_target >= 1.0 {
        return Err(LawError::Domain(format!(
            "boundary beta = {beta_target} >= 1 at ln_2 x = {log2_x}"
        )));
    }

    // candidate primes near e^{(ln x)^beta}; pick the admissible one whose
    // delta is closest to the target (prime granularity can push the
    // nearest prime out of one of the windows). Beyond ~e^600 the prime
    // search is replaced by the synthetic log-point itself: the nearest
    // prime differs from it by less than e^{-ln p} in the log, far below
    // every other error in sight.
    let target_ln_p = (beta_target * log2_x).exp();
    let candidates = if target_ln_p > 600.0 {
        vec![target_ln_p]
    } else {
        let (p0, ln_p0) = nearest_prime_by_log(target_ln_p);
        let up = crate::primes::next_prime_from(p0.clone() + 1i32);
        let mut c = vec![ln_p0, rug::Float::with_val(64, &up).ln().to_f64()];
        if let Some(down) = crate::primes::prev_prime_from(p0 - 1i32) {
            if down >= 3 {
                c.push(rug::Float::with_val(64, &down).ln().to_f64());
            }
        }
        c
    };
    let mut best: Option<(RegimeParams, f64)> = None;
    for ln_p in candidates {
        let params = RegimeParams::from_logs(log_x, ln_p)?;
        let admissible = params.delta.abs() >= eps.sqrt()
            && params.delta.abs() <= eps.cbrt()
            && params.delta.signum() == delta_target.signum();
        if !admissible {
            continue;
        }
        let dist = (params.delta - delta_target).abs();
        if best.as_ref().is_none_or(|&(_, d)| dist < d) {
            best = Some((params, dist));
        }
    }
    let Some((params, _)) = best else {
        return Err(LawError::Domain(format!(
            "no prime near the {side:?} boundary satisfies both windows at ln x = {log_x}"
        )));
    };

    let out = predict_alternate(Nu::BigOmega, &params, AltVariant::OutOfZone, kernel)?;
    let inner = predict_alternate(Nu::BigOmega, &params, AltVariant::CriticalZone, kernel)?;
    // logs share their dominant terms bit-for-bit, so this difference is
    // accurate even when both sides are astronomically large
    let gap = (rug::Float::with_val(out.ln_value.prec(), &out.ln_value - &inner.ln_value)
        .exp()
        .to_f64()
        - 1.0)
        .abs();
    Ok(StitchReport {
        side,
        log_x,
        log_p: params.log_p,
        delta_p: params.delta,
        gap,
        scale_out: out.error_scale,
        scale_in: inner.error_scale,
        prime_digits: (params.log_p / std::f64::consts::LN_10).ceil() as u32,
    })
}
