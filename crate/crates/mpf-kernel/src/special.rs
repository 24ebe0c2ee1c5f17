//! Scalar special functions: the entropy function Q, the negative Lambert
//! branch and its companion w(t), the implicit entropy root kappa_eps, the
//! phase-transition exponent gamma_nu, the normal CDF and the Mills-type
//! ratio Psi.

use rug::Float;

use crate::error::{KernelError, Result};
use crate::{Kernel, Nu};

/// Q(v) = v ln v - v + 1. Nonnegative on (0, infty), zero only at v = 1.
pub fn q_entropy(v: f64) -> Result<f64> {
    if !(v > 0.0) {
        return Err(KernelError::Domain(format!("Q requires v > 0, got {v}")));
    }
    Ok(v * v.ln() - v + 1.0)
}

const INV_E: f64 = 0.36787944117144233;
const MAX_NEWTON_ITER: usize = 100;

/// Negative branch W_{-1} of the Lambert function on [-1/e, 0).
///
/// Halley iteration seeded by the branch-point series near -1/e and by the
/// logarithmic asymptotic near 0; the result satisfies w e^w = t with
/// |residual| below the configured tolerance.
pub fn lambert_w_m1(t: f64, tolerance: f64) -> Result<f64> {
    if !(t < 0.0) || t < -INV_E {
        return Err(KernelError::Domain(format!(
            "W_-1 requires -1/e <= t < 0, got {t}"
        )));
    }
    let p2 = 2.0 * (1.0 + std::f64::consts::E * t);
    if p2 <= 0.0 {
        // branch point (up to rounding of 1/e)
        return Ok(-1.0);
    }
    let p = -p2.sqrt();
    let mut w = if t < -0.28 {
        // series around the branch point
        -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0
    } else {
        let l1 = (-t).ln();
        let l2 = (-l1).ln();
        l1 - l2 + l2 / l1
    };
    if p2 < 1e-14 {
        return Ok(w);
    }
    for _ in 0..MAX_NEWTON_ITER {
        let e = w.exp();
        let f = w * e - t;
        let denom = e * (w + 1.0) - (w + 2.0) * f / (2.0 * w + 2.0);
        let step = f / denom;
        w -= step;
        if step.abs() <= 1e-16 * w.abs() {
            break;
        }
    }
    let residual = (w * w.exp() - t).abs();
    if residual > tolerance {
        return Err(KernelError::Convergence(format!(
            "W_-1({t}) residual {residual} above tolerance {tolerance}"
        )));
    }
    Ok(w)
}

/// w(t) = e^{1 + W_{-1}(t)}: the unique solution in (0,1) of
/// w (ln w - 1) = e t, for t in (-1/e, 0).
pub fn small_w(t: f64, tolerance: f64) -> Result<f64> {
    if !(t > -INV_E && t < 0.0) {
        return Err(KernelError::Domain(format!(
            "w(t) requires -1/e < t < 0, got {t}"
        )));
    }
    Ok((1.0 + lambert_w_m1(t, tolerance)?).exp())
}

/// The unique root in (0,1) of kappa (1 - ln kappa) = 2 sqrt(v(1-v)) - eps,
/// located by monotone bisection. The endpoint eps = 1/2 is admitted; the
/// equation stays solvable there.
pub fn kappa_eps(eps: f64, v: f64, tolerance: f64) -> Result<f64> {
    if !(eps > 0.0 && eps <= 0.5) {
        return Err(KernelError::Domain(format!(
            "kappa_eps requires 0 < eps <= 1/2, got {eps}"
        )));
    }
    if !(v >= eps && v <= 1.0 - eps) {
        return Err(KernelError::Domain(format!(
            "kappa_eps requires eps <= v <= 1 - eps, got v = {v}"
        )));
    }
    let c = 2.0 * (v * (1.0 - v)).sqrt() - eps;
    if !(c > 0.0) {
        return Err(KernelError::Domain(format!(
            "right-hand side 2 sqrt(v(1-v)) - eps = {c} is not positive"
        )));
    }
    // kappa (1 - ln kappa) is increasing on (0, 1), from 0 to 1 > c.
    let g = |k: f64| k * (1.0 - k.ln()) - c;
    let (mut lo, mut hi) = (f64::MIN_POSITIVE, 1.0);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if g(mid) < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
        if hi - lo <= f64::EPSILON * hi {
            break;
        }
    }
    let k = 0.5 * (lo + hi);
    let residual = g(k).abs();
    if residual > tolerance {
        return Err(KernelError::Convergence(format!(
            "kappa_eps({eps}, {v}) residual {residual} above tolerance {tolerance}"
        )));
    }
    Ok(k)
}

/// Phase-transition exponent gamma_nu(v) on (0, 1):
/// (1 - 3v)/2 below the critical point v = 1/5 (Omega only),
/// 1 - 2 sqrt(v(1-v)) above; C^1 across the junction.
pub fn gamma_exponent(nu: Nu, v: f64) -> Result<f64> {
    if !(v > 0.0 && v < 1.0) {
        return Err(KernelError::Domain(format!(
            "gamma_nu requires 0 < v < 1, got {v}"
        )));
    }
    let critical = match nu {
        Nu::Omega => 0.0,
        Nu::BigOmega => 0.2,
    };
    if v <= critical {
        Ok(0.5 * (1.0 - 3.0 * v))
    } else {
        Ok(1.0 - 2.0 * (v * (1.0 - v)).sqrt())
    }
}

impl Kernel {
    /// Standard normal CDF.
    pub fn normal_cdf(&self, v: f64) -> f64 {
        self.normal_cdf_big(v).to_f64()
    }

    /// Standard normal CDF at working precision (no underflow for any
    /// representable argument).
    pub fn normal_cdf_big(&self, v: f64) -> Float {
        let bits = self.working_bits();
        let t = Float::with_val(bits, -v) / Float::with_val(bits, 2f64).sqrt();
        t.erfc() / 2u32
    }

    /// Psi(v) = e^{max(v,0)^2/2} (1/sqrt(2 pi)) int_v^inf e^{-t^2/2} dt.
    ///
    /// Equals the Gaussian tail mass for v <= 0 and the scaled Mills ratio
    /// for v > 0; Psi(v) ~ 1/(sqrt(2 pi) v) as v -> infinity.
    pub fn psi_mills(&self, v: f64) -> f64 {
        let bits = self.working_bits();
        let tail = {
            let t = Float::with_val(bits, v) / Float::with_val(bits, 2f64).sqrt();
            t.erfc() / 2u32
        };
        if v <= 0.0 {
            tail.to_f64()
        } else {
            let s = Float::with_val(bits, v * v / 2.0).exp();
            Float::with_val(bits, s * tail).to_f64()
        }
    }

    /// h_0(z) = e^{-gamma z} / Gamma(z + 1) for real z >= 0.
    pub fn h_zero(&self, z: f64) -> Result<f64> {
        if !(z >= 0.0) {
            return Err(KernelError::Domain(format!(
                "h_0 requires z >= 0, got {z}"
            )));
        }
        let bits = self.working_bits();
        let num = Float::with_val(bits, self.constants().euler_gamma() * -z).exp();
        let den = Float::with_val(bits, z + 1.0).gamma();
        Ok((num / den).to_f64())
    }
}
