//! Main terms of the local laws, evaluated in log-space and exponentiated
//! at kernel precision so that astronomically large x stay representable.

use rug::Float;

use mpf_kernel::{gamma_exponent, Kernel, Nu};

use crate::params::{Regime, RegimeLabel, RegimeParams};
use crate::{LawError, Result};

/// Which displayed formula produced a prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Formula {
    /// rho_omega(beta) x / (p (ln x)^{gamma_omega} sqrt(ln_2 x))
    SmallOmegaLaw,
    /// c x / (p (ln x)^{(1-3 beta)/2}), below the window
    BigOmegaSubcritical,
    /// c x Psi(delta sqrt(125/eps)/4) / (p (ln x)^{gamma_Omega}), in-window
    BigOmegaWindow,
    /// rho_Omega(beta) x / (p (ln x)^{gamma_Omega} sqrt(ln_2 x)), above
    BigOmegaSupercritical,
    /// out-of-zone alternate, sub-critical side
    AltSubcritical,
    /// out-of-zone alternate, super-critical side
    AltSupercritical,
    /// critical-zone alternate with the normal CDF and beta* exponent
    WindowCdf,
    /// critical-zone alternate with the Mills ratio and gamma_Omega exponent
    WindowMills,
    /// h_0(r) x (ln u)^{k-1} / ((k-1)! ln x)
    PhiLaw,
}

impl std::fmt::Display for Formula {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Formula::SmallOmegaLaw => "omega-law",
            Formula::BigOmegaSubcritical => "Omega-subcritical",
            Formula::BigOmegaWindow => "Omega-window",
            Formula::BigOmegaSupercritical => "Omega-supercritical",
            Formula::AltSubcritical => "alt-subcritical",
            Formula::AltSupercritical => "alt-supercritical",
            Formula::WindowCdf => "window-cdf",
            Formula::WindowMills => "window-mills",
            Formula::PhiLaw => "phi-law",
        };
        write!(f, "{s}")
    }
}

/// Alternate prediction families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AltVariant {
    /// Valid for |delta| >= sqrt(eps_x); sign of delta picks the branch.
    OutOfZone,
    /// Valid for |delta| <= eps_x^{1/3}: Phi(beta* sqrt(ln_2 p)) form.
    CriticalZone,
    /// Valid for |delta| <= eps_x^{1/3}: Psi form with gamma_Omega exponent.
    CriticalZoneGaussian,
}

/// A predicted count with its formula tag, regime, and error scale.
///
/// The log of the value is the primary representation: at scan scales like
/// x = e^{e^200} the count itself exceeds every floating-point range (the
/// `value` field saturates to +inf there), while logs of different
/// predictions at the same (x, p) still subtract exactly.
#[derive(Debug, Clone)]
pub struct Prediction {
    pub formula: Formula,
    pub regime: Regime,
    /// exp(ln_value); +inf once past the representable range.
    pub value: Float,
    /// Natural log of the value at working precision; always finite.
    pub ln_value: Float,
    /// Magnitude of the relative O-term of the branch.
    pub error_scale: f64,
    /// False only for the phi law at k = 1, where r = 0 sits outside the
    /// stated validity window.
    pub in_window: bool,
}

impl Prediction {
    pub fn value_f64(&self) -> f64 {
        self.value.to_f64()
    }

    pub fn value_ln(&self) -> f64 {
        self.ln_value.to_f64()
    }
}

fn build(
    kernel: &Kernel,
    formula: Formula,
    regime: Regime,
    ln: Float,
    error_scale: f64,
    in_window: bool,
) -> Prediction {
    let value = Float::with_val(kernel.bits(), ln.clone().exp());
    Prediction {
        formula,
        regime,
        value,
        ln_value: ln,
        error_scale,
        in_window,
    }
}

/// ln(main term) assembled in multiprecision. The precision scales with
/// the magnitude of ln x so that O(1) terms survive next to leading terms
/// as large as e^600; plain f64 sums would lose them entirely.
fn assemble(kernel: &Kernel, prefactor_ln: f64, params: &RegimeParams, exponent: f64, half_log2: bool) -> Float {
    let bits = assembly_bits(kernel, params.log_x);
    let mut ln = Float::with_val(bits, prefactor_ln);
    ln += Float::with_val(bits, params.log_x);
    ln -= Float::with_val(bits, params.log_p);
    ln -= Float::with_val(bits, exponent) * Float::with_val(bits, params.log2_x);
    if half_log2 {
        ln -= Float::with_val(bits, params.log2_x.ln()) >> 1;
    }
    ln
}

fn assembly_bits(kernel: &Kernel, log_x: f64) -> u32 {
    let magnitude = if log_x > 2.0 { log_x.log2().ceil() as u32 } else { 0 };
    kernel.bits().max(192) + magnitude + 32
}

/// Main term of the local law M_nu(x, p) under the regime the pair falls in.
pub fn predict_local_law(nu: Nu, params: &RegimeParams, kernel: &Kernel) -> Result<Prediction> {
    let regime = params.classify(nu);
    let scales = params.error_scales();
    match regime.label {
        RegimeLabel::OmegaSmallLaw => {
            let rho = kernel.rho_nu(Nu::Omega, params.beta)?;
            let g = gamma_exponent(Nu::Omega, params.beta)?;
            let ln = assemble(kernel, rho.ln(), params, g, true);
            Ok(build(kernel, Formula::SmallOmegaLaw, regime, ln, params.eps_x, true))
        }
        RegimeLabel::OmegaLawBelow => {
            let c = kernel.constants().c_const().to_f64();
            let g = gamma_exponent(Nu::BigOmega, params.beta)?;
            let ln = assemble(kernel, c.ln(), params, g, false);
            Ok(build(kernel, Formula::BigOmegaSubcritical, regime, ln, scales.r1, true))
        }
        RegimeLabel::CriticalWindow => {
            let c = kernel.constants().c_const().to_f64();
            let g = gamma_exponent(Nu::BigOmega, params.beta)?;
            let psi = kernel.psi_mills(params.delta * (125.0 / params.eps_x).sqrt() / 4.0);
            let ln = assemble(kernel, c.ln() + psi.ln(), params, g, false);
            Ok(build(kernel, Formula::BigOmegaWindow, regime, ln, scales.r2, true))
        }
        RegimeLabel::OmegaLawAbove => {
            let rho = kernel.rho_nu(Nu::BigOmega, params.beta)?;
            let g = gamma_exponent(Nu::BigOmega, params.beta)?;
            let ln = assemble(kernel, rho.ln(), params, g, true);
            Ok(build(kernel, Formula::BigOmegaSupercritical, regime, ln, scales.r3, true))
        }
    }
}

/// Main term of the alternate forms, gated by their own delta windows.
pub fn predict_alternate(
    nu: Nu,
    params: &RegimeParams,
    variant: AltVariant,
    kernel: &Kernel,
) -> Result<Prediction> {
    let regime = params.classify(nu);
    let scales = params.error_scales();
    let zone_scale = scales.r2;
    match variant {
        AltVariant::OutOfZone => {
            if params.delta.abs() < params.eps_x.sqrt() {
                return Err(LawError::Domain(format!(
                    "out-of-zone form requires |delta| >= sqrt(eps_x) = {}, got {}",
                    params.eps_x.sqrt(),
                    params.delta
                )));
            }
            match nu {
                Nu::Omega => {
                    let rho = kernel.rho_nu(Nu::Omega, params.beta)?;
                    let g = gamma_exponent(Nu::Omega, params.beta)?;
                    let ln = assemble(kernel, rho.ln(), params, g, true);
                    Ok(build(kernel, Formula::SmallOmegaLaw, regime, ln, params.eps_x, true))
                }
                Nu::BigOmega if params.delta < 0.0 => {
                    let c = kernel.constants().c_const().to_f64();
                    let g = 0.5 * (1.0 - 3.0 * params.beta);
                    let ln = assemble(kernel, c.ln(), params, g, false);
                    Ok(build(kernel, Formula::AltSubcritical, regime, ln, scales.r1, true))
                }
                Nu::BigOmega => {
                    let rho = kernel.rho_nu(Nu::BigOmega, params.beta)?;
                    let g = 1.0 - 2.0 * (params.beta * (1.0 - params.beta)).sqrt();
                    let ln = assemble(kernel, rho.ln(), params, g, true);
                    Ok(build(kernel, Formula::AltSupercritical, regime, ln, scales.r3, true))
                }
            }
        }
        AltVariant::CriticalZone | AltVariant::CriticalZoneGaussian => {
            if nu != Nu::BigOmega {
                return Err(LawError::Domain(
                    "critical-zone forms describe the Omega law only".into(),
                ));
            }
            if params.delta.abs() > params.eps_x.cbrt() {
                return Err(LawError::Domain(format!(
                    "critical-zone form requires |delta| <= eps_x^(1/3) = {}, got {}",
                    params.eps_x.cbrt(),
                    params.delta
                )));
            }
            let c = kernel.constants().c_const().to_f64();
            if variant == AltVariant::CriticalZone {
                // beta* = ln((1 - beta)/(4 beta))
                let beta_star = ((1.0 - params.beta) / (4.0 * params.beta)).ln();
                let phi = kernel.normal_cdf_big(beta_star * params.log2_p.sqrt());
                let exponent =
                    1.0 - params.beta * (4.0 + 2.0 * beta_star + beta_star * beta_star);
                let mut ln = assemble(kernel, c.ln(), params, exponent, false);
                ln += phi.ln();
                Ok(build(kernel, Formula::WindowCdf, regime, ln, zone_scale, true))
            } else {
                let g = gamma_exponent(Nu::BigOmega, params.beta)?;
                let psi =
                    kernel.psi_mills(125f64.sqrt() * params.delta / (4.0 * params.eps_x.sqrt()));
                let ln = assemble(kernel, c.ln() + psi.ln(), params, g, false);
                Ok(build(kernel, Formula::WindowMills, regime, ln, zone_scale, true))
            }
        }
    }
}

/// Main term of the rough-number law Phi_{nu,k}(x, y); independent of nu.
///
/// `window_a` is the caller's A >= 1 bounding the admissible saddle ratio
/// r = (k-1)/ln u to [1/A, A]; r = 0 (k = 1) evaluates fine but is flagged
/// as outside the window.
pub fn predict_phi(
    _nu: Nu,
    x: f64,
    y: f64,
    k: u32,
    window_a: f64,
    kernel: &Kernel,
) -> Result<Prediction> {
    if !(y >= 3.0) || y * y > x {
        return Err(LawError::Domain(format!(
            "requires 3 <= y <= sqrt(x), got y = {y}, x = {x}"
        )));
    }
    if k < 1 {
        return Err(LawError::Domain("requires k >= 1".into()));
    }
    if !(window_a >= 1.0) {
        return Err(LawError::Domain(format!(
            "window constant must satisfy A >= 1, got {window_a}"
        )));
    }
    let log_x = x.ln();
    let u = log_x / y.ln();
    let log_u = u.ln();
    let r = (k - 1) as f64 / log_u;
    let h0 = kernel.h_zero(r)?;
    let lg = Float::with_val(64, k).ln_gamma().to_f64();
    let bits = assembly_bits(kernel, log_x);
    let ln = Float::with_val(bits, h0.ln())
        + Float::with_val(bits, log_x)
        + Float::with_val(bits, (k - 1) as f64 * log_u.ln())
        - Float::with_val(bits, lg)
        - Float::with_val(bits, log_x.ln());
    let in_window = r >= 1.0 / window_a && r <= window_a;
    // regime bookkeeping is not meaningful here; use a placeholder built
    // from the pair (x, y) thresholds
    let params = RegimeParams::from_logs(log_x, y.ln().max(1.1))?;
    let regime = params.classify(Nu::BigOmega);
    Ok(Prediction {
        formula: Formula::PhiLaw,
        regime,
        value: Float::with_val(kernel.bits(), ln.clone().exp()),
        ln_value: ln,
        error_scale: 1.0 / log_u,
        in_window,
    })
}
