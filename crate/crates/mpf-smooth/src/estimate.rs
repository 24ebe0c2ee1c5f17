//! The four asymptotic estimates of lambda_nu(k, y) and their relative
//! error scales.

use rug::Float;

use mpf_kernel::{
    error_scale_r, q_entropy, EulerProductRequest, Kernel, Nu, ProductKind,
};

use crate::{Result, SmoothError};

/// Estimate family.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LambdaVariant {
    /// Saddle form H*_Omega(2R) P_k(2 ln_2 y) / 2^k, uniform in k (Omega).
    Uniform,
    /// H_Omega(k/ln_2 y) (ln_2 y)^k / k! below the critical ridge (Omega).
    SmallK,
    /// h (ln y)^2 / 2^k above the ridge (Omega).
    BigK,
    /// h (ln y)^2 Phi(Delta_{k,y}) / 2^k across the ridge (Omega).
    MediumK,
    /// H_omega(k/ln_2 y) (ln_2 y)^k / k! (omega).
    OmegaLaw,
}

impl std::fmt::Display for LambdaVariant {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            LambdaVariant::Uniform => "unif",
            LambdaVariant::SmallK => "small_k",
            LambdaVariant::BigK => "big_k",
            LambdaVariant::MediumK => "medium_k",
            LambdaVariant::OmegaLaw => "omega_law",
        };
        write!(f, "{s}")
    }
}

/// Window and free parameters of the estimates.
#[derive(Debug, Clone, Copy)]
pub struct EstimateParams {
    /// Width constant A of the small-k window k <= 2 ln_2 y - A sqrt(ln_2 y).
    pub small_k_a: f64,
    /// eps of the big-k window k >= (2 + eps) ln_2 y; 0 < eps <= 1/2.
    pub big_k_eps: f64,
    /// Admissible ratio window [a, b] for k / ln_2 y in the omega law.
    pub omega_window: (f64, f64),
}

impl Default for EstimateParams {
    fn default() -> Self {
        Self {
            small_k_a: 1.0,
            big_k_eps: 0.5,
            omega_window: (0.05, 20.0),
        }
    }
}

/// An estimate value with the magnitude of its relative error term.
#[derive(Debug, Clone)]
pub struct LambdaEstimate {
    pub variant: LambdaVariant,
    pub value: Float,
    pub error_scale: f64,
}

impl LambdaEstimate {
    pub fn value_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

/// Main term of the requested estimate of lambda_nu(k, y).
///
/// `y` enters only through ln y and ln ln y and may exceed any sieve range.
/// Domain errors report window violations; each window matches the validity
/// region of the corresponding asymptotic statement.
pub fn lambda_estimate(
    nu: Nu,
    k: u64,
    y: f64,
    variant: LambdaVariant,
    kernel: &Kernel,
    params: &EstimateParams,
) -> Result<LambdaEstimate> {
    if !(y >= 3.0) {
        return Err(SmoothError::Domain(format!("estimates require y >= 3, got {y}")));
    }
    if k < 1 {
        return Err(SmoothError::Domain("estimates require k >= 1".into()));
    }
    match (nu, variant) {
        (Nu::BigOmega, LambdaVariant::OmegaLaw) => {
            return Err(SmoothError::Domain(
                "the omega law estimates lambda_omega, not lambda_Omega".into(),
            ))
        }
        (Nu::Omega, v) if v != LambdaVariant::OmegaLaw => {
            return Err(SmoothError::Domain(format!(
                "variant {v} estimates lambda_Omega; use the omega law for nu = omega"
            )))
        }
        _ => {}
    }
    let log2y = y.ln().ln();
    let bits = kernel.bits().max(192);
    let cutoff = kernel.default_prime_cutoff();

    let (value, error_scale) = match variant {
        LambdaVariant::Uniform => {
            let cap_y = 2.0 * log2y;
            let pk = kernel.partial_exp_sum(k, cap_y)?;
            let r = pk.ratio().expect("k >= 1").to_f64();
            let star = kernel
                .euler_product(EulerProductRequest::new(
                    ProductKind::BigOmegaStar,
                    2.0 * r,
                    cutoff,
                ))?
                .value;
            let v = Float::with_val(bits, star * pk.value()) >> k as u32;
            (v, error_scale_r(k, y)?)
        }
        LambdaVariant::SmallK => {
            let a = params.small_k_a;
            if !(a >= 1.0) {
                return Err(SmoothError::Domain(format!(
                    "small-k window constant must satisfy A >= 1, got {a}"
                )));
            }
            let k_max = 2.0 * log2y - a * log2y.sqrt();
            if k as f64 > k_max {
                return Err(SmoothError::Domain(format!(
                    "small-k window requires k <= 2 ln_2 y - A sqrt(ln_2 y) = {k_max}, got {k}"
                )));
            }
            let h = kernel
                .euler_product(EulerProductRequest::new(
                    ProductKind::BigOmega,
                    k as f64 / log2y,
                    cutoff,
                ))?
                .value;
            (
                poisson_term(&h, k, log2y, bits),
                k as f64 / (a * a * log2y),
            )
        }
        LambdaVariant::BigK => {
            let eps = params.big_k_eps;
            if !(eps > 0.0 && eps <= 0.5) {
                return Err(SmoothError::Domain(format!(
                    "big-k window requires 0 < eps <= 1/2, got {eps}"
                )));
            }
            let k_min = (2.0 + eps) * log2y;
            if (k as f64) < k_min {
                return Err(SmoothError::Domain(format!(
                    "big-k window requires k >= (2 + eps) ln_2 y = {k_min}, got {k}"
                )));
            }
            let v = ridge_term(kernel, y, k, bits, None);
            let scale = (k as f64).sqrt()
                / (eps * (2.0 * q_entropy(1.0 + eps / 2.0)? * log2y).exp() * log2y);
            (v, scale)
        }
        LambdaVariant::MediumK => {
            if k < 2 {
                return Err(SmoothError::Domain(
                    "the critical-window estimate requires k >= 2".into(),
                ));
            }
            let cap_y = 2.0 * log2y;
            let delta = (k as f64 - cap_y) / cap_y.sqrt();
            let v = ridge_term(kernel, y, k, bits, Some(delta));
            (v, (1.0 + delta.abs()) / log2y.sqrt())
        }
        LambdaVariant::OmegaLaw => {
            let (a, b) = params.omega_window;
            let ratio = k as f64 / log2y;
            if !(ratio >= a && ratio <= b) {
                return Err(SmoothError::Domain(format!(
                    "omega law requires {a} <= k/ln_2 y <= {b}, got {ratio}"
                )));
            }
            let h = kernel
                .euler_product(EulerProductRequest::new(ProductKind::Omega, ratio, cutoff))?
                .value;
            (poisson_term(&h, k, log2y, bits), 1.0 / log2y)
        }
    };
    Ok(LambdaEstimate {
        variant,
        value,
        error_scale,
    })
}

/// h (ln y)^2 / 2^k, with an optional Phi(Delta) window factor.
fn ridge_term(kernel: &Kernel, y: f64, k: u64, bits: u32, delta: Option<f64>) -> Float {
    let h = kernel.constants().h_const();
    let ln_y = Float::with_val(bits, y).ln();
    let mut v = Float::with_val(bits, h * ln_y.square()) >> k as u32;
    if let Some(d) = delta {
        v *= kernel.normal_cdf_big(d);
    }
    v
}

/// H (ln_2 y)^k / k!
fn poisson_term(h: &Float, k: u64, log2y: f64, bits: u32) -> Float {
    let ln_term = Float::with_val(bits, log2y).ln() * k as u32;
    let lg = Float::with_val(bits, k + 1).ln_gamma();
    let p = Float::with_val(bits, ln_term - lg).exp();
    Float::with_val(bits, h * p)
}
