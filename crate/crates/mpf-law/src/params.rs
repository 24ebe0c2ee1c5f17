//! Derived scale parameters of a pair (x, p) and the regime partition of
//! delta-space.

use crate::primes::is_prime_u64;
use crate::{LawError, Result};

/// Critical value of beta where the Omega law changes phase.
pub const BETA_CRITICAL: f64 = 0.2;

/// Iterated-log scale data attached to (x, p). All logarithms natural.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RegimeParams {
    pub log_x: f64,
    pub log_p: f64,
    /// ln ln x
    pub log2_x: f64,
    /// ln ln p
    pub log2_p: f64,
    /// ln ln ln x
    pub log3_x: f64,
    /// beta = ln_2 p / ln_2 x, in (0, 1]
    pub beta: f64,
    /// delta = beta - 1/5, in [-1/5, 4/5]
    pub delta: f64,
    /// eps_x = 1 / ln_2 x
    pub eps_x: f64,
    /// u_p = ln x / ln p = (ln x)^(1 - beta)
    pub u_p: f64,
}

impl RegimeParams {
    /// Parameters from an explicit pair; p must be prime and 3 <= p <= x,
    /// x >= 16 so that all three iterated logs are positive.
    pub fn from_xp(x: f64, p: u64) -> Result<Self> {
        if !(x >= 16.0) {
            return Err(LawError::Domain(format!("requires x >= 16, got {x}")));
        }
        if p < 3 || (p as f64) > x {
            return Err(LawError::Domain(format!(
                "requires 3 <= p <= x, got p = {p}, x = {x}"
            )));
        }
        if !is_prime_u64(p) {
            return Err(LawError::Domain(format!("{p} is not prime")));
        }
        Self::from_logs(x.ln(), (p as f64).ln())
    }

    /// Parameters from raw natural logs of x and p. The caller vouches that
    /// exp(log_p) is (close to) a prime; every formula depends on p only
    /// through its logarithm.
    pub fn from_logs(log_x: f64, log_p: f64) -> Result<Self> {
        if !(log_x >= 16f64.ln()) {
            return Err(LawError::Domain(format!(
                "requires ln x >= ln 16, got {log_x}"
            )));
        }
        if !(log_p >= 1.0986122886681098) {
            return Err(LawError::Domain(format!(
                "requires ln p >= ln 3, got {log_p}"
            )));
        }
        if log_p > log_x {
            return Err(LawError::Domain(format!(
                "requires p <= x, got ln p = {log_p} > ln x = {log_x}"
            )));
        }
        let log2_x = log_x.ln();
        let log2_p = log_p.ln();
        let beta = log2_p / log2_x;
        Ok(RegimeParams {
            log_x,
            log_p,
            log2_x,
            log2_p,
            log3_x: log2_x.ln(),
            beta,
            delta: beta - BETA_CRITICAL,
            eps_x: 1.0 / log2_x,
            u_p: ((1.0 - beta) * log2_x).exp(),
        })
    }

    /// Membership in the admissible domain: eps <= beta <= 1 - eps (closed).
    pub fn in_domain(&self, eps: f64) -> Result<bool> {
        if !(eps > 0.0 && eps < 0.5) {
            return Err(LawError::Domain(format!(
                "domain parameter must lie in (0, 1/2), got {eps}"
            )));
        }
        Ok(self.beta >= eps && self.beta <= 1.0 - eps)
    }

    /// The three relative error scales of the Omega branches. The first and
    /// third diverge at delta = 0 and are reported as +inf there; they gate
    /// branches that exclude delta = 0.
    pub fn error_scales(&self) -> ErrorScales {
        let d = self.delta;
        let r2 = self.eps_x.sqrt() + d.abs().powi(3) / self.eps_x;
        let (r1, r3) = if d == 0.0 {
            (f64::INFINITY, f64::INFINITY)
        } else {
            let r1 = self.eps_x
                + self.eps_x.sqrt() / (d.abs() * (d * d / 4.0 * self.log2_p).exp());
            (r1, self.eps_x / (d * d))
        };
        ErrorScales { r1, r2, r3 }
    }

    /// Regime thresholds and label for the Omega branches; the single omega
    /// law for nu = omega.
    pub fn classify(&self, nu: mpf_kernel::Nu) -> Regime {
        let lower = -(10.0 * self.eps_x * self.log3_x).sqrt();
        let upper = self.eps_x.powf(0.4);
        let label = match nu {
            mpf_kernel::Nu::Omega => RegimeLabel::OmegaSmallLaw,
            mpf_kernel::Nu::BigOmega => {
                if self.delta < lower {
                    RegimeLabel::OmegaLawBelow
                } else if self.delta > upper {
                    RegimeLabel::OmegaLawAbove
                } else {
                    // boundary equalities land here: the window formula has
                    // the widest validity and agrees at both edges
                    RegimeLabel::CriticalWindow
                }
            }
        };
        Regime {
            label,
            lower_threshold: lower,
            upper_threshold: upper,
        }
    }
}

/// Relative error scales of the three Omega branches.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ErrorScales {
    pub r1: f64,
    pub r2: f64,
    pub r3: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RegimeLabel {
    /// delta below the window: sub-critical Omega branch.
    OmegaLawBelow,
    /// the Gaussian transition window around delta = 0.
    CriticalWindow,
    /// delta above the window: super-critical Omega branch.
    OmegaLawAbove,
    /// the single branch of the omega law.
    OmegaSmallLaw,
}

impl std::fmt::Display for RegimeLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            RegimeLabel::OmegaLawBelow => "below",
            RegimeLabel::CriticalWindow => "window",
            RegimeLabel::OmegaLawAbove => "above",
            RegimeLabel::OmegaSmallLaw => "omega",
        };
        write!(f, "{s}")
    }
}

/// Label plus the delta-thresholds it was decided against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Regime {
    pub label: RegimeLabel,
    pub lower_threshold: f64,
    pub upper_threshold: f64,
}
