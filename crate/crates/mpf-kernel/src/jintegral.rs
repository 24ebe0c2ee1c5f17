//! Closed form of the window integral
//! J_K(a, b) = int_{-K a^{2/3}}^{K a^{2/3}} Phi(t/sqrt(a)) e^{b t - t^2/(2a)} dt.

use crate::error::{KernelError, Result};
use crate::Kernel;

impl Kernel {
    /// Main term sqrt(2 pi a) e^{a b^2 / 2} Phi(b sqrt(a) / sqrt(2)),
    /// valid for |b| <= K a^{-1/3} / 2; the truncation error of the finite
    /// window is O(e^{-K^2 a^{1/3} / 8}) relative.
    pub fn j_integral(&self, k: f64, a: f64, b: f64) -> Result<f64> {
        if !(a > 0.0) || !(k > 0.0) {
            return Err(KernelError::Domain(format!(
                "J_K requires a > 0 and K > 0, got a = {a}, K = {k}"
            )));
        }
        let limit = 0.5 * k * a.powf(-1.0 / 3.0);
        if !(b.abs() <= limit) {
            return Err(KernelError::Domain(format!(
                "J_K requires |b| <= K a^(-1/3) / 2 = {limit}, got b = {b}"
            )));
        }
        let phi = self.normal_cdf(b * (a / 2.0).sqrt());
        Ok((2.0 * std::f64::consts::PI * a).sqrt() * (a * b * b / 2.0).exp() * phi)
    }
}
