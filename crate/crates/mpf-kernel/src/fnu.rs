//! The normalized product functions f_nu and the local-law density rho_nu.

use rug::Float;

use crate::error::{KernelError, Result};
use crate::euler::{EulerProductRequest, ProductKind};
use crate::{Kernel, Nu};

impl Nu {
    /// Left endpoint of the validity interval of rho_nu.
    pub fn critical_point(self) -> f64 {
        match self {
            Nu::Omega => 0.0,
            Nu::BigOmega => 0.2,
        }
    }

    fn product_kind(self) -> ProductKind {
        match self {
            Nu::Omega => ProductKind::Omega,
            Nu::BigOmega => ProductKind::BigOmega,
        }
    }
}

impl Kernel {
    /// f_nu(z) = H_nu(z) e^{-gamma/z} / Gamma(1 + 1/z).
    ///
    /// f_Omega lives on 0 < z < 2 (simple pole at z = 2 inherited from
    /// H_Omega); f_omega on all of z > 0, as required by rho_omega(v) for
    /// v below 1/5, where the argument sqrt((1-v)/v) exceeds 2.
    pub fn f_nu(&self, nu: Nu, z: f64) -> Result<Float> {
        let ok = match nu {
            Nu::Omega => z > 0.0 && z.is_finite(),
            Nu::BigOmega => z > 0.0 && z < 2.0,
        };
        if !ok {
            return Err(KernelError::Domain(format!(
                "f_nu argument {z} outside the domain of f_{nu}"
            )));
        }
        let bits = self.working_bits();
        let h = self
            .euler_product(EulerProductRequest::new(
                nu.product_kind(),
                z,
                self.default_prime_cutoff(),
            ))?
            .value;
        let e = Float::with_val(bits, self.constants().euler_gamma() / -z).exp();
        let g = Float::with_val(bits, 1.0 + 1.0 / z).gamma();
        Ok(Float::with_val(self.bits(), h * e / g))
    }

    /// rho_nu(v) = (1 + w) f_nu(w) / (2 w sqrt(pi v w)) with
    /// w = sqrt((1-v)/v), defined for critical_point(nu) < v < 1.
    pub fn rho_nu(&self, nu: Nu, v: f64) -> Result<f64> {
        let a = nu.critical_point();
        if !(v > a && v < 1.0) {
            return Err(KernelError::Domain(format!(
                "rho_nu requires {a} < v < 1, got {v}"
            )));
        }
        let w = ((1.0 - v) / v).sqrt();
        let f = self.f_nu(nu, w)?;
        let bits = self.working_bits();
        let num = Float::with_val(bits, 1.0 + w) * f;
        let den = Float::with_val(bits, std::f64::consts::PI * v * w).sqrt() * (2.0 * w);
        Ok((num / den).to_f64())
    }
}
