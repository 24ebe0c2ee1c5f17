//! Euler products over primes for the three generating constants families:
//!
//!   H_omega(z)  = e^kappa  prod_q (1 + z/(q-1)) e^{-z/q}          (z > -1)
//!   H_Omega(z)  = e^{gamma z} prod_q (1 - 1/q)^z (1 - z/q)^{-1}   (z < 2)
//!   H*_Omega(z) = (1 - z/2) H_Omega(z)                            (z < 3)
//!
//! H*_Omega is evaluated through its own product: folding the (1 - z/2)
//! prefactor into the q = 2 factor leaves e^{gamma z} 2^{-z}
//! prod_{q >= 3} (1 - 1/q)^z (1 - z/q)^{-1}, which converges for z < 3 and
//! gives an independent computational route for the identity
//! H*_Omega(z) = (1 - z/2) H_Omega(z).
//!
//! Primes up to the requested cutoff (clamped to [311, 10^4]) enter the
//! product explicitly; the remaining log-tail sum_{q > Q} ln f_q(z) is
//! expanded in inverse prime powers and summed exactly via the prime zeta
//! function, so values carry working precision at any cutoff. The reported
//! `tail_bound` is the rigorous envelope of the moments dropped after the
//! truncation order.

use rug::Float;

use crate::constants::{EXPLICIT_CAP, EXPLICIT_FLOOR, TAIL_MOMENTS};
use crate::error::{KernelError, Result};
use crate::Kernel;

/// Which of the three products to evaluate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProductKind {
    /// H_omega: distinct prime factors.
    Omega,
    /// H_Omega: prime factors with multiplicity.
    BigOmega,
    /// H*_Omega: H_Omega with the pole at z = 2 removed.
    BigOmegaStar,
}

impl ProductKind {
    fn domain_check(self, z: f64) -> Result<()> {
        if !z.is_finite() {
            return Err(KernelError::Domain(format!("non-finite argument {z}")));
        }
        let ok = match self {
            ProductKind::Omega => z > -1.0,
            ProductKind::BigOmega => z < 2.0,
            ProductKind::BigOmegaStar => z < 3.0,
        };
        if ok {
            Ok(())
        } else {
            Err(KernelError::Domain(format!(
                "argument {z} outside the convergence half-plane of {self:?}"
            )))
        }
    }
}

/// Product request: kind, real argument, and the prime cutoff controlling
/// how much of the product is multiplied out explicitly.
#[derive(Debug, Clone, Copy)]
pub struct EulerProductRequest {
    pub kind: ProductKind,
    pub z: f64,
    pub prime_cutoff: u32,
}

impl EulerProductRequest {
    pub fn new(kind: ProductKind, z: f64, prime_cutoff: u32) -> Self {
        Self {
            kind,
            z,
            prime_cutoff,
        }
    }
}

/// Evaluated product with its rigorous neglected-tail envelope.
#[derive(Debug, Clone)]
pub struct EulerProductValue {
    pub value: Float,
    /// Bound on the absolute error of ln(value) from the dropped moments.
    pub tail_bound: f64,
    /// Natural log of `tail_bound`, usable when the bound underflows f64.
    pub ln_tail_bound: f64,
}

impl EulerProductValue {
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

impl Kernel {
    /// Evaluate one of the prime products at a real argument.
    pub fn euler_product(&self, req: EulerProductRequest) -> Result<EulerProductValue> {
        req.kind.domain_check(req.z)?;
        if req.prime_cutoff < 2 {
            return Err(KernelError::Domain(format!(
                "prime cutoff must be at least 2, got {}",
                req.prime_cutoff
            )));
        }
        let bits = self.working_bits();
        let z = Float::with_val(bits, req.z);
        let cutoff = req.prime_cutoff.clamp(EXPLICIT_FLOOR, EXPLICIT_CAP);

        // Explicit part of the log-product.
        let mut log_sum = Float::with_val(bits, 0);
        let q_lo = match req.kind {
            ProductKind::BigOmegaStar => 3,
            _ => 2,
        };
        for &q in self
            .tables()
            .primes
            .iter()
            .take_while(|&&q| q <= cutoff)
            .filter(|&&q| q >= q_lo)
        {
            log_sum += self.ln_factor(req.kind, &z, q);
        }

        // Analytic tail: sum_m c_m(z) * sum_{q > cutoff} q^{-m}. The moment
        // tables are anchored at the floor and the cap; intermediate cutoffs
        // subtract the explicit primes in (floor, cutoff].
        let m_top = self.tail_order();
        let coeffs = tail_coefficients(req.kind, &z, m_top, bits);
        let mut moments: Vec<Float> = if cutoff == EXPLICIT_CAP {
            (2..=m_top)
                .map(|m| self.tables().tail_moment_cap(m).clone())
                .collect()
        } else {
            let mut ms: Vec<Float> = (2..=m_top)
                .map(|m| self.tables().tail_moment_floor(m).clone())
                .collect();
            for &q in self
                .tables()
                .primes
                .iter()
                .filter(|&&q| q > EXPLICIT_FLOOR && q <= cutoff)
            {
                let inv = Float::with_val(bits, 1) / q;
                let mut pw = inv.clone().square();
                for slot in ms.iter_mut() {
                    *slot -= &pw;
                    pw *= &inv;
                }
            }
            ms
        };
        // The star product has no q = 2 factor, but 2 <= floor <= cutoff
        // keeps 2 out of every tail range, so no adjustment is needed.
        for (c, moment) in coeffs.iter().zip(moments.drain(..)) {
            log_sum += Float::with_val(bits, c * &moment);
        }

        // Prefactor.
        let prefactor = match req.kind {
            ProductKind::Omega => self.constants().mertens().clone(),
            ProductKind::BigOmega => Float::with_val(bits, self.constants().euler_gamma() * &z),
            ProductKind::BigOmegaStar => {
                let g = Float::with_val(bits, self.constants().euler_gamma() * &z);
                g - Float::with_val(bits, self.ln2() * &z)
            }
        };
        let value = Float::with_val(bits, &prefactor + &log_sum).exp();

        let ln_tail_bound = tail_remainder_ln(req.kind, req.z, cutoff, m_top);
        let tail_bound = ln_tail_bound.exp().max(f64::MIN_POSITIVE);
        Ok(EulerProductValue {
            value: Float::with_val(self.bits(), value),
            tail_bound,
            ln_tail_bound,
        })
    }

    /// Truncation order of the tail series for this kernel's precision.
    pub(crate) fn tail_order(&self) -> usize {
        // (311/3)^-m decay: m moments certify m*log2(311/3) ~ 6.69 m bits.
        let needed = ((self.working_bits() as f64 + 16.0) / 6.69).ceil() as usize;
        needed.clamp(8, TAIL_MOMENTS)
    }

    fn ln_factor(&self, kind: ProductKind, z: &Float, q: u32) -> Float {
        let bits = z.prec();
        match kind {
            ProductKind::Omega => {
                // ln(1 + z/(q-1)) - z/q
                let t = Float::with_val(bits, z / (q - 1));
                let l = t.ln_1p();
                l - Float::with_val(bits, z / q)
            }
            ProductKind::BigOmega | ProductKind::BigOmegaStar => {
                // z ln(1 - 1/q) - ln(1 - z/q)
                let a = Float::with_val(bits, -1f64) / q;
                let a = a.ln_1p() * z;
                let b = Float::with_val(bits, -(z.clone()) / q).ln_1p();
                a - b
            }
        }
    }
}

/// Coefficients c_m(z) of the inverse-power expansion of the log-factor,
/// for m = 2..=m_top.
fn tail_coefficients(kind: ProductKind, z: &Float, m_top: usize, bits: u32) -> Vec<Float> {
    match kind {
        ProductKind::BigOmega | ProductKind::BigOmegaStar => {
            // ln f_q(z) = sum_{m>=2} (z^m - z)/m q^{-m}
            let mut out = Vec::with_capacity(m_top - 1);
            let mut zp = z.clone() * z; // z^2
            for m in 2..=m_top {
                let c = Float::with_val(bits, &zp - z) / (m as u32);
                out.push(c);
                zp *= z;
            }
            out
        }
        ProductKind::Omega => {
            // ln f_q(z) = sum_{m>=2} c_m q^{-m} with
            // c_m = sum_{k=1}^m (-1)^{k+1} C(m-1, k-1) z^k / k.
            let mut zpows = Vec::with_capacity(m_top + 1);
            zpows.push(Float::with_val(bits, 1));
            for _ in 0..m_top {
                let last = zpows.last().unwrap().clone();
                zpows.push(last * z);
            }
            let mut out = Vec::with_capacity(m_top - 1);
            let mut row: Vec<u128> = vec![1]; // C(m-1, .) for m = 1
            for m in 2..=m_top {
                // advance Pascal row to C(m-1, .)
                let mut next = vec![1u128; m];
                for j in 1..m - 1 {
                    next[j] = row[j - 1] + row[j];
                }
                row = next;
                let mut c = Float::with_val(bits, 0);
                for k in 1..=m {
                    let mut term = Float::with_val(bits, &zpows[k] / (k as u32));
                    term *= Float::with_val(bits, row[k - 1]);
                    if k % 2 == 0 {
                        c -= term;
                    } else {
                        c += term;
                    }
                }
                out.push(c);
            }
            out
        }
    }
}

/// ln of the rigorous envelope of the moments dropped beyond `m_top`,
/// using |c_m| <= 2 max(1,|z|)^m / m (Omega kinds) or |z|(1+|z|)^{m-1}
/// (omega kind) and sum_{q>Q} q^{-m} <= Q^{1-m}/(m-1).
fn tail_remainder_ln(kind: ProductKind, z: f64, cutoff: u32, m_top: usize) -> f64 {
    let q = cutoff as f64;
    let m = (m_top + 1) as f64;
    let (ln_coeff, growth) = match kind {
        ProductKind::BigOmega | ProductKind::BigOmegaStar => {
            let a = z.abs().max(1.0);
            ((2f64).ln() + m * a.ln() - m.ln(), a)
        }
        ProductKind::Omega => {
            let a = 1.0 + z.abs();
            (z.abs().max(f64::MIN_POSITIVE).ln() + (m - 1.0) * a.ln(), a)
        }
    };
    // first dropped term times the geometric series of ratio growth/q
    ln_coeff + (1.0 - m) * q.ln() - (m - 1.0f64).ln() - (1.0 - growth / q).ln()
}
