//! High-precision constants: Euler-Mascheroni, Mertens, and the Euler-product
//! constants h = H*_Omega(2) and c = 3 h e^{-gamma/2} / sqrt(pi) governing the
//! sub-critical local law.
//!
//! Prime sums are accelerated through the prime zeta function
//! P(s) = sum_p p^{-s} = sum_{k>=1} mu(k)/k * ln zeta(ks), which turns the
//! slowly convergent tails sum_{q>Q} q^{-m} into a handful of zeta values.

use rug::{float::Constant, Float};

use crate::primes::{mobius_up_to, primes_up_to};

/// Largest prime kept in the explicit part of every Euler product. Tails
/// beyond this point are always summed analytically.
pub(crate) const EXPLICIT_CAP: u32 = 10_000;
/// Smallest explicit range for which the tail series is well conditioned.
pub(crate) const EXPLICIT_FLOOR: u32 = 311;
/// Number of inverse-power moments kept in the tail series.
pub(crate) const TAIL_MOMENTS: usize = 64;

/// Shared multiprecision scratch tables, built once per kernel.
pub(crate) struct PrimeTables {
    pub bits: u32,
    /// Primes up to `EXPLICIT_CAP`.
    pub primes: Vec<u32>,
    /// Prime zeta values P(m) for 2 <= m <= smax.
    pub prime_zeta: Vec<Float>,
    /// Tail moments sum_{q > EXPLICIT_CAP} q^{-m} for 2 <= m <= TAIL_MOMENTS.
    pub tail_moments_cap: Vec<Float>,
    /// Same moments anchored at EXPLICIT_FLOOR.
    pub tail_moments_floor: Vec<Float>,
    /// Index of the first entry of `prime_zeta`.
    pub m_min: usize,
    /// ln zeta cache truncation: the P(m) series is cut at arguments > smax,
    /// leaving a remainder below 2^(2-smax).
    pub smax: usize,
}

impl PrimeTables {
    pub fn build(bits: u32) -> Self {
        let smax = bits as usize + 24;
        let primes = primes_up_to(EXPLICIT_CAP);
        let mu = mobius_up_to((smax / 2 + 1) as u32);

        // ln zeta(s) for 2 <= s <= smax.
        let mut ln_zeta = Vec::with_capacity(smax - 1);
        for s in 2..=smax {
            let z = Float::with_val(bits, Float::zeta_u(s as u32));
            ln_zeta.push(z.ln());
        }
        let ln_zeta_at = |s: usize| -> &Float { &ln_zeta[s - 2] };

        // P(m) = sum_{k >= 1, mk <= smax} mu(k)/k ln zeta(mk).
        let mut prime_zeta = Vec::with_capacity(smax - 1);
        for m in 2..=smax {
            let mut acc = Float::with_val(bits, 0);
            let mut k = 1usize;
            while m * k <= smax {
                let muk = mu[k] as i32;
                if muk != 0 {
                    let term = Float::with_val(bits, ln_zeta_at(m * k) * muk) / k as u32;
                    acc += term;
                }
                k += 1;
            }
            prime_zeta.push(acc);
        }

        // Tail moments beyond the two explicit anchors.
        let partial_moments = |upto: u32| -> Vec<Float> {
            let mut partial: Vec<Float> = (2..=TAIL_MOMENTS)
                .map(|_| Float::with_val(bits, 0))
                .collect();
            for &q in primes.iter().take_while(|&&q| q <= upto) {
                let inv = Float::with_val(bits, 1) / q;
                let mut pw = inv.clone().square();
                for slot in partial.iter_mut() {
                    *slot += &pw;
                    pw *= &inv;
                }
            }
            (2..=TAIL_MOMENTS)
                .zip(partial)
                .map(|(m, p)| Float::with_val(bits, &prime_zeta[m - 2] - &p))
                .collect()
        };
        let tail_moments_cap = partial_moments(EXPLICIT_CAP);
        let tail_moments_floor = partial_moments(EXPLICIT_FLOOR);

        PrimeTables {
            bits,
            primes,
            prime_zeta,
            tail_moments_cap,
            tail_moments_floor,
            m_min: 2,
            smax,
        }
    }

    /// P(m); panics if m is outside the cached range.
    pub fn prime_zeta(&self, m: usize) -> &Float {
        &self.prime_zeta[m - self.m_min]
    }

    /// sum over primes q > EXPLICIT_CAP of q^{-m}, for 2 <= m <= TAIL_MOMENTS.
    pub fn tail_moment_cap(&self, m: usize) -> &Float {
        &self.tail_moments_cap[m - 2]
    }

    /// sum over primes q > EXPLICIT_FLOOR of q^{-m}.
    pub fn tail_moment_floor(&self, m: usize) -> &Float {
        &self.tail_moments_floor[m - 2]
    }
}

/// Certified high-precision values of gamma, the Mertens constant kappa,
/// h = H*_Omega(2) and c = 3 h e^{-gamma/2} / sqrt(pi).
pub struct ConstantsTable {
    euler_gamma: Float,
    mertens: Float,
    h_const: Float,
    c_const: Float,
    achieved_precision: u32,
}

impl ConstantsTable {
    pub(crate) fn new(
        euler_gamma: Float,
        mertens: Float,
        h_const: Float,
        c_const: Float,
        achieved_precision: u32,
    ) -> Self {
        Self {
            euler_gamma,
            mertens,
            h_const,
            c_const,
            achieved_precision,
        }
    }

    /// Euler-Mascheroni constant.
    pub fn euler_gamma(&self) -> &Float {
        &self.euler_gamma
    }

    /// Mertens constant kappa = gamma + sum_p (ln(1 - 1/p) + 1/p).
    pub fn mertens(&self) -> &Float {
        &self.mertens
    }

    /// h = H*_Omega(2) = (1/4) e^{2 gamma} prod_{q >= 3} (1 + 1/(q(q-2))).
    pub fn h_const(&self) -> &Float {
        &self.h_const
    }

    /// c = 3 h e^{-gamma/2} / sqrt(pi).
    pub fn c_const(&self) -> &Float {
        &self.c_const
    }

    /// Decimal digits certified for every entry of the table.
    pub fn achieved_precision(&self) -> u32 {
        self.achieved_precision
    }
}

/// Mertens constant from the prime-zeta expansion
/// kappa = gamma - sum_{m >= 2} P(m)/m, truncated at the table's smax with
/// remainder below 2^(2-smax).
pub(crate) fn mertens_constant(tables: &PrimeTables, gamma: &Float) -> Float {
    let bits = tables.bits;
    let mut acc = Float::with_val(bits, 0);
    // Summed upward; terms decay like 2^-m so ordering is uncritical at
    // these precisions.
    for m in 2..=tables.smax {
        acc += Float::with_val(bits, tables.prime_zeta(m) / (m as u32));
    }
    Float::with_val(bits, gamma - acc)
}

pub(crate) fn sqrt_pi(bits: u32) -> Float {
    Float::with_val(bits, Constant::Pi).sqrt()
}
