//! Exact coefficient tables for lambda_nu(k, y).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rug::Float;

use mpf_kernel::Nu;

use crate::{Result, SmoothError};

/// Arithmetic backing of a coefficient table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithmeticMode {
    /// Exact rationals; feasible for small y (denominators grow with pi(y)).
    Rational,
    /// Multiprecision floats at the given mantissa width.
    Float(u32),
}

/// Coefficient storage.
pub enum Coefficients {
    Rational(Vec<BigRational>),
    Float {
        values: Vec<Float>,
        /// Forward rounding-error envelope, relative, accumulated over the
        /// in-place updates (2 operations per prime per coefficient).
        rel_error_bound: f64,
    },
}

/// Exact lambda_nu(k, y) for 0 <= k <= degree.
pub struct CoefficientSeries {
    pub nu: Nu,
    pub y: u64,
    pub degree: usize,
    pub mode: ArithmeticMode,
    pub coeffs: Coefficients,
}

const MAX_Y: u64 = 100_000_000;
const MAX_RATIONAL_Y: u64 = 10_000;

fn primes_to(y: u64) -> Vec<u64> {
    let n = y as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            out.push(p as u64);
            let mut m = p * p;
            while m <= n {
                composite[m] = true;
                m += p;
            }
        }
    }
    out
}

impl CoefficientSeries {
    /// Build the exact table by multiplying prime factors in increasing
    /// order. Degree-K truncation is exact for every coefficient <= K.
    pub fn build(nu: Nu, y: u64, degree: usize, mode: ArithmeticMode) -> Result<Self> {
        if y < 2 {
            return Err(SmoothError::Domain(format!(
                "smoothness bound must be at least 2, got {y}"
            )));
        }
        if y > MAX_Y {
            return Err(SmoothError::Resource(format!(
                "smoothness bound {y} beyond the {MAX_Y} budget"
            )));
        }
        if mode == ArithmeticMode::Rational && y > MAX_RATIONAL_Y {
            return Err(SmoothError::Resource(format!(
                "rational mode is limited to y <= {MAX_RATIONAL_Y}, got {y}"
            )));
        }
        let primes = primes_to(y);
        let coeffs = match mode {
            ArithmeticMode::Rational => {
                let mut c = vec![BigRational::zero(); degree + 1];
                c[0] = BigRational::one();
                for &q in &primes {
                    match nu {
                        Nu::Omega => {
                            let w = BigRational::new(BigInt::from(1), BigInt::from(q - 1));
                            for k in (1..=degree).rev() {
                                let add = &c[k - 1] * &w;
                                c[k] += add;
                            }
                        }
                        Nu::BigOmega => {
                            let w = BigRational::new(BigInt::from(1), BigInt::from(q));
                            for k in 1..=degree {
                                let add = &c[k - 1] * &w;
                                c[k] += add;
                            }
                        }
                    }
                }
                Coefficients::Rational(c)
            }
            ArithmeticMode::Float(bits) => {
                let mut c: Vec<Float> = (0..=degree).map(|_| Float::with_val(bits, 0)).collect();
                c[0] = Float::with_val(bits, 1);
                for &q in &primes {
                    match nu {
                        Nu::Omega => {
                            let w = Float::with_val(bits, 1) / (q - 1);
                            for k in (1..=degree).rev() {
                                let add = Float::with_val(bits, &c[k - 1] * &w);
                                c[k] += add;
                            }
                        }
                        Nu::BigOmega => {
                            let w = Float::with_val(bits, 1) / q;
                            for k in 1..=degree {
                                let add = Float::with_val(bits, &c[k - 1] * &w);
                                c[k] += add;
                            }
                        }
                    }
                }
                // two roundings per prime per coefficient, all terms positive
                let ops = 2.0 * primes.len() as f64;
                let rel = ops * (2f64).powi(-(bits as i32)) * 2.0;
                Coefficients::Float {
                    values: c,
                    rel_error_bound: rel,
                }
            }
        };
        Ok(CoefficientSeries {
            nu,
            y,
            degree,
            mode,
            coeffs,
        })
    }

    /// Default truncation degree: covers every k the estimate windows can
    /// request at practical scales.
    pub fn default_degree(y: u64) -> usize {
        let log2y = ((y as f64).ln()).ln().max(0.1);
        (4.0 * log2y).ceil() as usize + 32
    }

    pub fn coeff_f64(&self, k: usize) -> f64 {
        match &self.coeffs {
            Coefficients::Rational(c) => rational_to_f64(&c[k]),
            Coefficients::Float { values, .. } => values[k].to_f64(),
        }
    }

    pub fn coeff_float(&self, k: usize, bits: u32) -> Float {
        match &self.coeffs {
            Coefficients::Rational(c) => {
                let q = rug::Rational::parse(c[k].to_string())
                    .expect("BigRational prints as num/den");
                Float::with_val(bits, rug::Rational::from(q))
            }
            Coefficients::Float { values, .. } => Float::with_val(bits, &values[k]),
        }
    }

    pub fn rel_error_bound(&self) -> f64 {
        match &self.coeffs {
            Coefficients::Rational(_) => 0.0,
            Coefficients::Float {
                rel_error_bound, ..
            } => *rel_error_bound,
        }
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    // via rug::Rational to dodge BigInt -> f64 overflow on huge denominators
    let q = rug::Rational::parse(r.to_string()).expect("BigRational prints as num/den");
    Float::with_val(64, rug::Rational::from(q)).to_f64()
}
