//! Factorization and median prime factor via the SPF table.

use crate::{ExactError, Nu, Result, SpfSieve};

/// Prime factorization in increasing prime order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub n: u64,
    /// (prime, exponent) pairs, primes strictly increasing, exponents >= 1.
    pub parts: Vec<(u64, u32)>,
}

impl Factorization {
    /// Number of distinct prime factors.
    pub fn omega(&self) -> u32 {
        self.parts.len() as u32
    }

    /// Number of prime factors with multiplicity.
    pub fn big_omega(&self) -> u32 {
        self.parts.iter().map(|&(_, e)| e).sum()
    }

    pub fn nu(&self, nu: Nu) -> u32 {
        match nu {
            Nu::Omega => self.omega(),
            Nu::BigOmega => self.big_omega(),
        }
    }

    /// Smallest prime factor; None for n = 1.
    pub fn min_prime(&self) -> Option<u64> {
        self.parts.first().map(|&(p, _)| p)
    }

    /// Middle prime factor: the ceil(nu/2)-th entry of the increasing
    /// sequence of prime factors, counted per the convention `nu`.
    pub fn median_prime(&self, nu: Nu) -> Option<u64> {
        if self.parts.is_empty() {
            return None;
        }
        match nu {
            Nu::Omega => {
                let idx = (self.parts.len() + 1) / 2; // ceil(omega/2), 1-based
                Some(self.parts[idx - 1].0)
            }
            Nu::BigOmega => {
                let total: u64 = self.parts.iter().map(|&(_, e)| e as u64).sum();
                let target = total.div_ceil(2);
                let mut seen = 0u64;
                for &(p, e) in &self.parts {
                    seen += e as u64;
                    if seen >= target {
                        return Some(p);
                    }
                }
                unreachable!("target within total multiplicity")
            }
        }
    }
}

impl SpfSieve {
    /// Factor n using the table; n = 1 gives the empty product.
    pub fn factor(&self, n: u64) -> Result<Factorization> {
        if n == 1 {
            return Ok(Factorization { n, parts: Vec::new() });
        }
        if n < 1 || n > self.limit() {
            return Err(ExactError::Range(format!(
                "factor defined on 1..={}, got {n}",
                self.limit()
            )));
        }
        let mut parts = Vec::new();
        let mut m = n as usize;
        while m > 1 {
            let p = self.spf_unchecked(m) as u64;
            let mut e = 0u32;
            while m as u64 % p == 0 {
                m /= p as usize;
                e += 1;
            }
            parts.push((p, e));
        }
        Ok(Factorization { n, parts })
    }

    /// Middle prime factor of n >= 2.
    pub fn median_prime(&self, n: u64, nu: Nu) -> Result<u64> {
        if n < 2 {
            return Err(ExactError::Range(format!(
                "median prime undefined for n = {n}"
            )));
        }
        Ok(self
            .factor(n)?
            .median_prime(nu)
            .expect("n >= 2 has a prime factor"))
    }
}
