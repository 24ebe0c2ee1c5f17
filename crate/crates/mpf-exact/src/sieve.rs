//! Smallest-prime-factor sieve with segmented parallel construction.

use rayon::prelude::*;

use crate::{ExactError, Result};

/// Default memory budget for the table: 4 GiB of u32 entries (N up to 1e9).
const DEFAULT_BUDGET_BYTES: u64 = 4 << 30;
/// Segment length for the parallel fill; fits comfortably in L2.
const SEGMENT: usize = 1 << 20;

/// Smallest-prime-factor table for 2..=limit.
///
/// `spf(n)` is the least prime dividing n; `spf(p) = p` for prime p.
/// Immutable after construction and safe to share across threads.
pub struct SpfSieve {
    limit: u64,
    spf: Vec<u32>,
}

impl SpfSieve {
    /// Build the table serially.
    pub fn build(limit: u64) -> Result<Self> {
        Self::check_limit(limit)?;
        let n = limit as usize;
        let mut spf = vec![0u32; n + 1];
        let mut p = 2usize;
        while p * p <= n {
            if spf[p] == 0 {
                let mut m = p * p;
                while m <= n {
                    if spf[m] == 0 {
                        spf[m] = p as u32;
                    }
                    m += p;
                }
            }
            p += 1;
        }
        for (i, e) in spf.iter_mut().enumerate().skip(2) {
            if *e == 0 {
                *e = i as u32;
            }
        }
        Ok(SpfSieve {
            limit,
            spf,
        })
    }

    /// Build the table with rayon over fixed segments. The per-cell result
    /// is identical to the serial path for any worker count.
    pub fn build_parallel(limit: u64) -> Result<Self> {
        Self::check_limit(limit)?;
        let n = limit as usize;
        if n < 4 * SEGMENT {
            return Self::build(limit);
        }
        let root = (n as f64).sqrt() as usize + 1;
        let small = Self::build(root as u64)?;
        let small_primes: Vec<usize> = (2..=root).filter(|&q| small.spf[q] == q as u32).collect();

        let mut spf = vec![0u32; n + 1];
        let base = &small_primes;
        spf.par_chunks_mut(SEGMENT).enumerate().for_each(|(ci, seg)| {
            let lo = ci * SEGMENT; // global index of seg[0]
            let hi = lo + seg.len() - 1;
            for &p in base.iter().take_while(|&&p| p * p <= hi) {
                let mut m = (lo + p - 1) / p * p;
                if m < p * p {
                    m = p * p;
                }
                while m <= hi {
                    let cell = &mut seg[m - lo];
                    if *cell == 0 {
                        *cell = p as u32;
                    }
                    m += p;
                }
            }
            for (i, cell) in seg.iter_mut().enumerate() {
                let v = lo + i;
                if *cell == 0 && v >= 2 {
                    *cell = v as u32;
                }
            }
        });
        Ok(SpfSieve {
            limit,
            spf,
        })
    }

    fn check_limit(limit: u64) -> Result<()> {
        if limit < 2 {
            return Err(ExactError::Range(format!(
                "sieve limit must be at least 2, got {limit}"
            )));
        }
        if limit >= u32::MAX as u64 {
            return Err(ExactError::Range(format!(
                "sieve limit {limit} does not fit 32-bit entries"
            )));
        }
        let bytes = (limit + 1) * 4;
        if bytes > DEFAULT_BUDGET_BYTES {
            return Err(ExactError::Resource(format!(
                "sieve of limit {limit} needs {bytes} bytes, budget is {DEFAULT_BUDGET_BYTES}"
            )));
        }
        Ok(())
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    /// Smallest prime factor of n, for 2 <= n <= limit.
    pub fn spf(&self, n: u64) -> Result<u64> {
        if n < 2 || n > self.limit {
            return Err(ExactError::Range(format!(
                "spf defined on 2..={}, got {n}",
                self.limit
            )));
        }
        Ok(self.spf[n as usize] as u64)
    }

    #[inline]
    pub(crate) fn spf_unchecked(&self, n: usize) -> u32 {
        self.spf[n]
    }

    pub(crate) fn raw(&self) -> &[u32] {
        &self.spf
    }

    pub(crate) fn from_raw(limit: u64, spf: Vec<u32>) -> Self {
        SpfSieve { limit, spf }
    }

    /// Primes in 2..=limit, ascending.
    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        (2..=self.limit as usize).filter_map(move |n| {
            if self.spf[n] == n as u32 {
                Some(n as u64)
            } else {
                None
            }
        })
    }

    pub fn is_prime(&self, n: u64) -> bool {
        n >= 2 && n <= self.limit && self.spf[n as usize] == n as u32
    }
}
