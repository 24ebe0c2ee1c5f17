//! Exact counters over [2, x]: median-prime local laws with parity split,
//! rough-number counts, and factor-count tails.

use std::collections::BTreeMap;

use rayon::prelude::*;

use crate::{ExactError, Nu, Result, SpfSieve};

/// Exact local-law count M_nu(x, p) with its parity split.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MedianCount {
    pub x: u64,
    pub p: u64,
    pub nu: Nu,
    /// Number of n <= x whose middle prime factor is p.
    pub total: u64,
    /// Contribution of n with nu(n) odd.
    pub odd_part: u64,
    /// Contribution of n with nu(n) even.
    pub even_part: u64,
}

/// Median counts for every prime at once, keyed by p.
pub type Spectrum = BTreeMap<u64, MedianCount>;

const PAR_THRESHOLD: u64 = 1 << 17;

impl SpfSieve {
    /// Exact M_nu(x, p): the number of 2 <= n <= x with median prime p.
    pub fn count_median(&self, x: u64, p: u64, nu: Nu) -> Result<MedianCount> {
        if x > self.limit() {
            return Err(ExactError::Range(format!(
                "x = {x} beyond sieve limit {}",
                self.limit()
            )));
        }
        if !self.is_prime(p) {
            return Err(ExactError::NotPrime(p));
        }
        if p > x {
            return Ok(MedianCount {
                x,
                p,
                nu,
                total: 0,
                odd_part: 0,
                even_part: 0,
            });
        }
        let (mut total, mut odd, mut even) = (0u64, 0u64, 0u64);
        for n in 2..=x {
            let f = self.factor(n)?;
            if f.median_prime(nu) == Some(p) {
                total += 1;
                if f.nu(nu) % 2 == 1 {
                    odd += 1;
                } else {
                    even += 1;
                }
            }
        }
        Ok(MedianCount {
            x,
            p,
            nu,
            total,
            odd_part: odd,
            even_part: even,
        })
    }

    /// Median counts for all p in one pass over [2, x], parallelized over
    /// disjoint ranges; merged by addition, so the result is independent of
    /// the worker count.
    pub fn median_spectrum(&self, x: u64, nu: Nu) -> Result<Spectrum> {
        if x > self.limit() {
            return Err(ExactError::Range(format!(
                "x = {x} beyond sieve limit {}",
                self.limit()
            )));
        }
        if x < 2 {
            return Ok(Spectrum::new());
        }
        let scan = |lo: u64, hi: u64| -> BTreeMap<u64, (u64, u64)> {
            let mut hist: BTreeMap<u64, (u64, u64)> = BTreeMap::new();
            for n in lo..=hi {
                let mut m = n as usize;
                // inline factor walk: median position over nu counts
                let (mut omega, mut big) = (0u32, 0u32);
                let mut primes_buf = [0u64; 16];
                let mut expo_buf = [0u32; 16];
                while m > 1 {
                    let p = self.spf_unchecked(m) as u64;
                    let mut e = 0u32;
                    while m as u64 % p == 0 {
                        m /= p as usize;
                        e += 1;
                    }
                    primes_buf[omega as usize] = p;
                    expo_buf[omega as usize] = e;
                    omega += 1;
                    big += e;
                }
                let (count, median) = match nu {
                    Nu::Omega => {
                        let idx = (omega + 1) / 2;
                        (omega, primes_buf[idx as usize - 1])
                    }
                    Nu::BigOmega => {
                        let target = big.div_ceil(2);
                        let mut seen = 0u32;
                        let mut med = 0u64;
                        for i in 0..omega as usize {
                            seen += expo_buf[i];
                            if seen >= target {
                                med = primes_buf[i];
                                break;
                            }
                        }
                        (big, med)
                    }
                };
                let slot = hist.entry(median).or_insert((0, 0));
                if count % 2 == 1 {
                    slot.0 += 1;
                } else {
                    slot.1 += 1;
                }
            }
            hist
        };

        let merged: BTreeMap<u64, (u64, u64)> = if x <= PAR_THRESHOLD {
            scan(2, x)
        } else {
            let chunks: Vec<(u64, u64)> = (2..=x)
                .step_by(PAR_THRESHOLD as usize)
                .map(|lo| (lo, (lo + PAR_THRESHOLD - 1).min(x)))
                .collect();
            chunks
                .into_par_iter()
                .map(|(lo, hi)| scan(lo, hi))
                .reduce(BTreeMap::new, |mut a, b| {
                    for (p, (o, e)) in b {
                        let slot = a.entry(p).or_insert((0, 0));
                        slot.0 += o;
                        slot.1 += e;
                    }
                    a
                })
        };

        Ok(merged
            .into_iter()
            .map(|(p, (odd, even))| {
                (
                    p,
                    MedianCount {
                        x,
                        p,
                        nu,
                        total: odd + even,
                        odd_part: odd,
                        even_part: even,
                    },
                )
            })
            .collect())
    }

    /// Exact Phi_{nu,k}(x, y): n <= x free of prime factors <= y with
    /// nu(n) = k. The empty product n = 1 has no prime factors at all and
    /// is counted exactly when k = 0.
    pub fn count_phi(&self, x: u64, y: u64, k: u32, nu: Nu) -> Result<u64> {
        if x > self.limit() {
            return Err(ExactError::Range(format!(
                "x = {x} beyond sieve limit {}",
                self.limit()
            )));
        }
        if y < 3 || y > x {
            return Err(ExactError::Range(format!(
                "count_phi requires 3 <= y <= x, got y = {y}, x = {x}"
            )));
        }
        let mut count = if k == 0 { 1 } else { 0 };
        let lo = (y + 1).max(2);
        for n in lo..=x {
            if (self.spf_unchecked(n as usize) as u64) <= y {
                continue;
            }
            let f = self.factor(n)?;
            if f.nu(nu) == k {
                count += 1;
            }
        }
        Ok(count)
    }

    /// Exact tail counts: |{n <= x : Omega(n) >= k}| and |{n <= x : omega(n) = k}|.
    pub fn tail_counts(&self, x: u64, k: u32) -> Result<(u64, u64)> {
        if x > self.limit() {
            return Err(ExactError::Range(format!(
                "x = {x} beyond sieve limit {}",
                self.limit()
            )));
        }
        if k < 1 {
            return Err(ExactError::Range("tail counts require k >= 1".into()));
        }
        let mut ge = 0u64;
        let mut eq = 0u64;
        for n in 2..=x {
            let f = self.factor(n)?;
            if f.big_omega() >= k {
                ge += 1;
            }
            if f.omega() == k {
                eq += 1;
            }
        }
        Ok((ge, eq))
    }
}
