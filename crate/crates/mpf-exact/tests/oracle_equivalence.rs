//! The sieve path against an independent trial-division recount, plus
//! determinism of the parallel spectrum across worker counts.

use std::collections::BTreeMap;

use mpf_exact::{Nu, SpfSieve};

/// Trial-division factorization, sharing no code with the sieve.
fn factor_naive(mut n: u64) -> Vec<(u64, u32)> {
    let mut parts = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            parts.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        parts.push((n, 1));
    }
    parts
}

fn median_naive(parts: &[(u64, u32)], nu: Nu) -> u64 {
    match nu {
        Nu::Omega => parts[(parts.len() + 1) / 2 - 1].0,
        Nu::BigOmega => {
            let total: u32 = parts.iter().map(|&(_, e)| e).sum();
            let target = total.div_ceil(2);
            let mut seen = 0;
            for &(p, e) in parts {
                seen += e;
                if seen >= target {
                    return p;
                }
            }
            unreachable!()
        }
    }
}

#[test]
fn spectrum_equals_trial_division_recount_at_1e5() {
    let x = 100_000u64;
    let sieve = SpfSieve::build(x).unwrap();
    for nu in [Nu::Omega, Nu::BigOmega] {
        let mut naive: BTreeMap<u64, (u64, u64, u64)> = BTreeMap::new();
        for n in 2..=x {
            let parts = factor_naive(n);
            let count: u32 = match nu {
                Nu::Omega => parts.len() as u32,
                Nu::BigOmega => parts.iter().map(|&(_, e)| e).sum(),
            };
            let p = median_naive(&parts, nu);
            let slot = naive.entry(p).or_insert((0, 0, 0));
            slot.0 += 1;
            if count % 2 == 1 {
                slot.1 += 1;
            } else {
                slot.2 += 1;
            }
        }
        let spec = sieve.median_spectrum(x, nu).unwrap();
        assert_eq!(spec.len(), naive.len(), "prime support differs for {nu:?}");
        for (p, c) in &spec {
            let &(total, odd, even) = naive.get(p).unwrap();
            assert_eq!((c.total, c.odd_part, c.even_part), (total, odd, even), "p = {p}");
        }
    }
}

#[test]
fn factor_round_trip_and_median_sanity() {
    let sieve = SpfSieve::build(50_000).unwrap();
    for n in 2..=50_000u64 {
        let f = sieve.factor(n).unwrap();
        let back: u64 = f
            .parts
            .iter()
            .map(|&(p, e)| p.pow(e))
            .product();
        assert_eq!(back, n);
        for w in f.parts.windows(2) {
            assert!(w[0].0 < w[1].0, "primes not increasing for {n}");
        }
        let m = f.median_prime(Nu::BigOmega).unwrap();
        assert_eq!(n % m, 0);
    }
}

#[test]
fn spectrum_bit_identical_across_thread_counts() {
    let x = 400_000u64;
    let sieve = SpfSieve::build(x).unwrap();
    let reference = sieve.median_spectrum(x, Nu::BigOmega).unwrap();
    for threads in [1usize, 2, 8] {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        let got = pool.install(|| sieve.median_spectrum(x, Nu::BigOmega).unwrap());
        assert_eq!(got, reference, "spectrum differs with {threads} threads");
    }
}

#[test]
fn parity_identity_everywhere() {
    let x = 20_000u64;
    let sieve = SpfSieve::build(x).unwrap();
    for nu in [Nu::Omega, Nu::BigOmega] {
        for c in sieve.median_spectrum(x, nu).unwrap().values() {
            assert_eq!(c.total, c.odd_part + c.even_part);
        }
    }
}
