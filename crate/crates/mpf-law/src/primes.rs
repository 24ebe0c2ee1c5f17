//! Primality and nearest-prime search, for machine-sized and huge targets.

use rug::{Float, Integer};

/// Deterministic Miller-Rabin over the full u64 range.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0u32;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // this base set decides primality for every n < 2^64
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

const MR_REPS: u32 = 64;

/// The prime whose natural log is nearest to `target_ln`, searched on both
/// sides of e^{target_ln}. Works at any scale: machine integers are tested
/// deterministically, larger candidates with GMP's Miller-Rabin at 64
/// rounds.
pub fn nearest_prime_by_log(target_ln: f64) -> (Integer, f64) {
    let bits = (target_ln / std::f64::consts::LN_2).abs().ceil() as u32 + 64;
    let center = Float::with_val(bits.max(64), target_ln).exp();
    let center: Integer = center
        .to_integer()
        .expect("finite target");
    let up = next_prime_from(center.clone() + 1i32);
    let down = prev_prime_from(center);
    let ln_of = |p: &Integer| Float::with_val(64, p).ln().to_f64();
    match down {
        Some(d) => {
            let (lu, ld) = (ln_of(&up), ln_of(&d));
            if (lu - target_ln).abs() < (ld - target_ln).abs() {
                (up, lu)
            } else {
                (d, ld)
            }
        }
        None => {
            let lu = ln_of(&up);
            (up, lu)
        }
    }
}

/// Smallest prime >= n.
pub fn next_prime_from(mut n: Integer) -> Integer {
    if n < 2 {
        return Integer::from(2);
    }
    loop {
        if is_prime_integer(&n) {
            return n;
        }
        n += 1;
    }
}

/// Largest prime <= n, if any.
pub fn prev_prime_from(mut n: Integer) -> Option<Integer> {
    if n < 2 {
        return None;
    }
    loop {
        if is_prime_integer(&n) {
            return Some(n);
        }
        n -= 1;
    }
}

fn is_prime_integer(n: &Integer) -> bool {
    if let Some(small) = n.to_u64() {
        is_prime_u64(small)
    } else {
        n.is_probably_prime(MR_REPS) != rug::integer::IsPrime::No
    }
}
