//! Small prime tables used by the Euler-product evaluator.

/// Primes up to `n` inclusive, by plain sieve of Eratosthenes.
pub(crate) fn primes_up_to(n: u32) -> Vec<u32> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for p in 2..=n {
        if !composite[p] {
            primes.push(p as u32);
            let mut m = p * p;
            while m <= n {
                composite[m] = true;
                m += p;
            }
        }
    }
    primes
}

/// Moebius function on 1..=n.
pub(crate) fn mobius_up_to(n: u32) -> Vec<i8> {
    let n = n as usize;
    let mut mu = vec![1i8; n + 1];
    let mut least = vec![0u32; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if least[i] == 0 {
            least[i] = i as u32;
            primes.push(i as u32);
            mu[i] = -1;
        }
        for &p in &primes {
            let ip = i * p as usize;
            if p > least[i] || ip > n {
                break;
            }
            least[ip] = p;
            mu[ip] = if p == least[i] { 0 } else { -mu[i] };
        }
    }
    if n >= 1 {
        mu[1] = 1;
    }
    mu
}
