//! Small number-theoretic helpers: primes, factorization, Möbius, divisors.

use std::sync::OnceLock;

const SIEVE_LIMIT: u64 = 100_000;

static PRIMES: OnceLock<Vec<u64>> = OnceLock::new();

/// All primes up to `100_000`, sieved once.
pub fn primes() -> &'static [u64] {
    PRIMES.get_or_init(|| {
        let n = SIEVE_LIMIT as usize;
        let mut composite = vec![false; n + 1];
        let mut out = Vec::new();
        for p in 2..=n {
            if composite[p] {
                continue;
            }
            out.push(p as u64);
            let mut q = p * p;
            while q <= n {
                composite[q] = true;
                q += p;
            }
        }
        out
    })
}

/// Prime factorization of `n ≥ 1` as sorted `(prime, exponent)` pairs.
///
/// Trial division by the sieved primes; any cofactor that survives is itself
/// prime because every input in this crate is far below `SIEVE_LIMIT²`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1, "factorize requires a positive integer");
    let mut out = Vec::new();
    for &p in primes() {
        if p * p > n {
            break;
        }
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Möbius function: `0` if a square divides `n`, else `(−1)^{#prime factors}`.
pub fn mobius(n: u64) -> i64 {
    let factors = factorize(n);
    if factors.iter().any(|&(_, e)| e > 1) {
        0
    } else if factors.len() % 2 == 0 {
        1
    } else {
        -1
    }
}

/// All divisors of `n ≥ 1`, sorted ascending.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = vec![1];
    for (p, e) in factorize(n) {
        let base = out.clone();
        let mut pk = 1;
        for _ in 0..e {
            pk *= p;
            out.extend(base.iter().map(|d| d * pk));
        }
    }
    out.sort_unstable();
    out
}

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        return 0;
    }
    a / gcd(a, b) * b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_small_values() {
        assert_eq!(mobius(1), 1);
        assert_eq!(mobius(6), 1);
        assert_eq!(mobius(12), 0);
        assert_eq!(mobius(2), -1);
        assert_eq!(mobius(30), -1);
    }

    #[test]
    fn mobius_divisor_sums_vanish() {
        // Σ_{d|n} μ(d) = [n = 1]
        for n in 1..=400u64 {
            let s: i64 = divisors(n).into_iter().map(mobius).sum();
            assert_eq!(s, i64::from(n == 1), "n = {n}");
        }
    }

    #[test]
    fn factorize_matches_product() {
        for n in 1..=2000u64 {
            let f = factorize(n);
            let prod: u64 = f.iter().map(|&(p, e)| p.pow(e)).product();
            assert_eq!(prod, n);
            assert!(f.windows(2).all(|w| w[0].0 < w[1].0));
        }
    }

    #[test]
    fn divisors_of_168() {
        assert_eq!(
            divisors(168),
            vec![1, 2, 3, 4, 6, 7, 8, 12, 14, 21, 24, 28, 42, 56, 84, 168]
        );
    }

    #[test]
    fn gcd_lcm_basics() {
        assert_eq!(gcd(84, 168), 84);
        assert_eq!(gcd(35, 8), 1);
        assert_eq!(lcm(24, 28), 168);
        assert_eq!(lcm(1, 7), 7);
    }
}
