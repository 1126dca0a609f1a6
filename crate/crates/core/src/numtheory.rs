//! Small integer helpers: gcd/lcm, primality, prime sets and p-parts.

use std::collections::BTreeSet;

pub fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

pub fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// The set of primes dividing `n`.
pub fn prime_set(n: u64) -> BTreeSet<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    assert!(p >= 2 && n >= 1);
    let mut part = 1;
    while n % p == 0 {
        n /= p;
        part *= p;
    }
    part
}

/// Returns `Some(p)` if `n` is a power of the prime `p` (with `n > 1`).
pub fn prime_power_base(n: u64) -> Option<u64> {
    let f = factorize(n);
    if f.len() == 1 {
        Some(f[0].0)
    } else {
        None
    }
}

/// Modular exponentiation, `modulus < 2^32`.
pub fn pow_mod(mut base: u64, mut exp: u64, modulus: u64) -> u64 {
    let mut acc = 1 % modulus;
    base %= modulus;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % modulus;
        }
        base = base * base % modulus;
        exp >>= 1;
    }
    acc
}
