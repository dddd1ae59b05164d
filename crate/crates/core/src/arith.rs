//! Small number-theoretic helpers shared across modules.

use num_bigint::BigInt;
use num_integer::Integer;

/// `gcd(n, d)` with the convention `gcd(n, 0) = n`.
pub fn gcd(n: usize, d: usize) -> usize {
    n.gcd(&d)
}

pub fn lcm(a: usize, b: usize) -> usize {
    a.lcm(&b)
}

/// Order of `xi^d` for a primitive `n`-th root of unity `xi`.
pub fn root_order(n: usize, d: usize) -> usize {
    n / gcd(n, d)
}

/// Divisors of `n` in ascending order.
pub fn divisors(n: usize) -> Vec<usize> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n % i == 0 {
            small.push(i);
            if i != n / i {
                large.push(n / i);
            }
        }
        i += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The Möbius function.
pub fn mobius(mut n: usize) -> i64 {
    assert!(n >= 1, "mobius is defined on positive integers");
    let mut sign = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, i| acc * i)
}

/// Ordinary binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// Euler's totient.
pub fn totient(n: usize) -> usize {
    (1..=n).filter(|&i| gcd(n, i) == 1).count()
}
