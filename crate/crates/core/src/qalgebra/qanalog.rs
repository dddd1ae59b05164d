//! q-integers, q-factorials, q-binomials and the q-hook-length formula.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::laurent::LaurentPolynomial;
use crate::arith::factorial;
use crate::shapes::Partition;

/// `[n]_q = 1 + q + … + q^(n-1)`, with `[0]_q = 0`.
pub fn q_integer(n: usize) -> LaurentPolynomial {
    LaurentPolynomial::from_pairs((0..n as i64).map(|e| (e, 1)))
}

/// `[n]_q! = [1]_q [2]_q … [n]_q`, with `[0]_q! = 1`.
pub fn q_factorial(n: usize) -> LaurentPolynomial {
    (1..=n).fold(LaurentPolynomial::one(), |acc, i| &acc * &q_integer(i))
}

/// Gaussian binomial; zero outside `0 <= k <= n`.
pub fn q_binomial(n: i64, k: i64) -> LaurentPolynomial {
    if n < 0 || k < 0 || k > n {
        return LaurentPolynomial::zero();
    }
    let (n, k) = (n as usize, k as usize);
    let denom = &q_factorial(k) * &q_factorial(n - k);
    q_factorial(n)
        .exact_div(&denom)
        .unwrap_or_else(|| panic!("[{n}]_q! not divisible by [{k}]_q![{}]_q!", n - k))
}

fn hook_product(shape: &Partition) -> LaurentPolynomial {
    shape
        .hooks()
        .iter()
        .fold(LaurentPolynomial::one(), |acc, &h| &acc * &q_integer(h))
}

/// `[n]_q! / Π [h]_q` without the `q^κ` shift.
pub(crate) fn q_hook_quotient(shape: &Partition) -> LaurentPolynomial {
    q_factorial(shape.size())
        .exact_div(&hook_product(shape))
        .unwrap_or_else(|| panic!("q-hook quotient is not a polynomial for shape {shape}"))
}

/// Number of standard Young tableaux via `n! / Π h`.
pub fn syt_count_hook(shape: &Partition) -> BigInt {
    let prod: BigInt = shape.hooks().iter().map(|&h| BigInt::from(h)).product();
    let (q, r) = factorial(shape.size()).div_rem(&prod);
    assert!(r.is_zero(), "hook product does not divide n! for shape {shape}");
    q
}

/// Major-index generating function `q^κ(λ) [n]_q! / Π [h]_q`.
pub fn maj_gf_hook(shape: &Partition) -> LaurentPolynomial {
    let gf = q_hook_quotient(shape).shift(shape.kappa() as i64);
    debug_assert!(gf.is_nonnegative());
    gf
}
