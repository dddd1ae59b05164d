//! Exact polynomial algebra: Laurent polynomials in `q`, q-analogues, and
//! evaluation at roots of unity through cyclotomic reduction.

mod cyclotomic;
mod intpoly;
mod laurent;
mod qanalog;

pub use cyclotomic::{cyclotomic, eval_at_root, CyclotomicElement};
pub use intpoly::IntPoly;
pub use laurent::LaurentPolynomial;
pub use qanalog::{maj_gf_hook, q_binomial, q_factorial, q_integer, syt_count_hook};

/// Integer value of `P(ξ^d)` if it is a rational integer.
pub fn as_integer(v: &CyclotomicElement) -> Option<num_bigint::BigInt> {
    v.as_integer()
}
