//! Cyclotomic polynomials and exact arithmetic in `Z[ζ_s]`.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::intpoly::{write_poly, IntPoly};
use super::laurent::LaurentPolynomial;
use crate::arith::{divisors, root_order};

fn cache() -> &'static RwLock<HashMap<usize, Arc<IntPoly>>> {
    static CACHE: OnceLock<RwLock<HashMap<usize, Arc<IntPoly>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// The `s`-th cyclotomic polynomial `Φ_s`.
///
/// Computed as `(x^s - 1) / Π_{d | s, d < s} Φ_d` and memoised process-wide.
pub fn cyclotomic(s: usize) -> Arc<IntPoly> {
    assert!(s >= 1, "cyclotomic polynomial order must be positive");
    if let Some(p) = cache().read().unwrap().get(&s) {
        return Arc::clone(p);
    }
    let mut p = IntPoly::x_pow_minus_one(s);
    for d in divisors(s).into_iter().filter(|&d| d < s) {
        p = p
            .exact_div(&cyclotomic(d))
            .unwrap_or_else(|| panic!("Φ_{d} does not divide the partial quotient for s = {s}"));
    }
    let p = Arc::new(p);
    // Racing writers compute the same polynomial.
    cache().write().unwrap().entry(s).or_insert_with(|| Arc::clone(&p));
    p
}

/// An element of `Z[ζ]` for `ζ` a primitive `order`-th root of unity, stored
/// as its residue modulo `Φ_order` (degree below `φ(order)`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicElement {
    order: usize,
    residue: IntPoly,
}

impl CyclotomicElement {
    /// Reduces `poly(ζ)` to canonical form.
    pub fn new(order: usize, poly: &IntPoly) -> Self {
        CyclotomicElement {
            order,
            residue: poly.rem_monic(&cyclotomic(order)),
        }
    }

    pub fn zero(order: usize) -> Self {
        Self::integer(order, 0)
    }

    pub fn one(order: usize) -> Self {
        Self::integer(order, 1)
    }

    pub fn integer(order: usize, c: impl Into<BigInt>) -> Self {
        Self::new(order, &IntPoly::constant(c))
    }

    /// `ζ^exp`; negative exponents are reduced modulo `order`.
    pub fn zeta_pow(order: usize, exp: i64) -> Self {
        let e = exp.rem_euclid(order as i64) as usize;
        let mut c = vec![BigInt::zero(); e + 1];
        c[e] = BigInt::one();
        Self::new(order, &IntPoly::new(c))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn residue(&self) -> &IntPoly {
        &self.residue
    }

    pub fn is_zero(&self) -> bool {
        self.residue.is_zero()
    }

    /// The element as a rational integer, if it is one.
    ///
    /// `1, ζ, …, ζ^(φ(s)-1)` is an integral basis, so an element is an integer
    /// exactly when its residue is constant.
    pub fn as_integer(&self) -> Option<BigInt> {
        match self.residue.degree() {
            None => Some(BigInt::zero()),
            Some(0) => Some(self.residue.coeff(0)),
            Some(_) => None,
        }
    }

    pub fn pow(&self, m: u32) -> Self {
        let mut acc = Self::one(self.order);
        for _ in 0..m {
            acc = &acc * self;
        }
        acc
    }

    fn check_order(&self, other: &Self) {
        assert_eq!(
            self.order, other.order,
            "mixing cyclotomic elements of different orders"
        );
    }
}

impl fmt::Display for CyclotomicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, self.residue.coeffs(), "z")
    }
}

impl Add for &CyclotomicElement {
    type Output = CyclotomicElement;

    fn add(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.check_order(rhs);
        CyclotomicElement {
            order: self.order,
            residue: &self.residue + &rhs.residue,
        }
    }
}

impl Sub for &CyclotomicElement {
    type Output = CyclotomicElement;

    fn sub(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.check_order(rhs);
        CyclotomicElement {
            order: self.order,
            residue: &self.residue - &rhs.residue,
        }
    }
}

impl Neg for &CyclotomicElement {
    type Output = CyclotomicElement;

    fn neg(self) -> CyclotomicElement {
        CyclotomicElement {
            order: self.order,
            residue: -&self.residue,
        }
    }
}

impl Mul for &CyclotomicElement {
    type Output = CyclotomicElement;

    fn mul(self, rhs: &CyclotomicElement) -> CyclotomicElement {
        self.check_order(rhs);
        CyclotomicElement::new(self.order, &(&self.residue * &rhs.residue))
    }
}

/// Exact value of `P(ξ^d)` for `ξ` a primitive `n`-th root of unity.
///
/// `ξ^d` is a primitive `s`-th root with `s = n / gcd(n, d)`, so the result
/// lives in `Z[ζ_s]`; `d = 0` gives `s = 1` and the coefficient sum.
pub fn eval_at_root(p: &LaurentPolynomial, n: usize, d: usize) -> CyclotomicElement {
    assert!(n >= 1, "root of unity order must be positive");
    let s = root_order(n, d);
    let mut folded = vec![BigInt::zero(); s];
    for (e, c) in p.terms() {
        folded[e.rem_euclid(s as i64) as usize] += c;
    }
    CyclotomicElement::new(s, &IntPoly::new(folded))
}
