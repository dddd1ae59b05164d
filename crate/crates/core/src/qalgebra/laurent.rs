use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// An integer Laurent polynomial in `q`.
///
/// Coefficients are stored sparsely and zero coefficients are never kept, so
/// structural equality is polynomial equality.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct LaurentPolynomial {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c.into());
        p
    }

    /// `q^exp`.
    pub fn q_pow(exp: i64) -> Self {
        Self::monomial(1, exp)
    }

    /// Builds `Σ coeffs[i] q^(low + i)`.
    pub fn from_coeffs(low: i64, coeffs: &[i64]) -> Self {
        let mut p = Self::zero();
        for (i, &c) in coeffs.iter().enumerate() {
            p.add_term(low + i as i64, BigInt::from(c));
        }
        p
    }

    pub fn from_pairs<I, C>(pairs: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in pairs {
            p.add_term(e, c.into());
        }
        p
    }

    /// Generating function of a histogram: `Σ counts[e] q^e`.
    pub fn from_histogram(counts: &[u64]) -> Self {
        Self::from_pairs(
            counts
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(e, &c)| (e as i64, c)),
        )
    }

    pub fn add_term(&mut self, exp: i64, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Non-zero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplication by `q^shift`.
    pub fn shift(&self, shift: i64) -> Self {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e + shift, c.clone())).collect(),
        }
    }

    /// Value at `q = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| c.is_positive())
    }

    pub fn pow(&self, m: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..m {
            acc = &acc * self;
        }
        acc
    }

    /// Coefficients are symmetric about the centre of the support.
    pub fn is_palindromic(&self) -> bool {
        match (self.min_exp(), self.max_exp()) {
            (Some(lo), Some(hi)) => self
                .terms
                .iter()
                .all(|(&e, c)| self.terms.get(&(lo + hi - e)) == Some(c)),
            _ => true,
        }
    }

    /// Exact quotient `self / divisor`, or `None` if the division leaves a remainder.
    ///
    /// # Panics
    ///
    /// Panics if `divisor` is zero.
    pub fn exact_div(&self, divisor: &LaurentPolynomial) -> Option<LaurentPolynomial> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        let (a_low, a) = self.dense();
        let (b_low, b) = divisor.dense();
        if a.len() < b.len() {
            return None;
        }
        let lead = b.last().unwrap();
        let mut rem = a;
        let qlen = rem.len() - b.len() + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for i in (0..qlen).rev() {
            let top = &rem[i + b.len() - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return None;
            }
            for (j, bj) in b.iter().enumerate() {
                rem[i + j] -= &c * bj;
            }
            quot[i] = c;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return None;
        }
        let shift = a_low - b_low;
        Some(Self::from_pairs(
            quot.into_iter()
                .enumerate()
                .map(|(i, c)| (shift + i as i64, c)),
        ))
    }

    // Dense coefficient vector starting at the minimal exponent.
    fn dense(&self) -> (i64, Vec<BigInt>) {
        let lo = self.min_exp().unwrap_or(0);
        let hi = self.max_exp().unwrap_or(-1);
        let mut v = vec![BigInt::zero(); (hi - lo + 1).max(0) as usize];
        for (&e, c) in &self.terms {
            v[(e - lo) as usize] = c.clone();
        }
        (lo, v)
    }

    /// `(exponent, coefficient)` pairs with machine-sized coefficients.
    ///
    /// # Panics
    ///
    /// Panics if a coefficient does not fit in an `i64`.
    pub fn to_pairs(&self) -> Vec<(i64, i64)> {
        self.terms
            .iter()
            .map(|(&e, c)| {
                let c = c
                    .to_i64()
                    .unwrap_or_else(|| panic!("coefficient {c} of q^{e} exceeds i64"));
                (e, c)
            })
            .collect()
    }
}

impl fmt::Display for LaurentPolynomial {
    /// `q^-1 + 2 + 3*q + 4*q^2 - q^5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let power = match e {
                0 => String::new(),
                1 => "q".to_string(),
                _ => format!("q^{e}"),
            };
            if power.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                f.write_str(&power)?;
            } else {
                write!(f, "{abs}*{power}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        self.to_pairs().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let pairs = Vec::<(i64, i64)>::deserialize(deserializer)?;
        Ok(Self::from_pairs(pairs))
    }
}

impl Add for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn add(mut self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        self += &rhs;
        self
    }
}

impl AddAssign<&LaurentPolynomial> for LaurentPolynomial {
    fn add_assign(&mut self, rhs: &LaurentPolynomial) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl Neg for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        LaurentPolynomial {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Neg for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn neg(self) -> LaurentPolynomial {
        -&self
    }
}

impl Sub for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        self + &(-rhs)
    }
}

impl Sub for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn sub(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self - &rhs
    }
}

impl Mul for &LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: &LaurentPolynomial) -> LaurentPolynomial {
        let mut out = LaurentPolynomial::zero();
        for (&e1, c1) in &self.terms {
            for (&e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Mul for LaurentPolynomial {
    type Output = LaurentPolynomial;

    fn mul(self, rhs: LaurentPolynomial) -> LaurentPolynomial {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_poly() -> impl Strategy<Value = LaurentPolynomial> {
        prop::collection::vec((-6i64..6, -5i64..5), 0..6).prop_map(LaurentPolynomial::from_pairs)
    }

    #[test]
    fn canonical_form_drops_zeros() {
        let p = LaurentPolynomial::from_pairs([(1, 2), (1, -2), (3, 0)]);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPolynomial::zero());
    }

    #[test]
    fn rendering() {
        let p = LaurentPolynomial::from_coeffs(-1, &[1, 2, 3, 4]);
        assert_eq!(p.to_string(), "q^-1 + 2 + 3*q + 4*q^2");
        let n = LaurentPolynomial::from_pairs([(0, -1), (1, -1), (4, 2)]);
        assert_eq!(n.to_string(), "-1 - q + 2*q^4");
        assert_eq!(LaurentPolynomial::zero().to_string(), "0");
    }

    #[test]
    fn json_pairs_sorted_by_exponent() {
        let p = LaurentPolynomial::from_pairs([(3, 1), (-1, 2)]);
        let json = serde_json::to_string(&p).unwrap();
        assert_eq!(json, "[[-1,2],[3,1]]");
        let back: LaurentPolynomial = serde_json::from_str(&json).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn exact_division() {
        // (1 + q)(q^-2 + q) / (1 + q)
        let a = LaurentPolynomial::from_coeffs(0, &[1, 1]);
        let b = LaurentPolynomial::from_pairs([(-2, 1), (1, 1)]);
        let prod = &a * &b;
        assert_eq!(prod.exact_div(&a), Some(b.clone()));
        assert_eq!(prod.exact_div(&b), Some(a.clone()));
        let c = LaurentPolynomial::from_coeffs(0, &[1, 0, 1]);
        assert_eq!(a.exact_div(&c), None);
        assert_eq!(LaurentPolynomial::constant(3).exact_div(&LaurentPolynomial::constant(2)), None);
    }

    proptest! {
        #[test]
        fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a - &a).is_zero());
        }

        #[test]
        fn division_inverts_multiplication(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            prop_assert_eq!((&a * &b).exact_div(&b), Some(a));
        }
    }
}
