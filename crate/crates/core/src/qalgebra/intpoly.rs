use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A dense univariate integer polynomial in `x`, without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::new(vec![c.into()])
    }

    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `x^n - 1`.
    pub fn x_pow_minus_one(n: usize) -> Self {
        let mut c = vec![BigInt::zero(); n + 1];
        c[0] = BigInt::from(-1);
        c[n] += 1;
        Self::new(c)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Remainder modulo a monic polynomial.
    pub fn rem_monic(&self, modulus: &IntPoly) -> IntPoly {
        let m = modulus.degree().expect("modulus must be non-zero");
        assert!(modulus.coeffs[m].is_one(), "modulus must be monic");
        if self.coeffs.len() <= m {
            return self.clone();
        }
        let mut r = self.coeffs.clone();
        for top in (m..r.len()).rev() {
            let c = std::mem::take(&mut r[top]);
            if c.is_zero() {
                continue;
            }
            for j in 0..m {
                r[top - m + j] -= &c * &modulus.coeffs[j];
            }
        }
        r.truncate(m);
        IntPoly::new(r)
    }

    /// Exact quotient, or `None` when a remainder is left.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        let m = divisor.degree().expect("division by zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        if self.coeffs.len() <= m {
            return None;
        }
        let lead = &divisor.coeffs[m];
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); r.len() - m];
        for i in (0..q.len()).rev() {
            let (c, rem) = r[i + m].div_rem(lead);
            if !rem.is_zero() {
                return None;
            }
            for j in 0..=m {
                r[i + j] -= &c * &divisor.coeffs[j];
            }
            q[i] = c;
        }
        r.iter().all(|c| c.is_zero()).then(|| IntPoly::new(q))
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, "x")
    }
}

pub(crate) fn write_poly(f: &mut fmt::Formatter<'_>, coeffs: &[BigInt], var: &str) -> fmt::Result {
    let mut first = true;
    for (e, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let abs = c.abs();
        match (first, c.is_negative()) {
            (true, true) => f.write_str("-")?,
            (true, false) => {}
            (false, true) => f.write_str(" - ")?,
            (false, false) => f.write_str(" + ")?,
        }
        first = false;
        let power = match e {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{e}"),
        };
        if power.is_empty() {
            write!(f, "{abs}")?;
        } else if abs.is_one() {
            f.write_str(&power)?;
        } else {
            write!(f, "{abs}*{power}")?;
        }
    }
    if first {
        f.write_str("0")?;
    }
    Ok(())
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPoly::new((0..len).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trims_trailing_zeros() {
        let p = IntPoly::from_i64(&[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(IntPoly::from_i64(&[0, 0]).degree(), None);
    }

    #[test]
    fn remainder_and_division() {
        // x^3 + 2x + 5 mod x^2 + 1 = x + 5
        let a = IntPoly::from_i64(&[5, 2, 0, 1]);
        let m = IntPoly::from_i64(&[1, 0, 1]);
        assert_eq!(a.rem_monic(&m), IntPoly::from_i64(&[5, 1]));
        let x4 = IntPoly::x_pow_minus_one(4);
        assert_eq!(x4.exact_div(&m), Some(IntPoly::from_i64(&[-1, 0, 1])));
        assert_eq!(a.exact_div(&m), None);
    }

    #[test]
    fn display() {
        assert_eq!(IntPoly::from_i64(&[1, -1, 1]).to_string(), "1 - x + x^2");
        assert_eq!(IntPoly::zero().to_string(), "0");
    }
}
