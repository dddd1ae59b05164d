//! Signed standard tableaux: an SYT together with a set of negative entries.
//!
//! The super major index refines the major index; its generating function
//! `f^λ(q,t)` is kept as a sequence of Laurent polynomials indexed by the
//! number of negative entries (the power of `t`).

use std::fmt;

use itertools::Itertools;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::qalgebra::{maj_gf_hook, q_factorial, q_integer, LaurentPolynomial};
use crate::shapes::Partition;
use crate::tableaux::{enumerate_syt, StandardTableau};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedTableau {
    plus: StandardTableau,
    negatives: Vec<u32>,
}

impl SignedTableau {
    /// `negatives` may be given in any order; duplicates are an error.
    pub fn new(plus: StandardTableau, mut negatives: Vec<u32>) -> Result<Self> {
        let n = plus.size() as u32;
        negatives.sort_unstable();
        if negatives.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::domain("negative entries must be distinct"));
        }
        if let Some(&bad) = negatives.iter().find(|&&d| d == 0 || d > n) {
            return Err(Error::domain(format!("negative entry {bad} outside 1..={n}")));
        }
        Ok(SignedTableau { plus, negatives })
    }

    pub fn plus(&self) -> &StandardTableau {
        &self.plus
    }

    /// Sorted negative entries.
    pub fn negatives(&self) -> &[u32] {
        &self.negatives
    }

    pub fn size(&self) -> usize {
        self.plus.size()
    }

    /// `(pr(T+), cyc(D))`.
    pub fn signed_promotion(&self) -> SignedTableau {
        SignedTableau {
            plus: self.plus.promotion(),
            negatives: cyc_subset_unchecked(&self.negatives, self.size() as u32),
        }
    }

    /// `i` is a super descent if `i` is a descent and `i + 1` is positive, or
    /// `i` is not a descent and `i` is negative.
    pub fn super_descent_set(&self) -> Vec<usize> {
        let n = self.size();
        let row_of = self.plus.row_of_values();
        let mut negative = vec![false; n + 2];
        for &d in &self.negatives {
            negative[d as usize] = true;
        }
        (1..n)
            .filter(|&i| {
                let descent = row_of[i + 1] > row_of[i];
                (descent && !negative[i + 1]) || (!descent && negative[i])
            })
            .collect()
    }

    pub fn super_maj(&self) -> usize {
        self.super_descent_set().iter().sum()
    }
}

impl fmt::Display for SignedTableau {
    /// Rows on separate lines; negative entries are prefixed with `~`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.plus.rows().iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            let line: Vec<String> = row
                .iter()
                .map(|v| {
                    if self.negatives.binary_search(v).is_ok() {
                        format!("~{v}")
                    } else {
                        v.to_string()
                    }
                })
                .collect();
            f.write_str(&line.join(" "))?;
        }
        Ok(())
    }
}

impl Serialize for SignedTableau {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SignedTableau", 2)?;
        s.serialize_field("rows", &self.plus.rows())?;
        s.serialize_field("negatives", &self.negatives)?;
        s.end()
    }
}

/// Cyclic shift on subsets of `[n]`: every entry above 1 decreases by one, 1 becomes `n`.
pub fn cyc_subset(subset: &[u32], n: usize) -> Result<Vec<u32>> {
    if let Some(&bad) = subset.iter().find(|&&d| d == 0 || d as usize > n) {
        return Err(Error::domain(format!("subset element {bad} outside 1..={n}")));
    }
    Ok(cyc_subset_unchecked(subset, n as u32))
}

fn cyc_subset_unchecked(subset: &[u32], n: u32) -> Vec<u32> {
    let mut out: Vec<u32> = subset.iter().map(|&d| if d == 1 { n } else { d - 1 }).collect();
    out.sort_unstable();
    out
}

/// All `k`-subsets of `[n]` as sorted vectors, in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<u32>> {
    (1..=n as u32).combinations(k).collect()
}

/// All signed tableaux of `shape` with exactly `k` negative entries, SYT-major order.
pub fn enumerate_signed(shape: &Partition, k: usize) -> Result<Vec<SignedTableau>> {
    let n = shape.size();
    if k > n {
        return Err(Error::domain(format!("k = {k} exceeds n = {n}")));
    }
    let syt = enumerate_syt(shape);
    let subsets = k_subsets(n, k);
    Ok(syt
        .iter()
        .flat_map(|t| {
            subsets.iter().map(move |d| SignedTableau {
                plus: t.clone(),
                negatives: d.clone(),
            })
        })
        .collect())
}

/// `Σ q^{super maj}` over signed tableaux with `k` negative entries, by enumeration.
pub fn super_gf_bruteforce(shape: &Partition, k: usize) -> Result<LaurentPolynomial> {
    let n = shape.size();
    let mut hist = vec![0u64; n * n.saturating_sub(1) / 2 + 1];
    for t in enumerate_signed(shape, k)? {
        hist[t.super_maj()] += 1;
    }
    Ok(LaurentPolynomial::from_histogram(&hist))
}

/// The bivariate generating function `f^λ(q,t)` graded by the power of `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuperGF {
    shape: Partition,
    by_t_degree: Vec<LaurentPolynomial>,
}

impl SuperGF {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Coefficient of `t^k`; zero past `n`.
    pub fn grade(&self, k: usize) -> LaurentPolynomial {
        self.by_t_degree.get(k).cloned().unwrap_or_default()
    }

    pub fn grades(&self) -> &[LaurentPolynomial] {
        &self.by_t_degree
    }
}

impl Serialize for SuperGF {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("SuperGF", 3)?;
        s.serialize_field("shape", &self.shape.to_string())?;
        s.serialize_field("n", &self.shape.size())?;
        s.serialize_field("grades", &self.by_t_degree)?;
        s.end()
    }
}

/// Enumerated and product-formula grades of `f^λ(q,t)` for one `k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductFormulaRecord {
    pub shape: String,
    pub n: usize,
    pub k: usize,
    pub enumerated: LaurentPolynomial,
    pub product: LaurentPolynomial,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Compares enumeration against the product formula for every `k` in `ks`.
pub fn verify_product_formula(
    shape: &Partition,
    ks: impl IntoIterator<Item = usize>,
) -> Result<Vec<ProductFormulaRecord>> {
    let gf = super_gf_product(shape);
    ks.into_iter()
        .map(|k| {
            let enumerated = super_gf_bruteforce(shape, k)?;
            let product = gf.grade(k);
            Ok(ProductFormulaRecord {
                shape: shape.to_string(),
                n: shape.size(),
                k,
                matches: enumerated == product,
                enumerated,
                product,
            })
        })
        .collect()
}

/// Multiplies a `t`-graded polynomial by the linear factor `a + t b`.
fn mul_linear(
    graded: &[LaurentPolynomial],
    a: &LaurentPolynomial,
    b: &LaurentPolynomial,
) -> Vec<LaurentPolynomial> {
    let mut out = vec![LaurentPolynomial::zero(); graded.len() + 1];
    for (k, g) in graded.iter().enumerate() {
        out[k] += &(g * a);
        out[k + 1] += &(g * b);
    }
    out
}

/// `Π_{cells} (1 + t q^{c(cell)})`, graded by the power of `t`.
pub fn content_product(shape: &Partition) -> Vec<LaurentPolynomial> {
    let one = LaurentPolynomial::one();
    shape.contents().iter().fold(vec![one.clone()], |acc, &c| {
        mul_linear(&acc, &one, &LaurentPolynomial::q_pow(c))
    })
}

/// `f^λ(q) Π (1 + t q^{c})`, checked grade by grade against
/// `[n]_q! Π (q^{row-1} + t q^{col-1}) / Π [h]_q`.
///
/// # Panics
///
/// Panics if the two product forms disagree or the second is not a polynomial;
/// both would be bugs.
pub fn super_gf_product(shape: &Partition) -> SuperGF {
    let f = maj_gf_hook(shape);
    let factored: Vec<LaurentPolynomial> =
        content_product(shape).iter().map(|g| &f * g).collect();

    let numerator = shape.cells().fold(vec![q_factorial(shape.size())], |acc, cell| {
        mul_linear(
            &acc,
            &LaurentPolynomial::q_pow(cell.row as i64 - 1),
            &LaurentPolynomial::q_pow(cell.col as i64 - 1),
        )
    });
    let hooks = shape
        .hooks()
        .iter()
        .fold(LaurentPolynomial::one(), |acc, &h| &acc * &q_integer(h));
    for (k, (num, fac)) in numerator.iter().zip(&factored).enumerate() {
        let unfactored = num
            .exact_div(&hooks)
            .unwrap_or_else(|| panic!("grade {k} of the (q,t) hook formula for {shape} is not a polynomial"));
        assert_eq!(
            &unfactored, fac,
            "product forms of f^λ(q,t) disagree at t^{k} for {shape}"
        );
    }
    SuperGF {
        shape: shape.clone(),
        by_t_degree: factored,
    }
}
