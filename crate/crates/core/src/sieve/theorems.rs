//! Verification drivers: the subset and rectangular sieves, the orbit
//! realizability certificate for arbitrary shapes, and the identities behind
//! the lifting from unsigned to signed tableaux.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use serde::{Deserialize, Serialize};

use super::action::CyclicAction;
use super::report::{realizable_orbit_profile, verify_csp_triple, CspReport, Evaluation, OrbitProfile};
use crate::arith::{binomial, divisors, root_order};
use crate::error::{Error, Result};
use crate::qalgebra::{eval_at_root, maj_gf_hook, q_binomial, CyclotomicElement, IntPoly, LaurentPolynomial};
use crate::shapes::{gamma, Partition};
use crate::signed::{cyc_subset, k_subsets, super_gf_product, SignedTableau, SuperGF};
use crate::strips::has_bst;
use crate::tableaux::{enumerate_syt, StandardTableau};

/// `k`-subsets of `[n]` under cyclic shift.
pub fn subset_action(n: usize, k: usize) -> Result<CyclicAction<Vec<u32>>> {
    if k > n {
        return Err(Error::domain(format!("k = {k} exceeds n = {n}")));
    }
    CyclicAction::new(k_subsets(n, k), n, |d| {
        cyc_subset(d, n).expect("subset elements stay within 1..=n")
    })
}

/// Subsets of `[n]` sieved by the Gaussian binomial.
pub fn verify_subset_csp(n: usize, k: usize) -> Result<CspReport> {
    let action = subset_action(n, k)?;
    Ok(verify_csp_triple(&action, &q_binomial(n as i64, k as i64))
        .labelled("subsets", n.to_string(), Some(k), None))
}

/// Adds one to the constant coefficient. Used as a negative control.
pub fn perturb(p: &LaurentPolynomial) -> LaurentPolynomial {
    p + &LaurentPolynomial::one()
}

/// Shared data for the sieves on signed tableaux of one rectangular shape:
/// the SYT list is enumerated once and reused for every `k`.
#[derive(Debug, Clone)]
pub struct RectangleSieve {
    shape: Partition,
    syt: Vec<StandardTableau>,
    gf: SuperGF,
}

impl RectangleSieve {
    pub fn new(shape: &Partition) -> Result<Self> {
        if shape.is_rectangular().is_none() {
            return Err(Error::domain(format!("shape {shape} is not a rectangle")));
        }
        Ok(RectangleSieve {
            shape: shape.clone(),
            syt: enumerate_syt(shape),
            gf: super_gf_product(shape),
        })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> usize {
        self.shape.size()
    }

    fn check_k(&self, k: usize) -> Result<()> {
        if k > self.n() {
            return Err(Error::domain(format!("k = {k} exceeds n = {}", self.n())));
        }
        Ok(())
    }

    /// `SYT_{±k}(λ)` under signed promotion, as a group of order `n`.
    pub fn action(&self, k: usize) -> Result<CyclicAction<SignedTableau>> {
        self.check_k(k)?;
        let subsets = k_subsets(self.n(), k);
        let mut elements = Vec::with_capacity(self.syt.len() * subsets.len());
        for t in &self.syt {
            for d in &subsets {
                elements.push(SignedTableau::new(t.clone(), d.clone())?);
            }
        }
        CyclicAction::new(elements, self.n(), SignedTableau::signed_promotion)
    }

    /// `q^{γ(n,k) - κ(λ)} f^λ_{±k}(q)`.
    pub fn super_polynomial(&self, k: usize) -> Result<LaurentPolynomial> {
        self.check_k(k)?;
        let shift = gamma(self.n(), k)? as i64 - self.shape.kappa() as i64;
        Ok(self.gf.grade(k).shift(shift))
    }

    /// `q^{-κ(λ)} f^λ(q) [n choose k]_q`.
    pub fn trivial_polynomial(&self, k: usize) -> Result<LaurentPolynomial> {
        self.check_k(k)?;
        let f = maj_gf_hook(&self.shape).shift(-(self.shape.kappa() as i64));
        Ok(&f * &q_binomial(self.n() as i64, k as i64))
    }

    pub fn verify_theorem_a(&self, k: usize) -> Result<CspReport> {
        let action = self.action(k)?;
        Ok(self.report("rect-csp", &action, &self.super_polynomial(k)?, k))
    }

    pub fn verify_trivial(&self, k: usize) -> Result<CspReport> {
        let action = self.action(k)?;
        Ok(self.report("trivial-csp", &action, &self.trivial_polynomial(k)?, k))
    }

    /// Both sieves for one `k`, sharing the action.
    pub fn verify_both(&self, k: usize) -> Result<(CspReport, CspReport)> {
        let action = self.action(k)?;
        Ok((
            self.report("rect-csp", &action, &self.super_polynomial(k)?, k),
            self.report("trivial-csp", &action, &self.trivial_polynomial(k)?, k),
        ))
    }

    /// The signed sieve against a deliberately wrong polynomial.
    pub fn verify_perturbed(&self, k: usize) -> Result<CspReport> {
        let action = self.action(k)?;
        Ok(self.report("rect-csp-perturbed", &action, &perturb(&self.super_polynomial(k)?), k))
    }

    fn report(
        &self,
        theorem: &str,
        action: &CyclicAction<SignedTableau>,
        p: &LaurentPolynomial,
        k: usize,
    ) -> CspReport {
        verify_csp_triple(action, p).labelled(theorem, self.shape.to_string(), Some(k), None)
    }
}

/// Signed tableaux of rectangular shape under signed promotion, sieved by
/// `q^{γ(n,k) - κ(λ)} f^λ_{±k}(q)`.
pub fn verify_theorem_a(shape: &Partition, k: usize) -> Result<CspReport> {
    RectangleSieve::new(shape)?.verify_theorem_a(k)
}

/// The same action sieved by `q^{-κ(λ)} f^λ(q) [n choose k]_q`.
pub fn verify_trivial_csp(shape: &Partition, k: usize) -> Result<CspReport> {
    RectangleSieve::new(shape)?.verify_trivial(k)
}

/// One divisor row of the arbitrary-shape check: `f^λ(ξ^d)^m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerEvaluation {
    pub d: usize,
    pub s: usize,
    pub eval: Evaluation,
}

/// Outcome of the arbitrary-shape check for `SYT_{±k}(λ)^m`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremBRecord {
    pub theorem: String,
    pub shape: String,
    pub n: usize,
    pub k: usize,
    pub m: usize,
    /// `f^λ(ξ^d)^m` for each `d | n`.
    pub evaluations: Vec<PowerEvaluation>,
    /// Every `f^λ(ξ^d)^m` is a non-negative integer.
    pub condition_holds: bool,
    /// `(q^{γ(n,k)} f^λ_{±k}(q))^m` admits an orbit profile.
    pub realizable: bool,
    pub profile: Option<OrbitProfile>,
    /// condition ⟹ realizable.
    pub if_direction: bool,
    /// realizable ⟹ condition.
    pub only_if_direction: bool,
    /// For even `m` the condition must hold.
    pub even_m_condition: bool,
    pub verdict: bool,
}

/// Compares the evaluation condition on `f^λ` with the existence of an
/// orbit profile realizing `(q^{γ(n,k)} f^λ_{±k}(q))^m` under `C_n`.
pub fn verify_theorem_b(shape: &Partition, m: usize, k: usize) -> Result<TheoremBRecord> {
    let gf = super_gf_product(shape);
    theorem_b_with(shape, &gf, m, k)
}

/// As [`verify_theorem_b`], reusing a precomputed generating function.
pub fn theorem_b_with(shape: &Partition, gf: &SuperGF, m: usize, k: usize) -> Result<TheoremBRecord> {
    let n = shape.size();
    if m == 0 {
        return Err(Error::domain("m must be at least 1"));
    }
    if k > n {
        return Err(Error::domain(format!("k = {k} exceeds n = {n}")));
    }
    let power = u32::try_from(m).map_err(|_| Error::domain("m too large"))?;
    let f = maj_gf_hook(shape);
    let evaluations: Vec<PowerEvaluation> = divisors(n)
        .into_iter()
        .map(|d| PowerEvaluation {
            d,
            s: root_order(n, d),
            eval: Evaluation::of(&eval_at_root(&f, n, d).pow(power)),
        })
        .collect();
    let condition_holds = evaluations
        .iter()
        .all(|e| e.eval.as_integer().is_some_and(|v| v >= 0));
    let p = gf.grade(k).shift(gamma(n, k)? as i64).pow(power);
    let profile = realizable_orbit_profile(&p, n);
    let realizable = profile.is_some();
    let if_direction = !condition_holds || realizable;
    let only_if_direction = !realizable || condition_holds;
    let even_m_condition = m % 2 == 1 || condition_holds;
    Ok(TheoremBRecord {
        theorem: "theorem-b".into(),
        shape: shape.to_string(),
        n,
        k,
        m,
        evaluations,
        condition_holds,
        realizable,
        profile,
        if_direction,
        only_if_direction,
        even_m_condition,
        verdict: if_direction && only_if_direction && even_m_condition,
    })
}

/// `(1 - (-t)^s)^d` as an integer polynomial in `t`.
pub fn cyclotomic_product_closed_form(s: usize, d: usize) -> IntPoly {
    let mut base = vec![BigInt::from(0); s + 1];
    base[0] += 1;
    // -(-1)^s t^s
    base[s] += if s % 2 == 0 { -1 } else { 1 };
    let base = IntPoly::new(base);
    (0..d).fold(IntPoly::constant(1), |acc, _| &acc * &base)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwistSignRecord {
    pub n: usize,
    pub d: usize,
    pub s: usize,
    pub k: usize,
    pub j: usize,
    /// `(-1)^(j+k)`.
    pub sign: i64,
    /// `ζ^{γ(n,k)}` equals `ζ^{-binom(k,2)}` and both equal `sign`.
    pub twist_matches: bool,
    /// `[t^k] (1 - (-t)^s)^d`.
    pub coefficient: i64,
    /// `binom(d, j) (-1)^(j+k)`.
    pub expected_coefficient: i64,
    pub coefficient_matches: bool,
    pub verdict: bool,
}

/// Checks, for `ζ` a primitive `s`-th root with `s = n/d` dividing `k`, that
/// the twist `ζ^{γ(n,k)}` is the sign `(-1)^(k/s + k)` and that this sign
/// appears in `[t^k] (1 - (-t)^s)^d`.
pub fn verify_twist_sign(n: usize, d: usize, k: usize) -> Result<TwistSignRecord> {
    if d == 0 || n % d != 0 {
        return Err(Error::domain(format!("d = {d} does not divide n = {n}")));
    }
    let s = n / d;
    if k % s != 0 {
        return Err(Error::domain(format!("s = {s} does not divide k = {k}")));
    }
    let j = k / s;
    let sign: i64 = if (j + k) % 2 == 0 { 1 } else { -1 };
    let g = gamma(n, k)? as i64;
    let binom_k2 = (k * k.saturating_sub(1) / 2) as i64;
    let twist = CyclotomicElement::zeta_pow(s, g);
    let twist_matches = twist == CyclotomicElement::zeta_pow(s, -binom_k2)
        && twist == CyclotomicElement::integer(s, sign);
    let coefficient = cyclotomic_product_closed_form(s, d)
        .coeff(k)
        .to_i64()
        .expect("coefficient exceeds i64");
    let expected_coefficient = (binomial(d, j) * sign).to_i64().expect("binomial exceeds i64");
    let coefficient_matches = coefficient == expected_coefficient;
    Ok(TwistSignRecord {
        n,
        d,
        s,
        k,
        j,
        sign,
        twist_matches,
        coefficient,
        expected_coefficient,
        coefficient_matches,
        verdict: twist_matches && coefficient_matches,
    })
}

/// `Π_{cells} (1 + t ζ^{c(cell)})` in `Z[ζ_s][t]`, graded by the power of `t`.
pub fn content_product_at_root(shape: &Partition, s: usize) -> Vec<CyclotomicElement> {
    shape
        .contents()
        .iter()
        .fold(vec![CyclotomicElement::one(s)], |acc, &c| {
            let z = CyclotomicElement::zeta_pow(s, c);
            let mut out = vec![CyclotomicElement::zero(s); acc.len() + 1];
            for (k, a) in acc.iter().enumerate() {
                out[k] = &out[k] + a;
                out[k + 1] = &out[k + 1] + &(a * &z);
            }
            out
        })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductEvalRecord {
    pub shape: String,
    pub n: usize,
    pub d: usize,
    pub s: usize,
    /// Grades of `Π (1 + t ζ^c)`.
    pub grades: Vec<Evaluation>,
    /// Grades of `(1 - (-t)^s)^d`.
    pub expected: Vec<i64>,
    pub verdict: bool,
}

/// Expands `Π (1 + t ζ^{c})` at `ζ = ξ^d` exactly and compares every grade
/// with `(1 - (-t)^s)^d`, `s = n/d`. Requires `BST(λ, s)` to be non-empty.
pub fn verify_product_eval(shape: &Partition, n: usize, d: usize) -> Result<ProductEvalRecord> {
    if shape.size() != n {
        return Err(Error::domain(format!("{shape} is not a partition of {n}")));
    }
    if d == 0 || n % d != 0 {
        return Err(Error::domain(format!("d = {d} does not divide n = {n}")));
    }
    let s = n / d;
    if !has_bst(shape, s) {
        return Err(Error::domain(format!(
            "hypothesis fails: BST({shape}, {s}) is empty"
        )));
    }
    let grades: Vec<Evaluation> = content_product_at_root(shape, s)
        .iter()
        .map(Evaluation::of)
        .collect();
    let closed = cyclotomic_product_closed_form(s, d);
    let expected: Vec<i64> = (0..=n)
        .map(|k| closed.coeff(k).to_i64().expect("coefficient exceeds i64"))
        .collect();
    let verdict = grades
        .iter()
        .zip(&expected)
        .all(|(g, &e)| *g == Evaluation::Integer(e));
    Ok(ProductEvalRecord {
        shape: shape.to_string(),
        n,
        d,
        s,
        grades,
        expected,
        verdict,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnifiedChainRecord {
    pub shape: String,
    pub k: usize,
    pub d: usize,
    pub alpha: i64,
    pub m: usize,
    /// `P(ζ)` for `P = q^α (q^γ f^λ_{±k})^m`, evaluated directly.
    pub direct: CyclotomicElement,
    /// `ζ^α (ζ^γ f^λ(ζ) [t^k] Π(1 + t ζ^c))^m`.
    pub factored: CyclotomicElement,
    /// `ζ^α (f^λ(ζ) [n choose k]_ζ)^m`, the fixed-point count predicted by
    /// the unsigned sieve and the subset sieve.
    pub fixed_point_formula: CyclotomicElement,
    pub verdict: bool,
}

/// Evaluates the signed sieving polynomial at `ζ = ξ^d` by three routes: the
/// polynomial itself, its content factorisation, and the product of the
/// unsigned and subset evaluations.
pub fn verify_unified_chain(
    shape: &Partition,
    k: usize,
    d: usize,
    alpha: i64,
    m: usize,
) -> Result<UnifiedChainRecord> {
    let n = shape.size();
    if k > n {
        return Err(Error::domain(format!("k = {k} exceeds n = {n}")));
    }
    let power = u32::try_from(m).map_err(|_| Error::domain("m too large"))?;
    let g = gamma(n, k)? as i64;
    let s = root_order(n, d);
    let f = maj_gf_hook(shape);
    let gf = super_gf_product(shape);
    let p = &LaurentPolynomial::q_pow(alpha) * &gf.grade(k).shift(g).pow(power);
    let direct = eval_at_root(&p, n, d);

    let zeta_alpha = CyclotomicElement::zeta_pow(s, alpha);
    let f_at = eval_at_root(&f, n, d);
    let t_k = content_product_at_root(shape, s).swap_remove(k);
    let inner = &(&CyclotomicElement::zeta_pow(s, g) * &f_at) * &t_k;
    let factored = &zeta_alpha * &inner.pow(power);

    let qbin = eval_at_root(&q_binomial(n as i64, k as i64), n, d);
    let fixed_point_formula = &zeta_alpha * &(&f_at * &qbin).pow(power);

    let verdict = direct == factored && factored == fixed_point_formula;
    Ok(UnifiedChainRecord {
        shape: shape.to_string(),
        k,
        d,
        alpha,
        m,
        direct,
        factored,
        fixed_point_formula,
        verdict,
    })
}

/// `binom(d, k/s)` if `s | k`, else 0, where `s = n / gcd(n, d)`.
pub fn q_binomial_root_closed_form(n: usize, k: usize, d: usize) -> BigInt {
    let s = root_order(n, d);
    let dd = n / s;
    if k % s == 0 {
        binomial(dd, k / s)
    } else {
        BigInt::from(0)
    }
}

/// Whether `v` is a non-negative integer.
pub fn is_nonnegative_integer(v: &CyclotomicElement) -> bool {
    v.as_integer().is_some_and(|x| !x.is_negative())
}
