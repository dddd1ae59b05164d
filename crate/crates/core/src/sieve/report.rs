use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::action::CyclicAction;
use crate::arith::{divisors, gcd, mobius, root_order};
use crate::qalgebra::{eval_at_root, CyclotomicElement, LaurentPolynomial};

/// An exact root-of-unity evaluation, as reported.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Evaluation {
    Integer(i64),
    NonInteger,
}

impl Evaluation {
    pub fn of(value: &CyclotomicElement) -> Self {
        match value.as_integer() {
            Some(v) => Evaluation::Integer(v.to_i64().expect("evaluation exceeds i64")),
            None => Evaluation::NonInteger,
        }
    }

    pub fn as_integer(self) -> Option<i64> {
        match self {
            Evaluation::Integer(v) => Some(v),
            Evaluation::NonInteger => None,
        }
    }
}

impl std::fmt::Display for Evaluation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Evaluation::Integer(v) => write!(f, "{v}"),
            Evaluation::NonInteger => f.write_str("non-integer"),
        }
    }
}

#[derive(Serialize, Deserialize)]
#[serde(untagged)]
enum RawEvaluation {
    Int(i64),
    Text(String),
}

impl Serialize for Evaluation {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        match self {
            Evaluation::Integer(v) => serializer.serialize_i64(*v),
            Evaluation::NonInteger => serializer.serialize_str("non-integer"),
        }
    }
}

impl<'de> Deserialize<'de> for Evaluation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        match RawEvaluation::deserialize(deserializer)? {
            RawEvaluation::Int(v) => Ok(Evaluation::Integer(v)),
            RawEvaluation::Text(t) if t == "non-integer" => Ok(Evaluation::NonInteger),
            RawEvaluation::Text(t) => Err(serde::de::Error::custom(format!("bad evaluation `{t}`"))),
        }
    }
}

/// One power `g^d` of the generator.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CspRow {
    pub d: usize,
    /// Order of `ξ^d`.
    pub s: usize,
    pub fix: u64,
    pub eval: Evaluation,
    #[serde(rename = "match")]
    pub matches: bool,
}

/// Fixed-point counts of `g^d` against `P(ξ^d)` for every `d` in `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CspReport {
    pub theorem: String,
    pub shape: String,
    pub n: usize,
    pub k: Option<usize>,
    pub m: Option<usize>,
    /// The sieving polynomial as `[exponent, coefficient]` pairs.
    pub polynomial: LaurentPolynomial,
    pub rows: Vec<CspRow>,
    pub verdict: bool,
}

impl CspReport {
    pub fn labelled(
        mut self,
        theorem: impl Into<String>,
        shape: impl Into<String>,
        k: Option<usize>,
        m: Option<usize>,
    ) -> Self {
        self.theorem = theorem.into();
        self.shape = shape.into();
        self.k = k;
        self.m = m;
        self
    }

    /// Rows that failed, for diagnostics.
    pub fn mismatches(&self) -> impl Iterator<Item = &CspRow> {
        self.rows.iter().filter(|r| !r.matches)
    }
}

/// Compares `|X^{g^d}|` with `P(ξ^d)` for every `d` in `0..n`. A non-integer
/// evaluation never matches.
///
/// # Panics
///
/// Panics if fixed-point counts are not a function of `gcd(n, d)`, which an
/// honest cyclic action cannot violate.
pub fn verify_csp_triple<E>(action: &CyclicAction<E>, p: &LaurentPolynomial) -> CspReport {
    let n = action.order();
    let rows: Vec<CspRow> = (0..n)
        .map(|d| {
            let fix = action.fixed_point_count(d);
            let eval = Evaluation::of(&eval_at_root(p, n, d));
            CspRow {
                d,
                s: root_order(n, d),
                fix,
                eval,
                matches: eval == Evaluation::Integer(fix as i64),
            }
        })
        .collect();
    for row in &rows {
        assert_eq!(
            row.fix,
            rows[gcd(n, row.d) % n].fix,
            "fixed points of g^{} differ from those of g^gcd",
            row.d
        );
    }
    CspReport {
        theorem: "csp".into(),
        shape: String::new(),
        n,
        k: None,
        m: None,
        polynomial: p.clone(),
        verdict: rows.iter().all(|r| r.matches),
        rows,
    }
}

/// Number of orbits of each size for a hypothetical order-`n` cyclic action.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrbitProfile {
    pub orbits: BTreeMap<usize, u64>,
}

impl OrbitProfile {
    /// Total number of elements, `Σ e · orbits[e]`.
    pub fn size(&self) -> u64 {
        self.orbits.iter().map(|(&e, &c)| e as u64 * c).sum()
    }

    /// Profile of an explicit action, for cross-checking.
    pub fn of_action<E>(action: &CyclicAction<E>) -> Self {
        let mut orbits: BTreeMap<usize, u64> =
            divisors(action.order()).into_iter().map(|e| (e, 0)).collect();
        for (size, count) in action.orbit_sizes() {
            orbits.insert(size, count);
        }
        OrbitProfile { orbits }
    }

    /// Fixed points of `g^d` implied by the profile.
    pub fn fixed_point_count(&self, d: usize) -> u64 {
        self.orbits
            .iter()
            .filter(|(&e, _)| d % e == 0)
            .map(|(&e, &c)| e as u64 * c)
            .sum()
    }
}

/// Certificate that some order-`n` cyclic action has `P(ξ^d)` fixed points
/// under `g^d` for all `d`.
///
/// With `F(e) = P(ξ^e)` for `e | n`, Möbius inversion over the divisor lattice
/// gives the number `N_e` of points of exact period `e`. The certificate
/// exists exactly when every `F(e)` is an integer and every `N_e` is a
/// non-negative multiple of `e`.
pub fn realizable_orbit_profile(p: &LaurentPolynomial, n: usize) -> Option<OrbitProfile> {
    assert!(n >= 1, "group order must be positive");
    let divs = divisors(n);
    let mut fixed: BTreeMap<usize, BigInt> = BTreeMap::new();
    for &e in &divs {
        let v = eval_at_root(p, n, e).as_integer()?;
        if v.is_negative() {
            return None;
        }
        fixed.insert(e, v);
    }
    let mut orbits = BTreeMap::new();
    for &e in &divs {
        let exact: BigInt = divisors(e)
            .into_iter()
            .map(|o| BigInt::from(mobius(e / o)) * &fixed[&o])
            .sum();
        if exact.is_negative() || !(&exact % e).is_zero() {
            return None;
        }
        let count = (exact / e).to_u64().expect("orbit count exceeds u64");
        orbits.insert(e, count);
    }
    Some(OrbitProfile { orbits })
}
