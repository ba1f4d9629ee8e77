//! Symbolic ideals of a ring of integers as products of labelled prime
//! ideals, `I = P_1^e_1 · ... · P_g^e_g`, together with the divisor
//! functions on them.
//!
//! Only the exponent multiset matters for `τ`, `τ^(e)`, `ω` and `Ω`, so no
//! arithmetic inside the ring is performed. Divisors may drop primes
//! (`0 ≤ a_i ≤ e_i`) while exponential divisors keep the full support
//! (`b_i ≥ 1`, `b_i | e_i`).

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde_json::{json, Value};
use thiserror::Error;

use crate::arith::{tau_of_exponent, Factorization};

/// Enumeration refuses ideals with more divisors than this.
pub const ENUMERATION_LIMIT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("prime ideal indices must be positive")]
    ZeroIndex,
    #[error("prime ideal P{0} appears more than once")]
    DuplicateLabel(u32),
    #[error("exponent of P{0} must be at least 1")]
    ZeroExponent(u32),
    #[error("power must be at least 1")]
    ZeroPower,
    #[error("exponent of P{0} overflows")]
    ExponentOverflow(u32),
    #[error("ideal has {0} divisors, above the enumeration limit of {ENUMERATION_LIMIT}")]
    TooManyDivisors(BigUint),
    #[error("cannot parse ideal {0:?}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, IdealError>;

/// One of the distinct primes `P_1, ..., P_g`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PrimeIdealLabel {
    pub index: u32,
    /// Generators, e.g. `(2, 1+sqrt(d))`. Informational only.
    pub description: Option<String>,
}

impl PrimeIdealLabel {
    pub fn new(index: u32) -> Self {
        Self {
            index,
            description: None,
        }
    }

    pub fn described(index: u32, description: impl Into<String>) -> Self {
        Self {
            index,
            description: Some(description.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactoredIdeal {
    factors: Vec<(PrimeIdealLabel, u32)>,
    field_tag: String,
}

impl FactoredIdeal {
    /// Validates and sorts the factors by index.
    pub fn new(
        field_tag: impl Into<String>,
        mut factors: Vec<(PrimeIdealLabel, u32)>,
    ) -> Result<Self> {
        factors.sort_by_key(|(label, _)| label.index);
        for (i, (label, e)) in factors.iter().enumerate() {
            if label.index == 0 {
                return Err(IdealError::ZeroIndex);
            }
            if *e == 0 {
                return Err(IdealError::ZeroExponent(label.index));
            }
            if i > 0 && factors[i - 1].0.index == label.index {
                return Err(IdealError::DuplicateLabel(label.index));
            }
        }
        Ok(Self {
            factors,
            field_tag: field_tag.into(),
        })
    }

    /// The whole ring.
    pub fn unit(field_tag: impl Into<String>) -> Self {
        Self {
            factors: Vec::new(),
            field_tag: field_tag.into(),
        }
    }

    /// `P_1^e_1 · ... · P_g^e_g` with undescribed labels `1..=g`.
    pub fn from_exponents(field_tag: impl Into<String>, exponents: &[u32]) -> Result<Self> {
        let factors = exponents
            .iter()
            .enumerate()
            .map(|(i, &e)| (PrimeIdealLabel::new(i as u32 + 1), e))
            .collect();
        Self::new(field_tag, factors)
    }

    /// The ideal `nZ` viewed in `Z`, one label per rational prime.
    pub fn from_factorization(f: &Factorization) -> Self {
        let factors = f
            .pairs()
            .iter()
            .enumerate()
            .map(|(i, &(p, a))| {
                (
                    PrimeIdealLabel::described(i as u32 + 1, format!("({p})")),
                    a,
                )
            })
            .collect();
        Self {
            factors,
            field_tag: "Z".into(),
        }
    }

    /// Parses the canonical text form `P1^2*P3^1` (`1` for the unit ideal).
    pub fn parse(field_tag: impl Into<String>, text: &str) -> Result<Self> {
        let text = text.trim();
        if text == "1" {
            return Ok(Self::unit(field_tag));
        }
        let bad = || IdealError::Parse(text.to_string());
        let factors = text
            .split('*')
            .map(|part| {
                let (index, exponent) = part
                    .trim()
                    .strip_prefix('P')
                    .ok_or_else(bad)?
                    .split_once('^')
                    .ok_or_else(bad)?;
                let index: u32 = index.parse().map_err(|_| bad())?;
                let exponent: u32 = exponent.parse().map_err(|_| bad())?;
                Ok((PrimeIdealLabel::new(index), exponent))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(field_tag, factors)
    }

    pub fn factors(&self) -> &[(PrimeIdealLabel, u32)] {
        &self.factors
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.factors.iter().map(|(_, e)| *e)
    }

    pub fn field_tag(&self) -> &str {
        &self.field_tag
    }

    pub fn is_unit(&self) -> bool {
        self.factors.is_empty()
    }

    /// `[{index, exponent, description}, ...]` with numbers as decimal strings.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.factors
                .iter()
                .map(|(label, e)| {
                    json!({
                        "index": label.index.to_string(),
                        "exponent": e.to_string(),
                        "description": label.description,
                    })
                })
                .collect(),
        )
    }

    fn with_exponents(&self, exponents: &[u32]) -> Self {
        let factors = self
            .factors
            .iter()
            .zip(exponents)
            .filter(|(_, &a)| a > 0)
            .map(|((label, _), &a)| (label.clone(), a))
            .collect();
        Self {
            factors,
            field_tag: self.field_tag.clone(),
        }
    }
}

impl fmt::Display for FactoredIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (label, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            write!(f, "P{}^{}", label.index, e)?;
        }
        Ok(())
    }
}

/// `τ(I) = ∏ (e_i + 1)`.
pub fn tau_ideal(ideal: &FactoredIdeal) -> BigUint {
    ideal
        .exponents()
        .fold(BigUint::one(), |acc, e| acc * (u64::from(e) + 1))
}

/// `τ^(e)(I) = ∏ τ(e_i)`.
pub fn tau_e_ideal(ideal: &FactoredIdeal) -> BigUint {
    ideal
        .exponents()
        .fold(BigUint::one(), |acc, e| acc * tau_of_exponent(e))
}

pub fn omega_ideal(ideal: &FactoredIdeal) -> u64 {
    ideal.factors.len() as u64
}

pub fn big_omega_ideal(ideal: &FactoredIdeal) -> u64 {
    ideal.exponents().map(u64::from).sum()
}

/// `I^k`: every exponent multiplied by `k`.
pub fn ideal_pow(ideal: &FactoredIdeal, k: u32) -> Result<FactoredIdeal> {
    if k == 0 {
        return Err(IdealError::ZeroPower);
    }
    let factors = ideal
        .factors
        .iter()
        .map(|(label, e)| {
            e.checked_mul(k)
                .map(|ek| (label.clone(), ek))
                .ok_or(IdealError::ExponentOverflow(label.index))
        })
        .collect::<Result<_>>()?;
    Ok(FactoredIdeal {
        factors,
        field_tag: ideal.field_tag.clone(),
    })
}

fn guard(count: BigUint) -> Result<()> {
    if count > BigUint::from(ENUMERATION_LIMIT) {
        return Err(IdealError::TooManyDivisors(count));
    }
    Ok(())
}

/// Walks the cartesian product of `choices` with the last coordinate
/// varying fastest, i.e. lexicographic order on the exponent vectors.
fn product_lex(choices: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(choices.len())];
    for options in choices {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                options.iter().map(move |&a| {
                    let mut v = prefix.clone();
                    v.push(a);
                    v
                })
            })
            .collect();
    }
    out
}

/// All `∏ P_i^a_i` with `0 ≤ a_i ≤ e_i`, in lexicographic order of the
/// exponent vectors. Factors with `a_i = 0` are omitted.
pub fn enumerate_ideal_divisors(ideal: &FactoredIdeal) -> Result<Vec<FactoredIdeal>> {
    guard(tau_ideal(ideal))?;
    let choices: Vec<Vec<u32>> = ideal.exponents().map(|e| (0..=e).collect()).collect();
    Ok(product_lex(&choices)
        .iter()
        .map(|v| ideal.with_exponents(v))
        .collect())
}

/// All `∏ P_i^b_i` with `b_i | e_i`, `b_i ≥ 1`, in lexicographic order.
pub fn enumerate_ideal_exp_divisors(ideal: &FactoredIdeal) -> Result<Vec<FactoredIdeal>> {
    guard(tau_e_ideal(ideal))?;
    let choices: Vec<Vec<u32>> = ideal
        .exponents()
        .map(|e| (1..=e).filter(|b| e % b == 0).collect())
        .collect();
    Ok(product_lex(&choices)
        .iter()
        .map(|v| ideal.with_exponents(v))
        .collect())
}
