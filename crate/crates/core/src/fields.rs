//! Decomposition of a rational prime `p` in quadratic fields `Q(√d)`,
//! cyclotomic fields `Q(ζ_n)` and Kummer extensions `Q(ζ_l, μ^(1/l))` of
//! `Q(ζ_l)`.
//!
//! Kummer support is limited to base primes `p` that stay prime in `Z[ζ_l]`
//! (order of `p` mod `l` equal to `l - 1`), and cyclotomic support to
//! `p ∤ n` or `n = p`. Anything else is rejected with
//! [`FieldError::OutOfScope`] or [`FieldError::NonInertBasePrime`].

use std::fmt;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

use crate::arith::{
    self, is_prime, is_squarefree, legendre_symbol, multiplicative_order, ArithError,
};
use crate::ideal::{FactoredIdeal, PrimeIdealLabel};

/// Largest `g` (or `l`) for which a decomposition is materialised.
pub const MAX_PRIME_FACTORS: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("d = {0} must be a squarefree integer other than 0 and 1")]
    InvalidQuadratic(i64),
    #[error("cyclotomic modulus must be at least 3, got {0}")]
    ModulusTooSmall(u64),
    #[error("l = {0} must be an odd prime")]
    InvalidKummerExponent(u64),
    #[error("mu must be nonzero")]
    ZeroRadicand,
    #[error("base prime p must differ from l = {0}")]
    BaseEqualsExponent(u64),
    #[error("non-inert base prime: p = {p} has order {order} mod {l}, not {expected}; out of implemented scope")]
    NonInertBasePrime {
        p: u64,
        l: u64,
        order: u64,
        expected: u64,
    },
    #[error("out of scope: {0}")]
    OutOfScope(String),
    #[error("unsupported field type: {0}")]
    Unsupported(String),
    #[error("decomposition into {0} primes exceeds the supported size")]
    TooManyPrimes(u64),
    #[error("e*f*g = {product} but the degree is {degree}")]
    InconsistentSplitting { product: u128, degree: u64 },
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub type Result<T> = std::result::Result<T, FieldError>;

/// `Q(√d)` with `d` squarefree, `d ∉ {0, 1}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct QuadraticField {
    d: i64,
    discriminant: i64,
}

impl QuadraticField {
    pub fn new(d: i64) -> Result<Self> {
        let discriminant = quadratic_discriminant(d)?;
        Ok(Self { d, discriminant })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn discriminant(&self) -> i64 {
        self.discriminant
    }

    pub fn tag(&self) -> String {
        format!("Q(sqrt({}))", self.d)
    }
}

/// `Δ_K`: `d` when `d ≡ 1 (mod 4)`, `4d` otherwise.
pub fn quadratic_discriminant(d: i64) -> Result<i64> {
    if d == 0 || d == 1 || !is_squarefree(d)? {
        return Err(FieldError::InvalidQuadratic(d));
    }
    if d.rem_euclid(4) == 1 {
        Ok(d)
    } else {
        d.checked_mul(4).ok_or(FieldError::InvalidQuadratic(d))
    }
}

/// `Q(ζ_n)`, `n ≥ 3`, of degree `φ(n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CyclotomicField {
    n: u64,
    degree: u64,
}

impl CyclotomicField {
    pub fn new(n: u64) -> Result<Self> {
        if n < 3 {
            return Err(FieldError::ModulusTooSmall(n));
        }
        Ok(Self {
            n,
            degree: arith::euler_phi(n)?,
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn tag(&self) -> String {
        format!("Q(zeta_{})", self.n)
    }
}

/// `L = Q(ζ_l, μ^(1/l))` as a degree-`l` extension of `K = Q(ζ_l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KummerField {
    l: u64,
    mu: i64,
}

impl KummerField {
    pub fn new(l: u64, mu: i64) -> Result<Self> {
        if l == 2 || !is_prime(l) {
            return Err(FieldError::InvalidKummerExponent(l));
        }
        if l > MAX_PRIME_FACTORS {
            return Err(FieldError::TooManyPrimes(l));
        }
        if mu == 0 {
            return Err(FieldError::ZeroRadicand);
        }
        Ok(Self { l, mu })
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn mu(&self) -> i64 {
        self.mu
    }

    pub fn tag(&self) -> String {
        format!("Q(zeta_{}, ({})^(1/{}))", self.l, self.mu, self.l)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NumberField {
    Quadratic(QuadraticField),
    Cyclotomic(CyclotomicField),
    Kummer(KummerField),
}

/// `(e, f, g)` over an extension of degree `n`, with `e·f·g = n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SplittingType {
    e: u32,
    f: u64,
    g: u32,
    n: u64,
}

impl SplittingType {
    pub fn new(e: u32, f: u64, g: u32, n: u64) -> Result<Self> {
        let product = u128::from(e) * u128::from(f) * u128::from(g);
        if e == 0 || f == 0 || g == 0 || product != u128::from(n) {
            return Err(FieldError::InconsistentSplitting { product, degree: n });
        }
        Ok(Self { e, f, g, n })
    }

    pub fn e(&self) -> u32 {
        self.e
    }

    pub fn f(&self) -> u64 {
        self.f
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    pub fn degree(&self) -> u64 {
        self.n
    }

    pub fn is_ramified(&self) -> bool {
        self.e > 1
    }

    pub fn is_totally_ramified(&self) -> bool {
        u64::from(self.e) == self.n
    }

    pub fn is_inert(&self) -> bool {
        self.f == self.n
    }

    pub fn is_split_completely(&self) -> bool {
        u64::from(self.g) == self.n
    }

    /// The Galois-shaped ideal `P_1^e · ... · P_g^e`.
    pub fn ideal(&self, field_tag: &str) -> FactoredIdeal {
        FactoredIdeal::from_exponents(field_tag, &vec![self.e; self.g as usize])
            .expect("e >= 1 and distinct labels")
    }
}

impl fmt::Display for SplittingType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "e={}, f={}, g={} (n={})", self.e, self.f, self.g, self.n)
    }
}

/// How `p` decomposes: the splitting type and the factored ideal `pO`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub splitting: SplittingType,
    pub ideal: FactoredIdeal,
}

/// Value class of the `l`-power residue character `(μ/P)_l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CharacterValue {
    Zero,
    One,
    NontrivialRoot,
}

impl CharacterValue {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Zero => "zero",
            Self::One => "one",
            Self::NontrivialRoot => "nontrivial_root",
        }
    }
}

impl fmt::Display for CharacterValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn divides(p: u64, x: i64) -> bool {
    i128::from(x).rem_euclid(i128::from(p)) == 0
}

fn require_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(FieldError::NotPrime(p))
    }
}

pub fn split_quadratic(field: &QuadraticField, p: u64) -> Result<Decomposition> {
    require_prime(p)?;
    let d = field.d;
    let tag = field.tag();
    let (g, e, labels) = if p == 2 {
        match (d.rem_euclid(4), d.rem_euclid(8)) {
            (2, _) => (1, 2, vec![Some(format!("(2, sqrt({d}))"))]),
            (3, _) => (1, 2, vec![Some(format!("(2, 1+sqrt({d}))"))]),
            (_, 1) => (2, 1, vec![Some(format!("(2, (1+sqrt({d}))/2)")), None]),
            (_, 5) => (1, 1, vec![Some("(2)".to_string())]),
            _ => unreachable!("squarefree d is never 0 mod 4"),
        }
    } else if divides(p, field.discriminant) {
        (1, 2, vec![Some(format!("({p}, sqrt({d}))"))])
    } else {
        match legendre_symbol(field.discriminant, p)? {
            1 => (2, 1, vec![None, None]),
            _ => (1, 1, vec![Some(format!("({p})"))]),
        }
    };
    let splitting = SplittingType::new(e, 2 / (u64::from(e) * u64::from(g)), g, 2)?;
    let factors = labels
        .into_iter()
        .enumerate()
        .map(|(i, desc)| {
            let index = i as u32 + 1;
            let label = match desc {
                Some(s) => PrimeIdealLabel::described(index, s),
                None => PrimeIdealLabel::new(index),
            };
            (label, e)
        })
        .collect();
    let ideal = FactoredIdeal::new(tag, factors).expect("distinct labels");
    Ok(Decomposition { splitting, ideal })
}

pub fn split_cyclotomic(field: &CyclotomicField, p: u64) -> Result<Decomposition> {
    require_prime(p)?;
    let n = field.n;
    let degree = field.degree;
    let splitting = if n % p != 0 {
        let f = multiplicative_order(p, n)?;
        let g = degree / f;
        if g > MAX_PRIME_FACTORS {
            return Err(FieldError::TooManyPrimes(g));
        }
        SplittingType::new(1, f, g as u32, degree)?
    } else if n == p {
        let e = u32::try_from(p - 1).map_err(|_| FieldError::TooManyPrimes(p))?;
        SplittingType::new(e, 1, 1, degree)?
    } else {
        return Err(FieldError::OutOfScope(format!(
            "p = {p} divides n = {n} with n != p"
        )));
    };
    Ok(Decomposition {
        ideal: splitting.ideal(&field.tag()),
        splitting,
    })
}

/// `p` ramifies iff it divides the discriminant.
///
/// Cyclotomic fields are covered for `p ∤ n` (unramified) and `n = p`
/// (totally ramified).
pub fn is_ramified(field: &NumberField, p: u64) -> Result<bool> {
    match field {
        NumberField::Quadratic(q) => {
            require_prime(p)?;
            Ok(divides(p, q.discriminant))
        }
        NumberField::Cyclotomic(c) => {
            require_prime(p)?;
            if c.n % p != 0 {
                Ok(false)
            } else if c.n == p {
                Ok(true)
            } else {
                Err(FieldError::OutOfScope(format!(
                    "p = {p} divides n = {} with n != p",
                    c.n
                )))
            }
        }
        NumberField::Kummer(_) => Err(FieldError::Unsupported(
            "Kummer extensions have no discriminant model".into(),
        )),
    }
}

fn check_inert_base(field: &KummerField, p: u64) -> Result<()> {
    require_prime(p)?;
    let l = field.l;
    if p == l {
        return Err(FieldError::BaseEqualsExponent(l));
    }
    let order = multiplicative_order(p, l)?;
    if order != l - 1 {
        return Err(FieldError::NonInertBasePrime {
            p,
            l,
            order,
            expected: l - 1,
        });
    }
    Ok(())
}

/// `(μ / pZ[ζ_l])_l` for a base prime `p` inert in `Z[ζ_l]`.
///
/// The residue field has `q = p^(l-1)` elements and `μ` lies in its prime
/// subfield, so `μ^((q-1)/l) = 1` iff `ord_p(μ)` divides `(q-1)/l`. That
/// quotient is reduced modulo `t = ord_p(μ)` by working mod `l·t`.
pub fn power_residue_character(field: &KummerField, p: u64) -> Result<CharacterValue> {
    check_inert_base(field, p)?;
    let l = field.l;
    let mu = field.mu;
    if divides(p, mu) {
        return Ok(CharacterValue::Zero);
    }
    let t = multiplicative_order(mu, p)?;
    let modulus = BigUint::from(l) * BigUint::from(t);
    let q_mod = BigUint::from(p).modpow(&BigUint::from(l - 1), &modulus);
    // q ≡ 1 (mod l), so (q - 1) mod l·t is a multiple of l.
    let q_minus_one = (q_mod + &modulus - 1u32) % &modulus;
    let quotient_mod_t = q_minus_one / l;
    Ok(if quotient_mod_t.is_zero() {
        CharacterValue::One
    } else {
        CharacterValue::NontrivialRoot
    })
}

/// Relative decomposition of `pZ[ζ_l]` in `L`, a degree-`l` extension.
pub fn split_kummer(field: &KummerField, p: u64) -> Result<Decomposition> {
    let l = field.l;
    let l32 = l as u32;
    let splitting = match power_residue_character(field, p)? {
        CharacterValue::Zero => SplittingType::new(l32, 1, 1, l)?,
        CharacterValue::NontrivialRoot => SplittingType::new(1, l, 1, l)?,
        CharacterValue::One => SplittingType::new(1, 1, l32, l)?,
    };
    Ok(Decomposition {
        ideal: splitting.ideal(&field.tag()),
        splitting,
    })
}

/// Dispatches to the split law for the field type.
pub fn split(field: &NumberField, p: u64) -> Result<Decomposition> {
    match field {
        NumberField::Quadratic(q) => split_quadratic(q, p),
        NumberField::Cyclotomic(c) => split_cyclotomic(c, p),
        NumberField::Kummer(k) => split_kummer(k, p),
    }
}
