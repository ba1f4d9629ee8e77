//! Checkers for the divisor-function inequalities on integers and on
//! factored ideals, plus exhaustive sweeps over ranges.
//!
//! Every checker returns an [`InequalityReport`] holding exact values
//! (arbitrary-precision integers or rationals). Whether a claim holds is
//! recomputed from the stored sides and relation on demand.

mod report;
mod sweep;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Roots;
use num_rational::BigRational;
use num_traits::{One, Pow};
use thiserror::Error;

use crate::arith::{self, tau_of_exponent, ArithError};
use crate::fields::{FieldError, SplittingType};
use crate::ideal::{
    big_omega_ideal, ideal_pow, omega_ideal, tau_e_ideal, tau_ideal, FactoredIdeal, IdealError,
};

pub use report::{int, nat, ratio, Comparison, InequalityReport, Relation};
pub use sweep::{sweep, SweepOutcome, SweepRange};

/// Largest exponent accepted when forming powers of two or of `n`.
pub const MAX_POWER_EXPONENT: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("{0} is not a perfect square >= 4")]
    NotPerfectSquare(u64),
    #[error("the unit ideal is excluded: the bounds fail at the empty product")]
    UnitIdeal,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("unknown claim id {0:?}")]
    UnknownClaim(String),
    #[error("malformed range: {0}")]
    InvalidRange(String),
    #[error("splitting type and ideal disagree: {0}")]
    InconsistentSplit(String),
    #[error("exponent {0} is too large to evaluate exactly")]
    TooLarge(u64),
    #[error(transparent)]
    Arith(#[from] ArithError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

pub type Result<T> = std::result::Result<T, VerifyError>;

/// Stable identifiers of the checked claims.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ClaimId {
    /// `2^ω(n) ≤ τ^(e)(n) ≤ 2^Ω(n)` for perfect squares.
    Sandor,
    /// `2^ω(I²) ≤ τ^(e)(I²) < 2^Ω(I²)`.
    SquareIdealBounds,
    /// `τ(n) ≤ 2^(n-1)`.
    TauPowerBound,
    /// `2^ω(I²) ≤ τ^(e)(I²) ≤ 2^(Ω(I²) - ω(I²))`.
    SquareIdealRefined,
    /// `(m+1)^n + 1 ≥ τ(m)^n + 2^n`.
    PowerSum,
    /// `τ(n) + 1 ≥ τ^(e)(n) + τ*(n)`.
    UnitarySum,
    /// `τ(pO_K) + 1` versus `τ^(e)(pO_K) + 2^ω(pO_K)` by splitting case.
    PrimeIdeal,
    /// `τ(n) ≥ τ^(e)(n) + τ(n)/ω(n) · Σ 1/(a_i + 1)`.
    ReciprocalExponentSum,
    /// `(e+1)^g ≥ τ(e)^g + (e+1)^(g-1)`.
    GaloisPrimeIdeal,
    /// `e/(e+1) ≥ τ(e)^g/(e+1)^g + 1/(e+1)` in odd degree.
    OddDegreeRamified,
}

impl ClaimId {
    pub const ALL: [ClaimId; 10] = [
        Self::Sandor,
        Self::SquareIdealBounds,
        Self::TauPowerBound,
        Self::SquareIdealRefined,
        Self::PowerSum,
        Self::UnitarySum,
        Self::PrimeIdeal,
        Self::ReciprocalExponentSum,
        Self::GaloisPrimeIdeal,
        Self::OddDegreeRamified,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Sandor => "sandor",
            Self::SquareIdealBounds => "prop_2_2",
            Self::TauPowerBound => "prop_2_3",
            Self::SquareIdealRefined => "prop_2_4",
            Self::PowerSum => "prop_2_5",
            Self::UnitarySum => "prop_2_6",
            Self::PrimeIdeal => "prop_2_7_2_10",
            Self::ReciprocalExponentSum => "thm_2_11",
            Self::GaloisPrimeIdeal => "thm_2_12",
            Self::OddDegreeRamified => "thm_2_13",
        }
    }
}

impl fmt::Display for ClaimId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ClaimId {
    type Err = VerifyError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| VerifyError::UnknownClaim(s.to_string()))
    }
}

fn two_pow(k: u64) -> Result<BigRational> {
    if k > MAX_POWER_EXPONENT {
        return Err(VerifyError::TooLarge(k));
    }
    Ok(nat(BigUint::one() << k as usize))
}

fn big_pow(base: u64, k: u64) -> Result<BigUint> {
    if k > MAX_POWER_EXPONENT {
        return Err(VerifyError::TooLarge(k));
    }
    Ok(Pow::pow(BigUint::from(base), k as u32))
}

pub fn check_sandor(n: u64) -> Result<InequalityReport> {
    let m = n.sqrt();
    if n < 4 || m * m != n {
        return Err(VerifyError::NotPerfectSquare(n));
    }
    let f = arith::factorize(n)?;
    let te = int(f.tau_e());
    Ok(InequalityReport::new(
        ClaimId::Sandor,
        format!("n={n}"),
        vec![
            Comparison::new(
                "lower",
                two_pow(f.omega().into())?,
                Relation::Le,
                te.clone(),
            ),
            Comparison::new("upper", te, Relation::Le, two_pow(f.big_omega().into())?),
        ],
    ))
}

fn square_of(ideal: &FactoredIdeal) -> Result<FactoredIdeal> {
    if ideal.is_unit() {
        return Err(VerifyError::UnitIdeal);
    }
    Ok(ideal_pow(ideal, 2)?)
}

/// Bounds on `τ^(e)(I²)` with a strict upper bound `2^Ω(I²)`.
pub fn check_square_ideal_bounds(ideal: &FactoredIdeal) -> Result<InequalityReport> {
    let sq = square_of(ideal)?;
    let te = nat(tau_e_ideal(&sq));
    Ok(InequalityReport::new(
        ClaimId::SquareIdealBounds,
        format!("I={ideal}"),
        vec![
            Comparison::new(
                "lower",
                two_pow(omega_ideal(&sq))?,
                Relation::Le,
                te.clone(),
            ),
            Comparison::new("upper", te, Relation::Lt, two_pow(big_omega_ideal(&sq))?),
        ],
    ))
}

/// Bounds on `τ^(e)(I²)` with the upper bound `2^(Ω(I²) - ω(I²))`.
pub fn check_square_ideal_refined(ideal: &FactoredIdeal) -> Result<InequalityReport> {
    let sq = square_of(ideal)?;
    let te = nat(tau_e_ideal(&sq));
    let omega = omega_ideal(&sq);
    Ok(InequalityReport::new(
        ClaimId::SquareIdealRefined,
        format!("I={ideal}"),
        vec![
            Comparison::new("lower", two_pow(omega)?, Relation::Le, te.clone()),
            Comparison::new(
                "upper",
                te,
                Relation::Le,
                two_pow(big_omega_ideal(&sq) - omega)?,
            ),
        ],
    ))
}

/// `τ(n) ≤ 2^(n-1)`.
pub fn check_tau_power_bound(n: u64) -> Result<InequalityReport> {
    let tau = arith::tau(n)?;
    Ok(InequalityReport::new(
        ClaimId::TauPowerBound,
        format!("n={n}"),
        vec![Comparison::new(
            "bound",
            int(tau),
            Relation::Le,
            two_pow(n - 1)?,
        )],
    ))
}

/// `(m+1)^n + 1 ≥ τ(m)^n + 2^n` for `m ≥ 2`.
pub fn check_power_sum(m: u64, n: u64) -> Result<InequalityReport> {
    if m < 2 {
        return Err(VerifyError::InvalidArgument(format!(
            "m = {m} must be at least 2"
        )));
    }
    let tau_m = arith::tau(m)?;
    let lhs = big_pow(m + 1, n)? + 1u32;
    let rhs = big_pow(tau_m, n)? + big_pow(2, n)?;
    Ok(InequalityReport::new(
        ClaimId::PowerSum,
        format!("m={m},n={n}"),
        vec![Comparison::new("bound", nat(lhs), Relation::Ge, nat(rhs))],
    ))
}

/// `τ(n) + 1 ≥ τ^(e)(n) + τ*(n)`.
pub fn check_unitary_sum(n: u64) -> Result<InequalityReport> {
    let f = arith::factorize(n)?;
    Ok(InequalityReport::new(
        ClaimId::UnitarySum,
        format!("n={n}"),
        vec![Comparison::new(
            "bound",
            int(f.tau() + 1),
            Relation::Ge,
            int(f.tau_e() + f.tau_star()),
        )],
    ))
}

/// Which relation between `τ(pO_K) + 1` and `τ^(e)(pO_K) + 2^ω(pO_K)` the
/// splitting type guarantees.
pub fn expected_prime_relation(split: &SplittingType) -> (&'static str, Relation) {
    let degree = split.degree();
    if !split.is_ramified() {
        ("unramified", Relation::Eq)
    } else if degree == 2 {
        ("quadratic", Relation::Eq)
    } else if split.is_totally_ramified() {
        ("totally ramified", Relation::Gt)
    } else {
        ("ramified", Relation::Ge)
    }
}

/// Evaluates `τ(pO_K) + 1` against `τ^(e)(pO_K) + 2^ω(pO_K)` on the ideal
/// emitted by a split law, asserting the relation its splitting case gives.
pub fn classify_prime_claim(
    split: &SplittingType,
    ideal: &FactoredIdeal,
) -> Result<InequalityReport> {
    if omega_ideal(ideal) != u64::from(split.g()) || ideal.exponents().any(|e| e != split.e()) {
        return Err(VerifyError::InconsistentSplit(format!(
            "{split} vs {ideal}"
        )));
    }
    let (label, relation) = expected_prime_relation(split);
    let lhs = nat(tau_ideal(ideal) + 1u32);
    let rhs = nat(tau_e_ideal(ideal)) + two_pow(omega_ideal(ideal))?;
    Ok(InequalityReport::new(
        ClaimId::PrimeIdeal,
        format!("{}: {ideal} ({split})", ideal.field_tag()),
        vec![Comparison::new(label, lhs, relation, rhs)],
    ))
}

/// `τ(n) ≥ τ^(e)(n) + τ(n)/ω(n) · Σ 1/(a_i + 1)` for `n ≥ 2`.
pub fn check_reciprocal_exponent_sum(n: u64) -> Result<InequalityReport> {
    if n < 2 {
        return Err(VerifyError::InvalidArgument(format!(
            "n = {n} must be at least 2"
        )));
    }
    let f = arith::factorize(n)?;
    let reciprocal_sum: BigRational = f.exponents().map(|a| ratio(1, u64::from(a) + 1)).sum();
    let rhs = int(f.tau_e()) + ratio(f.tau(), f.omega()) * reciprocal_sum;
    Ok(InequalityReport::new(
        ClaimId::ReciprocalExponentSum,
        format!("n={n}"),
        vec![Comparison::new("bound", int(f.tau()), Relation::Ge, rhs)],
    ))
}

/// Integer form `(e+1)^g ≥ τ(e)^g + (e+1)^(g-1)` for `pO_K = (P_1···P_g)^e`.
pub fn check_galois_prime_ideal(e: u32, g: u32) -> Result<InequalityReport> {
    if e == 0 || g == 0 {
        return Err(VerifyError::InvalidArgument(format!(
            "e = {e} and g = {g} must be positive"
        )));
    }
    let lhs = big_pow(u64::from(e) + 1, g.into())?;
    let rhs = big_pow(tau_of_exponent(e), g.into())? + big_pow(u64::from(e) + 1, u64::from(g) - 1)?;
    Ok(InequalityReport::new(
        ClaimId::GaloisPrimeIdeal,
        format!("e={e},g={g}"),
        vec![Comparison::new("bound", nat(lhs), Relation::Ge, nat(rhs))],
    ))
}

/// Rational form `τ(I) ≥ τ^(e)(I) + τ(I)/ω(I) · g/(e+1)`, evaluated on an
/// ideal `P_1^e···P_g^e` through the ideal functions.
pub fn check_galois_prime_ideal_on(ideal: &FactoredIdeal) -> Result<InequalityReport> {
    let mut exps = ideal.exponents();
    let e = exps.next().ok_or(VerifyError::UnitIdeal)?;
    if exps.any(|x| x != e) {
        return Err(VerifyError::InvalidArgument(format!(
            "{ideal} is not of the form (P_1...P_g)^e"
        )));
    }
    let g = omega_ideal(ideal);
    let tau = nat(tau_ideal(ideal));
    let rhs = nat(tau_e_ideal(ideal)) + &tau / int(g) * ratio(g, u64::from(e) + 1);
    Ok(InequalityReport::new(
        ClaimId::GaloisPrimeIdeal,
        format!("I={ideal}"),
        vec![Comparison::new("bound", tau, Relation::Ge, rhs)],
    ))
}

/// `e/(e+1) ≥ τ(e)^g/(e+1)^g + (1/g)·(g/(e+1))` for `e ≥ 3`, without the
/// degree hypothesis.
pub fn odd_degree_ramified_bound(e: u32, g: u32) -> Result<InequalityReport> {
    if e < 3 {
        return Err(VerifyError::InvalidArgument(format!(
            "e = {e} must be at least 3"
        )));
    }
    if g == 0 {
        return Err(VerifyError::InvalidArgument("g must be positive".into()));
    }
    let e64 = u64::from(e);
    let lhs = ratio(e64, e64 + 1);
    let rhs = nat(big_pow(tau_of_exponent(e), g.into())?) / nat(big_pow(e64 + 1, g.into())?)
        + ratio(1, g) * ratio(g, e64 + 1);
    Ok(InequalityReport::new(
        ClaimId::OddDegreeRamified,
        format!("e={e},g={g}"),
        vec![Comparison::new("bound", lhs, Relation::Ge, rhs)],
    ))
}

/// The odd-degree bound for a ramified prime in a Galois field of odd
/// degree `n ≥ 3` with `e·g | n`.
pub fn check_odd_degree_ramified(e: u32, g: u32, n: u64) -> Result<InequalityReport> {
    if n < 3 || n % 2 == 0 {
        return Err(VerifyError::InvalidArgument(format!(
            "degree n = {n} must be odd and at least 3"
        )));
    }
    if g == 0 || n % (u64::from(e) * u64::from(g)) != 0 {
        return Err(VerifyError::InvalidArgument(format!(
            "e*g = {} must divide n = {n}",
            u64::from(e) * u64::from(g)
        )));
    }
    let mut report = odd_degree_ramified_bound(e, g)?;
    report.witness = format!("e={e},g={g},n={n}");
    Ok(report)
}
