//! Brute-force re-derivations of the closed forms.
//!
//! Nothing here calls into `arith`, `ideal` or `fields` for the quantity
//! being checked: divisors come from divisibility scans, splitting from
//! root counts of the minimal polynomial, orders from linear scans.

mod suite;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::fields::{CharacterValue, SplittingType};

pub use suite::{run_suite, OracleRange, SuiteId, SuiteReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("argument must be at least {min}, got {got}")]
    TooSmall { min: u64, got: u64 },
    #[error("{a} is not coprime to {n}")]
    NotCoprime { a: i64, n: u64 },
    #[error("outside the oracle domain: {0}")]
    OutOfDomain(String),
}

pub type Result<T> = std::result::Result<T, OracleError>;

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

pub(crate) fn trial_is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Multiplicity of `p` in `n`.
fn valuation(mut n: u64, p: u64) -> u32 {
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    v
}

/// Number of `d ∈ [1, n]` dividing `n`, scanning `d ≤ √n` and pairing
/// each hit with `n / d`.
pub fn brute_tau(n: u64) -> u64 {
    let mut count = 0;
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            count += if d * d == n { 1 } else { 2 };
        }
        d += 1;
    }
    count
}

fn scan_divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Divisors of `n` with the same prime support as `n` whose exponent at
/// every prime divides the exponent in `n`, ascending.
pub fn brute_exponential_divisors(n: u64) -> Result<Vec<u64>> {
    if n < 2 {
        return Err(OracleError::TooSmall { min: 2, got: n });
    }
    let primes: Vec<u64> = scan_divisors(n)
        .into_iter()
        .filter(|&d| trial_is_prime(d))
        .collect();
    let exps: Vec<u32> = primes.iter().map(|&p| valuation(n, p)).collect();
    Ok(scan_divisors(n)
        .into_iter()
        .filter(|&d| {
            primes.iter().zip(&exps).all(|(&p, &a)| {
                let b = valuation(d, p);
                b >= 1 && a % b == 0
            })
        })
        .collect())
}

/// Splitting of `p` in `Q(√d)` from the roots of the minimal polynomial of
/// the integral generator modulo `p`: `x² - d` for `d ≡ 2, 3 (mod 4)`,
/// `x² - x + (1 - d)/4` for `d ≡ 1 (mod 4)`.
///
/// Two roots mean split, one (necessarily double) root ramified, none inert.
pub fn dedekind_quadratic_oracle(d: i64, p: u64) -> SplittingType {
    let p128 = i128::from(p);
    let d128 = i128::from(d);
    let (b, c) = if d128.rem_euclid(4) == 1 {
        (-1i128, (1 - d128) / 4)
    } else {
        (0, -d128)
    };
    let b = b.rem_euclid(p128);
    let c = c.rem_euclid(p128);
    let roots = (0..p128)
        .filter(|&x| (x * x % p128 + b * x + c) % p128 == 0)
        .take(3)
        .count();
    let (e, f, g) = match roots {
        2 => (1, 1, 2),
        1 => (2, 1, 1),
        0 => (1, 2, 1),
        _ => unreachable!("a quadratic has at most two roots mod a prime"),
    };
    SplittingType::new(e, f, g, 2).expect("efg = 2")
}

/// Least `f ≥ 1` with `a^f ≡ 1 (mod n)` by stepping through the powers.
pub fn brute_order(a: i64, n: u64) -> Result<u64> {
    if n < 2 {
        return Err(OracleError::TooSmall { min: 2, got: n });
    }
    let a_mod = i128::from(a).rem_euclid(i128::from(n)) as u64;
    if gcd(a_mod, n) != 1 {
        return Err(OracleError::NotCoprime { a, n });
    }
    let mut x = a_mod;
    let mut f = 1u64;
    while x != 1 % n {
        x = ((u128::from(x) * u128::from(a_mod)) % u128::from(n)) as u64;
        f += 1;
    }
    Ok(f)
}

/// `(μ / pZ[ζ_l])_l` by full-precision division of `p^(l-1) - 1` by `l`.
pub fn brute_character(l: u64, mu: i64, p: u64) -> Result<CharacterValue> {
    if l < 3 || !trial_is_prime(l) {
        return Err(OracleError::OutOfDomain(format!(
            "l = {l} is not an odd prime"
        )));
    }
    if !trial_is_prime(p) || p == l {
        return Err(OracleError::OutOfDomain(format!(
            "p = {p} is not a prime other than l"
        )));
    }
    if mu == 0 {
        return Err(OracleError::OutOfDomain("mu = 0".into()));
    }
    let p_i64 = i64::try_from(p).map_err(|_| OracleError::OutOfDomain(format!("p = {p}")))?;
    if brute_order(p_i64, l)? != l - 1 {
        return Err(OracleError::OutOfDomain(format!(
            "p = {p} is not inert in Z[zeta_{l}]"
        )));
    }
    if i128::from(mu).rem_euclid(i128::from(p)) == 0 {
        return Ok(CharacterValue::Zero);
    }
    let t = brute_order(mu, p)?;
    let q = BigUint::from(p).pow(
        u32::try_from(l - 1).map_err(|_| OracleError::OutOfDomain(format!("l = {l} too large")))?,
    );
    let exponent = (q - BigUint::one()) / BigUint::from(l);
    Ok(if (exponent % BigUint::from(t)).is_zero() {
        CharacterValue::One
    } else {
        CharacterValue::NontrivialRoot
    })
}

/// `#{1 ≤ k ≤ n : gcd(k, n) = 1}`.
pub fn brute_phi(n: u64) -> u64 {
    (1..=n).filter(|&k| gcd(k, n) == 1).count() as u64
}
