//! Integer arithmetic functions: the divisor count `τ`, the unitary divisor
//! count `τ*`, the exponential divisor count `τ^(e)`, the prime counters
//! `ω` and `Ω`, Euler's totient, and the modular primitives (Legendre
//! symbol, multiplicative order) used by the splitting laws.
//!
//! Everything is computed from the canonical factorization. Values follow
//! the empty-product convention at `n = 1`: `τ(1) = τ*(1) = τ^(e)(1) = 1` and
//! `ω(1) = Ω(1) = 0`.

mod factor;
mod modular;

use std::fmt;

use thiserror::Error;

pub use factor::{factorize, is_prime};
pub use modular::{legendre_symbol, mul_mod, multiplicative_order, pow_mod};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("argument must be a positive integer, got 0")]
    Zero,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),
    #[error("{a} is not coprime to {n}")]
    NotCoprime { a: i128, n: u64 },
    #[error("invalid factorization: {0}")]
    InvalidFactorization(String),
}

pub type Result<T> = std::result::Result<T, ArithError>;

/// Canonical prime factorization `p_1^a_1 ... p_r^a_r` with `p_1 < ... < p_r`.
///
/// The empty factorization represents `1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Factorization {
    pairs: Vec<(u64, u32)>,
}

impl Factorization {
    /// The factorization of `1`.
    pub fn one() -> Self {
        Self::default()
    }

    /// Builds a factorization from explicit prime/exponent pairs, checking
    /// primality, strict ordering, positive exponents and that the product
    /// fits in 64 bits.
    pub fn from_pairs(pairs: Vec<(u64, u32)>) -> Result<Self> {
        let mut value: u64 = 1;
        for (i, &(p, a)) in pairs.iter().enumerate() {
            if !is_prime(p) {
                return Err(ArithError::InvalidFactorization(format!(
                    "{p} is not prime"
                )));
            }
            if a == 0 {
                return Err(ArithError::InvalidFactorization(format!(
                    "exponent of {p} is zero"
                )));
            }
            if i > 0 && pairs[i - 1].0 >= p {
                return Err(ArithError::InvalidFactorization(
                    "primes must be strictly increasing".into(),
                ));
            }
            value = p
                .checked_pow(a)
                .and_then(|pa| value.checked_mul(pa))
                .ok_or_else(|| {
                    ArithError::InvalidFactorization("product exceeds 64 bits".into())
                })?;
        }
        Ok(Self { pairs })
    }

    pub(crate) fn from_sorted_unchecked(pairs: Vec<(u64, u32)>) -> Self {
        debug_assert!(pairs.windows(2).all(|w| w[0].0 < w[1].0));
        Self { pairs }
    }

    pub fn pairs(&self) -> &[(u64, u32)] {
        &self.pairs
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.pairs.iter().map(|&(p, _)| p)
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.pairs.iter().map(|&(_, a)| a)
    }

    pub fn is_one(&self) -> bool {
        self.pairs.is_empty()
    }

    /// The represented integer.
    pub fn value(&self) -> u64 {
        self.pairs.iter().map(|&(p, a)| p.pow(a)).product()
    }

    /// `∏ (a_i + 1)`.
    pub fn tau(&self) -> u64 {
        self.exponents().map(|a| u64::from(a) + 1).product()
    }

    /// `2^ω`.
    pub fn tau_star(&self) -> u64 {
        1u64 << self.omega()
    }

    /// `∏ τ(a_i)`.
    pub fn tau_e(&self) -> u64 {
        self.exponents().map(tau_of_exponent).product()
    }

    pub fn omega(&self) -> u32 {
        self.pairs.len() as u32
    }

    pub fn big_omega(&self) -> u32 {
        self.exponents().sum()
    }

    pub fn euler_phi(&self) -> u64 {
        self.pairs
            .iter()
            .map(|&(p, a)| p.pow(a - 1) * (p - 1))
            .product()
    }

    /// All divisors in ascending order.
    pub fn divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, a) in &self.pairs {
            let mut next = Vec::with_capacity(out.len() * (a as usize + 1));
            for &d in &out {
                let mut pk = 1u64;
                for _ in 0..=a {
                    next.push(d * pk);
                    pk = pk.wrapping_mul(p);
                }
            }
            out = next;
        }
        out.sort_unstable();
        out
    }

    /// All exponential divisors `∏ p_i^b_i` with `b_i | a_i`, ascending.
    /// For `1` this is `[1]`.
    pub fn exponential_divisors(&self) -> Vec<u64> {
        let mut out = vec![1u64];
        for &(p, a) in &self.pairs {
            let powers: Vec<u64> = (1..=a).filter(|b| a % b == 0).map(|b| p.pow(b)).collect();
            out = out
                .iter()
                .flat_map(|&d| powers.iter().map(move |&pb| d * pb))
                .collect();
        }
        out.sort_unstable();
        out
    }
}

impl fmt::Display for Factorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.pairs.is_empty() {
            return f.write_str("1");
        }
        for (i, &(p, a)) in self.pairs.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if a == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{a}")?;
            }
        }
        Ok(())
    }
}

/// `τ(a)` for a (small) exponent, by pairing divisors up to `√a`.
pub(crate) fn tau_of_exponent(a: u32) -> u64 {
    let mut count = 0;
    let mut d = 1u32;
    while d * d <= a {
        if a % d == 0 {
            count += if d * d == a { 1 } else { 2 };
        }
        d += 1;
    }
    count
}

pub fn tau(n: u64) -> Result<u64> {
    factorize(n).map(|f| f.tau())
}

pub fn tau_star(n: u64) -> Result<u64> {
    factorize(n).map(|f| f.tau_star())
}

pub fn tau_e(n: u64) -> Result<u64> {
    factorize(n).map(|f| f.tau_e())
}

pub fn omega(n: u64) -> Result<u32> {
    factorize(n).map(|f| f.omega())
}

pub fn big_omega(n: u64) -> Result<u32> {
    factorize(n).map(|f| f.big_omega())
}

pub fn euler_phi(n: u64) -> Result<u64> {
    factorize(n).map(|f| f.euler_phi())
}

pub fn divisors(n: u64) -> Result<Vec<u64>> {
    factorize(n).map(|f| f.divisors())
}

pub fn exponential_divisors(n: u64) -> Result<Vec<u64>> {
    factorize(n).map(|f| f.exponential_divisors())
}

/// True iff no prime square divides `|d|`.
pub fn is_squarefree(d: i64) -> Result<bool> {
    let squarefree = factorize(d.unsigned_abs())?.exponents().all(|a| a == 1);
    Ok(squarefree)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().is_one());
        assert_eq!(factorize(12).unwrap().pairs(), &[(2, 2), (3, 1)]);
        assert_eq!(
            factorize(9_999_999_967).unwrap().pairs(),
            &[(9_999_999_967, 1)]
        );
        assert_eq!(factorize(0), Err(ArithError::Zero));
    }

    #[test]
    fn divisor_counts() {
        assert_eq!(tau(1).unwrap(), 1);
        assert_eq!(tau(12).unwrap(), 6);
        for a in 1..20u32 {
            assert_eq!(tau(3u64.pow(a)).unwrap(), u64::from(a) + 1);
        }
        assert_eq!(tau_star(1).unwrap(), 1);
        assert_eq!(tau_star(360).unwrap(), 8);
        assert_eq!(tau_e(1).unwrap(), 1);
        assert_eq!(tau_e(12).unwrap(), 2);
        // 2^4 * 3^6: τ(4) τ(6) = 3 * 4
        assert_eq!(tau_e(16 * 729).unwrap(), 12);
        assert!(tau(0).is_err() && tau_star(0).is_err() && tau_e(0).is_err());
    }

    #[test]
    fn prime_counters() {
        assert_eq!((omega(1).unwrap(), big_omega(1).unwrap()), (0, 0));
        assert_eq!((omega(12).unwrap(), big_omega(12).unwrap()), (2, 3));
        assert_eq!(
            (omega(7u64.pow(9)).unwrap(), big_omega(7u64.pow(9)).unwrap()),
            (1, 9)
        );
        assert_eq!(omega(0), Err(ArithError::Zero));
    }

    #[test]
    fn totient() {
        assert_eq!(euler_phi(1).unwrap(), 1);
        assert_eq!(euler_phi(5).unwrap(), 4);
        assert_eq!(euler_phi(12).unwrap(), 4);
        assert!(euler_phi(0).is_err());
    }

    #[test]
    fn divisor_lists() {
        assert_eq!(divisors(6).unwrap(), vec![1, 2, 3, 6]);
        assert_eq!(divisors(1).unwrap(), vec![1]);
        assert_eq!(exponential_divisors(12).unwrap(), vec![6, 12]);
        assert_eq!(exponential_divisors(13).unwrap(), vec![13]);
        assert_eq!(exponential_divisors(1).unwrap(), vec![1]);
        assert_eq!(
            exponential_divisors(144).unwrap(),
            vec![6, 12, 18, 36, 48, 144]
        );
        assert!(divisors(0).is_err() && exponential_divisors(0).is_err());
    }

    #[test]
    fn squarefree() {
        assert!(is_squarefree(-1).unwrap());
        assert!(!is_squarefree(12).unwrap());
        assert!(is_squarefree(30).unwrap());
        assert!(!is_squarefree(-18).unwrap());
        assert!(is_squarefree(i64::MIN).is_ok());
        assert_eq!(is_squarefree(0), Err(ArithError::Zero));
    }

    #[test]
    fn from_pairs_validation() {
        assert!(Factorization::from_pairs(vec![(2, 2), (3, 1)]).is_ok());
        assert!(Factorization::from_pairs(vec![(3, 1), (2, 1)]).is_err());
        assert!(Factorization::from_pairs(vec![(4, 1)]).is_err());
        assert!(Factorization::from_pairs(vec![(2, 0)]).is_err());
        assert!(Factorization::from_pairs(vec![(2, 64)]).is_err());
        assert_eq!(factorize(360).unwrap().to_string(), "2^3 * 3^2 * 5");
    }

    #[test]
    fn exponent_tau() {
        let expected = [0, 1, 2, 2, 3, 2, 4, 2, 4, 3, 4];
        for (a, &t) in expected.iter().enumerate() {
            assert_eq!(tau_of_exponent(a as u32), t);
        }
    }
}
