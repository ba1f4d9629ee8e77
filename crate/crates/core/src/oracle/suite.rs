//! Cross-checks of the closed-form paths against the oracles over ranges.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::{
    brute_character, brute_exponential_divisors, brute_order, brute_phi, brute_tau,
    dedekind_quadratic_oracle, trial_is_prime,
};
use crate::arith;
use crate::fields::{
    power_residue_character, split_cyclotomic, split_quadratic, CyclotomicField, KummerField,
    QuadraticField,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuiteId {
    /// `τ` and the exponential divisor lists.
    Tau,
    Quadratic,
    Cyclotomic,
    Kummer,
    Order,
}

impl SuiteId {
    pub const ALL: [SuiteId; 5] = [
        Self::Tau,
        Self::Quadratic,
        Self::Cyclotomic,
        Self::Kummer,
        Self::Order,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Tau => "tau",
            Self::Quadratic => "quadratic",
            Self::Cyclotomic => "cyclotomic",
            Self::Kummer => "kummer",
            Self::Order => "order",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| format!("unknown oracle suite {s:?}"))
    }
}

/// Range bounds; unset fields take the per-suite defaults.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct OracleRange {
    pub max_n: Option<u64>,
    pub max_d: Option<u64>,
    pub max_p: Option<u64>,
    /// Largest odd prime `q` for the totally ramified `Q(ζ_q)` checks.
    pub max_q: Option<u64>,
    pub max_mu: Option<u64>,
    pub l: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub suite: SuiteId,
    pub checked: u64,
    /// First disagreement, with its full inputs.
    pub mismatch: Option<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Squarefree `d` with `|d| ≤ max_d`, `d ∉ {0, 1}`, ascending.
pub(crate) fn squarefree_range(max_d: u64) -> Vec<i64> {
    let max_d = max_d as i64;
    (-max_d..=max_d)
        .filter(|&d| d != 0 && d != 1 && arith::is_squarefree(d).unwrap_or(false))
        .collect()
}

pub(crate) fn primes_up_to(max: u64) -> Vec<u64> {
    (2..=max).filter(|&p| arith::is_prime(p)).collect()
}

fn finish(suite: SuiteId, checked: u64, mismatch: Option<String>) -> SuiteReport {
    SuiteReport {
        suite,
        checked,
        mismatch,
    }
}

pub fn run_suite(suite: SuiteId, range: &OracleRange) -> SuiteReport {
    match suite {
        SuiteId::Tau => tau_suite(range.max_n.unwrap_or(100_000)),
        SuiteId::Quadratic => {
            quadratic_suite(range.max_d.unwrap_or(100), range.max_p.unwrap_or(1000))
        }
        SuiteId::Cyclotomic => cyclotomic_suite(
            range.max_n.unwrap_or(60),
            range.max_p.unwrap_or(500),
            range.max_q.unwrap_or(97),
        ),
        SuiteId::Kummer => kummer_suite(
            range.l.as_deref().unwrap_or(&[3, 5]),
            range.max_p.unwrap_or(100),
            range.max_mu.unwrap_or(100),
        ),
        SuiteId::Order => order_suite(range.max_n.unwrap_or(300)),
    }
}

fn tau_suite(max_n: u64) -> SuiteReport {
    let mismatch = (1..=max_n).into_par_iter().find_map_first(|n| {
        let f = arith::factorize(n).expect("n >= 1");
        if brute_tau(n) != f.tau() {
            return Some(format!("n={n}: brute_tau={} tau={}", brute_tau(n), f.tau()));
        }
        if n >= 2 {
            let brute = brute_exponential_divisors(n).expect("n >= 2");
            let fast = f.exponential_divisors();
            if brute != fast || brute.len() as u64 != f.tau_e() {
                return Some(format!(
                    "n={n}: brute exponential divisors {brute:?}, closed form {fast:?} (tau_e={})",
                    f.tau_e()
                ));
            }
        }
        None
    });
    finish(SuiteId::Tau, max_n, mismatch)
}

fn quadratic_suite(max_d: u64, max_p: u64) -> SuiteReport {
    let primes = primes_up_to(max_p);
    let ds = squarefree_range(max_d);
    let checked = (ds.len() * primes.len()) as u64;
    let mismatch = ds.par_iter().find_map_first(|&d| {
        let field = QuadraticField::new(d).expect("squarefree range");
        primes.iter().find_map(|&p| {
            let fast = split_quadratic(&field, p).expect("valid input").splitting;
            let brute = dedekind_quadratic_oracle(d, p);
            (fast != brute).then(|| format!("d={d} p={p}: split_quadratic {fast}, oracle {brute}"))
        })
    });
    finish(SuiteId::Quadratic, checked, mismatch)
}

fn cyclotomic_suite(max_n: u64, max_p: u64, max_q: u64) -> SuiteReport {
    let primes = primes_up_to(max_p);
    let moduli: Vec<u64> = (3..=max_n).collect();
    let unramified = moduli.par_iter().map(|&n| {
        let field = CyclotomicField::new(n).expect("n >= 3");
        let phi = brute_phi(n);
        let mut checked = 0u64;
        for &p in primes.iter().filter(|&&p| n % p != 0) {
            checked += 1;
            let s = split_cyclotomic(&field, p)
                .expect("p does not divide n")
                .splitting;
            let order = brute_order(p as i64, n).expect("coprime");
            if s.e() != 1 || s.f() != order || s.f() * u64::from(s.g()) != phi {
                return (
                    checked,
                    Some(format!(
                        "n={n} p={p}: split_cyclotomic {s}, brute order {order}, phi {phi}"
                    )),
                );
            }
        }
        (checked, None)
    });
    let results: Vec<(u64, Option<String>)> = unramified.collect();
    let mut checked: u64 = results.iter().map(|r| r.0).sum();
    let mut mismatch = results.into_iter().find_map(|r| r.1);
    if mismatch.is_none() {
        for q in (3..=max_q).filter(|&q| trial_is_prime(q)) {
            checked += 1;
            let s = split_cyclotomic(&CyclotomicField::new(q).expect("q >= 3"), q)
                .expect("n = p")
                .splitting;
            if u64::from(s.e()) != q - 1 || s.f() != 1 || s.g() != 1 {
                mismatch = Some(format!(
                    "n=p={q}: split_cyclotomic {s}, expected e={}",
                    q - 1
                ));
                break;
            }
        }
    }
    finish(SuiteId::Cyclotomic, checked, mismatch)
}

fn kummer_suite(ls: &[u64], max_p: u64, max_mu: u64) -> SuiteReport {
    let mut cases = Vec::new();
    for &l in ls {
        for p in (2..=max_p).filter(|&p| trial_is_prime(p) && p != l) {
            if brute_order(p as i64, l)
                .map(|o| o == l - 1)
                .unwrap_or(false)
            {
                cases.push((l, p));
            }
        }
    }
    let max_mu = max_mu as i64;
    let mus: Vec<i64> = (-max_mu..=max_mu).filter(|&m| m != 0).collect();
    let checked = (cases.len() * mus.len()) as u64;
    let mismatch = cases.par_iter().find_map_first(|&(l, p)| {
        mus.iter().find_map(|&mu| {
            let field = match KummerField::new(l, mu) {
                Ok(f) => f,
                Err(e) => return Some(format!("l={l} mu={mu}: {e}")),
            };
            let fast = power_residue_character(&field, p);
            let brute = brute_character(l, mu, p);
            match (fast, brute) {
                (Ok(a), Ok(b)) if a == b => None,
                (a, b) => Some(format!(
                    "l={l} mu={mu} p={p}: power_residue_character {a:?}, oracle {b:?}"
                )),
            }
        })
    });
    finish(SuiteId::Kummer, checked, mismatch)
}

fn order_suite(max_n: u64) -> SuiteReport {
    let results: Vec<(u64, Option<String>)> = (2..=max_n)
        .into_par_iter()
        .map(|n| {
            let mut checked = 0;
            for a in 1..n {
                let Ok(brute) = brute_order(a as i64, n) else {
                    continue;
                };
                checked += 1;
                let fast = arith::multiplicative_order(a, n).expect("coprime");
                if fast != brute {
                    return (
                        checked,
                        Some(format!("a={a} n={n}: order {fast}, brute {brute}")),
                    );
                }
            }
            (checked, None)
        })
        .collect();
    let checked = results.iter().map(|r| r.0).sum();
    finish(
        SuiteId::Order,
        checked,
        results.into_iter().find_map(|r| r.1),
    )
}
