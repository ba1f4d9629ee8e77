use rayon::prelude::*;

use super::{
    check_galois_prime_ideal, check_power_sum, check_reciprocal_exponent_sum, check_sandor,
    check_square_ideal_bounds, check_square_ideal_refined, check_tau_power_bound,
    check_unitary_sum, classify_prime_claim, odd_degree_ramified_bound, ClaimId, InequalityReport,
    Result, VerifyError,
};
use crate::arith;
use crate::fields::{
    split_cyclotomic, split_kummer, split_quadratic, CyclotomicField, Decomposition, KummerField,
    QuadraticField,
};
use crate::ideal::{FactoredIdeal, ENUMERATION_LIMIT};

/// Upper bounds of a sweep. Unset fields take the claim's default; fields
/// that a claim does not use must stay unset.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SweepRange {
    pub max_n: Option<u64>,
    pub max_m: Option<u64>,
    pub max_e: Option<u64>,
    pub max_g: Option<u64>,
    pub max_exponent: Option<u64>,
    pub max_d: Option<u64>,
    pub max_p: Option<u64>,
    pub max_q: Option<u64>,
    pub max_mu: Option<u64>,
    pub l: Option<Vec<u64>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    pub claim: ClaimId,
    pub checked: u64,
    /// Failing instances in sweep order.
    pub violations: Vec<InequalityReport>,
    /// Witnesses of the instances where every comparison is tight.
    pub equalities: Vec<String>,
}

impl SweepOutcome {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

enum Verdict {
    Strict,
    Equality(String),
    Violation(InequalityReport),
}

fn judge(report: InequalityReport) -> Verdict {
    if !report.holds() {
        Verdict::Violation(report)
    } else if report.is_equality() {
        Verdict::Equality(report.witness)
    } else {
        Verdict::Strict
    }
}

fn run<T, F>(claim: ClaimId, items: &[T], check: F) -> Result<SweepOutcome>
where
    T: Sync,
    F: Fn(&T) -> Result<InequalityReport> + Sync,
{
    let verdicts: Vec<Verdict> = items
        .par_iter()
        .map(|x| check(x).map(judge))
        .collect::<Result<_>>()?;
    let mut outcome = SweepOutcome {
        claim,
        checked: items.len() as u64,
        violations: Vec::new(),
        equalities: Vec::new(),
    };
    for v in verdicts {
        match v {
            Verdict::Strict => {}
            Verdict::Equality(w) => outcome.equalities.push(w),
            Verdict::Violation(r) => outcome.violations.push(r),
        }
    }
    Ok(outcome)
}

fn flags_used(claim: ClaimId) -> &'static [&'static str] {
    match claim {
        ClaimId::Sandor => &["max-m"],
        ClaimId::SquareIdealBounds | ClaimId::SquareIdealRefined => &["max-g", "max-exponent"],
        ClaimId::TauPowerBound | ClaimId::UnitarySum | ClaimId::ReciprocalExponentSum => &["max-n"],
        ClaimId::PowerSum => &["max-m", "max-n"],
        ClaimId::PrimeIdeal => &["max-n", "max-d", "max-p", "max-q", "max-mu", "l"],
        ClaimId::GaloisPrimeIdeal | ClaimId::OddDegreeRamified => &["max-e", "max-g"],
    }
}

fn check_flags(claim: ClaimId, range: &SweepRange) -> Result<()> {
    let set = [
        ("max-n", range.max_n.is_some()),
        ("max-m", range.max_m.is_some()),
        ("max-e", range.max_e.is_some()),
        ("max-g", range.max_g.is_some()),
        ("max-exponent", range.max_exponent.is_some()),
        ("max-d", range.max_d.is_some()),
        ("max-p", range.max_p.is_some()),
        ("max-q", range.max_q.is_some()),
        ("max-mu", range.max_mu.is_some()),
        ("l", range.l.is_some()),
    ];
    let used = flags_used(claim);
    match set.iter().find(|(name, on)| *on && !used.contains(name)) {
        Some((name, _)) => Err(VerifyError::InvalidRange(format!(
            "--{name} does not apply to {claim}"
        ))),
        None => Ok(()),
    }
}

fn bound(value: Option<u64>, default: u64, min: u64, name: &str) -> Result<u64> {
    let v = value.unwrap_or(default);
    if v < min {
        return Err(VerifyError::InvalidRange(format!(
            "--{name} must be at least {min}, got {v}"
        )));
    }
    Ok(v)
}

fn small(v: u64, name: &str) -> Result<u32> {
    u32::try_from(v).map_err(|_| VerifyError::InvalidRange(format!("--{name} = {v} is too large")))
}

/// All exponent vectors of length `1..=max_g` with entries in `1..=max_exp`.
fn exponent_grid(max_g: u32, max_exp: u32) -> Vec<Vec<u32>> {
    let mut all = Vec::new();
    let mut layer: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 0..max_g {
        layer = layer
            .iter()
            .flat_map(|v| {
                (1..=max_exp).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect();
        all.extend(layer.iter().cloned());
    }
    all
}

fn grid_ideals(range: &SweepRange) -> Result<Vec<FactoredIdeal>> {
    let max_g = small(bound(range.max_g, 5, 1, "max-g")?, "max-g")?;
    let max_exp = small(
        bound(range.max_exponent, 8, 1, "max-exponent")?,
        "max-exponent",
    )?;
    let count = (1..=max_g).try_fold(0u64, |acc, g| {
        acc.checked_add(u64::from(max_exp).checked_pow(g)?)
    });
    if count.is_none_or(|c| c > ENUMERATION_LIMIT) {
        return Err(VerifyError::InvalidRange(format!(
            "exponent grid with g <= {max_g} and exponents <= {max_exp} is too large"
        )));
    }
    exponent_grid(max_g, max_exp)
        .iter()
        .map(|exps| FactoredIdeal::from_exponents("K", exps).map_err(VerifyError::from))
        .collect()
}

fn primes_up_to(max: u64) -> Vec<u64> {
    (2..=max).filter(|&p| arith::is_prime(p)).collect()
}

struct Case {
    p: u64,
    decomposition: Decomposition,
}

fn prime_ideal_cases(range: &SweepRange) -> Result<Vec<Case>> {
    let max_d = bound(range.max_d, 100, 2, "max-d")?;
    let max_p = bound(range.max_p, 1000, 2, "max-p")?;
    let max_n = bound(range.max_n, 60, 3, "max-n")?;
    let max_q = bound(range.max_q, 97, 3, "max-q")?;
    let max_mu = bound(range.max_mu, 100, 1, "max-mu")?;
    let ls = range.l.clone().unwrap_or_else(|| vec![3, 5]);
    let primes = primes_up_to(max_p);
    let mut cases = Vec::new();

    let max_d = i64::try_from(max_d)
        .map_err(|_| VerifyError::InvalidRange(format!("--max-d = {max_d}")))?;
    for d in -max_d..=max_d {
        if d == 0 || d == 1 || !arith::is_squarefree(d)? {
            continue;
        }
        let field = QuadraticField::new(d)?;
        for &p in &primes {
            cases.push(Case {
                p,
                decomposition: split_quadratic(&field, p)?,
            });
        }
    }

    let cyclo_primes = primes_up_to(range.max_p.unwrap_or(500));
    for n in 3..=max_n {
        let field = CyclotomicField::new(n)?;
        for &p in cyclo_primes.iter().filter(|&&p| n % p != 0) {
            cases.push(Case {
                p,
                decomposition: split_cyclotomic(&field, p)?,
            });
        }
    }
    for q in primes_up_to(max_q).into_iter().filter(|&q| q > 2) {
        cases.push(Case {
            p: q,
            decomposition: split_cyclotomic(&CyclotomicField::new(q)?, q)?,
        });
    }

    let max_mu = i64::try_from(max_mu)
        .map_err(|_| VerifyError::InvalidRange(format!("--max-mu = {max_mu}")))?;
    let kummer_primes = primes_up_to(range.max_p.unwrap_or(100));
    for &l in &ls {
        let inert: Vec<u64> = kummer_primes
            .iter()
            .copied()
            .filter(|&p| {
                p != l && l >= 3 && arith::multiplicative_order(p, l).is_ok_and(|o| o == l - 1)
            })
            .collect();
        for mu in (-max_mu..=max_mu).filter(|&m| m != 0) {
            let field = KummerField::new(l, mu)?;
            for &p in &inert {
                cases.push(Case {
                    p,
                    decomposition: split_kummer(&field, p)?,
                });
            }
        }
    }
    Ok(cases)
}

/// Checks `claim` on every instance of its range.
///
/// Defaults: Sándor `2 ≤ m ≤ 10^4`; ideal grids `g ≤ 5`, exponents `≤ 8`;
/// `τ(n) ≤ 2^(n-1)` on `n ≤ 10^4`; power sums `2 ≤ m ≤ 200`, `0 ≤ n ≤ 64`;
/// unitary sums `n ≤ 10^6`; prime ideals over quadratic fields `|d| ≤ 100`,
/// `p ≤ 1000`, cyclotomic fields `3 ≤ n ≤ 60`, `p ≤ 500`, `Q(ζ_q)` at `q ≤ 97`
/// and Kummer fields `l ∈ {3, 5}`, `|μ| ≤ 100`, inert `p ≤ 100`; reciprocal
/// sums `2 ≤ n ≤ 10^5`; Galois prime ideals `e ≤ 60`, `g ≤ 12`; odd degree
/// `3 ≤ e ≤ 59` odd, `g ≤ 10`.
///
/// With `--max-p` given it bounds all three field families.
pub fn sweep(claim: ClaimId, range: &SweepRange) -> Result<SweepOutcome> {
    check_flags(claim, range)?;
    match claim {
        ClaimId::Sandor => {
            let max_m = bound(range.max_m, 10_000, 2, "max-m")?;
            if max_m > u64::from(u32::MAX) {
                return Err(VerifyError::InvalidRange(format!(
                    "--max-m = {max_m} is too large"
                )));
            }
            let ms: Vec<u64> = (2..=max_m).collect();
            run(claim, &ms, |&m| check_sandor(m * m))
        }
        ClaimId::SquareIdealBounds => run(claim, &grid_ideals(range)?, check_square_ideal_bounds),
        ClaimId::SquareIdealRefined => run(claim, &grid_ideals(range)?, check_square_ideal_refined),
        ClaimId::TauPowerBound => {
            let ns: Vec<u64> = (1..=bound(range.max_n, 10_000, 1, "max-n")?).collect();
            run(claim, &ns, |&n| check_tau_power_bound(n))
        }
        ClaimId::PowerSum => {
            let max_m = bound(range.max_m, 200, 2, "max-m")?;
            let max_n = bound(range.max_n, 64, 0, "max-n")?;
            let pairs: Vec<(u64, u64)> = (2..=max_m)
                .flat_map(|m| (0..=max_n).map(move |n| (m, n)))
                .collect();
            run(claim, &pairs, |&(m, n)| check_power_sum(m, n))
        }
        ClaimId::UnitarySum => {
            let ns: Vec<u64> = (1..=bound(range.max_n, 1_000_000, 1, "max-n")?).collect();
            run(claim, &ns, |&n| check_unitary_sum(n))
        }
        ClaimId::PrimeIdeal => run(claim, &prime_ideal_cases(range)?, |case| {
            let d = &case.decomposition;
            let mut report = classify_prime_claim(&d.splitting, &d.ideal)?;
            report.witness = format!("p={} in {}", case.p, report.witness);
            Ok(report)
        }),
        ClaimId::ReciprocalExponentSum => {
            let ns: Vec<u64> = (2..=bound(range.max_n, 100_000, 2, "max-n")?).collect();
            run(claim, &ns, |&n| check_reciprocal_exponent_sum(n))
        }
        ClaimId::GaloisPrimeIdeal => {
            let max_e = small(bound(range.max_e, 60, 1, "max-e")?, "max-e")?;
            let max_g = small(bound(range.max_g, 12, 1, "max-g")?, "max-g")?;
            let pairs: Vec<(u32, u32)> = (1..=max_e)
                .flat_map(|e| (1..=max_g).map(move |g| (e, g)))
                .collect();
            run(claim, &pairs, |&(e, g)| check_galois_prime_ideal(e, g))
        }
        ClaimId::OddDegreeRamified => {
            let max_e = small(bound(range.max_e, 59, 3, "max-e")?, "max-e")?;
            let max_g = small(bound(range.max_g, 10, 1, "max-g")?, "max-g")?;
            let pairs: Vec<(u32, u32)> = (3..=max_e)
                .step_by(2)
                .flat_map(|e| (1..=max_g).map(move |g| (e, g)))
                .collect();
            run(claim, &pairs, |&(e, g)| odd_degree_ramified_bound(e, g))
        }
    }
}
