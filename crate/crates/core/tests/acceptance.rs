use std::collections::HashSet;
use std::process::Command;
use std::time::{Duration, Instant};

use serde_json::Value;
use taufield::arith;
use taufield::fields::{
    split_cyclotomic, split_kummer, split_quadratic, CyclotomicField, KummerField, QuadraticField,
    SplittingType,
};
use taufield::ideal::{omega_ideal, tau_e_ideal, tau_ideal};
use taufield::oracle::{brute_order, run_suite, OracleRange, SuiteId};
use taufield::verify::{
    check_odd_degree_ramified, classify_prime_claim, ratio, sweep, ClaimId, Relation, SweepRange,
};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn cli_json(args: &[&str]) -> Result<Value, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_taufield"))
        .arg("--json")
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.code() == Some(0), || {
        format!("{args:?} exited {:?}", out.status.code())
    })?;
    serde_json::from_slice(&out.stdout).map_err(|e| e.to_string())
}

fn field(v: &Value, key: &str) -> String {
    v[key].as_str().unwrap_or("<missing>").to_string()
}

fn kummer_example(
    l: &str,
    mu: &str,
    p: &str,
    e: &str,
    tau: &str,
    lhs: &str,
    rhs: &str,
    tight: bool,
) -> Outcome {
    let v = cli_json(&["split", "kummer", "--l", l, "--mu", mu, "--p", p])?;
    let r = &v["result"];
    let got = (
        field(r, "e"),
        field(r, "g"),
        field(r, "tau"),
        field(r, "tau_e"),
        field(r, "omega"),
    );
    let want = (
        e.to_string(),
        "1".to_string(),
        tau.to_string(),
        "2".to_string(),
        "1".to_string(),
    );
    ensure(got == want, || {
        format!("(e, g, tau, tau_e, omega) = {got:?}, expected {want:?}")
    })?;
    let bound = &r["odd_degree_bound"];
    let c = &bound["comparisons"][0];
    let sides = (field(c, "lhs"), field(c, "rhs"));
    ensure(sides == (lhs.to_string(), rhs.to_string()), || {
        format!("odd-degree bound sides {sides:?}")
    })?;
    ensure(
        bound["holds"] == true && bound["is_equality"] == tight,
        || format!("odd-degree bound {bound}"),
    )?;
    Ok(format!("e={e} tau={tau} tau_e=2, {lhs} vs {rhs}"))
}

/// Inert primes dividing μ all give the same totally ramified shape.
fn kummer_family(
    l: u64,
    e: u32,
    lhs: (u64, u64),
    rhs: (u64, u64),
    tight: bool,
) -> Result<usize, String> {
    let mut count = 0;
    for p in (2..200u64).filter(|&p| arith::is_prime(p) && p != l) {
        if brute_order(p as i64, l).map_err(|e| e.to_string())? != l - 1 {
            continue;
        }
        for k in [1i64, 2, 3, 7, -1, -5] {
            let mu = p as i64 * k;
            let dec = split_kummer(&KummerField::new(l, mu).map_err(|e| e.to_string())?, p)
                .map_err(|e| e.to_string())?;
            let st = dec.splitting;
            ensure(st.e() == e && st.g() == 1, || {
                format!("p={p} mu={mu}: {st}")
            })?;
            let r = check_odd_degree_ramified(st.e(), st.g(), st.degree())
                .map_err(|e| e.to_string())?;
            let c = &r.comparisons[0];
            ensure(
                c.lhs == ratio(lhs.0, lhs.1)
                    && c.rhs == ratio(rhs.0, rhs.1)
                    && r.is_equality() == tight,
                || format!("p={p} mu={mu}: {r}"),
            )?;
            count += 1;
        }
    }
    Ok(count)
}

fn criterion_1() -> Outcome {
    let detail = kummer_example("3", "6", "2", "3", "4", "3/4", "3/4", true)?;
    let n = kummer_family(3, 3, (3, 4), (3, 4), true)?;
    Ok(format!("{detail}; {n} inert (p, mu) pairs agree"))
}

fn criterion_2() -> Outcome {
    let detail = kummer_example("5", "15", "3", "5", "6", "5/6", "1/2", false)?;
    let n = kummer_family(5, 5, (5, 6), (1, 2), false)?;
    Ok(format!("{detail}; {n} inert (p, mu) pairs agree"))
}

fn suite(id: SuiteId, range: OracleRange) -> Outcome {
    let r = run_suite(id, &range);
    match r.mismatch {
        None => Ok(format!("{id}: {} cases, 0 mismatches", r.checked)),
        Some(m) => Err(format!("{id}: {m}")),
    }
}

fn criterion_3() -> Outcome {
    let range = OracleRange {
        max_d: Some(100),
        max_p: Some(1000),
        ..Default::default()
    };
    let r = run_suite(SuiteId::Quadratic, &range);
    ensure(r.checked == 121 * 168, || {
        format!("checked {} cases", r.checked)
    })?;
    suite(SuiteId::Quadratic, range)
}

fn criterion_4() -> Outcome {
    suite(
        SuiteId::Cyclotomic,
        OracleRange {
            max_n: Some(60),
            max_p: Some(500),
            max_q: Some(97),
            ..Default::default()
        },
    )
}

fn claim(id: ClaimId, range: SweepRange) -> Result<taufield::verify::SweepOutcome, String> {
    let out = sweep(id, &range).map_err(|e| e.to_string())?;
    match out.violations.first() {
        None => Ok(out),
        Some(v) => Err(format!(
            "{id}: {} violations, first {v}",
            out.violations.len()
        )),
    }
}

fn criterion_5() -> Outcome {
    let out = claim(
        ClaimId::UnitarySum,
        SweepRange {
            max_n: Some(1_000_000),
            ..Default::default()
        },
    )?;
    ensure(out.checked == 1_000_000, || {
        format!("checked {}", out.checked)
    })?;
    Ok(format!("{} n, 0 violations", out.checked))
}

fn criterion_6() -> Outcome {
    let out = claim(
        ClaimId::Sandor,
        SweepRange {
            max_m: Some(10_000),
            ..Default::default()
        },
    )?;
    ensure(out.checked == 9_999, || format!("checked {}", out.checked))?;
    Ok(format!("{} squares, 0 violations", out.checked))
}

fn criterion_7() -> Outcome {
    let range = SweepRange {
        max_g: Some(5),
        max_exponent: Some(8),
        ..Default::default()
    };
    let a = claim(ClaimId::SquareIdealBounds, range.clone())?;
    let b = claim(ClaimId::SquareIdealRefined, range)?;
    let grid = 8 + 64 + 512 + 4096 + 32768;
    ensure(a.checked == grid && b.checked == grid, || {
        format!("checked {} and {}", a.checked, b.checked)
    })?;
    Ok(format!("{grid} ideals per claim, 0 violations"))
}

fn criterion_8() -> Outcome {
    let a = claim(
        ClaimId::TauPowerBound,
        SweepRange {
            max_n: Some(10_000),
            ..Default::default()
        },
    )?;
    let b = claim(
        ClaimId::PowerSum,
        SweepRange {
            max_m: Some(200),
            max_n: Some(64),
            ..Default::default()
        },
    )?;
    ensure(a.checked == 10_000 && b.checked == 199 * 65, || {
        format!("checked {} and {}", a.checked, b.checked)
    })?;
    Ok(format!("{} + {} cases, 0 violations", a.checked, b.checked))
}

fn criterion_9() -> Outcome {
    let max = 100_000u64;
    let out = claim(
        ClaimId::ReciprocalExponentSum,
        SweepRange {
            max_n: Some(max),
            ..Default::default()
        },
    )?;
    let eq: HashSet<&str> = out.equalities.iter().map(String::as_str).collect();
    let mut prime_powers = 0;
    for p in (2..=max).filter(|&p| arith::is_prime(p)) {
        for q in [p, p * p].into_iter().filter(|&q| q <= max) {
            ensure(eq.contains(format!("n={q}").as_str()), || {
                format!("no equality at n={q}")
            })?;
            prime_powers += 1;
        }
    }
    Ok(format!(
        "{} n, 0 violations, equality at all {prime_powers} primes and prime squares",
        out.checked
    ))
}

fn criterion_10() -> Outcome {
    let out = claim(
        ClaimId::GaloisPrimeIdeal,
        SweepRange {
            max_e: Some(60),
            max_g: Some(12),
            ..Default::default()
        },
    )?;
    ensure(out.equalities == ["e=1,g=1", "e=2,g=1"], || {
        format!("equality set {:?}", out.equalities)
    })?;
    Ok(format!(
        "{} (e, g), equality set {{(1,1),(2,1)}}",
        out.checked
    ))
}

fn criterion_11() -> Outcome {
    let out = claim(
        ClaimId::OddDegreeRamified,
        SweepRange {
            max_e: Some(59),
            max_g: Some(10),
            ..Default::default()
        },
    )?;
    ensure(out.equalities == ["e=3,g=1"], || {
        format!("equality set {:?}", out.equalities)
    })?;
    Ok(format!("{} (e, g), equality only at (3,1)", out.checked))
}

fn expected_relation(st: &SplittingType) -> Relation {
    if st.e() == 1 || st.degree() == 2 {
        Relation::Eq
    } else if u64::from(st.e()) == st.degree() {
        Relation::Gt
    } else {
        Relation::Ge
    }
}

fn criterion_12() -> Outcome {
    let mut splits: Vec<(String, taufield::fields::Decomposition)> = Vec::new();
    let err = |e: taufield::fields::FieldError| e.to_string();
    for d in (-100i64..=100).filter(|&d| d != 0 && d != 1 && arith::is_squarefree(d).unwrap()) {
        let k = QuadraticField::new(d).map_err(err)?;
        for p in (2..=1000u64).filter(|&p| arith::is_prime(p)) {
            splits.push((format!("d={d} p={p}"), split_quadratic(&k, p).map_err(err)?));
        }
    }
    for n in 3..=60u64 {
        let k = CyclotomicField::new(n).map_err(err)?;
        for p in (2..=500u64).filter(|&p| arith::is_prime(p) && n % p != 0) {
            splits.push((
                format!("n={n} p={p}"),
                split_cyclotomic(&k, p).map_err(err)?,
            ));
        }
    }
    for q in (3..=97u64).filter(|&q| arith::is_prime(q)) {
        splits.push((
            format!("n=p={q}"),
            split_cyclotomic(&CyclotomicField::new(q).map_err(err)?, q).map_err(err)?,
        ));
    }
    for l in [3u64, 5] {
        for p in (2..=100u64).filter(|&p| arith::is_prime(p) && p != l) {
            if brute_order(p as i64, l).unwrap() != l - 1 {
                continue;
            }
            for mu in (-100i64..=100).filter(|&m| m != 0) {
                let k = KummerField::new(l, mu).map_err(err)?;
                splits.push((
                    format!("l={l} mu={mu} p={p}"),
                    split_kummer(&k, p).map_err(err)?,
                ));
            }
        }
    }
    let real = splits.len();
    // partially ramified shapes do not arise in the supported fields
    for e in 2..=12u32 {
        for f in 1..=6u64 {
            for g in 1..=6u32 {
                let n = u64::from(e) * f * u64::from(g);
                if n >= 3 && u64::from(e) < n {
                    let st = SplittingType::new(e, f, g, n).map_err(err)?;
                    let label = format!("synthetic {st}");
                    splits.push((
                        label,
                        taufield::fields::Decomposition {
                            ideal: st.ideal("K"),
                            splitting: st,
                        },
                    ));
                }
            }
        }
    }
    let mut counts = [0usize; 3];
    for (label, dec) in &splits {
        let st = &dec.splitting;
        let r = classify_prime_claim(st, &dec.ideal).map_err(|e| format!("{label}: {e}"))?;
        let want = expected_relation(st);
        let c = &r.comparisons[0];
        ensure(c.relation == want && r.holds(), || {
            format!("{label}: {r}, expected {}", want.symbol())
        })?;
        // τ(pO) + 1 against τ^(e)(pO) + 2^ω from the ideal directly
        let lhs = tau_ideal(&dec.ideal) + 1u32;
        let rhs = tau_e_ideal(&dec.ideal)
            + (num_bigint::BigUint::from(1u32) << omega_ideal(&dec.ideal) as usize);
        ensure(want.admits(lhs.cmp(&rhs)), || {
            format!("{label}: {lhs} vs {rhs}")
        })?;
        counts[match want {
            Relation::Eq => 0,
            Relation::Gt => 2,
            _ => 1,
        }] += 1;
    }
    let via_sweep = claim(ClaimId::PrimeIdeal, SweepRange::default())?;
    ensure(via_sweep.checked == real as u64, || {
        format!("sweep checked {}", via_sweep.checked)
    })?;
    Ok(format!(
        "{real} field splittings + {} synthetic: {} equal, {} >=, {} strict",
        splits.len() - real,
        counts[0],
        counts[1],
        counts[2]
    ))
}

fn criterion_13() -> Outcome {
    let a = suite(
        SuiteId::Tau,
        OracleRange {
            max_n: Some(100_000),
            ..Default::default()
        },
    )?;
    let b = suite(
        SuiteId::Kummer,
        OracleRange {
            l: Some(vec![3, 5]),
            max_p: Some(100),
            max_mu: Some(100),
            ..Default::default()
        },
    )?;
    Ok(format!("{a}; {b}"))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 13] = [
        (
            "Kummer l=3, p | mu: e=3, tau=4, tau_e=2, 3/4 = 3/4",
            1,
            criterion_1,
        ),
        (
            "Kummer l=5, p | mu: e=5, tau=6, tau_e=2, 5/6 > 1/2",
            1,
            criterion_2,
        ),
        ("quadratic splitting vs root-count oracle", 10, criterion_3),
        (
            "cyclotomic splitting vs brute order and totient",
            10,
            criterion_4,
        ),
        ("tau + 1 >= tau_e + tau_star, n <= 10^6", 60, criterion_5),
        (
            "2^omega <= tau_e <= 2^Omega on squares m^2, m <= 10^4",
            10,
            criterion_6,
        ),
        (
            "square ideal bounds, g <= 5, exponents <= 8",
            30,
            criterion_7,
        ),
        ("tau(n) <= 2^(n-1) and power sums", 30, criterion_8),
        ("reciprocal exponent sum, n <= 10^5", 60, criterion_9),
        (
            "Galois prime ideal bound, e <= 60, g <= 12",
            5,
            criterion_10,
        ),
        (
            "odd degree ramified bound, odd e <= 59, g <= 10",
            5,
            criterion_11,
        ),
        (
            "prime ideal classification over all splittings",
            u64::MAX,
            criterion_12,
        ),
        (
            "tau, tau_e and power residue character oracles",
            60,
            criterion_13,
        ),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = run();
        let elapsed = start.elapsed();
        let in_time = *limit == u64::MAX || elapsed < Duration::from_secs(*limit);
        let bound = if *limit == u64::MAX {
            "no bound".to_string()
        } else {
            format!("< {limit}s")
        };
        let (tag, detail) = match (&result, in_time) {
            (Ok(d), true) => ("PASS", d.clone()),
            (Ok(d), false) => ("FAIL", format!("too slow; {d}")),
            (Err(e), _) => ("FAIL", e.clone()),
        };
        if tag == "FAIL" {
            failed += 1;
        }
        println!(
            "{tag} {:>2} {name} [{:.3}s, {bound}] {detail}",
            i + 1,
            elapsed.as_secs_f64()
        );
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
