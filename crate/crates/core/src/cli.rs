//! Command-line front end. `main` only parses arguments and prints the
//! [`Output`] produced by [`execute`].

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Map, Value};

use crate::arith;
use crate::fields::{
    power_residue_character, split_cyclotomic, split_kummer, split_quadratic, CyclotomicField,
    Decomposition, KummerField, QuadraticField,
};
use crate::ideal::{omega_ideal, tau_e_ideal, tau_ideal};
use crate::oracle::{run_suite, OracleRange, SuiteId};
use crate::verify::{check_odd_degree_ramified, classify_prime_claim, sweep, ClaimId, SweepRange};

pub const SCHEMA_VERSION: &str = "1";

pub const EXIT_OK: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "taufield",
    version,
    about = "Divisor functions on integers and on prime ideals of number fields"
)]
pub struct Cli {
    /// Emit a single JSON object instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Print nothing on success; errors still go to stderr.
    #[arg(long, global = true)]
    pub quiet: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Arithmetic functions of n.
    Arith {
        #[arg(value_parser = clap::value_parser!(u64).range(1..=i64::MAX as u64))]
        n: u64,
        /// Omit divisor lists longer than this.
        #[arg(long, default_value_t = 1000)]
        max_list: u64,
    },
    /// Decomposition of pO_K.
    Split {
        #[command(subcommand)]
        field: SplitCommand,
    },
    /// Sweep a claim over a range.
    Verify {
        claim: ClaimId,
        #[command(flatten)]
        range: RangeArgs,
        /// Longest equality witness list to print.
        #[arg(long, default_value_t = 20)]
        max_list: usize,
    },
    /// Compare closed forms against brute-force oracles.
    OracleCheck {
        suite: SuiteId,
        #[command(flatten)]
        range: RangeArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum SplitCommand {
    /// Q(sqrt(d)) for squarefree d.
    Quadratic {
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(long)]
        p: u64,
    },
    /// Q(zeta_n).
    Cyclotomic {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
    },
    /// Q(zeta_l, mu^(1/l)) at a prime p inert in Q(zeta_l).
    Kummer {
        #[arg(long)]
        l: u64,
        #[arg(long, allow_negative_numbers = true)]
        mu: i64,
        #[arg(long)]
        p: u64,
    },
}

#[derive(Debug, Clone, Default, Args)]
pub struct RangeArgs {
    #[arg(long)]
    pub max_n: Option<u64>,
    #[arg(long)]
    pub max_m: Option<u64>,
    #[arg(long)]
    pub max_e: Option<u64>,
    #[arg(long)]
    pub max_g: Option<u64>,
    #[arg(long)]
    pub max_exponent: Option<u64>,
    #[arg(long)]
    pub max_d: Option<u64>,
    #[arg(long)]
    pub max_p: Option<u64>,
    #[arg(long)]
    pub max_q: Option<u64>,
    #[arg(long)]
    pub max_mu: Option<u64>,
    /// Comma-separated odd primes.
    #[arg(long, value_delimiter = ',')]
    pub l: Option<Vec<u64>>,
}

impl RangeArgs {
    fn to_json(&self) -> Value {
        let mut m = Map::new();
        let fields = [
            ("max_n", self.max_n),
            ("max_m", self.max_m),
            ("max_e", self.max_e),
            ("max_g", self.max_g),
            ("max_exponent", self.max_exponent),
            ("max_d", self.max_d),
            ("max_p", self.max_p),
            ("max_q", self.max_q),
            ("max_mu", self.max_mu),
        ];
        for (k, v) in fields {
            if let Some(v) = v {
                m.insert(k.into(), v.to_string().into());
            }
        }
        if let Some(l) = &self.l {
            m.insert("l".into(), strings(l));
        }
        Value::Object(m)
    }

    fn sweep_range(&self) -> SweepRange {
        SweepRange {
            max_n: self.max_n,
            max_m: self.max_m,
            max_e: self.max_e,
            max_g: self.max_g,
            max_exponent: self.max_exponent,
            max_d: self.max_d,
            max_p: self.max_p,
            max_q: self.max_q,
            max_mu: self.max_mu,
            l: self.l.clone(),
        }
    }

    fn oracle_range(&self) -> Result<OracleRange, String> {
        let unused = [
            ("max-m", self.max_m.is_some()),
            ("max-e", self.max_e.is_some()),
            ("max-g", self.max_g.is_some()),
            ("max-exponent", self.max_exponent.is_some()),
        ];
        if let Some((name, _)) = unused.iter().find(|f| f.1) {
            return Err(format!("--{name} does not apply to oracle-check"));
        }
        Ok(OracleRange {
            max_n: self.max_n,
            max_d: self.max_d,
            max_p: self.max_p,
            max_q: self.max_q,
            max_mu: self.max_mu,
            l: self.l.clone(),
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Ok,
    Violation,
    Error,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Self::Ok => "ok",
            Self::Violation => "violation",
            Self::Error => "error",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Ok => EXIT_OK,
            Self::Violation => EXIT_VIOLATION,
            Self::Error => EXIT_USAGE,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

fn strings<T: ToString>(xs: &[T]) -> Value {
    Value::Array(xs.iter().map(|x| Value::String(x.to_string())).collect())
}

fn s(x: impl ToString) -> Value {
    Value::String(x.to_string())
}

fn arith_result(n: u64, max_list: u64) -> Result<Value, String> {
    let f = arith::factorize(n).map_err(|e| e.to_string())?;
    let mut r = json!({
        "n": s(n),
        "factorization": s(&f),
        "tau": s(f.tau()),
        "tau_star": s(f.tau_star()),
        "tau_e": s(f.tau_e()),
        "omega": s(f.omega()),
        "big_omega": s(f.big_omega()),
        "euler_phi": s(f.euler_phi()),
    });
    let elide = f.tau() > max_list;
    r["lists_elided"] = Value::Bool(elide);
    if !elide {
        r["divisors"] = strings(&f.divisors());
        r["exponential_divisors"] = strings(&f.exponential_divisors());
    }
    Ok(r)
}

fn decomposition_json(tag: String, p: u64, d: &Decomposition) -> Result<Value, String> {
    let st = &d.splitting;
    let claim = classify_prime_claim(st, &d.ideal).map_err(|e| e.to_string())?;
    let mut r = json!({
        "field": tag,
        "p": s(p),
        "e": s(st.e()),
        "f": s(st.f()),
        "g": s(st.g()),
        "degree": s(st.degree()),
        "ramified": st.is_ramified(),
        "ideal": s(&d.ideal),
        "ideal_factors": d.ideal.to_json(),
        "tau": s(tau_ideal(&d.ideal)),
        "tau_e": s(tau_e_ideal(&d.ideal)),
        "omega": s(omega_ideal(&d.ideal)),
        "prime_ideal_claim": claim.to_json(),
    });
    let degree = st.degree();
    if st.is_ramified() && st.e() >= 3 && degree % 2 == 1 {
        let bound = check_odd_degree_ramified(st.e(), st.g(), degree).map_err(|e| e.to_string())?;
        r["odd_degree_bound"] = bound.to_json();
    }
    Ok(r)
}

fn split_result(cmd: &SplitCommand) -> Result<Value, String> {
    let err = |e: crate::fields::FieldError| e.to_string();
    match *cmd {
        SplitCommand::Quadratic { d, p } => {
            let field = QuadraticField::new(d).map_err(err)?;
            let dec = split_quadratic(&field, p).map_err(err)?;
            let mut r = decomposition_json(field.tag(), p, &dec)?;
            r["discriminant"] = s(field.discriminant());
            Ok(r)
        }
        SplitCommand::Cyclotomic { n, p } => {
            let field = CyclotomicField::new(n).map_err(err)?;
            let dec = split_cyclotomic(&field, p).map_err(err)?;
            decomposition_json(field.tag(), p, &dec)
        }
        SplitCommand::Kummer { l, mu, p } => {
            let field = KummerField::new(l, mu).map_err(err)?;
            let dec = split_kummer(&field, p).map_err(err)?;
            let character = power_residue_character(&field, p).map_err(err)?;
            let mut r = decomposition_json(field.tag(), p, &dec)?;
            r["character"] = s(character.as_str());
            Ok(r)
        }
    }
}

fn split_inputs(cmd: &SplitCommand) -> Value {
    match *cmd {
        SplitCommand::Quadratic { d, p } => json!({"type": "quadratic", "d": s(d), "p": s(p)}),
        SplitCommand::Cyclotomic { n, p } => json!({"type": "cyclotomic", "n": s(n), "p": s(p)}),
        SplitCommand::Kummer { l, mu, p } => {
            json!({"type": "kummer", "l": s(l), "mu": s(mu), "p": s(p)})
        }
    }
}

fn verify_result(
    claim: ClaimId,
    range: &RangeArgs,
    max_list: usize,
) -> Result<(Value, Status), String> {
    let out = sweep(claim, &range.sweep_range()).map_err(|e| e.to_string())?;
    let shown = &out.equalities[..out.equalities.len().min(max_list)];
    let r = json!({
        "claim": claim.as_str(),
        "checked": s(out.checked),
        "violation_count": s(out.violations.len()),
        "violations": out.violations.iter().take(max_list.max(1)).map(|v| v.to_json()).collect::<Vec<_>>(),
        "equality_count": s(out.equalities.len()),
        "equalities": strings(shown),
        "equalities_truncated": shown.len() < out.equalities.len(),
    });
    let status = if out.passed() {
        Status::Ok
    } else {
        Status::Violation
    };
    Ok((r, status))
}

fn oracle_result(suite: SuiteId, range: &RangeArgs) -> Result<(Value, Status), String> {
    let report = run_suite(suite, &range.oracle_range()?);
    let mut r = json!({
        "suite": suite.as_str(),
        "checked": s(report.checked),
        "passed": report.passed(),
    });
    if let Some(m) = &report.mismatch {
        r["mismatch"] = s(m);
    }
    let status = if report.passed() {
        Status::Ok
    } else {
        Status::Violation
    };
    Ok((r, status))
}

/// Runs a parsed command and renders its output.
pub fn execute(cli: &Cli) -> Output {
    let (command, inputs, result) = match &cli.command {
        Command::Arith { n, max_list } => (
            "arith",
            json!({"n": s(n), "max_list": s(max_list)}),
            arith_result(*n, *max_list).map(|r| (r, Status::Ok)),
        ),
        Command::Split { field } => (
            "split",
            split_inputs(field),
            split_result(field).map(|r| (r, Status::Ok)),
        ),
        Command::Verify {
            claim,
            range,
            max_list,
        } => {
            let mut inputs = range.to_json();
            inputs["claim"] = s(claim);
            inputs["max_list"] = s(max_list);
            ("verify", inputs, verify_result(*claim, range, *max_list))
        }
        Command::OracleCheck { suite, range } => {
            let mut inputs = range.to_json();
            inputs["suite"] = s(suite);
            ("oracle-check", inputs, oracle_result(*suite, range))
        }
    };
    let (result, status) = match result {
        Ok(r) => r,
        Err(msg) => (json!({ "error": msg }), Status::Error),
    };
    let envelope = json!({
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "inputs": inputs,
        "result": result,
        "status": status.as_str(),
    });
    let mut out = Output {
        code: status.exit_code(),
        stdout: String::new(),
        stderr: String::new(),
    };
    if status == Status::Error {
        out.stderr = format!(
            "error: {}\n",
            envelope["result"]["error"].as_str().unwrap_or_default()
        );
    }
    if cli.quiet {
        return out;
    }
    if cli.json {
        out.stdout = serde_json::to_string_pretty(&envelope).expect("serializable") + "\n";
    } else if status != Status::Error {
        out.stdout = format!("{command}: {}\n", status.as_str());
        render(&envelope["result"], 0, &mut out.stdout);
    }
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::String(x) => Some(x.clone()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Null => Some("-".into()),
        Value::Number(n) => Some(n.to_string()),
        _ => None,
    }
}

/// Indented `key: value` rendering of a result body.
pub fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match x {
                    Value::Array(items) if items.iter().all(|i| scalar(i).is_some()) => {
                        let joined: Vec<String> = items.iter().filter_map(scalar).collect();
                        out.push_str(&format!("{pad}{k}: [{}]\n", joined.join(", ")));
                    }
                    Value::Object(_) | Value::Array(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(x, indent + 1, out);
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", scalar(x).unwrap_or_default())),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                out.push_str(&format!("{pad}-\n"));
                render(item, indent + 1, out);
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}
