use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use pdo_core::identities::forms::pdo_series;
use pdo_core::identities::{registry, run_all, run_check};
use pdo_core::partitions::{bijection_forward, bijection_inverse, enumerate_pdo};
use pdo_core::{IdentityReport, PdoPair, PdoPartition, RunConfig};
use serde_json::{json, Value};

/// `println!` that ends the process quietly once stdout is closed.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        if writeln!(std::io::stdout().lock(), $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

const DEFAULT_BIJECTION_BOUND: u32 = 24;
const DEFAULT_TABLE_MAX: usize = 10;

#[derive(Parser)]
#[command(
    name = "pdo",
    version,
    about = "Exact checks of identities for partitions into odd parts with designated summands"
)]
struct Cli {
    /// Series order for `verify` (coefficients below q^N are compared);
    /// for `pdo-table` it lists PDO(0..N-1) when --max is absent
    #[arg(long, global = true, value_name = "N")]
    truncation: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

#[derive(Args)]
struct FormatArg {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Run one identity check, or `all`
    #[command(after_help = identity_help())]
    Verify {
        /// Identity id or `all`
        target: String,
        /// Seed for randomized checks
        #[arg(long, default_value_t = RunConfig::default().seed)]
        seed: u64,
        /// Harness self-test: perturb the computed side at q^POWER so the
        /// checks must fail there
        #[arg(long, value_name = "POWER")]
        corrupt_power: Option<usize>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// PDO(n) for n = 0..=max from the eta-quotient generating function
    PdoTable {
        #[arg(long, value_name = "N")]
        max: Option<usize>,
        #[command(flatten)]
        format: FormatArg,
    },
    /// List every PDO partition of the given weight
    Enumerate {
        #[arg(long, value_name = "N")]
        weight: u32,
        #[command(flatten)]
        format: FormatArg,
    },
    /// The y = 0 bijection between partitions with only even multiplicities
    /// and pairs without a shared part size
    Bijection {
        #[command(subcommand)]
        action: BijectionAction,
    },
}

#[derive(Subcommand)]
enum BijectionAction {
    /// Map a partition (or every eligible partition of --weight) to its pair
    Apply(BijectionInput),
    /// Map a pair `(mu | nu)` (or every pair of combined --weight) back
    Invert(BijectionInput),
    /// Round-trip every eligible partition of weight <= --weight (default 24),
    /// or a single given partition
    Verify(BijectionInput),
}

#[derive(Args)]
struct BijectionInput {
    #[arg(long, value_name = "N", conflicts_with = "text")]
    weight: Option<u32>,
    /// Partition such as `3+3'+1'+1`, or pair such as `(1' | 3')`
    text: Option<String>,
    #[command(flatten)]
    format: FormatArg,
}

fn identity_help() -> String {
    let mut s = String::from("Identities (default truncation):\n");
    for c in registry() {
        let _ = writeln!(
            s,
            "  {:<26} ({:>3})  {}",
            c.id, c.default_truncation, c.summary
        );
    }
    s
}

/// A failed command: exit code 1 for a mathematical mismatch, 2 for bad input.
enum Failure {
    Mismatch,
    Usage(String),
}

type Outcome = Result<(), Failure>;

fn usage(e: impl ToString) -> Failure {
    Failure::Usage(e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify {
            target,
            seed,
            corrupt_power,
            format,
        } => {
            let config = RunConfig {
                truncation: cli.truncation,
                corrupt_power,
                seed,
            };
            verify(&target, &config, format.format)
        }
        Command::PdoTable { max, format } => pdo_table(max, cli.truncation, format.format),
        Command::Enumerate { weight, format } => enumerate(weight, format.format),
        Command::Bijection { action } => bijection(action),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

fn print_json<T: serde::Serialize + ?Sized>(v: &T) {
    out!(
        "{}",
        serde_json::to_string_pretty(v).expect("json values serialize")
    );
}

fn verify(target: &str, config: &RunConfig, format: Format) -> Outcome {
    let reports: Vec<IdentityReport> = if target == "all" {
        run_all(config)
    } else {
        vec![run_check(target, config)
            .map_err(|e| usage(format!("{e}; known ids: all, {}", ids())))?]
    };
    match format {
        Format::Text => reports.iter().for_each(|r| out!("{r}")),
        Format::Json => print_json(&reports),
        Format::Csv => {
            out!("id,truncation,pass,mismatch_power,expected,actual,note");
            for r in &reports {
                let (power, expected, actual) = match &r.first_mismatch {
                    Some(m) => (m.power.to_string(), m.expected.clone(), m.actual.clone()),
                    None => Default::default(),
                };
                out!(
                    "{},{},{},{},{},{},{}",
                    r.id,
                    r.truncation,
                    r.pass,
                    power,
                    csv_field(&expected),
                    csv_field(&actual),
                    csv_field(r.note.as_deref().unwrap_or(""))
                );
            }
        }
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    eprintln!(
        "{} of {} checks passed",
        reports.len() - failed,
        reports.len()
    );
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure::Mismatch)
    }
}

fn ids() -> String {
    registry()
        .iter()
        .map(|c| c.id)
        .collect::<Vec<_>>()
        .join(", ")
}

fn pdo_table(max: Option<usize>, truncation: Option<usize>, format: Format) -> Outcome {
    let order = match (max, truncation) {
        (Some(m), _) => m + 1,
        (None, Some(n)) => n,
        (None, None) => DEFAULT_TABLE_MAX + 1,
    };
    let series = pdo_series(order).map_err(usage)?;
    let rows = series.coeffs().iter().enumerate();
    match format {
        Format::Text => rows.for_each(|(n, c)| out!("{n} {c}")),
        Format::Json => print_json(&Value::Array(
            // counts exceed u64 quickly, so they are written as strings
            rows.map(|(n, c)| json!({ "n": n, "pdo": c.to_string() }))
                .collect(),
        )),
        Format::Csv => {
            out!("n,pdo");
            rows.for_each(|(n, c)| out!("{n},{c}"));
        }
    }
    Ok(())
}

fn enumerate(weight: u32, format: Format) -> Outcome {
    let all = enumerate_pdo(weight);
    match format {
        Format::Text => all.iter().for_each(|p| out!("{p}")),
        Format::Json => print_json(&Value::Array(
            all.iter()
                .map(|p| {
                    let s = p.stats();
                    json!({ "partition": p, "weight": s.weight, "ell_d": s.ell_d, "ell_d_odd": s.ell_d_odd })
                })
                .collect(),
        )),
        Format::Csv => {
            out!("partition,weight,ell_d,ell_d_odd");
            for p in &all {
                let s = p.stats();
                out!("{p},{},{},{}", s.weight, s.ell_d, s.ell_d_odd);
            }
        }
    }
    Ok(())
}

fn eligible(weight: u32) -> impl Iterator<Item = PdoPartition> {
    enumerate_pdo(weight)
        .into_iter()
        .filter(|p| p.stats().ell_d_odd == 0)
}

fn unshared_pairs(weight: u32) -> Vec<PdoPair> {
    let mut out = Vec::new();
    for k in 0..=weight {
        let nus = enumerate_pdo(weight - k);
        for mu in enumerate_pdo(k) {
            for nu in &nus {
                let pair = PdoPair::new(mu.clone(), nu.clone());
                if pair.stats().ell_r == 0 {
                    out.push(pair);
                }
            }
        }
    }
    out
}

fn print_mapping(rows: &[(String, String)], from: &str, to: &str, format: Format) {
    match format {
        Format::Text => rows.iter().for_each(|(a, b)| out!("{a} -> {b}")),
        Format::Json => print_json(&Value::Array(
            rows.iter()
                .map(|(a, b)| json!({ from: a, to: b }))
                .collect(),
        )),
        Format::Csv => {
            out!("{from},{to}");
            rows.iter().for_each(|(a, b)| out!("{a},{b}"));
        }
    }
}

fn need_input(input: &BijectionInput) -> Outcome {
    if input.weight.is_none() && input.text.is_none() {
        return Err(usage("give either --weight N or a text argument"));
    }
    Ok(())
}

fn bijection(action: BijectionAction) -> Outcome {
    match action {
        BijectionAction::Apply(input) => {
            need_input(&input)?;
            let lambdas: Vec<PdoPartition> = match (&input.text, input.weight) {
                (Some(t), _) => vec![t.parse().map_err(usage)?],
                (None, Some(w)) => eligible(w).collect(),
                (None, None) => unreachable!(),
            };
            let mut rows = Vec::new();
            for l in &lambdas {
                let pair = bijection_forward(l).map_err(usage)?;
                rows.push((l.to_string(), pair.to_string()));
            }
            print_mapping(&rows, "lambda", "pair", input.format.format);
            Ok(())
        }
        BijectionAction::Invert(input) => {
            need_input(&input)?;
            let pairs: Vec<PdoPair> = match (&input.text, input.weight) {
                (Some(t), _) => vec![t.parse().map_err(usage)?],
                (None, Some(w)) => unshared_pairs(w),
                (None, None) => unreachable!(),
            };
            let mut rows = Vec::new();
            for p in &pairs {
                let lambda = bijection_inverse(p).map_err(usage)?;
                rows.push((p.to_string(), lambda.to_string()));
            }
            print_mapping(&rows, "pair", "lambda", input.format.format);
            Ok(())
        }
        BijectionAction::Verify(input) => {
            let lambdas: Vec<PdoPartition> = match &input.text {
                Some(t) => vec![t.parse().map_err(usage)?],
                None => (0..=input.weight.unwrap_or(DEFAULT_BIJECTION_BOUND))
                    .flat_map(eligible)
                    .collect(),
            };
            let mut bad = Vec::new();
            for l in &lambdas {
                let pair = bijection_forward(l).map_err(usage)?;
                let stats = (l.stats(), pair.stats());
                let ok = bijection_inverse(&pair).ok().as_ref() == Some(l)
                    && stats.0.weight == 2 * stats.1.weight
                    && stats.0.ell_d == stats.1.ell_d_sum
                    && stats.1.ell_r == 0;
                if !ok {
                    bad.push((l.to_string(), pair.to_string()));
                }
            }
            let summary = json!({ "checked": lambdas.len(), "failed": bad.len() });
            match input.format.format {
                Format::Text => {
                    bad.iter().for_each(|(l, p)| out!("FAIL {l} -> {p}"));
                    out!("{} round trips, {} failed", lambdas.len(), bad.len());
                }
                Format::Json => print_json(&summary),
                Format::Csv => out!("checked,failed\n{},{}", lambdas.len(), bad.len()),
            }
            if bad.is_empty() {
                Ok(())
            } else {
                Err(Failure::Mismatch)
            }
        }
    }
}
