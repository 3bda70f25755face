//! Command-line front end.
//!
//! Subcommands:
//!
//! * `verify <id>... | --all [--terms N] [--json]` — run registry cases;
//! * `coeff <p|a> <n> [--modulus m]` — print one partition value;
//! * `series "<expr>" [--terms N] [--modulus m] [--json]` — expand an
//!   expression;
//! * `dissect "<expr>" <m> <r> [--terms N]` — expand, then keep the
//!   coefficients at exponents `m*n + r`;
//! * `list` — print registry ids and descriptions.
//!
//! Exit codes: 0 when every requested check verified (or output was
//! produced), 1 when at least one case mismatched or errored, 2 on usage or
//! parse errors. Diagnostics go to stderr; structured output stays valid
//! JSON on every exit path at most 1.

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_integer::Integer;
use serde_json::{json, Value};

use crate::expr::{eval_expr, parse_expr};
use crate::identities::{find_case, registry, verify_cases, IdentityCase, Status};
use crate::partitions::{a_series, p_series};
use crate::series::TruncatedSeries;

#[derive(Parser)]
#[command(
    name = "qcubic",
    about = "Exact q-series verification of partition identities and congruences",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum CoeffKind {
    /// Ordinary partition numbers p(n).
    P,
    /// Cubic partition numbers a(n).
    A,
}

#[derive(Subcommand)]
enum Command {
    /// Verify registry identities coefficient by coefficient.
    Verify {
        /// Identity ids to check (see `list`).
        #[arg(conflicts_with = "all")]
        ids: Vec<String>,
        /// Check every identity in the registry.
        #[arg(long)]
        all: bool,
        /// Number of coefficients checked beyond the constant term.
        #[arg(long, default_value_t = 200)]
        terms: usize,
        /// Emit one JSON report object per case.
        #[arg(long)]
        json: bool,
    },
    /// Print p(n) or a(n).
    Coeff {
        kind: CoeffKind,
        n: usize,
        /// Print the least non-negative residue instead of the full value.
        #[arg(long)]
        modulus: Option<u64>,
    },
    /// Expand an expression and print its coefficients.
    Series {
        expr: String,
        #[arg(long, default_value_t = 200)]
        terms: usize,
        /// Reduce every coefficient mod this value.
        #[arg(long)]
        modulus: Option<u64>,
        #[arg(long)]
        json: bool,
    },
    /// Expand an expression and keep the coefficients at exponents m*n + r.
    Dissect {
        expr: String,
        m: usize,
        r: usize,
        #[arg(long, default_value_t = 200)]
        terms: usize,
    },
    /// Print the identity registry.
    List,
}

/// Run the CLI on the given argument list and return the process exit code.
pub fn run(args: impl IntoIterator<Item = String>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(err) => {
            let _ = err.print();
            return err.exit_code();
        }
    };
    match cli.command {
        Command::Verify {
            ids,
            all,
            terms,
            json,
        } => run_verify(&ids, all, terms, json),
        Command::Coeff { kind, n, modulus } => run_coeff(kind, n, modulus),
        Command::Series {
            expr,
            terms,
            modulus,
            json,
        } => run_series(&expr, terms, modulus, json),
        Command::Dissect { expr, m, r, terms } => run_dissect(&expr, m, r, terms),
        Command::List => run_list(),
    }
}

fn run_verify(ids: &[String], all: bool, terms: usize, json: bool) -> i32 {
    if terms == 0 {
        eprintln!("error: --terms must be at least 1");
        return 2;
    }
    let cases: Vec<IdentityCase> = if all {
        registry()
    } else {
        if ids.is_empty() {
            eprintln!("error: pass identity ids or --all (see `qcubic list`)");
            return 2;
        }
        let mut cases = Vec::new();
        for id in ids {
            match find_case(id) {
                Some(case) => cases.push(case),
                None => {
                    eprintln!("error: unknown identity `{id}` (see `qcubic list`)");
                    return 2;
                }
            }
        }
        cases
    };

    let reports = verify_cases(&cases, terms);

    if json {
        let objects: Vec<Value> = reports.iter().map(|r| r.to_json()).collect();
        println!(
            "{}",
            serde_json::to_string_pretty(&Value::Array(objects)).expect("reports serialize")
        );
    } else {
        for report in &reports {
            print!(
                "{:<18} {:<9} {:>5} terms  {:>8.1} ms",
                report.id,
                report.status.to_string(),
                report.terms_checked,
                report.elapsed.as_secs_f64() * 1000.0
            );
            if let Some(m) = &report.first_mismatch {
                print!("  first mismatch at index {}: lhs {} vs rhs {}", m.index, m.lhs, m.rhs);
            }
            println!();
            if let Some(notes) = &report.notes {
                println!("    note: {notes}");
            }
        }
        let verified = reports.iter().filter(|r| r.status == Status::Verified).count();
        println!("{} of {} case(s) verified", verified, reports.len());
    }

    if reports.iter().all(|r| r.status == Status::Verified) {
        0
    } else {
        1
    }
}

fn run_coeff(kind: CoeffKind, n: usize, modulus: Option<u64>) -> i32 {
    let table = match kind {
        CoeffKind::P => p_series(n),
        CoeffKind::A => a_series(n),
    };
    let value = table.value(n);
    match modulus {
        Some(m) if m >= 2 => println!("{}", value.mod_floor(&BigInt::from(m))),
        Some(_) => {
            eprintln!("error: --modulus must be at least 2");
            return 2;
        }
        None => println!("{value}"),
    }
    0
}

fn evaluate(expr: &str, terms: usize) -> Result<TruncatedSeries, String> {
    let ast = parse_expr(expr).map_err(|e| e.to_string())?;
    eval_expr(&ast, terms).map_err(|e| e.to_string())
}

fn print_coefficients(series: &TruncatedSeries, up_to: usize) {
    for n in 0..=up_to.min(series.order()) {
        println!("q^{n}\t{}", series.coeff(n));
    }
}

fn run_series(expr: &str, terms: usize, modulus: Option<u64>, json: bool) -> i32 {
    if let Some(m) = modulus {
        if m < 2 {
            eprintln!("error: --modulus must be at least 2");
            return 2;
        }
    }
    let series = match evaluate(expr, terms) {
        Ok(series) => series,
        Err(message) => {
            eprintln!("error: {message}");
            return 2;
        }
    };
    let series = match modulus {
        Some(m) => series.reduce_mod(m),
        None => series,
    };
    if json {
        let coefficients: Vec<String> =
            series.coeffs().iter().map(|c| c.to_string()).collect();
        let object = json!({
            "expr": expr,
            "terms": terms,
            "modulus": modulus,
            "coefficients": coefficients,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&object).expect("series serializes")
        );
    } else {
        print_coefficients(&series, terms);
    }
    0
}

fn run_dissect(expr: &str, m: usize, r: usize, terms: usize) -> i32 {
    if m < 1 || r >= m {
        eprintln!("error: dissection requires m >= 1 and 0 <= r < m");
        return 2;
    }
    // The source must reach order m*terms + r for the dissected window to be
    // exact.
    let source = match evaluate(expr, m * terms + r) {
        Ok(series) => series,
        Err(message) => {
            eprintln!("error: {message}");
            return 2;
        }
    };
    match source.dissect(m, r) {
        Ok(series) => {
            print_coefficients(&series, terms);
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn run_list() -> i32 {
    for case in registry() {
        println!("{:<18} {}", case.id, case.description);
    }
    0
}
