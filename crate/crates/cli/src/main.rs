//! `inveuler`: coefficient tables, single values and identity checks for the
//! signed Eulerian numbers on involutions.
//!
//! Exit codes: 0 when everything checked holds, 1 when a check finds a
//! counterexample, 2 on usage errors (bad flags, bad arity, exceeded
//! enumeration caps).

use std::io::{self, BufWriter, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use inveuler_core::closed::{
    a_hat, a_minus, a_plus, a_total, egf_scaled, f1_closed, f1_recurrence, f_split, i_plus,
    involutions_count, SignedEulerTable,
};
use inveuler_core::geninv::a_hat_bruteforce;
use inveuler_core::perm::{brute_involution_tables, brute_table};
use inveuler_core::verify::{run, Identity, RangeArgs};
use inveuler_core::{Caps, ExactInt, TableKind};
use num_bigint::BigInt;
use serde::Serialize;
use serde_json::value::RawValue;

#[derive(Parser)]
#[command(name = "inveuler", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a coefficient table, one row per entry.
    Table(TableArgs),
    /// Check an identity over a range and print a JSON report.
    Verify(VerifyArgs),
    /// Print a single exact value.
    Eval(EvalArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    /// signed rise counts over involutions
    F,
    /// even involutions by rises
    FPlus,
    /// odd involutions by rises
    FMinus,
    /// Eulerian numbers (descents over S_n)
    AEulerian,
    /// signed Eulerian numbers (signed rises over S_n)
    BSigned,
    /// even minus odd generalized involutions, by (n, m)
    AHat,
    /// F_n(1)
    #[value(name = "F1")]
    F1,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Args)]
struct TableArgs {
    kind: Kind,
    /// Single row index n.
    #[arg(long, conflicts_with_all = ["n_min", "n_max"])]
    n: Option<usize>,
    #[arg(long)]
    n_min: Option<usize>,
    #[arg(long)]
    n_max: Option<usize>,
    /// Largest m for `a-hat` (default n + 1).
    #[arg(long)]
    m_max: Option<usize>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Emit a CSV header row.
    #[arg(long)]
    header: bool,
    /// Cross-check every entry against an independent route.
    #[arg(long)]
    check: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of the identity names, or `all`.
    #[arg(value_parser = parse_identity)]
    identity: Target,
    #[arg(long)]
    n_max: Option<usize>,
    #[arg(long)]
    m_max: Option<usize>,
    #[arg(long)]
    s_max: Option<usize>,
    #[arg(long)]
    u_max: Option<usize>,
    #[arg(long)]
    t_max: Option<usize>,
    #[arg(long)]
    sum_n_max: Option<usize>,
}

#[derive(Clone, Copy)]
enum Target {
    All,
    One(Identity),
}

fn parse_identity(s: &str) -> Result<Target, String> {
    if s == "all" {
        return Ok(Target::All);
    }
    let names: Vec<_> = Identity::ALL.iter().map(|i| i.name()).collect();
    s.parse()
        .map(Target::One)
        .map_err(|e| format!("{e}; expected `all` or one of {}", names.join(", ")))
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Expr {
    F,
    AHat,
    APlus,
    AMinus,
    ATotal,
    #[value(name = "F1")]
    F1,
    IPlus,
    InvCount,
}

#[derive(Args)]
struct EvalArgs {
    expr: Expr,
    #[arg(allow_negative_numbers = true)]
    args: Vec<String>,
}

/// Failure modes, mapped onto exit codes.
enum Failure {
    Usage(String),
    Mismatch(String),
}

impl From<inveuler_core::Error> for Failure {
    fn from(e: inveuler_core::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let caps = Caps::from_env();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = match cli.command {
        Command::Table(args) => table(&args, &caps, &mut out),
        Command::Verify(args) => verify(&args, &caps, &mut out),
        Command::Eval(args) => eval(&args, &mut out),
    };
    let flushed = out.flush();
    match (result, flushed) {
        (Ok(()), Ok(())) => ExitCode::SUCCESS,
        (Err(Failure::Mismatch(msg)), _) => {
            eprintln!("inveuler: {msg}");
            ExitCode::from(1)
        }
        (Err(Failure::Usage(msg)), _) => {
            eprintln!("inveuler: {msg}");
            ExitCode::from(2)
        }
        (Ok(()), Err(e)) => {
            eprintln!("inveuler: {e}");
            ExitCode::from(2)
        }
    }
}

struct Row {
    n: usize,
    index: Option<i64>,
    value: ExactInt,
}

#[derive(Serialize)]
struct JsonRow<'a> {
    n: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    k: Option<i64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    m: Option<i64>,
    value: &'a RawValue,
}

fn table(args: &TableArgs, caps: &Caps, out: &mut impl Write) -> Result<(), Failure> {
    let (n_min, n_max) = match (args.n, args.n_min, args.n_max) {
        (Some(n), _, _) => (n, n),
        (None, lo, Some(hi)) => (lo.unwrap_or(0), hi),
        (None, _, None) => return Err(Failure::Usage("give --n or --n-max".into())),
    };
    if n_min > n_max {
        return Err(Failure::Usage(format!(
            "--n-min {n_min} exceeds --n-max {n_max}"
        )));
    }
    if args.m_max.is_some() && args.kind != Kind::AHat {
        return Err(Failure::Usage("--m-max only applies to a-hat".into()));
    }

    let mut rows = Vec::new();
    let mut mismatches = Vec::new();
    let mut check = |what: &str, n: usize, i: i64, closed: &ExactInt, other: &ExactInt| {
        if closed != other {
            mismatches.push(format!("{what}({n},{i}): {closed} vs {other}"));
        }
    };
    let k_range = |n: usize| 0..n.max(1) as i64;

    match args.kind {
        Kind::F => {
            let f = SignedEulerTable::new(n_max);
            for n in n_min..=n_max {
                let brute = if args.check {
                    Some(brute_involution_tables(n, caps)?)
                } else {
                    None
                };
                for k in k_range(n) {
                    let value = f.get(n as i64, k);
                    if let Some(b) = &brute {
                        check("f", n, k, &value, &b.signed.get(k));
                    }
                    rows.push(Row {
                        n,
                        index: Some(k),
                        value,
                    });
                }
            }
        }
        Kind::FPlus | Kind::FMinus => {
            let plus = args.kind == Kind::FPlus;
            for n in n_min..=n_max {
                let brute = if args.check {
                    Some(brute_involution_tables(n, caps)?)
                } else {
                    None
                };
                for k in k_range(n) {
                    let (p, m) = f_split(n, k)?;
                    let value = if plus { p } else { m };
                    if let Some(b) = &brute {
                        let other = if plus { b.even.get(k) } else { b.odd.get(k) };
                        check(if plus { "f+" } else { "f-" }, n, k, &value, &other);
                    }
                    rows.push(Row {
                        n,
                        index: Some(k),
                        value,
                    });
                }
            }
        }
        Kind::AEulerian | Kind::BSigned => {
            let kind = if args.kind == Kind::AEulerian {
                TableKind::Eulerian
            } else {
                TableKind::SignedEulerian
            };
            for n in n_min..=n_max {
                let t = brute_table(n, kind, caps)?;
                for (k, value) in t.entries.into_iter().enumerate() {
                    rows.push(Row {
                        n,
                        index: Some(k as i64),
                        value,
                    });
                }
            }
        }
        Kind::AHat => {
            for n in n_min..=n_max {
                for m in 0..=args.m_max.unwrap_or(n + 1) {
                    let value = a_hat(n, m)?;
                    if args.check {
                        check("a_hat", n, m as i64, &value, &a_hat_bruteforce(n, m, caps)?);
                    }
                    rows.push(Row {
                        n,
                        index: Some(m as i64),
                        value,
                    });
                }
            }
        }
        Kind::F1 => {
            let rec = f1_recurrence(n_max);
            let egf = egf_scaled(n_max);
            for n in n_min..=n_max {
                let value = f1_closed(n);
                if args.check {
                    check("F1 recurrence", n, 0, &value, &rec[n]);
                    check("F1 egf", n, 0, &value, &egf[n]);
                }
                rows.push(Row {
                    n,
                    index: None,
                    value,
                });
            }
        }
    }

    let column = if args.kind == Kind::AHat { "m" } else { "k" };
    write_rows(out, &rows, args.format, args.header, column)?;
    if mismatches.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!(
            "{} mismatches, first: {}",
            mismatches.len(),
            mismatches[0]
        )))
    }
}

fn write_rows(
    out: &mut impl Write,
    rows: &[Row],
    format: Format,
    header: bool,
    column: &str,
) -> Result<(), Failure> {
    match format {
        Format::Csv => {
            if header {
                match rows.first().and_then(|r| r.index) {
                    Some(_) => writeln!(out, "n,{column},value")?,
                    None => writeln!(out, "n,value")?,
                }
            }
            for r in rows {
                match r.index {
                    Some(i) => writeln!(out, "{},{},{}", r.n, i, r.value)?,
                    None => writeln!(out, "{},{}", r.n, r.value)?,
                }
            }
        }
        Format::Json => {
            let raw: Vec<Box<RawValue>> = rows
                .iter()
                .map(|r| RawValue::from_string(r.value.to_string()).expect("integer literal"))
                .collect();
            let json: Vec<JsonRow<'_>> = rows
                .iter()
                .zip(&raw)
                .map(|(r, value)| JsonRow {
                    n: r.n,
                    k: r.index.filter(|_| column == "k"),
                    m: r.index.filter(|_| column == "m"),
                    value,
                })
                .collect();
            serde_json::to_writer(&mut *out, &json).map_err(|e| Failure::Usage(e.to_string()))?;
            writeln!(out)?;
        }
    }
    Ok(())
}

fn verify(args: &VerifyArgs, caps: &Caps, out: &mut impl Write) -> Result<(), Failure> {
    let range = RangeArgs {
        n_max: args.n_max,
        m_max: args.m_max,
        s_max: args.s_max,
        u_max: args.u_max,
        t_max: args.t_max,
        sum_n_max: args.sum_n_max,
    };
    let ids: Vec<Identity> = match args.identity {
        Target::All => Identity::ALL.to_vec(),
        Target::One(id) => vec![id],
    };
    let mut failed = Vec::new();
    for id in ids {
        let report = run(id, &range, caps)?;
        serde_json::to_writer(&mut *out, &report).map_err(|e| Failure::Usage(e.to_string()))?;
        writeln!(out)?;
        if !report.is_ok() {
            failed.push(id.name());
        }
    }
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Mismatch(format!("failed: {}", failed.join(", "))))
    }
}

fn eval(args: &EvalArgs, out: &mut impl Write) -> Result<(), Failure> {
    let arity = match args.expr {
        Expr::F | Expr::AHat | Expr::APlus | Expr::AMinus | Expr::ATotal => 2,
        Expr::F1 | Expr::IPlus | Expr::InvCount => 1,
    };
    if args.args.len() != arity {
        return Err(Failure::Usage(format!(
            "expected {arity} argument(s), got {}",
            args.args.len()
        )));
    }
    let n = parse_nonneg(&args.args[0], "n")?;
    let value: BigInt = match args.expr {
        Expr::F => {
            let k: i64 = args.args[1]
                .parse()
                .map_err(|_| Failure::Usage(format!("k: not an integer: {}", args.args[1])))?;
            inveuler_core::closed::f_signed(n, k)
        }
        Expr::AHat => a_hat(n, parse_nonneg(&args.args[1], "m")?)?,
        Expr::APlus => a_plus(n, parse_nonneg(&args.args[1], "m")?),
        Expr::AMinus => a_minus(n, parse_nonneg(&args.args[1], "m")?),
        Expr::ATotal => a_total(n, parse_nonneg(&args.args[1], "m")?),
        Expr::F1 => f1_closed(n),
        Expr::IPlus => i_plus(n),
        Expr::InvCount => involutions_count(n),
    };
    writeln!(out, "{value}")?;
    Ok(())
}

fn parse_nonneg(s: &str, name: &str) -> Result<usize, Failure> {
    s.parse()
        .map_err(|_| Failure::Usage(format!("{name}: not a nonnegative integer: {s}")))
}
