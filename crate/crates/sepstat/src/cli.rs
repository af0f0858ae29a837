//! Command-line definitions and dispatch.

use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use sepstat_core::enumerate::verify::{run_suite, VerificationReport};
use sepstat_core::enumerate::{
    expectation_formula, expectation_from, full_separator_perms, max_separator_perms,
    ExpectationKind, StatKind,
};
use sepstat_core::gf::{bond_gf, bond_marked_gf, vertical_marked_gf, vertical_sep_gf, BiSeries};
use sepstat_core::separators::{sep_count, separator_report};
use sepstat_core::{Permutation, Rational};

use crate::config::{Limits, DEFAULT_ORDER, DEFAULT_VERIFY_N, MAX_MAXSEP_K};
use crate::formats;
use crate::parallel::{build_pool, parallel_sweep, parallel_sweeps_upto};

/// Significant digits in approximate decimal output.
const APPROX_DIGITS: usize = 12;

#[derive(Debug, Parser)]
#[command(name = "sepstat", version, about = "Separators, bonds and their generating functions")]
pub struct Cli {
    /// Output format; csv is only available for dist and gf.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Worker threads for exhaustive sweeps (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// permutations by vertical separators
    #[value(name = "h")]
    H,
    /// permutations by marked vertical separators
    #[value(name = "g")]
    G,
    /// permutations by marked bonds
    #[value(name = "A", alias = "a")]
    A,
    /// permutations by bonds
    #[value(name = "B", alias = "b")]
    B,
}

impl Which {
    fn name(self) -> &'static str {
        match self {
            Which::H => "h",
            Which::G => "g",
            Which::A => "A",
            Which::B => "B",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Formula,
    Empirical,
    Both,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Separators, bonds and runs of one permutation.
    Report {
        /// e.g. 31524, "3 1 5 2 4" or 10,9,8,7,6,5,4,3,2,1
        perm: String,
    },
    /// Distribution of a statistic over all permutations of size n.
    Dist {
        n: usize,
        #[arg(long, default_value = "vertical", value_parser = parse_kind)]
        kind: StatKind,
    },
    /// Coefficients of a generating function up to z^order.
    Gf {
        #[arg(value_enum, default_value_t = Which::H)]
        which: Which,
        #[arg(long, default_value_t = DEFAULT_ORDER)]
        order: usize,
    },
    /// Expected number of separators in a random permutation of size n.
    Expect {
        n: u64,
        #[arg(long, default_value = "vertical", value_parser = parse_kind)]
        kind: StatKind,
        #[arg(long, value_enum, default_value_t = Mode::Formula)]
        mode: Mode,
    },
    /// Permutations of size 4k in which every entry is a separator.
    Maxsep {
        k: usize,
        /// Also compare against exhaustive enumeration of size 4k.
        #[arg(long)]
        verify: bool,
    },
    /// Checks the generating functions and invariants against enumeration.
    Verify {
        #[arg(default_value_t = DEFAULT_VERIFY_N)]
        n_max: usize,
    },
}

fn parse_kind(s: &str) -> Result<StatKind, String> {
    s.parse().map_err(|e| format!("{e}"))
}

#[derive(Debug)]
pub enum CliError {
    /// Bad arguments or input; exit code 2.
    Usage(String),
    /// IO failure; exit code 2.
    Io(std::io::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(s) => f.write_str(s),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

fn usage(e: impl ToString) -> CliError {
    CliError::Usage(e.to_string())
}

/// Rendered output and whether every check it carries passed.
#[derive(Debug)]
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    fn ok(text: String) -> Self {
        Output { text, ok: true }
    }
}

fn json_text(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

pub fn run(cli: &Cli, limits: &Limits) -> Result<Output, CliError> {
    let tabular = matches!(cli.command, Command::Dist { .. } | Command::Gf { .. });
    if cli.format == Format::Csv && !tabular {
        return Err(usage("csv output is only available for dist and gf"));
    }
    let pool = || build_pool(cli.threads).map_err(usage);
    match &cli.command {
        Command::Report { perm } => {
            let p: Permutation = perm.parse().map_err(usage)?;
            let r = separator_report(&p);
            Ok(Output::ok(match cli.format {
                Format::Json => json_text(&formats::report_to_json(&p, &r)),
                _ => formats::report_to_plain(&p, &r),
            }))
        }
        Command::Dist { n, kind } => {
            limits.check_n(*n).map_err(usage)?;
            let table = parallel_sweep(&pool()?, *n).map_err(usage)?.table(*kind);
            Ok(Output::ok(match cli.format {
                Format::Json => json_text(&formats::dist_to_json(&table)),
                Format::Csv => formats::rows_to_csv(&formats::dist_rows(&table)).map_err(usage)?,
                Format::Plain => formats::dist_to_plain(&table),
            }))
        }
        Command::Gf { which, order } => {
            limits.check_order(*order).map_err(usage)?;
            let series = build_series(*which, *order);
            Ok(Output::ok(match cli.format {
                Format::Json => json_text(&formats::series_to_json(which.name(), &series)),
                Format::Csv => formats::rows_to_csv(&formats::series_rows(&series)).map_err(usage)?,
                Format::Plain => formats::series_to_plain(which.name(), &series),
            }))
        }
        Command::Expect { n, kind, mode } => {
            let kind = ExpectationKind::try_from(*kind).map_err(usage)?;
            let formula = (*mode != Mode::Empirical).then(|| expectation_formula(*n, kind));
            let empirical = if *mode == Mode::Formula {
                None
            } else {
                let n = usize::try_from(*n).map_err(usage)?;
                limits.check_n(n).map_err(usage)?;
                let hist = parallel_sweep(&pool()?, n).map_err(usage)?;
                Some(expectation_from(&hist, kind.stat()))
            };
            Ok(render_expectation(cli.format, *n, kind, formula, empirical))
        }
        Command::Maxsep { k, verify } => {
            if *k > MAX_MAXSEP_K {
                return Err(usage(format!("k = {k} exceeds the maximum {MAX_MAXSEP_K}")));
            }
            let n = 4 * k;
            if *verify {
                limits.check_n(n).map_err(usage)?;
            }
            let perms = max_separator_perms(*k).map_err(usage)?;
            let mut ok = perms.iter().all(|p| sep_count(p) == n);
            let verified = if *verify {
                let found = full_separator_perms(n).map_err(usage)?;
                ok &= found == perms;
                Some(found == perms)
            } else {
                None
            };
            Ok(Output {
                text: render_maxsep(cli.format, *k, &perms, verified),
                ok,
            })
        }
        Command::Verify { n_max } => {
            limits.check_n(*n_max).map_err(usage)?;
            let sweeps = parallel_sweeps_upto(&pool()?, *n_max).map_err(usage)?;
            let report = run_suite(&sweeps);
            Ok(Output {
                text: render_verification(cli.format, &report),
                ok: report.passed(),
            })
        }
    }
}

fn build_series(which: Which, order: usize) -> BiSeries {
    match which {
        Which::H => vertical_sep_gf(order),
        Which::G => vertical_marked_gf(order),
        Which::A => bond_marked_gf(order),
        Which::B => bond_gf(order),
    }
}

fn render_expectation(
    format: Format,
    n: u64,
    kind: ExpectationKind,
    formula: Option<Rational>,
    empirical: Option<Rational>,
) -> Output {
    let matched = match (&formula, &empirical) {
        (Some(f), Some(e)) => Some(f == e),
        _ => None,
    };
    let value = formula.as_ref().or(empirical.as_ref()).expect("at least one mode");
    let approx = formats::approx_decimal(value, APPROX_DIGITS);
    let text = match format {
        Format::Json => {
            let mut obj = json!({
                "n": n,
                "kind": kind.to_string(),
                "approx": approx,
            });
            if let Some(f) = &formula {
                obj["formula"] = json!(formats::rational_to_string(f));
            }
            if let Some(e) = &empirical {
                obj["empirical"] = json!(formats::rational_to_string(e));
            }
            if let Some(m) = matched {
                obj["match"] = json!(m);
            }
            json_text(&obj)
        }
        _ => {
            let first = match (&formula, &empirical) {
                (Some(f), Some(e)) => format!(
                    "{} = {} {}",
                    formats::rational_to_string(f),
                    formats::rational_to_string(e),
                    if matched == Some(true) { "MATCH" } else { "MISMATCH" }
                ),
                _ => formats::rational_to_string(value),
            };
            format!("{first}\napprox {approx}\n")
        }
    };
    Output {
        text,
        ok: matched != Some(false),
    }
}

fn render_maxsep(format: Format, k: usize, perms: &[Permutation], verified: Option<bool>) -> String {
    match format {
        Format::Json => {
            let mut obj = json!({
                "k": k,
                "n": 4 * k,
                "count": perms.len(),
                "perms": perms.iter().map(formats::perm_to_json).collect::<Vec<_>>(),
            });
            if let Some(v) = verified {
                obj["verified"] = json!(v);
            }
            json_text(&obj)
        }
        _ => {
            let mut out: String = perms.iter().map(|p| format!("{p}\n")).collect();
            out += &format!("count: {}\n", perms.len());
            if let Some(v) = verified {
                out += &format!(
                    "exhaustive check: {}\n",
                    if v { "MATCH" } else { "MISMATCH" }
                );
            }
            out
        }
    }
}

fn render_verification(format: Format, report: &VerificationReport) -> String {
    match format {
        Format::Json => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({"name": c.name, "passed": c.passed, "detail": c.detail}))
                .collect();
            let mismatches: Vec<Value> = report
                .gf
                .mismatches
                .iter()
                .map(|m| {
                    json!({
                        "series": format!("{:?}", m.series),
                        "n": m.n,
                        "m": m.m,
                        "expected": m.expected.to_string(),
                        "actual": m.actual.to_string(),
                    })
                })
                .collect();
            json_text(&json!({
                "n_max": report.n_max,
                "passed": report.passed(),
                "checks": checks,
                "gf_mismatches": mismatches,
            }))
        }
        _ => {
            let mut out = String::new();
            for c in &report.checks {
                if c.passed {
                    out += &format!("[ok]   {}\n", c.name);
                } else {
                    out += &format!("[FAIL] {}: {}\n", c.name, c.detail);
                }
            }
            out += &format!(
                "verification up to n = {}: {}\n",
                report.n_max,
                if report.passed() { "passed" } else { "FAILED" }
            );
            out
        }
    }
}
