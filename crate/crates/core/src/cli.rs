//! Command-line driver.
//!
//! Errors go to standard error with a stable prefix: `error[usage]:` (exit 2),
//! `error[domain]:` or `error[budget]:` (exit 1).

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::census::{run_census_with, CensusMode, CensusOptions, DEFAULT_BUDGET};
use crate::classify::classify;
use crate::error::Error;
use crate::geom::{absolutely_irreducible_bcg, count_points_curve_with, count_points_surface_with, LopsidedBox, POINT_BUDGET};
use crate::symres::{cache, ResolventSpec};
use crate::{IntPoly, ZMPoly};

/// Environment variable overriding the census and point-count budgets.
pub const BUDGET_ENV: &str = "GALENUM_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "galenum", version, about = "Galois groups, resolvents and coefficient-box censuses")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Classify X^n + a_1 X^(n-1) + ... + a_n (degree 3 to 6).
    Classify {
        /// Comma-separated a_1,...,a_n.
        #[arg(long, allow_hyphen_values = true)]
        coeffs: String,
    },
    /// Exhaustive census over the box [-H, H]^n.
    Census {
        #[arg(long)]
        degree: usize,
        #[arg(long)]
        height: u64,
        /// full, solvable_only or reducible_only
        #[arg(long, default_value = "full")]
        mode: String,
        #[arg(long, default_value_t = 1)]
        shards: usize,
        /// Directory for the CSV and JSON reports.
        #[arg(long, default_value = ".")]
        out: PathBuf,
        /// Maximum number of coefficient tuples.
        #[arg(long)]
        budget: Option<u128>,
        /// Resumable progress file.
        #[arg(long)]
        checkpoint: Option<PathBuf>,
    },
    /// Regenerate a resolvent; with --verify, diff it against the shipped cache.
    Resolvent {
        #[arg(long)]
        name: String,
        #[arg(long)]
        verify: bool,
    },
    /// Newton polygon and absolute irreducibility verdict of a bivariate polynomial.
    Newton {
        #[arg(long)]
        poly: PathBuf,
    },
    /// Integer points on a curve or surface in a box.
    Points {
        #[arg(long)]
        poly: PathBuf,
        /// Comma-separated bounds B1,B2[,B3].
        #[arg(long = "box")]
        bounds: String,
        #[arg(long)]
        budget: Option<u128>,
    },
}

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Parses `argv` (program name first) and runs the command; returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(argv, &mut stdout.lock(), &mut stderr.lock())
}

pub fn run_with<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(out, "{e}");
                return 0;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            let _ = writeln!(err, "error[usage]: {first}");
            return 2;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error[usage]: {m}");
            2
        }
        Err(Failure::Domain(e @ Error::Budget { .. })) => {
            let _ = writeln!(err, "error[budget]: {e}");
            1
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error[domain]: {e}");
            1
        }
    }
}

fn env_budget() -> Result<Option<u128>, Failure> {
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v.trim().parse().map(Some).map_err(|_| usage(format!("{BUDGET_ENV} must be a non-negative integer, got {v:?}"))),
        Err(_) => Ok(None),
    }
}

fn parse_coeffs(s: &str) -> Result<IntPoly, Failure> {
    let coeffs = s
        .split(',')
        .map(|t| t.trim().parse::<BigInt>().map_err(|_| usage(format!("malformed coefficient {t:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if !(3..=6).contains(&coeffs.len()) {
        return Err(usage(format!("expected 3 to 6 coefficients, got {}", coeffs.len())));
    }
    IntPoly::new(coeffs).map_err(|e| usage(e.to_string()))
}

/// Reads a polynomial file: an optional `vars: x, y` line, then the expression.
pub fn read_poly_file(path: &Path) -> crate::Result<ZMPoly> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    parse_poly_text(&text)
}

pub fn parse_poly_text(text: &str) -> crate::Result<ZMPoly> {
    let mut vars = None;
    let mut body = Vec::new();
    for line in text.lines() {
        let t = line.trim();
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if let Some(rest) = t.strip_prefix("vars:") {
            if vars.is_some() || !body.is_empty() {
                return Err(Error::Parse("`vars:` must be the first line".into()));
            }
            vars = Some(rest.split(',').map(|v| v.trim().to_string()).filter(|v| !v.is_empty()).collect::<Vec<_>>());
            continue;
        }
        body.push(t);
    }
    ZMPoly::parse(&body.join(" "), vars.as_deref())
}

fn parse_bounds(s: &str) -> Result<LopsidedBox, Failure> {
    let bounds = s
        .split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| usage(format!("malformed box bound {t:?}"))))
        .collect::<Result<Vec<_>, _>>()?;
    if !(2..=3).contains(&bounds.len()) {
        return Err(usage("box needs 2 or 3 bounds"));
    }
    LopsidedBox::new(bounds).map_err(|e| usage(e.to_string()))
}

fn print_json(out: &mut dyn Write, v: &Value) -> Result<(), Failure> {
    writeln!(out, "{}", serde_json::to_string_pretty(v).expect("serializable")).map_err(|e| Failure::Domain(e.into()))
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match cmd {
        Command::Classify { coeffs } => {
            let f = parse_coeffs(&coeffs)?;
            let verdict = classify(&f)?;
            print_json(out, &verdict.to_json())
        }
        Command::Census { degree, height, mode, shards, out: dir, budget, checkpoint } => {
            let mode: CensusMode = mode.parse().map_err(|e: Error| usage(e.to_string()))?;
            if !(3..=6).contains(&degree) {
                return Err(usage(format!("degree must be in 3..=6, got {degree}")));
            }
            if shards == 0 {
                return Err(usage("shard count must be positive"));
            }
            let budget = match budget {
                Some(b) => b,
                None => env_budget()?.unwrap_or(DEFAULT_BUDGET),
            };
            let opts = CensusOptions { shards, budget, checkpoint };
            let report = run_census_with(degree, height, mode, &opts)?;
            let stem = dir.join(format!("census_n{degree}_h{height}_{mode}"));
            let csv = report.to_csv();
            fs::create_dir_all(&dir).map_err(|e| Failure::Domain(e.into()))?;
            fs::write(stem.with_extension("csv"), &csv).map_err(|e| Failure::Domain(e.into()))?;
            let json = serde_json::to_string_pretty(&report.to_json(true)).expect("serializable");
            fs::write(stem.with_extension("json"), json + "\n").map_err(|e| Failure::Domain(e.into()))?;
            write!(out, "{csv}").map_err(|e| Failure::Domain(e.into()))
        }
        Command::Resolvent { name, verify } => {
            if !ResolventSpec::CACHED.contains(&name.as_str()) {
                return Err(usage(format!("unknown resolvent {name:?}; expected one of {}", ResolventSpec::CACHED.join(", "))));
            }
            let regen = cache::regenerate(&name)?;
            if verify {
                match regen.first_difference {
                    None => writeln!(out, "cache matches: {}", cache::file_name(&name)).map_err(|e| Failure::Domain(e.into())),
                    Some(line) => Err(Failure::Domain(Error::Verification(format!("{name}: regenerated text differs from the cache at line {line}")))),
                }
            } else {
                write!(out, "{}", regen.text).map_err(|e| Failure::Domain(e.into()))
            }
        }
        Command::Newton { poly } => {
            let p = read_poly_file(&poly).map_err(|e| usage(e.to_string()))?;
            if p.nvars() != 2 {
                return Err(usage(format!("newton needs a bivariate polynomial, got {} variables", p.nvars())));
            }
            let report = absolutely_irreducible_bcg(&p)?;
            print_json(out, &report.to_json())
        }
        Command::Points { poly, bounds, budget } => {
            let p = read_poly_file(&poly).map_err(|e| usage(e.to_string()))?;
            let bx = parse_bounds(&bounds)?;
            if p.nvars() != bx.bounds().len() {
                return Err(usage(format!("{} variables but {} bounds", p.nvars(), bx.bounds().len())));
            }
            let budget = match budget {
                Some(b) => b,
                None => env_budget()?.unwrap_or(POINT_BUDGET),
            };
            let start = Instant::now();
            let count = if p.nvars() == 2 { count_points_curve_with(&p, &bx, budget)? } else { count_points_surface_with(&p, &bx, budget)? };
            print_json(
                out,
                &json!({
                    "schema": crate::classify::SCHEMA_VERSION,
                    "polynomial": p.to_string(),
                    "box": bx.bounds(),
                    "count": count,
                    "seconds": start.elapsed().as_secs_f64(),
                }),
            )
        }
    }
}
