//! `momentpoly`: generate, verify and compare generalized orthogonal
//! polynomials built from moment sequences.

mod args;
mod commands;
mod csv;
mod svg;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand};

use args::{FamilyArgs, Format, SeqArgs};
use commands::Outcome;

const OUT_DIR_ENV: &str = "MOMENTPOLY_OUT_DIR";
const TOL_ENV: &str = "MOMENTPOLY_TOL";

#[derive(Parser, Debug)]
#[command(name = "momentpoly", version, about = "Moment-sequence generalizations of the classical orthogonal polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a polynomial and print its moment and standard coefficients
    Gen {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a polynomial against its moment equation and realized equation
    Verify {
        /// JSON written by `gen`, or a bare polynomial document ("-" for stdin)
        #[arg(long)]
        input: String,
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        seq: SeqArgs,
        /// Relative tolerance for floating-point checks [env: MOMENTPOLY_TOL]
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compare generalized and classical polynomials along a q or mu ladder
    Sweep {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        seq: SeqArgs,
        /// Comma-separated parameter values, e.g. 0.8,0.9,0.95
        #[arg(long)]
        params: String,
        /// start:end:count (default: the family's interval, 201 points)
        #[arg(long, allow_hyphen_values = true)]
        grid: Option<String>,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Roots of the generalized polynomial against the classical one
    Roots {
        #[command(flatten)]
        family: FamilyArgs,
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Root perturbation bound for two polynomials of equal degree
    Bound {
        /// Coefficients of f, constant term first
        #[arg(long, allow_hyphen_values = true)]
        f: Option<String>,
        /// Coefficients of g, constant term first
        #[arg(long, allow_hyphen_values = true)]
        g: Option<String>,
        /// q-Laguerre (alpha = 0) of this degree against classical Laguerre
        #[arg(long)]
        q_laguerre: Option<usize>,
        #[arg(long)]
        q: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn tolerance(flag: Option<f64>) -> Result<f64> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var(TOL_ENV) {
            Ok(s) => s.trim().parse().map_err(|_| anyhow!("{TOL_ENV}: cannot parse {s:?}"))?,
            Err(_) => commands::DEFAULT_TOL,
        },
    };
    if !(tol.is_finite() && tol >= 0.0) {
        return Err(anyhow!("--tol must be a nonnegative number, got {tol}"));
    }
    Ok(tol)
}

/// Explicit paths win; relative ones land in MOMENTPOLY_OUT_DIR when set.
/// Without --out, output goes to stdout unless MOMENTPOLY_OUT_DIR is set.
fn destination(out: Option<&Path>, default_name: &str) -> Option<PathBuf> {
    let dir = std::env::var_os(OUT_DIR_ENV).map(PathBuf::from);
    match (out, dir) {
        (Some(p), Some(d)) if p.is_relative() => Some(d.join(p)),
        (Some(p), _) => Some(p.to_path_buf()),
        (None, Some(d)) => Some(d.join(default_name)),
        (None, None) => None,
    }
}

fn emit(outcome: &Outcome, out: Option<&Path>, stem: &str) -> Result<()> {
    let name = format!("{stem}.{}", outcome.format.extension());
    match destination(out, &name) {
        Some(path) => {
            if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
                std::fs::create_dir_all(parent).with_context(|| format!("creating {}", parent.display()))?;
            }
            std::fs::write(&path, &outcome.body).with_context(|| format!("writing {}", path.display()))?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{}", outcome.body),
    }
    for line in &outcome.summary {
        eprintln!("{line}");
    }
    Ok(())
}

fn stem(command: &str, family: &FamilyArgs) -> String {
    match (family.family, family.n) {
        (Some(f), Some(n)) => format!("{command}-{f}-n{n}"),
        _ => command.to_string(),
    }
}

fn run(cli: Cli) -> Result<bool> {
    let outcome_and_out = match &cli.command {
        Command::Gen { family, seq, format, out } => {
            (commands::gen(family, seq, *format)?, out.as_deref(), stem("gen", family))
        }
        Command::Verify { input, family, seq, tol, out } => {
            (commands::verify(family, seq, input, tolerance(*tol)?)?, out.as_deref(), "verify".into())
        }
        Command::Sweep { family, seq, params, grid, format, out } => (
            commands::sweep_cmd(family, seq, params, grid.as_deref(), *format)?,
            out.as_deref(),
            stem("sweep", family),
        ),
        Command::Roots { family, seq, out } => (commands::roots(family, seq)?, out.as_deref(), stem("roots", family)),
        Command::Bound { f, g, q_laguerre, q, out } => (
            commands::bound(f.as_deref(), g.as_deref(), *q_laguerre, q.as_deref())?,
            out.as_deref(),
            "bound".into(),
        ),
    };
    let (outcome, out, stem) = outcome_and_out;
    emit(&outcome, out, &stem)?;
    Ok(outcome.pass)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("verification failed");
            ExitCode::from(1)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
