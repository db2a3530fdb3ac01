//! Command-line front end. The `singcheck` binary forwards to [`run`].

use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{mu_br_rel, mu_g};
use crate::invariants::{
    bruce_roberts, check_preconditions, is_quasihomogeneous, milnor_number, mu_fv_le_greuel, tjurina_number, GermPair,
};
use crate::parse::parse_poly;
use crate::poly::VarContext;
use crate::report::{error_exit_code, PairReport};

#[derive(Debug, Parser)]
#[command(
    name = "singcheck",
    version,
    about = "Invariants of a function on a hypersurface germ"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    Milnor,
    Tjurina,
    BruceRoberts,
    RelativeBruceRoberts,
    Greuel,
    MuFv,
    Quasihomogeneous,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute every invariant of (f, g) and check the identities between them.
    Verify {
        #[arg(long)]
        vars: String,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        /// Cross-check each dimension with the jet-truncation oracle.
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 24)]
        oracle_max_degree: u32,
    },
    /// Verify one pair per line of the form `vars ; f ; g`.
    Batch {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 24)]
        oracle_max_degree: u32,
    },
    /// Print a single invariant.
    Invariant {
        #[arg(long)]
        vars: String,
        #[arg(long, value_enum)]
        which: Which,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: Option<String>,
    },
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Verify {
            vars,
            f,
            g,
            format,
            oracle,
            oracle_max_degree,
        } => verify(&vars, &f, &g, format, oracle.then_some(oracle_max_degree), out, err),
        Command::Batch {
            input,
            format,
            oracle,
            oracle_max_degree,
        } => batch(&input, format, oracle.then_some(oracle_max_degree), out, err),
        Command::Invariant { vars, which, f, g } => invariant(&vars, which, &f, g.as_deref(), out),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            error_exit_code(&e)
        }
    }
}

fn parse_pair(vars: &str, f: &str, g: &str) -> Result<GermPair> {
    let ctx = VarContext::parse_list(vars)?;
    GermPair::new(parse_poly(f, &ctx)?, parse_poly(g, &ctx)?)
}

fn warn_negative_q(report: &PairReport, err: &mut dyn Write) {
    if let PairReport::Verified(v) = report {
        if v.invariants.q_V < 0 {
            let _ = writeln!(
                err,
                "warning: q(V) = {} is negative for g = {}; mu >= tau always holds, so this is an engine bug",
                v.invariants.q_V, v.g
            );
        }
    }
}

fn emit(report: &PairReport, format: Format, out: &mut dyn Write) -> Result<()> {
    let text = match format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_string(),
    };
    out.write_all(text.as_bytes())
        .map_err(|e| Error::Input(format!("cannot write output: {e}")))
}

fn verify(
    vars: &str,
    f: &str,
    g: &str,
    format: Format,
    oracle: Option<u32>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let pair = parse_pair(vars, f, g)?;
    let report = PairReport::evaluate(&pair, oracle)?;
    warn_negative_q(&report, err);
    emit(&report, format, out)?;
    Ok(report.exit_code())
}

#[derive(Serialize)]
struct LineError {
    line: usize,
    error: String,
}

#[derive(Serialize)]
#[serde(untagged)]
enum BatchEntry {
    Report(PairReport),
    Error(LineError),
}

fn batch_line(text: &str, oracle: Option<u32>) -> Result<PairReport> {
    let parts: Vec<&str> = text.split(';').map(str::trim).collect();
    let [vars, f, g] = parts[..] else {
        return Err(Error::Input(format!(
            "expected `vars ; f ; g`, found {} field(s)",
            parts.len()
        )));
    };
    PairReport::evaluate(&parse_pair(vars, f, g)?, oracle)
}

fn batch(
    input: &std::path::Path,
    format: Format,
    oracle: Option<u32>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32> {
    let content = match std::fs::read_to_string(input) {
        Ok(c) => c,
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", input.display());
            return Ok(2);
        }
    };
    let lines: Vec<(usize, &str)> = content
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .collect();
    // par_iter + collect keeps input order
    let results: Vec<(usize, Result<PairReport>)> =
        lines.par_iter().map(|&(n, l)| (n, batch_line(l, oracle))).collect();

    let mut code = 0;
    let mut entries = Vec::with_capacity(results.len());
    for (line, r) in results {
        match r {
            Ok(report) => {
                warn_negative_q(&report, err);
                code = code.max(report.exit_code());
                entries.push(BatchEntry::Report(report));
            }
            Err(e) => {
                let _ = writeln!(err, "line {line}: {e}");
                code = code.max(error_exit_code(&e));
                entries.push(BatchEntry::Error(LineError {
                    line,
                    error: e.to_string(),
                }));
            }
        }
    }
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&entries).expect("batch serializes") + "\n",
        Format::Text => entries
            .iter()
            .map(|e| match e {
                BatchEntry::Report(r) => r.to_string(),
                BatchEntry::Error(l) => format!("line {}: error: {}\n", l.line, l.error),
            })
            .collect::<Vec<_>>()
            .join("\n"),
    };
    if let Err(e) = out.write_all(text.as_bytes()) {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return Ok(2);
    }
    Ok(code)
}

fn invariant(vars: &str, which: Which, f: &str, g: Option<&str>, out: &mut dyn Write) -> Result<i32> {
    let ctx = VarContext::parse_list(vars)?;
    let f = parse_poly(f, &ctx)?;
    let value = match which {
        Which::Milnor => milnor_number(&f)?.to_string(),
        Which::Tjurina => tjurina_number(&f)?.to_string(),
        Which::Quasihomogeneous => {
            let q = is_quasihomogeneous(&f)?;
            let weights = q
                .weights
                .map(|w| w.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
                .unwrap_or_else(|| "none".into());
            format!("by_saito={} weights=({weights})", q.by_saito)
        }
        pair_invariant => {
            let Some(g) = g else {
                return Err(Error::Input("--g is required for this invariant".into()));
            };
            let pair = GermPair::new(f, parse_poly(g, &ctx)?)?;
            if let Some(failed) = check_preconditions(&pair)?.first_failure() {
                return Err(Error::Precondition(failed.into()));
            }
            let (f, g) = (&pair.f, &pair.g);
            match pair_invariant {
                Which::BruceRoberts => bruce_roberts(f, g)?,
                Which::RelativeBruceRoberts => mu_br_rel(f, g)?,
                Which::Greuel => mu_g(f, g)?,
                _ => mu_fv_le_greuel(f, g)?,
            }
            .to_string()
        }
    };
    writeln!(out, "{value}").map_err(|e| Error::Input(format!("cannot write output: {e}")))?;
    Ok(0)
}
