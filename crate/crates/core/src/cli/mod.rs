//! Command-line front end.

mod output;
mod table;
mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use output::{bracket_form, poly_from_json, poly_to_json, BRecord, SpinRecord};
pub use table::{b_table, load_cache, render_b, render_spin, save_cache, spin_table, Display, TableFormat, TableMode};
pub use verify::{run_suite, Suite, SuiteOutcome};

use crate::combinatorics::{Partition, StrictPartition};
use crate::engine::SpinKostkaEngine;
use crate::error::Error;
use crate::oracle::Oracle;
use crate::schur::{g_square, SchurExpansion};

#[derive(Debug, Parser)]
#[command(
    name = "spin-kostka",
    version,
    about = "Spin Kostka-Foulkes polynomials and related coefficients"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ValueFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// One K⁻_{ξμ}(t).
    Compute {
        /// Strict partition, e.g. 3,1
        #[arg(long)]
        xi: StrictPartition,
        /// Partition, e.g. 2,1,1
        #[arg(long)]
        mu: Partition,
        /// Use the vertex-operator inner product instead of the recurrence.
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: ValueFormat,
        #[arg(long, value_enum, default_value = "plain")]
        display: Display,
    },
    /// One b_{ξλ}.
    B {
        #[arg(long)]
        xi: StrictPartition,
        #[arg(long)]
        lambda: Partition,
    },
    /// One g_{(r,r),λ}.
    G2 {
        #[arg(long)]
        r: u32,
        #[arg(long)]
        lambda: Partition,
    },
    /// Every cell of weight n.
    Table {
        #[arg(long)]
        n: u32,
        #[arg(long, value_enum, default_value = "spin")]
        mode: TableMode,
        #[arg(long, value_enum)]
        format: TableFormat,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        threads: Option<usize>,
        /// Memo file read before and written after the run.
        #[arg(long)]
        cache: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "plain")]
        display: Display,
    },
    /// Run consistency suites and report PASS/FAIL per suite.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[arg(long, default_value_t = 6)]
        max_n: u32,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Usage(String),
    Runtime(String),
    Verification,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ContractViolation(_) | Error::InvalidPartition { .. } => Failure::Usage(e.to_string()),
            other => Failure::Runtime(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Runtime(e.to_string())
    }
}

/// Runs one command line. Returns the process exit status: 0 on success,
/// 1 on a failed verification or runtime error, 2 on a usage error.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            let _ = if code == 0 {
                out.write_all(text.as_bytes())
            } else {
                err.write_all(text.as_bytes())
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(()) => 0,
        Err(Failure::Verification) => 1,
        Err(Failure::Runtime(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            1
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<(), Failure> {
    match command {
        Command::Compute {
            xi,
            mu,
            oracle,
            format,
            display,
        } => {
            if xi.weight() != mu.weight() {
                return Err(Failure::Usage(format!(
                    "--xi has weight {} but --mu has weight {}",
                    xi.weight(),
                    mu.weight()
                )));
            }
            let poly = if oracle {
                Oracle::new().spin_kostka(&xi, &mu)?
            } else {
                SpinKostkaEngine::new().spin_kostka(&xi, &mu)
            };
            match format {
                ValueFormat::Text => match display {
                    Display::Plain => writeln!(out, "{poly}")?,
                    Display::Bracket => writeln!(out, "{}", bracket_form(&poly))?,
                },
                ValueFormat::Json => writeln!(out, "{}", SpinRecord { xi, mu, poly }.to_json())?,
            }
        }
        Command::B { xi, lambda } => {
            writeln!(out, "{}", SchurExpansion::new().b_coeff(&xi, &lambda))?;
        }
        Command::G2 { r, lambda } => {
            writeln!(out, "{}", g_square(r, &lambda)?)?;
        }
        Command::Table {
            n,
            mode,
            format,
            out: path,
            threads,
            cache,
            display,
        } => {
            if threads == Some(0) {
                return Err(Failure::Usage("--threads must be at least 1".into()));
            }
            let text = match mode {
                TableMode::Spin => {
                    let engine = SpinKostkaEngine::new();
                    if let Some(c) = &cache {
                        load_cache(&engine, c)?;
                    }
                    let records = spin_table(&engine, n, threads)?;
                    if let Some(c) = &cache {
                        save_cache(&engine, c)?;
                    }
                    render_spin(n, &records, format, display)?
                }
                TableMode::B => render_b(n, &b_table(&SchurExpansion::new(), n, threads)?, format)?,
            };
            match path {
                Some(p) => std::fs::write(p, text)?,
                None => out.write_all(text.as_bytes())?,
            }
        }
        Command::Verify { suite, max_n, seed } => {
            let outcomes = run_suite(suite, max_n, seed);
            for o in &outcomes {
                write!(out, "{o}")?;
            }
            if !outcomes.iter().all(SuiteOutcome::passed) {
                return Err(Failure::Verification);
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = run(
            std::iter::once("spin-kostka").chain(args.iter().copied()),
            &mut out,
            &mut err,
        );
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn compute_text_and_json() {
        assert_eq!(
            call(&["compute", "--xi", "3,1", "--mu", "2,2"]),
            (0, "4*t + 4\n".into(), String::new())
        );
        let (code, out, _) = call(&["compute", "--xi", "3,1", "--mu", "2,2", "--format", "json"]);
        assert_eq!(code, 0);
        assert_eq!(out, "{\"xi\":[3,1],\"mu\":[2,2],\"poly\":{\"0\":4,\"1\":4}}\n");
    }

    #[test]
    fn usage_errors_name_the_argument() {
        let (code, _, err) = call(&["compute", "--xi", "1,3", "--mu", "2,2"]);
        assert_eq!(code, 2);
        assert!(err.contains("--xi"), "{err}");
        let (code, _, err) = call(&["compute", "--xi", "3,1", "--mu", "2,x"]);
        assert_eq!(code, 2);
        assert!(err.contains("--mu"), "{err}");
        assert_eq!(call(&["compute", "--xi", "3", "--mu", "2,2"]).0, 2);
        assert_eq!(call(&["frobnicate"]).0, 2);
        assert_eq!(call(&["--help"]).0, 0);
    }

    #[test]
    fn small_commands() {
        assert_eq!(call(&["b", "--xi", "4,3", "--lambda", "2,2,2,1"]).1, "4\n");
        assert_eq!(call(&["g2", "--r", "3", "--lambda", "3,1,1,1"]).1, "1\n");
    }
}
