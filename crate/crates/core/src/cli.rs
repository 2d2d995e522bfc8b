//! The `cayley` command line: `table`, `verify` and `series`.
//!
//! Data goes to the supplied writer (stdout in the binary), diagnostics to
//! stderr. Exit codes: 0 when every check passes, 1 when a check fails, 2 on
//! usage or domain errors.

mod output;
mod suites;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::error::Error;
use crate::recurrence::{tree_count_closed, TreeCountTable};
use crate::report::VerificationReport;
use crate::series::{self, FormalSeries};

pub use output::{Cell, OutputFormat, Table};
pub use suites::{run_suite, Suite};

/// Upper bound on `series --order`.
pub const MAX_SERIES_ORDER: usize = 200;

#[derive(Debug, Parser)]
#[command(
    name = "cayley",
    version,
    about = "Count labeled trees exactly, three ways"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate T_n from the recurrence next to n^(n-2).
    Table {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        max: u64,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
    /// Run one verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Largest n to check (table-based suites).
        #[arg(long, conflicts_with = "order", value_parser = clap::value_parser!(u64).range(1..))]
        max: Option<u64>,
        /// Truncation order (series suite).
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        order: Option<u64>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
        /// Corrupt T_N before checking; exercises the failure path.
        #[arg(long, hide = true)]
        inject_fault: Option<u64>,
    },
    /// Print generating-function coefficients or identity residuals.
    Series {
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum)]
        what: SeriesWhat,
        #[arg(long, value_enum, default_value_t = OutputFormat::Plain)]
        format: OutputFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SeriesWhat {
    Egf,
    Lagrange,
    Residuals,
}

/// How a run ended, mapped onto the process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Outcome {
    Pass = 0,
    Fail = 1,
    Usage = 2,
}

impl From<Outcome> for ExitCode {
    fn from(o: Outcome) -> Self {
        ExitCode::from(o as u8)
    }
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// Everything but a broken output stream is a usage/domain problem.
    pub fn outcome(&self) -> Outcome {
        Outcome::Usage
    }
}

/// Runs a parsed command, writing data to `out`.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Table { max, format } => cmd_table(*max, *format, out),
        Command::Verify {
            suite,
            max,
            order,
            format,
            inject_fault,
        } => {
            let bound = max.or(*order).unwrap_or_else(|| suite.default_bound());
            let reports = run_suite(*suite, bound, *inject_fault)?;
            let table = Table::from_reports(&reports);
            table.write(*format, out)?;
            Ok(outcome_of(reports.iter().all(VerificationReport::passed)))
        }
        Command::Series {
            order,
            what,
            format,
        } => cmd_series(*order, *what, *format, out),
    }
}

fn outcome_of(passed: bool) -> Outcome {
    if passed {
        Outcome::Pass
    } else {
        Outcome::Fail
    }
}

/// Rows `(n, recurrence, closed form, match)` for `1..=max_n`.
pub fn cmd_table(
    max_n: u64,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    if max_n == 0 {
        return Err(CliError::Usage("--max must be at least 1".into()));
    }
    let counts = TreeCountTable::with_max(max_n)?;
    let mut table = Table::new("table", &["n", "recurrence", "closed_form", "match"]);
    let mut all_ok = true;
    for (n, t_n) in (1..=max_n).zip(counts.values()) {
        let closed = tree_count_closed(n)?;
        let ok = &closed == t_n;
        all_ok &= ok;
        table.push(vec![
            Cell::Int(n),
            Cell::Str(t_n.to_string()),
            Cell::Str(closed.to_string()),
            Cell::Str(if ok { "ok" } else { "MISMATCH" }.into()),
        ]);
    }
    table.write(format, out)?;
    Ok(outcome_of(all_ok))
}

/// Coefficient listings of `S^1..=S^order`, or a residual summary.
pub fn cmd_series(
    order: usize,
    what: SeriesWhat,
    format: OutputFormat,
    out: &mut dyn Write,
) -> Result<Outcome, CliError> {
    if order == 0 || order > MAX_SERIES_ORDER {
        return Err(CliError::Usage(format!(
            "--order must be in 1..={MAX_SERIES_ORDER}, got {order}"
        )));
    }
    let counts = TreeCountTable::with_max(order as u64)?;
    let egf = series::tree_egf(order, &counts)?;
    let coefficient_table = |name: &'static str, s: &FormalSeries| {
        let mut t = Table::new(name, &["power", "coefficient"]);
        for (n, c) in s.coeffs().iter().enumerate().skip(1) {
            t.push(vec![Cell::Int(n as u64), Cell::Str(c.to_string())]);
        }
        t
    };
    match what {
        SeriesWhat::Egf => {
            coefficient_table("series egf", &egf).write(format, out)?;
            Ok(Outcome::Pass)
        }
        SeriesWhat::Lagrange => {
            let t = series::lagrange_invert(&FormalSeries::exp_x(order - 1), order)?;
            coefficient_table("series lagrange", &t).write(format, out)?;
            Ok(Outcome::Pass)
        }
        SeriesWhat::Residuals => {
            let residuals = [
                (
                    "square identity",
                    series::square_identity_residual(&egf, &counts)?,
                ),
                ("differential equation", series::ode_residual(&egf)?),
                ("logarithmic form", series::log_form_residual(&egf)?),
                (
                    "functional equation",
                    series::functional_equation_residual(&egf)?,
                ),
            ];
            let mut t = Table::new(
                "series residuals",
                &["residual", "order", "max_abs_coefficient", "zero"],
            );
            let mut all_zero = true;
            for (name, r) in &residuals {
                all_zero &= r.is_zero();
                t.push(vec![
                    Cell::Str((*name).into()),
                    Cell::Int(r.order() as u64),
                    Cell::Str(r.max_abs_coeff().to_string()),
                    Cell::Bool(r.is_zero()),
                ]);
            }
            t.write(format, out)?;
            Ok(outcome_of(all_zero))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> (Result<Outcome, CliError>, String) {
        let cli =
            Cli::try_parse_from(std::iter::once("cayley").chain(args.iter().copied())).unwrap();
        let mut buf = Vec::new();
        let r = run(&cli, &mut buf);
        (r, String::from_utf8(buf).unwrap())
    }

    #[test]
    fn parse_rejects_unknown_suite_and_zero_max() {
        let e = Cli::try_parse_from(["cayley", "verify", "bogus"]).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(e.to_string().contains("closed-form"));
        assert_eq!(
            Cli::try_parse_from(["cayley", "table", "--max", "0"])
                .unwrap_err()
                .exit_code(),
            2
        );
        assert!(
            Cli::try_parse_from(["cayley", "verify", "series", "--max", "3", "--order", "3"])
                .is_err()
        );
    }

    #[test]
    fn table_csv() {
        let (r, out) = run_args(&["table", "--max", "3", "--format", "csv"]);
        assert_eq!(r.unwrap(), Outcome::Pass);
        assert_eq!(
            out,
            "n,recurrence,closed_form,match\n1,1,1,ok\n2,1,1,ok\n3,3,3,ok\n"
        );
    }

    #[test]
    fn series_order_guard() {
        let (r, _) = run_args(&["series", "--order", "201", "--what", "egf"]);
        assert_eq!(r.unwrap_err().outcome(), Outcome::Usage);
        let (r, _) = run_args(&["series", "--order", "0", "--what", "egf"]);
        assert!(matches!(r, Err(CliError::Usage(_))));
    }

    #[test]
    fn series_listings() {
        let (r, out) = run_args(&[
            "series", "--order", "4", "--what", "lagrange", "--format", "csv",
        ]);
        assert_eq!(r.unwrap(), Outcome::Pass);
        assert_eq!(out, "power,coefficient\n1,1/1\n2,1/1\n3,3/2\n4,8/3\n");
        let (_, out) = run_args(&["series", "--order", "2", "--what", "egf", "--format", "csv"]);
        assert_eq!(out, "power,coefficient\n1,1/1\n2,1/1\n");
    }

    #[test]
    fn verify_with_fault_fails() {
        let (r, _) = run_args(&[
            "verify",
            "closed-form",
            "--max",
            "10",
            "--inject-fault",
            "6",
        ]);
        assert_eq!(r.unwrap(), Outcome::Fail);
    }
}
