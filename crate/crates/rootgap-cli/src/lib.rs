//! Command line interface and report emitters for the restricted-root gap
//! bounds: root-data tables, per-instance bound reports, catalog-wide
//! verification sweeps, and brute-force strongly-orthogonal oracles, in
//! Markdown, CSV, and JSON.
//!
//! Exit status contract: 0 = all checks pass, 1 = verification failure,
//! 2 = usage error, 3 = internal or infeasibility error.

pub mod args;
pub mod config;
pub mod docs;
pub mod error;
pub mod render;
pub mod run;

use std::io::Write;
use std::process::ExitCode;

use clap::Parser;

pub use error::CliError;
pub use run::{execute, Outcome};

pub fn main_exit_code() -> ExitCode {
    let cli = match args::Cli::try_parse() {
        Ok(cli) => cli,
        // clap uses status 2 for usage errors and 0 for --help/--version
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match execute(cli) {
        Ok(outcome) => {
            let mut stdout = std::io::stdout().lock();
            if stdout.write_all(outcome.text.as_bytes()).is_err() {
                return ExitCode::from(3);
            }
            ExitCode::from(u8::from(!outcome.passed))
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
