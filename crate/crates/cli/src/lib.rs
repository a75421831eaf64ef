//! Command-line front end for `thetasg`.
//!
//! [`run`] executes a parsed [`Cli`] against arbitrary writers and returns
//! the process exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, every queried integer is a member, full agreement |
//! | 1 | non-member, or closed forms disagree with the oracle |
//! | 2 | invalid input |
//! | 3 | arithmetic overflow |

pub mod args;
mod batch;
mod commands;
pub mod report;
mod table;

use std::io::{self, Write};

use thiserror::Error;

pub use args::Cli;
pub use report::Report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_OVERFLOW: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] thetasg::Error),
    #[error("invalid parameters: {0}")]
    Params(#[from] thetasg::ParamsError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        use thetasg::Error as E;
        match self {
            CliError::Lib(E::Overflow(_) | E::TooLarge(_)) => EXIT_OVERFLOW,
            CliError::Lib(E::Params(_)) => EXIT_INVALID,
            CliError::Lib(E::Inconsistent(_)) => EXIT_NEGATIVE,
            CliError::Lib(_) => EXIT_INVALID,
            CliError::Params(_) | CliError::Usage(_) | CliError::Csv(_) => EXIT_INVALID,
            CliError::Io(_) | CliError::Json(_) => EXIT_INVALID,
        }
    }
}

/// Runs one invocation. Results go to `out`, diagnostics to `err`.
///
/// `highlight` enables ANSI bold for minimal generators in tables.
pub fn run(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write, highlight: bool) -> i32 {
    let mut ctx = commands::Context {
        format: cli.format,
        out,
        err,
        highlight,
    };
    match commands::dispatch(&cli.command, &mut ctx) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(ctx.err, "error: {e}");
            e.exit_code()
        }
    }
}
