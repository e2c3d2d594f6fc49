//! Command-line front end for the `hookmonoid` crate.

pub mod args;
mod commands;
pub mod records;

use std::ffi::OsString;
use std::fmt;
use std::io::Write;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::Cli;

/// Environment variable overriding the series truncation order.
pub const SERIES_ENV: &str = "HOOKMONOID_SERIES_N";

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CONSISTENCY: i32 = 2;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Usage(String),
    Consistency(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Consistency(_) => EXIT_CONSISTENCY,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(m) => write!(f, "error: {m}"),
            Failure::Consistency(m) => write!(f, "consistency failure: {m}"),
        }
    }
}

impl From<hookmonoid::Error> for Failure {
    fn from(e: hookmonoid::Error) -> Self {
        match e {
            hookmonoid::Error::Consistency(m) => Failure::Consistency(m),
            e @ hookmonoid::Error::TruncationTooSmall { .. } => {
                Failure::Usage(format!("{e}; raise {SERIES_ENV}"))
            }
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// What a successful command prints and the code it exits with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub code: i32,
}

/// Truncation order for series, from [`SERIES_ENV`] when set.
pub fn series_bound() -> Result<usize, Failure> {
    match std::env::var(SERIES_ENV) {
        Ok(v) => v.trim().parse::<usize>().map_err(|_| {
            Failure::Usage(format!(
                "{SERIES_ENV} must be a non-negative integer, got {v:?}"
            ))
        }),
        Err(_) => Ok(hookmonoid::DEFAULT_TRUNCATION),
    }
}

pub fn execute(cli: &Cli) -> Result<Output, Failure> {
    commands::execute(cli)
}

/// Parse `argv`, run the command and write its output. Returns the exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = out.write_all(text.as_bytes());
                    EXIT_OK
                }
                _ => {
                    let _ = err.write_all(text.as_bytes());
                    EXIT_USAGE
                }
            };
        }
    };
    match execute(&cli) {
        Ok(output) => {
            let _ = writeln!(out, "{}", output.stdout);
            output.code
        }
        Err(failure) => {
            let _ = writeln!(err, "{failure}");
            failure.exit_code()
        }
    }
}
