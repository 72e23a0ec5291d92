//! Library side of the `msection` command: argument types, command
//! implementations and the serializable [`report::Report`].

pub mod args;
pub mod commands;
pub mod fixtures;
pub mod report;
pub mod verify;

use std::fmt;

use args::{Cli, Command};
use fixtures::FixtureSource;
use report::Report;

/// Exit status for a run in which every check passed.
pub const EXIT_PASS: u8 = 0;
/// Exit status when a mathematical check failed.
pub const EXIT_CHECK_FAILED: u8 = 1;
/// Exit status for usage and input errors.
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(msection::Error),
    Fetch(String),
    Io(String),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage: {m}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Fetch(m) => write!(f, "fetch failed: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<msection::Error> for CliError {
    fn from(e: msection::Error) -> Self {
        CliError::Core(e)
    }
}

pub fn run(cli: &Cli) -> Result<Report, CliError> {
    let n_terms = cli.n_terms;
    if let Some(n) = n_terms {
        if n == 0 || n > args::MAX_TERMS {
            return Err(CliError::Usage(format!("--n-terms must be in 1..={}", args::MAX_TERMS)));
        }
    }
    match &cli.command {
        Command::Msect { p, q, r, s, m, l } => commands::msect(p, q, r, s, *m, *l, n_terms),
        Command::Ogf { p, q, r, s } => commands::ogf(p, q, r, s, n_terms),
        Command::SSection { m, l } => commands::s_section(*m, *l),
        Command::Verify(v) => verify::run(v, n_terms, cli.seed),
        Command::Triangle { rows } => commands::triangle(*rows),
        Command::OeisCheck(o) => {
            let source = FixtureSource {
                cache_dir: o.cache_dir.clone().or_else(fixtures::default_cache_dir),
                fetch: o.fetch && !cli.offline,
            };
            commands::oeis_check(&source, &o.a_number, &o.generator, o.skip, n_terms)
        }
    }
}

/// Exit status for the outcome of [`run`].
pub fn exit_code(outcome: &Result<Report, CliError>) -> u8 {
    match outcome {
        Ok(r) if r.passed => EXIT_PASS,
        Ok(_) => EXIT_CHECK_FAILED,
        Err(_) => EXIT_USAGE,
    }
}
