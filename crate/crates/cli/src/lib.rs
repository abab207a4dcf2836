//! Command-line front-end: `compute`, `certify`, `survey` and `construct`.
//!
//! Everything runs through [`run`], which writes to the given sinks and
//! returns the process exit code: 0 on success, 1 for capacity or internal
//! failures (and invalid certificates), 2 for usage errors.

mod certify;
mod compute;
mod construct;
pub mod input;
mod survey;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use serde::de::DeserializeOwned;

pub use input::{generate, parse_rational, GraphSource};

/// Environment variable holding the worker count.
pub const WORKERS_ENV: &str = "HADWIGER_WORKERS";

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failure(String),
}

impl From<hadwiger::Error> for CliError {
    fn from(e: hadwiger::Error) -> Self {
        CliError::Failure(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Failure(format!("write failed: {e}"))
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "hadwiger",
    version,
    about = "Exact clique minors and fractional Hadwiger numbers of small graphs"
)]
pub struct Cli {
    /// TOML file with defaults for any flag (flags win)
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Worker threads (else the `workers` config key, else HADWIGER_WORKERS)
    #[arg(long, global = true)]
    pub workers: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Compute invariants with certificates, one JSON object per graph
    Compute(compute::ComputeArgs),
    /// Re-validate a certificate against a graph
    Certify(certify::CertifyArgs),
    /// Random-graph survey of h and h_f as CSV
    Survey(survey::SurveyArgs),
    /// Search a witness graph and emit its blow-ups
    Construct(construct::ConstructArgs),
}

/// Flat TOML table whose keys match the long flag names.
#[derive(Default)]
pub(crate) struct Config(toml::Table);

impl Config {
    fn load(path: Option<&PathBuf>) -> Result<Self, CliError> {
        let Some(path) = path else {
            return Ok(Config::default());
        };
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Usage(format!("cannot read config {}: {e}", path.display())))?;
        let table: toml::Table = text
            .parse()
            .map_err(|e| CliError::Usage(format!("bad config {}: {e}", path.display())))?;
        Ok(Config(table))
    }

    /// Fills `slot` from the config unless the flag already set it.
    pub(crate) fn fill<T: DeserializeOwned>(
        &self,
        slot: &mut Option<T>,
        key: &str,
    ) -> Result<(), CliError> {
        if slot.is_none() {
            if let Some(v) = self.0.get(key) {
                *slot =
                    Some(v.clone().try_into().map_err(|e| {
                        CliError::Usage(format!("bad config value for {key}: {e}"))
                    })?);
            }
        }
        Ok(())
    }
}

fn worker_pool(flag: Option<usize>, config: &Config) -> Result<rayon::ThreadPool, CliError> {
    let mut workers = flag;
    config.fill(&mut workers, "workers")?;
    if workers.is_none() {
        if let Ok(v) = std::env::var(WORKERS_ENV) {
            workers = Some(v.parse().map_err(|_| {
                CliError::Usage(format!(
                    "{WORKERS_ENV} must be a positive integer, got {v:?}"
                ))
            })?);
        }
    }
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        if w == 0 {
            return Err(CliError::Usage("worker count must be positive".into()));
        }
        builder = builder.num_threads(w);
    }
    builder
        .build()
        .map_err(|e| CliError::Failure(e.to_string()))
}

/// Runs the CLI on `args` (including the program name).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
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
    let result = Config::load(cli.config.as_ref()).and_then(|config| {
        let pool = worker_pool(cli.workers, &config)?;
        match cli.command {
            Command::Compute(a) => compute::run(a, &config, &pool, out),
            Command::Certify(a) => certify::run(a, out),
            Command::Survey(a) => survey::run(a, &config, &pool, out),
            Command::Construct(a) => construct::run(a, &config, out),
        }
    });
    match result {
        Ok(code) => code,
        Err(CliError::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(CliError::Failure(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}
