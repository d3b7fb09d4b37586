//! Command-line surface: argument parsing, key=value config defaults and
//! dispatch to the report builders in [`commands`]. [`run`] is pure apart
//! from writing `--out` files, so the whole interface is testable in
//! process.

mod commands;
mod config;

use std::ffi::OsString;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub use commands::{verify_items, VerifyItem};
pub use config::{RunConfig, MAX_LEVEL_LIMIT, N_MAX_LIMIT};

pub const EXIT_SUCCESS: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
    Latex,
}

impl FromStr for Format {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        <Format as ValueEnum>::from_str(s, false)
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Json => "json",
            Format::Text => "text",
            Format::Latex => "latex",
        })
    }
}

#[derive(Parser, Debug)]
#[command(name = "sl5susy", version, about = "SL(5) supersymmetry computations: levels, series, cohomology and E(5,10)")]
struct Cli {
    #[command(flatten)]
    common: CommonArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default, Clone)]
pub(crate) struct CommonArgs {
    /// Truncation order N of series and level decompositions
    #[arg(long, global = true)]
    max_level: Option<usize>,
    /// Highest total degree g + k of the cohomology computation
    #[arg(long, global = true)]
    n_max: Option<usize>,
    /// Output format
    #[arg(long, global = true)]
    format: Option<Format>,
    /// Seed of the random E(5,10) elements
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Number of random trials
    #[arg(long, global = true)]
    trials: Option<usize>,
    /// Write the report to this file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// File of key=value defaults (max-level, n-max, format, seed, trials, max-degree, out)
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Levels of the superalgebra dual to the minimal-orbit series
    Levels {
        /// Also list the levels 5-N..0 obtained from the level pairing
        #[arg(long)]
        paired: bool,
    },
    /// Run the verification suite
    Verify {
        /// Corrupt one peeled multiplicity (exercises the failure path)
        #[arg(long)]
        inject_fault: bool,
        /// Highest x-degree of the superspace operator check
        #[arg(long)]
        max_x_degree: Option<usize>,
    },
    /// Zero-mode cohomology table of a superfield
    Cohomology {
        #[arg(long, value_enum, default_value = "scalar")]
        field: Field,
    },
    /// The polynomial realization of E(5,10)
    E510 {
        #[command(subcommand)]
        what: E510Command,
    },
    /// Minimal-orbit series and their factorizations
    Series {
        #[arg(long, value_enum, default_value = "orbit")]
        series: SeriesKind,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum Field {
    Scalar,
    Vector,
    Oneform,
}

#[derive(Subcommand, Debug, Clone, Copy)]
pub(crate) enum E510Command {
    /// Level modules from 2 down to 2 - (N - 1)
    Levels,
    /// Jacobi identity and closure on random triples
    Jacobi {
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// Graded dimensions against Weyl dimensions
    Dims {
        #[arg(long)]
        max_degree: Option<usize>,
    },
    /// L_{*(gamma ^ gamma)} gamma = 0 on closed 2-forms
    Gamma {
        #[arg(long)]
        max_degree: Option<usize>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub(crate) enum SeriesKind {
    /// Z_lambda = sum (00p0) t^p
    Orbit,
    /// 1 / Z_lambda
    Inverse,
    /// Z_lambda (1-t)^(0010)
    Theta,
    /// Z_lambda (1-t)^(0010) (1-t^2)^-(1000)
    Shifted,
}

/// Exit status and the text destined for standard output and error.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn usage(msg: impl Into<String>) -> Self {
        Outcome { code: EXIT_USAGE, stdout: String::new(), stderr: msg.into() }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_SUCCESS };
            let text = e.render().to_string();
            return if code == EXIT_SUCCESS {
                Outcome { code, stdout: text, stderr: String::new() }
            } else {
                Outcome::usage(text)
            };
        }
    };
    let config = match RunConfig::resolve(&cli.common) {
        Ok(c) => c,
        Err(msg) => return Outcome::usage(format!("error: {msg}\n")),
    };
    let report = match cli.command {
        Command::Levels { paired } => commands::levels(&config, paired),
        Command::Verify { inject_fault, max_x_degree } => commands::verify(&config, inject_fault, max_x_degree),
        Command::Cohomology { field } => commands::cohomology(&config, field),
        Command::E510 { what } => commands::e510(&config, what),
        Command::Series { series } => commands::series(&config, series),
    };
    let report = match report {
        Ok(r) => r,
        Err(commands::CommandError::Usage(msg)) => return Outcome::usage(format!("error: {msg}\n")),
        Err(commands::CommandError::Internal(e)) => {
            return Outcome { code: EXIT_FAILURE, stdout: String::new(), stderr: format!("error: {e}\n") }
        }
    };
    let code = if report.passed { EXIT_SUCCESS } else { EXIT_FAILURE };
    let mut body = report.body;
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &config.out {
        Some(path) => match std::fs::write(path, &body) {
            Ok(()) => Outcome { code, stdout: String::new(), stderr: format!("wrote {}\n", path.display()) },
            Err(e) => Outcome { code: EXIT_FAILURE, stdout: String::new(), stderr: format!("error: {}: {e}\n", path.display()) },
        },
        None => Outcome { code, stdout: body, stderr: String::new() },
    }
}
