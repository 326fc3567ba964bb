//! `polyarc`: command-line access to the quarter-circle kernel.
//!
//! Exit codes: 0 success, 1 domain error, 2 non-convergence, 64 usage.

mod output;
mod run;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

pub const EXIT_DOMAIN: u8 = 1;
pub const EXIT_NON_CONVERGENCE: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

#[derive(Debug, Parser)]
#[command(
    name = "polyarc",
    version,
    about = "Quarter-circle trigonometry from polygons"
)]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Common {
    /// Target width of every enclosure.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub tol: f64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Cap on bisection levels.
    #[arg(long = "max-iter", global = true, default_value_t = polyarc::DEFAULT_MAX_ITER)]
    pub max_iter: u32,

    /// Seed for the random partition family.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Arc endpoints as ordinates; the order does not matter.
#[derive(Debug, Args)]
pub struct Arc {
    #[arg(long, allow_negative_numbers = true)]
    pub a: f64,
    #[arg(long, allow_negative_numbers = true)]
    pub b: f64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Enclosure of pi as the half-circle length.
    Pi,
    /// Length of the arc between two ordinates.
    Arc(Arc),
    /// Length of the arc from ordinate Y down to (1, 0).
    Arcsin {
        #[arg(allow_negative_numbers = true)]
        y: f64,
    },
    /// Ordinate whose arcsine is X, for X in [0, pi/2].
    Sin {
        #[arg(allow_negative_numbers = true)]
        x: f64,
    },
    /// Area of the sector between two ordinates.
    Sector(Arc),
    /// Arc length over sector area.
    Ratio(Arc),
    /// Limits of the bisection, ordinate-uniform and random partition ladders.
    PartitionCompare(Arc),
    /// Arc length and sector area of a split arc against the whole.
    Additivity {
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        m: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    let outcome = run::execute(&cli);
    let stdout = io::stdout();
    let mut out = stdout.lock();
    if let Some(output) = &outcome.output {
        match output::write(&mut out, output, cli.common.format) {
            Ok(()) => {}
            Err(err) if err.kind() == io::ErrorKind::BrokenPipe => {}
            Err(err) => {
                eprintln!("polyarc: failed to write output: {err}");
                return ExitCode::FAILURE;
            }
        }
    }
    let _ = out.flush();
    if let Some(err) = &outcome.error {
        eprintln!("polyarc: {err}");
    }
    ExitCode::from(outcome.code)
}
