//! `cactus`: reproducible batch commands over growth diagrams, cactus group
//! actions and Gaudin spectra.
//!
//! Exit codes: 0 pass, 1 property failure, 2 usage or bound violation.

mod commands;

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

/// Default limit on the rectangle area `r(d - r)`.
pub const DEFAULT_AREA_BOUND: usize = 8;
/// Default limit on the number of tensor factors or boxes.
pub const DEFAULT_SIZE_BOUND: usize = 6;

#[derive(Parser, Debug)]
#[command(name = "cactus", version, about = "Cactus group actions on growth diagrams, words and Gaudin eigenvectors")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    options: Options,
}

#[derive(Args, Debug, Clone, Default)]
pub struct Options {
    /// Rank `r` of the frame, or the alphabet size for words.
    #[arg(long, global = true)]
    pub rank: Option<usize>,
    /// Degree `d` of the frame.
    #[arg(long, global = true)]
    pub degree: Option<usize>,
    /// A partition `[2,1]` or a list of partitions `[[2,1],[1],[2]]`.
    #[arg(long, global = true)]
    pub shape: Option<String>,
    /// A weight, such as `[1,1,1]`.
    #[arg(long, global = true)]
    pub weight: Option<String>,
    /// Comma separated rationals `z_1,...,z_n`.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub z: Option<String>,
    /// Size limit for the command.
    #[arg(long, global = true)]
    pub bound: Option<usize>,
    /// Seed for randomized sweeps; recorded in every output.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Write output to a file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Acknowledges a bound above the defaults.
    #[arg(long = "i-know-this-is-big", global = true)]
    pub big: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// P- and Q-symbols of a word.
    Rsk {
        #[arg(default_value = "")]
        word: String,
    },
    /// All cgds of a frame, or all decgds of a given shape.
    Enumerate { kind: EnumerateKind },
    /// Orbits of the generators `s_1q`.
    Orbits { realization: Realization },
    /// Runs a property suite and exits non-zero on failure.
    Check { suite: Suite },
    /// Joint spectrum of the Gaudin Hamiltonians on a singular weight space.
    Spectrum,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum EnumerateKind {
    Cgd,
    Decgd,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Realization {
    Words,
    Syt,
    Decgd,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Suite {
    Duality,
    Equivariance,
    Gaudin,
}

/// Failure modes that map to exit codes.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
}

impl From<cactus_core::Error> for CliError {
    fn from(e: cactus_core::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

/// Lines to print and whether the command passed.
pub struct Output {
    pub lines: Vec<String>,
    pub passed: bool,
}

fn emit(out: &Output, path: Option<&PathBuf>) -> io::Result<()> {
    let mut sink: Box<dyn Write> = match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    for line in &out.lines {
        writeln!(sink, "{line}")?;
    }
    sink.flush()
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let o = &cli.options;
    let result = match cli.command {
        Command::Rsk { word } => commands::rsk(&word, o),
        Command::Enumerate { kind } => commands::enumerate(kind, o),
        Command::Orbits { realization } => commands::orbits(realization, o),
        Command::Check { suite } => commands::check(suite, o),
        Command::Spectrum => commands::spectrum(o),
    };
    match result {
        Ok(out) => {
            if let Err(e) = emit(&out, o.out.as_ref()) {
                eprintln!("error: cannot write output: {e}");
                return ExitCode::from(2);
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
