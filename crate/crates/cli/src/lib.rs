//! Command-line front end: enumeration, single computations and the
//! verification suites of `sigma-core`.

pub mod commands;
pub mod scenario;

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

pub use commands::{execute, CliError, Outcome};

/// Exit code when every check passes.
pub const EXIT_PASS: i32 = 0;
/// Exit code when a verification suite reports a failure.
pub const EXIT_VERIFY_FAIL: i32 = 1;
/// Exit code for usage, parse and bound errors.
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "sigma", version, about = "Exact computations on set compositions")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Seed for every randomized witness.
    #[arg(long, global = true)]
    pub seed: Option<u64>,

    /// Raise the size bounds guarding exhaustive enumeration.
    #[arg(long, global = true, value_name = "N")]
    pub bound_override: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List compositions, cells, or refinements of a composition.
    Enumerate {
        kind: EnumerateKind,
        /// Ground set size for compositions and cells.
        #[arg(long)]
        n: Option<usize>,
        /// The composition to refine, e.g. "(12,3)".
        composition: Option<String>,
    },
    /// Compute one element and print it.
    Compute {
        #[command(subcommand)]
        expr: ComputeExpr,
    },
    /// Run a verification suite.
    Verify {
        /// One of hopf, qbasis, dynkin, steinmann, ruelle, arrows, products,
        /// bogoliubov, scattering. Taken from the scenario when omitted.
        suite: Option<String>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        ng: Option<u32>,
        #[arg(long)]
        nj: Option<u32>,
        /// Scenario file with a toy model and default settings.
        #[arg(long)]
        scenario: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum EnumerateKind {
    Compositions,
    Cells,
    Refinements,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ArrowDirection {
    Retarded,
    Advanced,
}

#[derive(Subcommand, Debug)]
pub enum ComputeExpr {
    /// Antipode of H_F.
    Antipode { composition: String },
    /// Q_F expanded in the H-basis.
    Qbasis { composition: String },
    /// Dynkin element of a cell read from a JSON file.
    Dynkin { cell: PathBuf },
    /// Arrow applied to H_F, or to a cell read with --cell.
    SteinmannArrow {
        composition: Option<String>,
        #[arg(long)]
        cell: Option<PathBuf>,
        /// The adjoined label.
        #[arg(long, default_value = "*1")]
        star: String,
        #[arg(long, value_enum, default_value = "retarded")]
        dir: ArrowDirection,
    },
    /// Tits product F▷G of two compositions of one set.
    Tits { left: String, right: String },
}
