//! The `ptd` binary: counting, checking, transforming, and rendering
//! diagram files, exact series coefficients, and the verification suite.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "ptd",
    version,
    about = "Torsion pair toolkit for the type D arc model"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact number of torsion pairs at rank n.
    Count {
        /// Rank of the category.
        #[arg(long)]
        n: usize,
        /// Counting method: brute (alias exhaustive), pruned, or genfunc.
        #[arg(long, default_value = "brute")]
        method: String,
    },
    /// Check a diagram file: forcing conditions and the fixed-point test.
    Check {
        /// Path to a diagram file.
        #[arg(long)]
        file: PathBuf,
    },
    /// Print the noncrossing complement of a diagram file.
    Nc {
        /// Path to a diagram file.
        #[arg(long)]
        file: PathBuf,
    },
    /// Print the forcing closure of a diagram file.
    Closure {
        /// Path to a diagram file.
        #[arg(long)]
        file: PathBuf,
    },
    /// Print the central region decomposition of a closed diagram file.
    Decompose {
        /// Path to a diagram file.
        #[arg(long)]
        file: PathBuf,
    },
    /// Print coefficients of a power series as decimal strings.
    Series {
        /// One of: pa, pd, cI, cII, cIII, w, ctotal.
        #[arg(long)]
        which: String,
        /// Truncation order, at most 64; defaults to PTD_ORDER or 12.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Run the verification suite, one JSON record per line.
    Verify {
        /// Suite to run: quick or full.
        #[arg(long, default_value = "quick")]
        level: String,
    },
    /// Render a diagram file as a deterministic vector image.
    Render {
        /// Path to a diagram file.
        #[arg(long)]
        file: PathBuf,
        /// Output format; only svg is supported.
        #[arg(long, default_value = "svg")]
        format: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Count { n, method } => ptd_cli::cmd_count(n, &method),
        Command::Check { file } => ptd_cli::cmd_check(&file),
        Command::Nc { file } => ptd_cli::cmd_nc(&file),
        Command::Closure { file } => ptd_cli::cmd_closure(&file),
        Command::Decompose { file } => ptd_cli::cmd_decompose(&file),
        Command::Series { which, order } => ptd_cli::cmd_series(&which, order),
        Command::Verify { level } => ptd_cli::cmd_verify(&level),
        Command::Render { file, format } => ptd_cli::cmd_render(&file, &format),
    };
    ExitCode::from(code)
}
