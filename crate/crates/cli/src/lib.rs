//! `graphmag`: exact magnitude of graphs from the command line.
//!
//! Graphs are named by a small expression language (`K3`, `C5 + P2`,
//! `K2 * K3`, `glue(C3, 0 1, C3, 0 1)`, ...) or read from edge-list files.

pub mod batch;
pub mod commands;
pub mod error;
pub mod input;
pub mod render;
pub mod verify;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

pub use commands::Settings;
pub use error::{CliError, CliResult};
pub use render::Format;

#[derive(Debug, Parser)]
#[command(name = "graphmag", version, about = "Exact magnitude of finite graphs")]
pub struct Cli {
    /// Output rendering.
    #[arg(long, value_enum, default_value_t = Format::Plain, global = true)]
    pub format: Format,
    /// Truncation order for series.
    #[arg(long, default_value_t = magnitude_core::magnitude::DEFAULT_SERIES_ORDER, global = true)]
    pub order: usize,
    /// Skip the independent cross-checks (walk expansion, weighting check).
    #[arg(long, global = true)]
    pub fast: bool,
    /// Worker threads for batch mode.
    #[arg(long, default_value_t = 1, global = true)]
    pub parallel: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Magnitude as a rational function.
    Mag {
        /// Graph expression or edge-list file.
        expr: String,
    },
    /// Power series coefficients, computed two independent ways.
    Series { expr: String },
    /// Per-vertex weighting and its total.
    Weights { expr: String },
    /// Inclusion-exclusion check for a cover X = G ∪ H.
    CheckIe {
        expr: String,
        /// `v,v,...` for an induced subgraph or `v,v,...;u-v,u-v,...`.
        #[arg(long = "g")]
        g: String,
        #[arg(long = "h")]
        h: String,
    },
    /// Compare the two sides of a Whitney twist described by a JSON file.
    Whitney { specfile: PathBuf },
    /// Recompute the golden table of known identities.
    Verify,
    /// Process a JSONL file of jobs.
    Batch {
        input: PathBuf,
        /// Output file, or `-` for standard output.
        output: PathBuf,
    },
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> CliResult<()> {
    let s = Settings {
        format: cli.format,
        order: cli.order,
        fast: cli.fast,
        parallel: cli.parallel,
    };
    let text = match &cli.command {
        Command::Mag { expr } => commands::mag(expr, &s)?,
        Command::Series { expr } => commands::series(expr, &s)?,
        Command::Weights { expr } => commands::weights(expr, &s)?,
        Command::CheckIe { expr, g, h } => commands::check_ie(expr, g, h, &s)?,
        Command::Whitney { specfile } => commands::whitney(specfile, &s)?,
        Command::Verify => {
            let rows = verify::golden_rows(s.format);
            let text = verify::render_rows(&rows, s.format);
            if rows.iter().any(|r| !r.pass) {
                let _ = writeln!(out, "{text}");
                return Err(CliError::Failure("golden table has failing rows".into()));
            }
            text
        }
        Command::Batch { input, output } => {
            let summary = batch::run_files(input, output, &s, out)?;
            let _ = writeln!(
                err,
                "{} jobs: {} ok, {} errors",
                summary.jobs, summary.ok, summary.errors
            );
            return Ok(());
        }
    };
    writeln!(out, "{text}").map_err(|e| CliError::Failure(format!("write failed: {e}")))
}

/// Parses `args` (program name first) and runs the command, returning the
/// process exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let rendered = e.render().to_string();
            let _ = if code == 0 {
                write!(out, "{rendered}")
            } else {
                write!(err, "{rendered}")
            };
            return code;
        }
    };
    match execute(&cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
