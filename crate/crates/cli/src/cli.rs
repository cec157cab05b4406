//! Argument definitions and dispatch.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use pcmkit_core::harness::{default_delta_grid, linear_grid, SuiteConfig, DEFAULT_SEED};
use pcmkit_core::{IndexId, Property};

use crate::commands::{self, CliError, CurveArgs, CurveMode, OutputFormat};
use crate::format::DEFAULT_DIGITS;

#[derive(Debug, Parser)]
#[command(
    name = "pcmkit",
    version,
    about = "Inconsistency indices for pairwise comparison matrices"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate indices on a matrix file.
    Compute {
        #[arg(long)]
        matrix: PathBuf,
        /// Comma-separated index ids; all indices when omitted.
        #[arg(long, value_delimiter = ',')]
        index: Vec<IndexId>,
        #[arg(long, default_value_t = DEFAULT_DIGITS)]
        digits: usize,
    },
    /// Check indices against P1..P6 and report the verdicts.
    Axioms {
        #[arg(long, value_delimiter = ',')]
        index: Vec<IndexId>,
        #[command(flatten)]
        suite: SuiteArgs,
        /// Write the report document here.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = OutputFormat::Table)]
        format: OutputFormat,
        #[arg(long, default_value_t = DEFAULT_DIGITS)]
        digits: usize,
    },
    /// Sample an index along an intensification or perturbation path as CSV.
    Curve {
        #[arg(long)]
        index: IndexId,
        #[arg(long)]
        matrix: PathBuf,
        #[arg(long, value_enum, default_value_t = CurveMode::B)]
        mode: CurveMode,
        #[arg(long, default_value_t = 1.0)]
        b_min: f64,
        #[arg(long, default_value_t = 5.0)]
        b_max: f64,
        #[arg(long, default_value_t = 41)]
        b_steps: usize,
        /// Delta values; 0.1 to 3.0 in steps of 0.1 when omitted.
        #[arg(long, value_delimiter = ',')]
        delta_grid: Vec<f64>,
        /// One-based row of the perturbed entry.
        #[arg(long)]
        p: Option<usize>,
        /// One-based column of the perturbed entry.
        #[arg(long)]
        q: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Hunt for a counterexample with escalating trial counts.
    Search {
        #[arg(long)]
        index: IndexId,
        #[arg(long)]
        property: Property,
        #[command(flatten)]
        suite: SuiteArgs,
        #[arg(long, default_value_t = DEFAULT_DIGITS)]
        digits: usize,
    },
}

#[derive(Debug, Args)]
pub struct SuiteArgs {
    #[arg(long, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Random cases per order and check.
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long, value_delimiter = ',', default_value = "3,4,5,6,7")]
    pub orders: Vec<usize>,
    #[arg(long, default_value_t = 1.0)]
    pub b_min: f64,
    #[arg(long, default_value_t = 5.0)]
    pub b_max: f64,
    #[arg(long, default_value_t = 41)]
    pub b_steps: usize,
    /// Delta values; 0.1..0.9 and 1.1..3.0 in steps of 0.1 when omitted.
    #[arg(long, value_delimiter = ',')]
    pub delta_grid: Vec<f64>,
    #[arg(long, default_value_t = 1e-7)]
    pub nu_tolerance: f64,
    #[arg(long, default_value_t = 1e-9)]
    pub equality_tolerance: f64,
    #[arg(long, default_value_t = 1e-12)]
    pub monotonicity_slack: f64,
}

impl SuiteArgs {
    pub fn config(&self) -> SuiteConfig {
        SuiteConfig {
            seed: self.seed,
            trials_per_check: self.trials,
            orders: self.orders.clone(),
            b_grid: linear_grid(self.b_min, self.b_max, self.b_steps),
            delta_grid: if self.delta_grid.is_empty() {
                default_delta_grid()
            } else {
                self.delta_grid.clone()
            },
            nu_tolerance: self.nu_tolerance,
            equality_tolerance: self.equality_tolerance,
            monotonicity_slack: self.monotonicity_slack,
        }
    }
}

fn one_based(v: Option<usize>, flag: &str) -> Result<Option<usize>, CliError> {
    match v {
        Some(0) => Err(CliError::Usage(format!("--{flag} is one-based"))),
        other => Ok(other.map(|x| x - 1)),
    }
}

pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Compute {
            matrix,
            index,
            digits,
        } => {
            let m = commands::load_matrix(&matrix)?;
            commands::compute(&m, &index, digits, stdout)
        }
        Command::Axioms {
            index,
            suite,
            out,
            format,
            digits,
        } => {
            let config = suite.config();
            let args = commands::AxiomsArgs {
                ids: &index,
                config: &config,
                out: out.as_deref(),
                format,
                digits,
            };
            commands::axioms(&args, stdout).map(|_| ())
        }
        Command::Curve {
            index,
            matrix,
            mode,
            b_min,
            b_max,
            b_steps,
            delta_grid,
            p,
            q,
            out,
        } => {
            let m = commands::load_matrix(&matrix)?;
            let grid = match mode {
                CurveMode::B => linear_grid(b_min, b_max, b_steps),
                CurveMode::Delta if delta_grid.is_empty() => commands::default_curve_delta_grid(),
                CurveMode::Delta => delta_grid,
            };
            let pair = match (one_based(p, "p")?, one_based(q, "q")?) {
                (Some(p), Some(q)) => Some((p, q)),
                (None, None) => None,
                _ => return Err(CliError::Usage("--p and --q go together".into())),
            };
            let args = CurveArgs {
                id: index,
                matrix: &m,
                mode,
                grid: &grid,
                pair,
            };
            commands::curve(&args, out.as_deref(), stdout).map(|_| ())
        }
        Command::Search {
            index,
            property,
            suite,
            digits,
        } => {
            let outcome = commands::search(index, property, &suite.config())?;
            let text = commands::render_search(index, property, &outcome, digits);
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| CliError::Internal(e.to_string()))
        }
    }
}
