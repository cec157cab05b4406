//! The four subcommands, written against `io::Write` so tests can capture
//! their output.

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use pcmkit_core::harness::{
    check, curve_intensification, curve_perturbation, AxiomReport, ConfigError, CurveError,
    CurveSeries, IndexVerdicts, PropertyVerdict, SuiteConfig, VerdictStatus, Witness,
};
use pcmkit_core::{IndexId, Pcm, Property, RngSeed};
use rayon::prelude::*;
use thiserror::Error;

use crate::format::format_value;
use crate::matrix_file::{parse_matrix, render_matrix};
use crate::report::{describe_observed, describe_probe, render_table, ReportDocument};

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags or configuration. Exit code 1.
    #[error("{0}")]
    Usage(String),
    /// Unreadable or invalid input. Exit code 2.
    #[error("{0}")]
    Input(String),
    /// Anything else, including failed writes. Exit code 3.
    #[error("{0}")]
    Internal(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            Self::Usage(_) => 1,
            Self::Input(_) => 2,
            Self::Internal(_) => 3,
        }
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        Self::Usage(format!("invalid configuration: {e}"))
    }
}

fn write_failed(e: io::Error) -> CliError {
    CliError::Internal(format!("write failed: {e}"))
}

/// Reads a matrix file; `-` reads standard input.
pub fn load_matrix(path: &Path) -> Result<Pcm, CliError> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s).map(|_| s)
    } else {
        fs::read_to_string(path)
    }
    .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    parse_matrix(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

/// Writes to `path`, or to `fallback` when no path is given.
fn emit(path: Option<&Path>, fallback: &mut dyn Write, bytes: &[u8]) -> Result<(), CliError> {
    match path {
        Some(p) => {
            fs::write(p, bytes).map_err(|e| CliError::Internal(format!("{}: {e}", p.display())))
        }
        None => fallback.write_all(bytes).map_err(write_failed),
    }
}

fn selected(ids: &[IndexId]) -> Vec<IndexId> {
    if ids.is_empty() {
        IndexId::ALL.to_vec()
    } else {
        ids.to_vec()
    }
}

/// One line per index: id, value, nu, orientation.
pub fn compute(
    m: &Pcm,
    ids: &[IndexId],
    digits: usize,
    out: &mut dyn Write,
) -> Result<(), CliError> {
    for id in selected(ids) {
        let desc = id.descriptor();
        let value = match id.evaluate(m) {
            Ok(v) => format_value(v, digits),
            Err(e) => format!("undefined ({e})"),
        };
        writeln!(
            out,
            "{id} {value} nu={} {}",
            format_value(desc.nu, 0),
            desc.orientation.as_str()
        )
        .map_err(write_failed)?;
    }
    Ok(())
}

/// Same result as [`pcmkit_core::harness::run_suite`], with the
/// (index, property) cells spread over threads.
pub fn run_suite_parallel(ids: &[IndexId], cfg: &SuiteConfig) -> Result<AxiomReport, ConfigError> {
    cfg.validate()?;
    if ids.is_empty() {
        return Err(ConfigError::NoIndices);
    }
    let cells: Vec<(IndexId, Property)> = ids
        .iter()
        .flat_map(|&id| Property::ALL.into_iter().map(move |p| (id, p)))
        .collect();
    let verdicts: Vec<PropertyVerdict> =
        cells.par_iter().map(|&(id, p)| check(id, p, cfg)).collect();
    let rows = ids
        .iter()
        .zip(verdicts.chunks(Property::ALL.len()))
        .map(|(&index, v)| IndexVerdicts {
            index,
            verdicts: v.to_vec(),
        })
        .collect();
    Ok(AxiomReport {
        config: cfg.clone(),
        rows,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Table,
    Doc,
}

pub struct AxiomsArgs<'a> {
    pub ids: &'a [IndexId],
    pub config: &'a SuiteConfig,
    pub out: Option<&'a Path>,
    pub format: OutputFormat,
    pub digits: usize,
}

/// Runs the suite, writes the document to `--out` and prints the table or
/// the document.
pub fn axioms(args: &AxiomsArgs<'_>, stdout: &mut dyn Write) -> Result<ReportDocument, CliError> {
    let report = run_suite_parallel(&selected(args.ids), args.config)?;
    let doc = ReportDocument::from_report(&report);
    let json = doc.to_json();
    if let Some(path) = args.out {
        emit(Some(path), stdout, json.as_bytes())?;
    }
    match args.format {
        OutputFormat::Table => stdout.write_all(render_table(&doc, args.digits).as_bytes()),
        OutputFormat::Doc if args.out.is_none() => stdout.write_all(json.as_bytes()),
        OutputFormat::Doc => Ok(()),
    }
    .map_err(write_failed)?;
    Ok(doc)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum CurveMode {
    B,
    Delta,
}

pub struct CurveArgs<'a> {
    pub id: IndexId,
    pub matrix: &'a Pcm,
    pub mode: CurveMode,
    pub grid: &'a [f64],
    /// Zero-based pair, required in delta mode.
    pub pair: Option<(usize, usize)>,
}

pub fn curve_series(args: &CurveArgs<'_>) -> Result<CurveSeries, CliError> {
    let result = match args.mode {
        CurveMode::B => curve_intensification(args.id, args.matrix, args.grid),
        CurveMode::Delta => {
            let (p, q) = args
                .pair
                .ok_or_else(|| CliError::Usage("delta mode needs --p and --q".into()))?;
            let n = args.matrix.order();
            if p >= n || q >= n || p == q {
                return Err(CliError::Input(format!(
                    "pair ({},{}) is not an off-diagonal entry of a {n}x{n} matrix",
                    p + 1,
                    q + 1
                )));
            }
            curve_perturbation(args.id, args.matrix, p, q, args.grid)
        }
    };
    result.map_err(|e| match e {
        CurveError::EmptyGrid | CurveError::InvalidGrid => CliError::Usage(e.to_string()),
        _ => CliError::Input(e.to_string()),
    })
}

/// Two-column CSV with a `param,value` header.
pub fn curve_csv(series: &CurveSeries) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    let internal = |e: csv::Error| CliError::Internal(e.to_string());
    w.write_record(["param", "value"]).map_err(internal)?;
    for s in &series.samples {
        w.write_record([s.param.to_string(), s.value.to_string()])
            .map_err(internal)?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::Internal(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| CliError::Internal(e.to_string()))
}

pub fn curve(
    args: &CurveArgs<'_>,
    out: Option<&Path>,
    stdout: &mut dyn Write,
) -> Result<CurveSeries, CliError> {
    let series = curve_series(args)?;
    if series.outside_p3_domain {
        eprintln!("note: grid includes b < 1, which is not an intensification");
    }
    emit(out, stdout, curve_csv(&series)?.as_bytes())?;
    Ok(series)
}

/// Default delta grid for curves: `0.1..=3.0` in steps of 0.1, 1 included.
pub fn default_curve_delta_grid() -> Vec<f64> {
    (1..=30).map(|k| k as f64 / 10.0).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub enum SearchOutcome {
    Found {
        witness: Witness,
        trials: u64,
        round: usize,
    },
    NoneFound {
        trials: u64,
    },
}

/// Runs one checker with 10, 100, 1000, ... trials per order, capped at
/// `cfg.trials_per_check`. Round `r` draws from `seed.derive(r)`.
pub fn search(
    id: IndexId,
    property: Property,
    cfg: &SuiteConfig,
) -> Result<SearchOutcome, CliError> {
    cfg.validate()?;
    let cap = cfg.trials_per_check;
    let mut total = 0;
    let mut budget = 10usize;
    let mut round = 0;
    loop {
        let trials = budget.min(cap);
        let round_cfg = SuiteConfig {
            seed: RngSeed(cfg.seed).derive(round as u64).0,
            trials_per_check: trials,
            ..cfg.clone()
        };
        let verdict = check(id, property, &round_cfg);
        total += verdict.trials;
        if verdict.status == VerdictStatus::ViolationFound {
            let witness = verdict
                .witness
                .ok_or_else(|| CliError::Internal("violation without witness".into()))?;
            return Ok(SearchOutcome::Found {
                witness,
                trials: total,
                round,
            });
        }
        if trials >= cap {
            return Ok(SearchOutcome::NoneFound { trials: total });
        }
        budget = budget.saturating_mul(10);
        round += 1;
    }
}

/// Comment lines describing the witness, then the matrix in file format.
pub fn render_search(
    id: IndexId,
    property: Property,
    outcome: &SearchOutcome,
    digits: usize,
) -> String {
    match outcome {
        SearchOutcome::NoneFound { trials } => {
            format!("none found ({id} {property}, {trials} cases)\n")
        }
        SearchOutcome::Found {
            witness,
            trials,
            round,
        } => {
            let mut s =
                format!("# {id} {property} violated after {trials} cases (round {round})\n");
            s.push_str(&format!("# {}\n", describe_probe(&witness.probe, digits)));
            s.push_str(&format!(
                "# observed {}\n",
                describe_observed(&witness.observed, digits)
            ));
            s.push_str(&render_matrix(&witness.matrix));
            s
        }
    }
}
