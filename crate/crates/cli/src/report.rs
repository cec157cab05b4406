//! The report document written by `axioms`, and its table rendering.

use std::fmt::Write as _;

use pcmkit_core::harness::{
    AxiomReport, IndexVerdicts, Probe, PropertyVerdict, SuiteConfig, VerdictStatus, Witness,
};
use pcmkit_core::{IndexId, Property, ReferenceStatus};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::format::format_value;

pub const FORMAT: &str = "pcmkit-axiom-report";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum CellStatus {
    #[serde(rename = "ok")]
    Ok,
    #[serde(rename = "violated")]
    Violated,
    #[serde(rename = "heuristic")]
    Heuristic,
    #[serde(rename = "n/a")]
    NotApplicable,
}

impl From<VerdictStatus> for CellStatus {
    fn from(s: VerdictStatus) -> Self {
        match s {
            VerdictStatus::NoViolationFound => Self::Ok,
            VerdictStatus::ViolationFound => Self::Violated,
            VerdictStatus::Heuristic => Self::Heuristic,
            VerdictStatus::NotApplicable => Self::NotApplicable,
        }
    }
}

impl From<CellStatus> for VerdictStatus {
    fn from(s: CellStatus) -> Self {
        match s {
            CellStatus::Ok => Self::NoViolationFound,
            CellStatus::Violated => Self::ViolationFound,
            CellStatus::Heuristic => Self::Heuristic,
            CellStatus::NotApplicable => Self::NotApplicable,
        }
    }
}

impl CellStatus {
    pub fn symbol(self) -> &'static str {
        match self {
            Self::Ok => "✓",
            Self::Violated => "✗",
            Self::Heuristic => "~",
            Self::NotApplicable => "·",
        }
    }
}

fn reference_symbol(r: ReferenceStatus) -> &'static str {
    match r {
        ReferenceStatus::Satisfied => "✓",
        ReferenceStatus::NotSatisfied => "✗",
        ReferenceStatus::Unknown => "-",
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportCell {
    pub property: Property,
    pub status: CellStatus,
    /// What the literature establishes, independent of this run.
    pub reference: ReferenceStatus,
    pub trials: u64,
    pub witness: Option<Witness>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportRow {
    pub id: IndexId,
    pub name: String,
    pub nu: f64,
    pub orientation: String,
    pub cells: Vec<ReportCell>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub format: String,
    pub format_version: u32,
    pub tool_version: String,
    pub config: SuiteConfig,
    pub indices: Vec<ReportRow>,
}

#[derive(Debug, Error)]
pub enum ReportError {
    #[error("not a report document: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unsupported document format `{format}` version {version}")]
    Format { format: String, version: u32 },
}

impl ReportDocument {
    pub fn from_report(report: &AxiomReport) -> Self {
        let indices = report
            .rows
            .iter()
            .map(|row| {
                let desc = row.index.descriptor();
                ReportRow {
                    id: row.index,
                    name: desc.name.to_string(),
                    nu: desc.nu,
                    orientation: desc.orientation.as_str().to_string(),
                    cells: row
                        .verdicts
                        .iter()
                        .map(|v| ReportCell {
                            property: v.property,
                            status: v.status.into(),
                            reference: desc.reference_for(v.property),
                            trials: v.trials,
                            witness: v.witness.clone(),
                        })
                        .collect(),
                }
            })
            .collect();
        Self {
            format: FORMAT.to_string(),
            format_version: FORMAT_VERSION,
            tool_version: env!("CARGO_PKG_VERSION").to_string(),
            config: report.config.clone(),
            indices,
        }
    }

    pub fn to_report(&self) -> AxiomReport {
        AxiomReport {
            config: self.config.clone(),
            rows: self
                .indices
                .iter()
                .map(|row| IndexVerdicts {
                    index: row.id,
                    verdicts: row
                        .cells
                        .iter()
                        .map(|c| PropertyVerdict {
                            property: c.property,
                            status: c.status.into(),
                            witness: c.witness.clone(),
                            trials: c.trials,
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    /// Pretty JSON with a trailing newline. Keys follow field order, so equal
    /// documents always give equal bytes.
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report fields always serialize");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, ReportError> {
        let doc: Self = serde_json::from_str(text)?;
        if doc.format != FORMAT || doc.format_version != FORMAT_VERSION {
            return Err(ReportError::Format {
                format: doc.format,
                version: doc.format_version,
            });
        }
        Ok(doc)
    }

    pub fn cell(&self, id: IndexId, property: Property) -> Option<&ReportCell> {
        self.indices
            .iter()
            .find(|r| r.id == id)?
            .cells
            .iter()
            .find(|c| c.property == property)
    }
}

fn grid_row(
    out: &mut String,
    label: &str,
    width: usize,
    cells: impl Iterator<Item = &'static str>,
) {
    let _ = write!(out, "{label:<width$}");
    for c in cells {
        let _ = write!(out, " {c}  ");
    }
    out.truncate(out.trim_end().len());
    out.push('\n');
}

fn header(out: &mut String, title: &str, width: usize) {
    let _ = write!(out, "{title:<width$}");
    for p in Property::ALL {
        let _ = write!(out, " {p} ");
    }
    out.truncate(out.trim_end().len());
    out.push('\n');
}

/// One-line account of a probe, with one-based coordinates.
pub fn describe_probe(probe: &Probe, digits: usize) -> String {
    let v = |x: f64| format_value(x, digits);
    match probe {
        Probe::Consistent => "consistent matrix, value differs from nu".to_string(),
        Probe::Inconsistent => "inconsistent matrix, value equals nu".to_string(),
        Probe::Permuted { permutation } => {
            let one_based: Vec<String> = permutation
                .as_slice()
                .iter()
                .map(|i| (i + 1).to_string())
                .collect();
            format!("permutation ({}) changes the value", one_based.join(" "))
        }
        Probe::Intensified { from, to } => {
            format!("intensification b = {} -> {}", v(*from), v(*to))
        }
        Probe::Perturbed { p, q, from, to } => {
            format!(
                "entry ({},{}) raised to delta = {} -> {}",
                p + 1,
                q + 1,
                v(*from),
                v(*to)
            )
        }
        Probe::Continuity { p, q, steps } => {
            let eps: Vec<String> = steps.iter().map(|e| format!("{e:e}")).collect();
            format!(
                "entry ({},{}) scaled by 1 + eps, eps = {}",
                p + 1,
                q + 1,
                eps.join(", ")
            )
        }
        Probe::Transposed => "transpose changes the value".to_string(),
    }
}

pub fn describe_observed(observed: &[Option<f64>], digits: usize) -> String {
    let cells: Vec<String> = observed
        .iter()
        .map(|o| o.map_or_else(|| "undefined".to_string(), |x| format_value(x, digits)))
        .collect();
    cells.join(", ")
}

/// Fixed-width verdict table, the reference table, a legend and one line
/// per witness.
pub fn render_table(doc: &ReportDocument, digits: usize) -> String {
    let width = doc
        .indices
        .iter()
        .map(|r| r.id.as_str().len())
        .max()
        .unwrap_or(0)
        .max(5)
        + 2;
    let mut out = String::new();
    let trials = doc.config.trials_per_check;
    let _ = writeln!(
        out,
        "found in this run (seed {}, {} trials per order)",
        doc.config.seed, trials
    );
    header(&mut out, "index", width);
    for row in &doc.indices {
        grid_row(
            &mut out,
            row.id.as_str(),
            width,
            row.cells.iter().map(|c| c.status.symbol()),
        );
    }
    out.push('\n');
    out.push_str("established in the literature\n");
    header(&mut out, "index", width);
    for row in &doc.indices {
        grid_row(
            &mut out,
            row.id.as_str(),
            width,
            row.cells.iter().map(|c| reference_symbol(c.reference)),
        );
    }
    out.push('\n');
    out.push_str("✓ no violation found (not a proof)   ✗ violation found   ~ heuristic pass   · not applicable\n");
    out.push_str("reference: ✓ holds   ✗ fails   - open\n");
    let witnesses: Vec<(&ReportRow, &ReportCell, &Witness)> = doc
        .indices
        .iter()
        .flat_map(|r| {
            r.cells
                .iter()
                .filter_map(move |c| c.witness.as_ref().map(|w| (r, c, w)))
        })
        .collect();
    if !witnesses.is_empty() {
        out.push('\n');
        for (row, cell, w) in witnesses {
            let _ = writeln!(
                out,
                "{} {}: {} (n = {}); observed {}",
                row.id,
                cell.property,
                describe_probe(&w.probe, digits),
                w.matrix.order(),
                describe_observed(&w.observed, digits)
            );
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use pcmkit_core::harness::run_suite;

    fn small() -> SuiteConfig {
        SuiteConfig {
            trials_per_check: 20,
            orders: vec![3, 4],
            ..SuiteConfig::default()
        }
    }

    #[test]
    fn document_round_trips() {
        let report = run_suite(&[IndexId::Ai, IndexId::Re, IndexId::INot6], &small()).unwrap();
        let doc = ReportDocument::from_report(&report);
        let json = doc.to_json();
        let back = ReportDocument::from_json(&json).unwrap();
        assert_eq!(back, doc);
        assert_eq!(back.to_json(), json);
        assert_eq!(back.to_report(), report);
    }

    #[test]
    fn status_strings() {
        let json = serde_json::to_string(&[
            CellStatus::Ok,
            CellStatus::Violated,
            CellStatus::Heuristic,
            CellStatus::NotApplicable,
        ])
        .unwrap();
        assert_eq!(json, r#"["ok","violated","heuristic","n/a"]"#);
    }

    #[test]
    fn rejects_foreign_documents() {
        let report = run_suite(&[IndexId::K], &small()).unwrap();
        let mut doc = ReportDocument::from_report(&report);
        doc.format_version = 99;
        assert!(matches!(
            ReportDocument::from_json(&doc.to_json()),
            Err(ReportError::Format { .. })
        ));
        assert!(matches!(
            ReportDocument::from_json("{}"),
            Err(ReportError::Json(_))
        ));
    }

    #[test]
    fn table_layout() {
        let report = run_suite(&[IndexId::K, IndexId::INot6], &small()).unwrap();
        let table = render_table(&ReportDocument::from_report(&report), 9);
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines[1], "index    P1  P2  P3  P4  P5  P6");
        assert_eq!(lines[2], "K        ✓   ✓   ✓   ✓   ~   ✓");
        assert!(lines[3].starts_with("I_NOT6") && lines[3].ends_with('✗'));
        assert!(table.contains(
            "I_NOT6 P6: transpose changes the value (n = 3); observed 0.500000000, 0.333333333"
        ));
    }
}
