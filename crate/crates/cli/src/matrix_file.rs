//! Plain-text matrix files.
//!
//! One row per line, entries separated by whitespace or commas. An entry is
//! a decimal literal (`0.5`, `2e-1`) or a fraction `p/q` of positive
//! integers. Blank lines and lines whose first non-blank character is `#`
//! are skipped.

use std::fmt::Write as _;

use pcmkit_core::{Pcm, PcmError};
use thiserror::Error;

/// Largest integer accepted in a fraction; beyond it `p as f64` is inexact.
const MAX_EXACT_INT: u64 = 1 << 53;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixFileError {
    #[error("line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("no matrix rows found")]
    Empty,
    #[error("invalid matrix: {0}")]
    Invalid(#[from] PcmError),
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> MatrixFileError {
    MatrixFileError::Parse {
        line,
        column,
        message: message.into(),
    }
}

fn parse_int(s: &str) -> Option<u64> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok().filter(|&v| v <= MAX_EXACT_INT)
}

/// Parses one entry. Fractions divide two exactly representable integers,
/// so `1/3` becomes the double nearest to one third.
pub fn parse_entry(token: &str) -> Result<f64, String> {
    if let Some((p, q)) = token.split_once('/') {
        let p = parse_int(p).ok_or_else(|| format!("bad numerator in `{token}`"))?;
        let q = parse_int(q).ok_or_else(|| format!("bad denominator in `{token}`"))?;
        if p == 0 || q == 0 {
            return Err(format!("fraction `{token}` needs positive integers"));
        }
        return Ok(p as f64 / q as f64);
    }
    let allowed = |c: char| c.is_ascii_digit() || matches!(c, '.' | 'e' | 'E' | '+' | '-');
    if !token.chars().all(allowed) || !token.chars().any(|c| c.is_ascii_digit()) {
        return Err(format!("`{token}` is not a number"));
    }
    token
        .parse::<f64>()
        .map_err(|_| format!("`{token}` is not a number"))
}

/// Splits a line into `(column, token)` pairs, columns one-based.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (idx, c) in line.char_indices() {
        let sep = c.is_whitespace() || c == ',';
        match (sep, start) {
            (true, Some(s)) => {
                out.push((s, &line[s..idx]));
                start = None;
            }
            (false, None) => start = Some(idx),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (line[..byte].chars().count() + 1, tok))
        .collect()
}

pub fn parse_matrix(text: &str) -> Result<Pcm, MatrixFileError> {
    let mut rows: Vec<Vec<f64>> = Vec::new();
    let mut first_line = 0;
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let trimmed = line.trim_start();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let row = tokens(line)
            .into_iter()
            .map(|(col, tok)| parse_entry(tok).map_err(|m| parse_error(line_no, col, m)))
            .collect::<Result<Vec<f64>, _>>()?;
        if row.is_empty() {
            continue;
        }
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(parse_error(
                    line_no,
                    1,
                    format!(
                        "row has {} entries, line {first_line} has {}",
                        row.len(),
                        first.len()
                    ),
                ));
            }
        } else {
            first_line = line_no;
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(MatrixFileError::Empty);
    }
    Ok(Pcm::new(rows)?)
}

/// Renders one row per line with 17 significant digits, enough for
/// [`parse_matrix`] to recover every entry exactly.
pub fn render_matrix(m: &Pcm) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:.16e}")).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}
