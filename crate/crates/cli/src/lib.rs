//! File formats, report documents and the command-line front end for
//! `pcmkit-core`.

pub mod cli;
pub mod commands;
pub mod format;
pub mod matrix_file;
pub mod report;

pub use commands::CliError;
pub use matrix_file::{parse_matrix, render_matrix, MatrixFileError};
pub use report::ReportDocument;
