//! Library side of the `plgen` command-line tool: document parsing, command
//! execution, report serialization and golden-file comparison.

pub mod document;
pub mod families;
pub mod golden;
pub mod report;
pub mod run;

use thiserror::Error;

/// Problems with the user's input. These map to exit code 2.
#[derive(Debug, Error)]
pub enum InputError {
    #[error("line {line}: {message}")]
    Document { line: usize, message: String },
    #[error("{0}")]
    Family(String),
    #[error("{0}")]
    Usage(String),
}

pub use document::{parse, ArrangementDocument, FamilySpec};
pub use golden::golden_diff;
pub use run::{prepare, run, Command, Options, Outcome, Subject};
