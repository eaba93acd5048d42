//! Comparing reports against stored golden files.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use serde_json::Value;
use thiserror::Error;

use crate::report::canonical_string;

/// Setting this environment variable makes [`golden_diff`] write the current
/// report instead of comparing against it.
pub const BLESS_VAR: &str = "PLGEN_BLESS";

#[derive(Debug, Error)]
pub enum GoldenError {
    #[error("golden file {} is missing; rerun with {BLESS_VAR}=1 to create it", .0.display())]
    Missing(PathBuf),
    #[error("{}:{line}:{column}: report differs from golden file\n  expected: {expected}\n  actual:   {actual}", path.display())]
    Differs {
        path: PathBuf,
        line: usize,
        column: usize,
        expected: String,
        actual: String,
    },
    #[error("cannot access golden file {}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
}

/// The first line and column (both 1-based) where `expected` and `actual`
/// differ, with the differing lines.
fn first_difference(expected: &str, actual: &str) -> Option<(usize, usize, String, String)> {
    let mut e = expected.split_inclusive('\n');
    let mut a = actual.split_inclusive('\n');
    let mut line = 0;
    loop {
        line += 1;
        match (e.next(), a.next()) {
            (None, None) => return None,
            (x, y) if x == y => {}
            (x, y) => {
                let x = x.unwrap_or("");
                let y = y.unwrap_or("");
                let column = x.chars().zip(y.chars()).take_while(|(p, q)| p == q).count() + 1;
                let show = |s: &str| {
                    if s.is_empty() {
                        "<end of file>".to_string()
                    } else {
                        s.trim_end_matches('\n').to_string()
                    }
                };
                return Some((line, column, show(x), show(y)));
            }
        }
    }
}

/// Compares the canonical serialization of `report` with the file at `path`,
/// byte for byte.
pub fn golden_diff(report: &Value, path: &Path) -> Result<(), GoldenError> {
    let actual = canonical_string(report);
    let io_err = |source| GoldenError::Io {
        path: path.to_path_buf(),
        source,
    };
    if std::env::var_os(BLESS_VAR).is_some() {
        if let Some(dir) = path.parent() {
            fs::create_dir_all(dir).map_err(io_err)?;
        }
        return fs::write(path, actual).map_err(io_err);
    }
    let expected = match fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) if e.kind() == io::ErrorKind::NotFound => return Err(GoldenError::Missing(path.to_path_buf())),
        Err(e) => return Err(io_err(e)),
    };
    match first_difference(&expected, &actual) {
        None => Ok(()),
        Some((line, column, expected, actual)) => Err(GoldenError::Differs {
            path: path.to_path_buf(),
            line,
            column,
            expected,
            actual,
        }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn locates_first_difference() {
        assert_eq!(first_difference("a\nb\n", "a\nb\n"), None);
        assert_eq!(
            first_difference("a\n  \"x1 - 2\"\n", "a\n  \"x1 - 3\"\n"),
            Some((2, 9, "  \"x1 - 2\"".into(), "  \"x1 - 3\"".into()))
        );
        assert_eq!(first_difference("a\n", "a\nb\n"), Some((2, 1, "<end of file>".into(), "b".into())));
    }
}
