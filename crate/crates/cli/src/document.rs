//! The arrangement document: a TOML file naming either explicit subspaces or
//! one of the built-in families.
//!
//! ```toml
//! dimension = 3
//! variables = ["x", "y", "z"]      # optional, defaults to x1..xn
//! host = [[1, -1, 0], [1, 0, -1]]  # optional hyperplanes to embed in
//!
//! [[subspace]]
//! forms = [[1, -1, 0]]
//!
//! [[subspace]]
//! forms = [[1, 0, "-1/2"]]
//! ```
//!
//! or
//!
//! ```toml
//! [family]
//! name = "orbit"
//! n = 6
//! shape = [2, 2, 1, 1]
//! ```

use std::ops::Range;

use plgen::arrangements::{ArrangementError, SubspaceArrangement};
use plgen::exact::{parse_scalar, LinearForm, Scalar};
use plgen::poly::Ring;
use serde::{Deserialize, Serialize};
use toml::Spanned;

use crate::InputError;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDocument {
    dimension: Option<Spanned<usize>>,
    variables: Option<Spanned<Vec<String>>>,
    #[serde(default)]
    subspace: Vec<Spanned<RawSubspace>>,
    host: Option<Spanned<Vec<Spanned<Vec<Coefficient>>>>>,
    family: Option<Spanned<FamilySpec>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSubspace {
    forms: Vec<Spanned<Vec<Coefficient>>>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Coefficient {
    Integer(i64),
    Text(String),
}

/// A family name with its parameters. Which parameters apply depends on the
/// family; see [`crate::families::instantiate`].
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilySpec {
    pub name: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub m: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r1: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r2: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub blocks: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub shapes: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub preset: Option<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub points: Vec<Vec<i64>>,
    /// Facets of a simplicial complex on `1..=n`.
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub facets: Vec<Vec<usize>>,
}

/// The arrangement part of a document after validation.
#[derive(Clone, Debug)]
pub struct Explicit {
    pub arrangement: SubspaceArrangement,
    pub host: Option<Vec<LinearForm>>,
}

#[derive(Clone, Debug)]
pub enum ArrangementDocument {
    Explicit(Explicit),
    Family(FamilySpec),
}

/// Converts a byte offset into a 1-based line number.
fn line_of(text: &str, offset: usize) -> usize {
    text[..offset.min(text.len())].bytes().filter(|&b| b == b'\n').count() + 1
}

fn at(text: &str, span: Range<usize>, message: impl Into<String>) -> InputError {
    InputError::Document {
        line: line_of(text, span.start),
        message: message.into(),
    }
}

fn parse_row(text: &str, row: &Spanned<Vec<Coefficient>>, dim: usize, what: &str) -> Result<LinearForm, InputError> {
    let span = row.span();
    if row.get_ref().len() != dim {
        return Err(at(
            text,
            span,
            format!("dimension mismatch: {what} has {} coefficients, expected {dim}", row.get_ref().len()),
        ));
    }
    let coeffs = row
        .get_ref()
        .iter()
        .map(|c| match c {
            Coefficient::Integer(k) => Ok(Scalar::from_integer((*k).into())),
            Coefficient::Text(s) => parse_scalar(s).map_err(|e| at(text, span.clone(), e.to_string())),
        })
        .collect::<Result<Vec<_>, _>>()?;
    let form = LinearForm::new(coeffs);
    if form.is_zero() {
        return Err(at(text, span, format!("zero row in {what}")));
    }
    Ok(form)
}

/// Parses and validates a document. Subspace bases come back in the
/// canonical form chosen by [`SubspaceArrangement::new`].
pub fn parse(text: &str) -> Result<ArrangementDocument, InputError> {
    let raw: RawDocument = toml::from_str(text).map_err(|e| InputError::Document {
        line: e.span().map_or(1, |s| line_of(text, s.start)),
        message: e.message().to_string(),
    })?;

    if let Some(family) = raw.family {
        let span = family.span();
        if !raw.subspace.is_empty() || raw.host.is_some() || raw.dimension.is_some() || raw.variables.is_some() {
            return Err(at(
                text,
                span,
                "a document lists either explicit subspaces or a family, not both",
            ));
        }
        return Ok(ArrangementDocument::Family(family.into_inner()));
    }

    let Some(dimension) = raw.dimension else {
        return Err(InputError::Document {
            line: 1,
            message: "missing `dimension`".into(),
        });
    };
    let dim = *dimension.get_ref();
    if dim == 0 {
        return Err(at(text, dimension.span(), "dimension must be positive"));
    }
    let ring = match &raw.variables {
        None => Ring::standard(dim),
        Some(v) => {
            if v.get_ref().len() != dim {
                return Err(at(
                    text,
                    v.span(),
                    format!("dimension mismatch: {} variable names for dimension {dim}", v.get_ref().len()),
                ));
            }
            Ring::new(v.get_ref().iter().cloned()).map_err(|e| at(text, v.span(), e.to_string()))?
        }
    };
    if raw.subspace.is_empty() {
        return Err(InputError::Document {
            line: 1,
            message: "no [[subspace]] tables".into(),
        });
    }

    let mut subspaces = Vec::with_capacity(raw.subspace.len());
    for (k, s) in raw.subspace.iter().enumerate() {
        if s.get_ref().forms.is_empty() {
            return Err(at(text, s.span(), format!("subspace {} has no forms", k + 1)));
        }
        let forms = s
            .get_ref()
            .forms
            .iter()
            .map(|row| parse_row(text, row, dim, &format!("subspace {}", k + 1)))
            .collect::<Result<Vec<_>, _>>()?;
        subspaces.push(forms);
    }
    let arrangement = SubspaceArrangement::new(ring, subspaces).map_err(|e| {
        let span_of = |i: usize| raw.subspace[i].span();
        match e {
            ArrangementError::Duplicate(i, j) => at(
                text,
                span_of(j),
                format!("duplicate subspaces: subspace {} equals subspace {}", j + 1, i + 1),
            ),
            ArrangementError::Containment { outer, inner } => at(
                text,
                span_of(outer.max(inner)),
                format!(
                    "containment violation: subspace {} lies inside subspace {}",
                    inner + 1,
                    outer + 1
                ),
            ),
            ArrangementError::WholeSpace(i) => at(text, span_of(i), format!("subspace {} is the whole space", i + 1)),
            ArrangementError::ZeroForm(i) => at(text, span_of(i), format!("zero row in subspace {}", i + 1)),
            other => InputError::Document {
                line: 1,
                message: other.to_string(),
            },
        }
    })?;

    let host = match &raw.host {
        None => None,
        Some(rows) => {
            if rows.get_ref().is_empty() {
                return Err(at(text, rows.span(), "host lists no hyperplanes"));
            }
            Some(
                rows.get_ref()
                    .iter()
                    .map(|row| parse_row(text, row, dim, "host hyperplane"))
                    .collect::<Result<Vec<_>, _>>()?,
            )
        }
    };

    Ok(ArrangementDocument::Explicit(Explicit { arrangement, host }))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn explicit(text: &str) -> Explicit {
        match parse(text).unwrap() {
            ArrangementDocument::Explicit(e) => e,
            ArrangementDocument::Family(_) => panic!("expected explicit subspaces"),
        }
    }

    fn error(text: &str) -> (usize, String) {
        match parse(text) {
            Err(InputError::Document { line, message }) => (line, message),
            other => panic!("expected a document error, got {other:?}"),
        }
    }

    #[test]
    fn two_planes() {
        let e = explicit(
            "dimension = 3\n[[subspace]]\nforms = [[1, -1, 0]]\n[[subspace]]\nforms = [[1, 0, -1]]\n",
        );
        assert_eq!(e.arrangement.len(), 2);
        assert_eq!(e.arrangement.dim(), 3);
        assert!(e.host.is_none());
    }

    #[test]
    fn dependent_rows_collapse() {
        let e = explicit(
            "dimension = 3\n[[subspace]]\nforms = [[1, -1, 0], [2, -2, 0]]\n[[subspace]]\nforms = [[0, 1, 0]]\n",
        );
        assert_eq!(e.arrangement.subspaces()[0].len(), 1);
    }

    #[test]
    fn rational_entries_and_names() {
        let e = explicit(
            "dimension = 2\nvariables = [\"s\", \"t\"]\n[[subspace]]\nforms = [[1, \"-1/2\"]]\n[[subspace]]\nforms = [[0, 1]]\n",
        );
        assert_eq!(e.arrangement.ring().names(), ["s", "t"]);
    }

    #[test]
    fn containment_is_reported_on_its_line() {
        let (line, message) = error(
            "dimension = 3\n[[subspace]]\nforms = [[1, 0, 0]]\n\n[[subspace]]\nforms = [[1, 0, 0], [0, 1, 0]]\n",
        );
        assert!(message.contains("containment violation"), "{message}");
        // anchored at the `[[subspace]]` header of the offending table
        assert_eq!(line, 5);
    }

    #[test]
    fn row_problems_are_line_anchored() {
        let (line, message) = error("dimension = 3\n[[subspace]]\nforms = [[1, 0]]\n");
        assert_eq!(line, 3);
        assert!(message.contains("dimension mismatch"), "{message}");

        let (line, message) = error("dimension = 2\n[[subspace]]\nforms = [[1, 0]]\n[[subspace]]\nforms = [[0, 0]]\n");
        assert_eq!(line, 5);
        assert!(message.contains("zero row"), "{message}");

        let (line, message) = error("dimension = 2\n[[subspace]]\nforms = [[1, 0]]\n[[subspace]]\nforms = [[2, 0]]\n");
        assert_eq!(line, 4);
        assert!(message.contains("duplicate"), "{message}");
    }

    #[test]
    fn family_and_subspaces_are_exclusive() {
        let (_, message) = error("dimension = 2\n[[subspace]]\nforms = [[1, 0]]\n[family]\nname = \"braid\"\nn = 3\n");
        assert!(message.contains("not both"), "{message}");
        match parse("[family]\nname = \"orbit\"\nn = 6\nshape = [3, 3]\n").unwrap() {
            ArrangementDocument::Family(f) => {
                assert_eq!(f.name, "orbit");
                assert_eq!(f.shape, Some(vec![3, 3]));
            }
            ArrangementDocument::Explicit(_) => panic!("expected a family"),
        }
    }

    #[test]
    fn syntax_errors_carry_lines() {
        let (line, _) = error("dimension = 3\n\n[[subspace]\n");
        assert_eq!(line, 3);
    }
}
