//! Report assembly and serialization.
//!
//! Reports are JSON objects. `serde_json` keeps object keys sorted, and every
//! list of polynomials is sorted before it is stored, so two runs on the same
//! input produce identical bytes once the `timings_ms` member is removed.

use std::fmt::Write as _;

use plgen::exact::LinearForm;
use plgen::lattice::{Antichain, FlatId, IntersectionLattice};
use plgen::poly::{Ideal, MonomialOrder, PolyError, Polynomial, Ring};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

/// Key holding wall-clock data, which is left out of canonical output.
pub const TIMINGS_KEY: &str = "timings_ms";

/// Prints polynomials in a fixed ring and monomial order.
#[derive(Clone, Debug)]
pub struct Printer {
    pub ring: Ring,
    pub order: MonomialOrder,
}

impl Printer {
    pub fn poly(&self, p: &Polynomial) -> String {
        self.ring.format_in(p, self.order)
    }

    pub fn form(&self, f: &LinearForm) -> String {
        self.poly(&Polynomial::from_linear(f))
    }

    pub fn forms(&self, fs: &[LinearForm]) -> Value {
        fs.iter().map(|f| self.form(f)).collect()
    }

    /// Sign-normalized and sorted, so the order the polynomials were found in
    /// does not matter.
    pub fn sorted_polys(&self, ps: &[Polynomial]) -> Value {
        let mut ps: Vec<Polynomial> = ps.iter().map(|p| p.sign_normalized(self.order)).collect();
        ps.sort_by(|a, b| a.canonical_cmp(b, self.order));
        ps.dedup();
        ps.iter().map(|p| self.poly(p)).collect()
    }

    /// Minimal generators, their degrees, and the reduced Gröbner basis in
    /// the printer's order.
    pub fn ideal(&self, ideal: &Ideal) -> Result<Value, PolyError> {
        let minimal = ideal.minimal_generators()?;
        let mut degrees: Vec<u32> = minimal.iter().filter_map(Polynomial::total_degree).collect();
        degrees.sort_unstable();
        let gb = ideal.groebner_in(self.order)?;
        Ok(json!({
            "generators": self.sorted_polys(&minimal),
            "generator_degrees": degrees,
            "groebner_basis": self.sorted_polys(gb.elements()),
        }))
    }

    pub fn flat(&self, l: &IntersectionLattice, x: FlatId) -> Value {
        let f = l.flat(x);
        json!({
            "rank": f.rank(),
            "hyperplanes": f.hset().iter().map(|i| i + 1).collect::<Vec<_>>(),
            "forms": self.forms(f.basis()),
        })
    }

    pub fn antichain(&self, l: &IntersectionLattice, a: &Antichain) -> Value {
        a.members().iter().map(|&x| self.flat(l, x)).collect()
    }
}

/// A report under construction. Sections are added as they finish so a run
/// cut short by the time limit still shows its completed parts.
#[derive(Debug)]
pub struct Report {
    pub command: String,
    pub input: Value,
    pub result: Map<String, Value>,
    pub timings: Map<String, Value>,
    pub complete: bool,
    pub error: Option<String>,
}

impl Report {
    pub fn new(command: &str, input: Value) -> Self {
        Report {
            command: command.to_string(),
            input,
            result: Map::new(),
            timings: Map::new(),
            complete: true,
            error: None,
        }
    }

    pub fn insert(&mut self, key: &str, value: Value) {
        self.result.insert(key.to_string(), value);
    }

    pub fn to_json(&self) -> Value {
        json!({
            "schema_version": SCHEMA_VERSION,
            "command": self.command,
            "complete": self.complete,
            "error": self.error,
            "input": self.input,
            "result": Value::Object(self.result.clone()),
            TIMINGS_KEY: Value::Object(self.timings.clone()),
        })
    }
}

/// The report without its timings, pretty-printed with a final newline.
pub fn canonical_string(report: &Value) -> String {
    let mut v = report.clone();
    if let Value::Object(m) = &mut v {
        m.remove(TIMINGS_KEY);
    }
    let mut s = serde_json::to_string_pretty(&v).expect("JSON values serialize");
    s.push('\n');
    s
}

/// Renders a report as indented `key: value` lines for reading in a terminal.
pub fn to_text(report: &Value) -> String {
    let mut out = String::new();
    write_value(&mut out, report, 0);
    out
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

/// One-line form of scalars and of arrays built only from scalars.
fn inline(v: &Value) -> Option<String> {
    match v {
        Value::Object(_) => None,
        Value::Array(items) => {
            let parts = items.iter().map(inline).collect::<Option<Vec<_>>>()?;
            Some(format!("[{}]", parts.join(", ")))
        }
        x => Some(scalar_text(x)),
    }
}

fn write_value(out: &mut String, v: &Value, indent: usize) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match inline(x) {
                    Some(line) if is_scalar(x) || line.len() <= 80 => {
                        let _ = writeln!(out, "{pad}{k}: {line}");
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}:");
                        write_value(out, x, indent + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                match inline(x) {
                    Some(line) => {
                        let _ = writeln!(out, "{pad}- {line}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}[{}]", i + 1);
                        write_value(out, x, indent + 1);
                    }
                }
            }
        }
        x => {
            let _ = writeln!(out, "{pad}{}", scalar_text(x));
        }
    }
}
