//! Turning a [`FamilySpec`] into an embedded arrangement.

use std::collections::BTreeSet;

use plgen::arrangements::{canonical_embedding, Embedding, SubspaceArrangement};
use plgen::families::{
    blocks_family, braid_arrangement, coordinate_family, hook, orbit_family, p2_points, point_preset, polygraph,
    skew_lines, two_line_points, ProjectivePoint, SimplicialComplex, POINT_PRESETS,
};
use plgen::poly::Ideal;

use crate::document::FamilySpec;
use crate::InputError;

pub const FAMILY_NAMES: &[&str] = &[
    "braid",
    "orbit",
    "blocks",
    "hook",
    "polygraph",
    "coordinate",
    "p2points",
    "twolines",
    "skewlines",
];

/// An instantiated family together with the facts it comes with.
#[derive(Clone, Debug)]
pub struct Instance {
    pub embedding: Embedding,
    /// Set when the host is the braid arrangement of this many coordinates,
    /// so antichains can be described by partition shapes.
    pub braid_n: Option<usize>,
    /// Ideals the family predicts, reported next to the computed ones.
    pub predicted: Vec<(&'static str, Ideal)>,
}

impl Instance {
    fn plain(embedding: Embedding) -> Self {
        Instance {
            embedding,
            braid_n: None,
            predicted: Vec::new(),
        }
    }
}

fn bad(message: impl Into<String>) -> InputError {
    InputError::Family(message.into())
}

fn need(value: Option<usize>, name: &str, family: &str) -> Result<usize, InputError> {
    value.ok_or_else(|| bad(format!("family `{family}` needs --{name}")))
}

pub fn instantiate(spec: &FamilySpec) -> Result<Instance, InputError> {
    let name = spec.name.as_str();
    let fail = |e: plgen::families::FamilyError| bad(format!("{name}: {e}"));
    match name {
        "braid" => {
            let n = need(spec.n, "n", name)?;
            let host = braid_arrangement(n).map_err(fail)?;
            let a = SubspaceArrangement::standard(n, host.forms().iter().map(|f| vec![f.clone()]).collect())
                .map_err(|e| bad(e.to_string()))?;
            let e = Embedding::new(a, host).map_err(|e| bad(e.to_string()))?;
            Ok(Instance {
                embedding: e,
                braid_n: Some(n),
                predicted: Vec::new(),
            })
        }
        "orbit" => {
            let n = need(spec.n, "n", name)?;
            let mut shapes = spec.shapes.clone();
            shapes.extend(spec.shape.clone());
            if shapes.is_empty() {
                return Err(bad("family `orbit` needs at least one --shape"));
            }
            let fam = orbit_family(&shapes, n).map_err(fail)?;
            Ok(Instance {
                embedding: fam.embedding,
                braid_n: Some(n),
                predicted: Vec::new(),
            })
        }
        "blocks" => {
            let n = need(spec.n, "n", name)?;
            let k = need(spec.blocks, "blocks", name)?;
            let fam = blocks_family(n, k).map_err(fail)?;
            Ok(Instance {
                embedding: fam.embedding,
                braid_n: Some(n),
                predicted: Vec::new(),
            })
        }
        "hook" => {
            let n = need(spec.n, "n", name)?;
            let m = need(spec.m, "m", name)?;
            if m < 2 || m > n {
                return Err(bad(format!("hook: need 2 <= m <= n, got m = {m}, n = {n}")));
            }
            let fam = orbit_family(&[hook(m, n)], n).map_err(fail)?;
            Ok(Instance {
                embedding: fam.embedding,
                braid_n: Some(n),
                predicted: Vec::new(),
            })
        }
        "polygraph" => {
            let p = polygraph(need(spec.n, "n", name)?, need(spec.m, "m", name)?).map_err(fail)?;
            let q = Ideal::new(p.arrangement().ring().clone(), p.q.clone()).map_err(|e| bad(e.to_string()))?;
            Ok(Instance {
                embedding: p.embedding,
                braid_n: None,
                predicted: vec![("q_ideal", q)],
            })
        }
        "coordinate" => {
            let n = need(spec.n, "n", name)?;
            let mut facets = Vec::new();
            for f in &spec.facets {
                let mut s = BTreeSet::new();
                for &v in f {
                    if v == 0 || v > n {
                        return Err(bad(format!("coordinate: vertex {v} is outside 1..={n}")));
                    }
                    s.insert(v - 1);
                }
                facets.push(s);
            }
            let c = SimplicialComplex::new(n, facets).map_err(fail)?;
            let fam = coordinate_family(&c).map_err(fail)?;
            Ok(Instance {
                embedding: fam.embedding,
                braid_n: None,
                predicted: vec![("stanley_reisner_ideal", fam.stanley_reisner)],
            })
        }
        "p2points" => {
            let points = match (&spec.preset, spec.points.is_empty()) {
                (Some(p), true) => point_preset(p).ok_or_else(|| {
                    bad(format!("unknown preset `{p}`; known presets: {}", POINT_PRESETS.join(", ")))
                })?,
                (None, false) => spec
                    .points
                    .iter()
                    .map(|c| {
                        if c.len() != 3 {
                            return Err(bad("p2points: each point needs three coordinates"));
                        }
                        ProjectivePoint::from_ints(c).map_err(fail)
                    })
                    .collect::<Result<Vec<_>, _>>()?,
                _ => return Err(bad("p2points needs exactly one of --preset or --point")),
            };
            let a = p2_points(&points).map_err(fail)?;
            Ok(Instance::plain(canonical_embedding(&a)))
        }
        "twolines" => {
            let t = two_line_points(need(spec.r1, "r1", name)?, need(spec.r2, "r2", name)?).map_err(fail)?;
            Ok(Instance {
                embedding: canonical_embedding(&t.arrangement),
                braid_n: None,
                predicted: vec![("predicted_ideal", t.expected)],
            })
        }
        "skewlines" => {
            let a = skew_lines(need(spec.r, "r", name)?).map_err(fail)?;
            Ok(Instance::plain(canonical_embedding(&a)))
        }
        other => Err(bad(format!(
            "unknown family `{other}`; known families: {}",
            FAMILY_NAMES.join(", ")
        ))),
    }
}
