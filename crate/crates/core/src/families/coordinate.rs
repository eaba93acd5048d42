//! Coordinate subspace arrangements and Stanley–Reisner ideals.

use std::collections::BTreeSet;

use super::FamilyError;
use crate::arrangements::{blocker_ideal, Embedding, SubspaceArrangement};
use crate::exact::LinearForm;
use crate::lattice::HyperplaneArrangement;
use crate::poly::{Ideal, Monomial, Polynomial, Ring};

/// A simplicial complex on `{0, ..., n-1}` given by its facets.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<BTreeSet<usize>>,
}

impl SimplicialComplex {
    pub fn new(n: usize, facets: Vec<BTreeSet<usize>>) -> Result<Self, FamilyError> {
        if facets.is_empty() {
            return Err(FamilyError::Parameter("a complex needs at least one facet".into()));
        }
        for (k, f) in facets.iter().enumerate() {
            if f.iter().any(|&i| i >= n) {
                return Err(FamilyError::Parameter(format!("facet {k} has a vertex outside [n]")));
            }
            if f.len() == n {
                return Err(FamilyError::Parameter(
                    "the full vertex set is not a proper coordinate subspace".into(),
                ));
            }
            for (l, g) in facets.iter().enumerate() {
                if k != l && f.is_subset(g) {
                    return Err(FamilyError::Parameter(format!("facet {k} lies inside facet {l}")));
                }
            }
        }
        Ok(SimplicialComplex { n, facets })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[BTreeSet<usize>] {
        &self.facets
    }

    pub fn is_face(&self, s: &BTreeSet<usize>) -> bool {
        self.facets.iter().any(|f| s.is_subset(f))
    }

    /// Non-faces all of whose proper subsets are faces, found by scanning
    /// every subset of `[n]`.
    pub fn minimal_non_faces(&self) -> Vec<BTreeSet<usize>> {
        let mut out = Vec::new();
        for mask in 0u64..(1 << self.n) {
            let s: BTreeSet<usize> = (0..self.n).filter(|i| mask & (1 << i) != 0).collect();
            if self.is_face(&s) {
                continue;
            }
            let minimal = s.iter().all(|i| {
                let mut t = s.clone();
                t.remove(i);
                self.is_face(&t)
            });
            if minimal {
                out.push(s);
            }
        }
        out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        out
    }

    pub fn stanley_reisner_ideal(&self) -> Ideal {
        let gens = self
            .minimal_non_faces()
            .iter()
            .map(|s| squarefree(self.n, s))
            .collect();
        Ideal::new(Ring::standard(self.n), gens).expect("standard ring")
    }
}

fn squarefree(n: usize, s: &BTreeSet<usize>) -> Polynomial {
    let exps: Vec<u16> = (0..n).map(|i| u16::from(s.contains(&i))).collect();
    Polynomial::monomial(Monomial::from_exps(&exps), crate::exact::int(1))
}

#[derive(Clone, Debug)]
pub struct CoordinateFamily {
    pub complex: SimplicialComplex,
    /// Embedded in the coordinate hyperplanes `x1, ..., xn`.
    pub embedding: Embedding,
    pub stanley_reisner: Ideal,
    /// Whether the blocker ideal has exactly the Stanley–Reisner monomials as
    /// generators.
    pub blocker_matches: bool,
}

impl CoordinateFamily {
    pub fn arrangement(&self) -> &SubspaceArrangement {
        self.embedding.arrangement()
    }
}

/// The arrangement of coordinate subspaces `S_G = {x_i = 0 for i not in G}`
/// over the facets `G`.
pub fn coordinate_family(c: &SimplicialComplex) -> Result<CoordinateFamily, FamilyError> {
    let n = c.n;
    let subspaces = c
        .facets
        .iter()
        .map(|g| (0..n).filter(|i| !g.contains(i)).map(|i| LinearForm::variable(n, i)).collect())
        .collect();
    let arrangement = SubspaceArrangement::standard(n, subspaces)?;
    let host = HyperplaneArrangement::new(n, (0..n).map(|i| LinearForm::variable(n, i)))?;
    let embedding = Embedding::new(arrangement, host)?;
    let stanley_reisner = c.stanley_reisner_ideal();
    let b = blocker_ideal(&embedding)?;
    let as_set = |gens: &[Polynomial]| gens.iter().cloned().collect::<BTreeSet<_>>();
    let blocker_matches = as_set(b.generators()) == as_set(stanley_reisner.generators());
    debug_assert!(blocker_matches);
    Ok(CoordinateFamily {
        complex: c.clone(),
        embedding,
        stanley_reisner,
        blocker_matches,
    })
}
