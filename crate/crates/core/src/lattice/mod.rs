//! Intersection lattices of central hyperplane arrangements.
//!
//! A flat is identified with the set of hyperplanes containing it. The
//! bottom element `0̂` is the whole space (no hyperplanes) and the order is
//! inclusion of hyperplane sets, so smaller subspaces sit higher up.

mod hset;

use std::collections::{BTreeSet, HashMap};

use thiserror::Error;

use crate::exact::{echelon_contains, normalize_form, span_basis, ExactError, LinearForm};

pub use hset::HyperplaneSet;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error("an antichain must be nonempty")]
    EmptyAntichain,
    #[error("the bottom element cannot belong to an antichain")]
    ContainsBottom,
    #[error("flats {0} and {1} are comparable")]
    Comparable(FlatId, FlatId),
    #[error("flat {0} does not belong to this lattice")]
    UnknownFlat(FlatId),
}

/// Pairwise non-proportional, normalized linear forms in a common dimension.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HyperplaneArrangement {
    dim: usize,
    forms: Vec<LinearForm>,
}

impl HyperplaneArrangement {
    /// Normalizes every form and drops repeats, keeping first occurrences.
    pub fn new(dim: usize, forms: impl IntoIterator<Item = LinearForm>) -> Result<Self, LatticeError> {
        let mut h = HyperplaneArrangement {
            dim,
            forms: Vec::new(),
        };
        for f in forms {
            h.push(&f)?;
        }
        Ok(h)
    }

    /// Adds a hyperplane if it is new; returns its index either way.
    pub fn push(&mut self, f: &LinearForm) -> Result<usize, LatticeError> {
        if f.dim() != self.dim {
            return Err(ExactError::DimensionMismatch {
                expected: self.dim,
                found: f.dim(),
            }
            .into());
        }
        let f = normalize_form(f)?;
        Ok(match self.index_of(&f) {
            Some(i) => i,
            None => {
                self.forms.push(f);
                self.forms.len() - 1
            }
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn forms(&self) -> &[LinearForm] {
        &self.forms
    }

    pub fn len(&self) -> usize {
        self.forms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forms.is_empty()
    }

    /// Index of the hyperplane defined by `f` (any nonzero multiple works).
    pub fn index_of(&self, f: &LinearForm) -> Option<usize> {
        let f = normalize_form(f).ok()?;
        self.forms.iter().position(|g| *g == f)
    }

    pub fn forms_of(&self, s: &HyperplaneSet) -> Vec<LinearForm> {
        s.iter().map(|i| self.forms[i].clone()).collect()
    }

    /// Hyperplanes whose forms lie in the span of `forms`; for a subspace
    /// given by its defining forms this is the set of hyperplanes containing it.
    pub fn containing(&self, forms: &[LinearForm]) -> HyperplaneSet {
        let basis = span_basis(forms, self.dim);
        self.containing_echelon(&basis)
    }

    fn containing_echelon(&self, basis: &[LinearForm]) -> HyperplaneSet {
        HyperplaneSet::from_indices(
            (0..self.forms.len()).filter(|&i| echelon_contains(basis, &self.forms[i])),
        )
    }

    pub fn closure(&self, s: &HyperplaneSet) -> HyperplaneSet {
        self.containing(&self.forms_of(s))
    }
}

pub type FlatId = usize;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Flat {
    hset: HyperplaneSet,
    basis: Vec<LinearForm>,
}

impl Flat {
    pub fn hset(&self) -> &HyperplaneSet {
        &self.hset
    }

    /// Echelon basis of the linear forms vanishing on the flat.
    pub fn basis(&self) -> &[LinearForm] {
        &self.basis
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }
}

/// The materialized lattice of flats. Flats are numbered by rank, and within
/// a rank by their hyperplane sets, so numbering is deterministic.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    host: HyperplaneArrangement,
    flats: Vec<Flat>,
    index: HashMap<HyperplaneSet, FlatId>,
    atoms: Vec<FlatId>,
}

pub fn build_lattice(h: &HyperplaneArrangement) -> IntersectionLattice {
    IntersectionLattice::build(h)
}

impl IntersectionLattice {
    pub fn build(h: &HyperplaneArrangement) -> Self {
        let mut flats = vec![Flat {
            hset: HyperplaneSet::new(),
            basis: Vec::new(),
        }];
        let mut index = HashMap::from([(HyperplaneSet::new(), 0)]);
        let mut level: Vec<FlatId> = vec![0];
        while !level.is_empty() {
            let mut next: BTreeSet<HyperplaneSet> = BTreeSet::new();
            let mut bases: HashMap<HyperplaneSet, Vec<LinearForm>> = HashMap::new();
            for &id in &level {
                let flat = &flats[id];
                for (i, form) in h.forms.iter().enumerate() {
                    if flat.hset.contains(i) {
                        continue;
                    }
                    let mut gens = flat.basis.clone();
                    gens.push(form.clone());
                    let basis = span_basis(&gens, h.dim);
                    let hs = h.containing_echelon(&basis);
                    if next.insert(hs.clone()) {
                        bases.insert(hs, basis);
                    }
                }
            }
            level.clear();
            for hs in next {
                let id = flats.len();
                let basis = bases.remove(&hs).expect("basis recorded");
                index.insert(hs.clone(), id);
                flats.push(Flat { hset: hs, basis });
                level.push(id);
            }
        }
        let atoms = (0..flats.len()).filter(|&i| flats[i].rank() == 1).collect();
        IntersectionLattice {
            host: h.clone(),
            flats,
            index,
            atoms,
        }
    }

    pub fn host(&self) -> &HyperplaneArrangement {
        &self.host
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn flat(&self, id: FlatId) -> &Flat {
        &self.flats[id]
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn bottom(&self) -> FlatId {
        0
    }

    pub fn top(&self) -> FlatId {
        self.flats.len() - 1
    }

    /// Atom flats, in the order of their hyperplane sets.
    pub fn atoms(&self) -> &[FlatId] {
        &self.atoms
    }

    /// Flat of hyperplane `i` of the host.
    pub fn atom_of(&self, i: usize) -> FlatId {
        self.index[&self.host.closure(&HyperplaneSet::from_indices([i]))]
    }

    pub fn rank(&self) -> usize {
        self.flats[self.top()].rank()
    }

    pub fn id_of(&self, hset: &HyperplaneSet) -> Option<FlatId> {
        self.index.get(hset).copied()
    }

    /// Flat cut out by a subspace given by its defining forms, provided the
    /// subspace is an intersection of host hyperplanes.
    pub fn flat_of_subspace(&self, forms: &[LinearForm]) -> Option<FlatId> {
        let basis = span_basis(forms, self.host.dim);
        let id = self.id_of(&self.host.containing_echelon(&basis))?;
        (self.flats[id].basis == basis).then_some(id)
    }

    pub fn leq(&self, x: FlatId, y: FlatId) -> bool {
        self.flats[x].hset.is_subset(&self.flats[y].hset)
    }

    pub fn meet(&self, x: FlatId, y: FlatId) -> FlatId {
        let hs = self.flats[x].hset.intersection(&self.flats[y].hset);
        self.index[&hs]
    }

    pub fn join(&self, x: FlatId, y: FlatId) -> FlatId {
        let hs = self.flats[x].hset.union(&self.flats[y].hset);
        self.index[&self.host.closure(&hs)]
    }

    pub fn meet_join(&self, x: FlatId, y: FlatId) -> (FlatId, FlatId) {
        (self.meet(x, y), self.join(x, y))
    }

    /// Minimal flats meeting every member of `a` away from `0̂`.
    pub fn blocker(&self, a: &Antichain) -> Antichain {
        let mut kept: Vec<FlatId> = Vec::new();
        // flats are stored by increasing rank, so anything already kept can
        // only lie below later candidates
        for x in 1..self.flats.len() {
            let hx = &self.flats[x].hset;
            if !a.members.iter().all(|&m| self.flats[m].hset.intersects(hx)) {
                continue;
            }
            if kept.iter().any(|&k| self.flats[k].hset.is_subset(hx)) {
                continue;
            }
            kept.push(x);
        }
        Antichain::from_sorted(kept)
    }

    pub fn double_blocker(&self, a: &Antichain) -> Antichain {
        self.blocker(&self.blocker(a))
    }

    /// `a ≤ b`: every member of `b` lies above some member of `a`.
    pub fn antichain_leq(&self, a: &Antichain, b: &Antichain) -> bool {
        b.members
            .iter()
            .all(|&y| a.members.iter().any(|&x| self.leq(x, y)))
    }

    /// Validates `members` as an antichain of this lattice.
    pub fn antichain(&self, members: impl IntoIterator<Item = FlatId>) -> Result<Antichain, LatticeError> {
        let a = Antichain::from_unsorted(members);
        if a.members.is_empty() {
            return Err(LatticeError::EmptyAntichain);
        }
        for (k, &x) in a.members.iter().enumerate() {
            if x >= self.flats.len() {
                return Err(LatticeError::UnknownFlat(x));
            }
            if x == self.bottom() {
                return Err(LatticeError::ContainsBottom);
            }
            for &y in &a.members[..k] {
                if self.leq(x, y) || self.leq(y, x) {
                    return Err(LatticeError::Comparable(y, x));
                }
            }
        }
        Ok(a)
    }

    /// The minimal elements of `candidates`, as an antichain.
    pub fn minimal_antichain(&self, candidates: impl IntoIterator<Item = FlatId>) -> Result<Antichain, LatticeError> {
        let c = Antichain::from_unsorted(candidates);
        let minimal = c
            .members
            .iter()
            .copied()
            .filter(|&x| !c.members.iter().any(|&y| y != x && self.leq(y, x)))
            .collect::<Vec<_>>();
        self.antichain(minimal)
    }
}

/// A set of pairwise incomparable flats of one lattice, excluding `0̂`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Antichain {
    members: Vec<FlatId>,
}

impl Antichain {
    fn from_sorted(members: Vec<FlatId>) -> Self {
        Antichain { members }
    }

    fn from_unsorted(members: impl IntoIterator<Item = FlatId>) -> Self {
        let set: BTreeSet<FlatId> = members.into_iter().collect();
        Antichain {
            members: set.into_iter().collect(),
        }
    }

    pub fn members(&self) -> &[FlatId] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, x: FlatId) -> bool {
        self.members.binary_search(&x).is_ok()
    }
}
