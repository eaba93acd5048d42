//! Subspace arrangements, their vanishing ideals, embeddings into hyperplane
//! arrangements, and the product ideals built from those embeddings.

mod pl;
mod products;

use std::sync::OnceLock;

use thiserror::Error;

use crate::exact::{normalize_form, span_basis, span_includes, ExactError, LinearForm};
use crate::lattice::{
    Antichain, HyperplaneArrangement, HyperplaneSet, IntersectionLattice, LatticeError,
};
use crate::poly::{intersect_ideals, Ideal, PolyError, Polynomial, Ring};

pub use pl::{
    blocker_ideal_checks, enlarge_embedding, pl_check, pl_check_embedding, BlockerChecks,
    HilbertRow, PlCertificate, PlOptions,
};
pub use products::{blocker_ideal, flat_product, h_product_ideal, minimal_covers};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArrangementError {
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("an arrangement needs at least one subspace")]
    Empty,
    #[error("subspace {0} has no defining forms")]
    WholeSpace(usize),
    #[error("subspace {0} has a zero defining form")]
    ZeroForm(usize),
    #[error("subspaces {0} and {1} coincide")]
    Duplicate(usize, usize),
    #[error("containment violation: subspace {inner} lies inside subspace {outer}")]
    Containment { outer: usize, inner: usize },
    #[error("subspace {0} is not an intersection of host hyperplanes")]
    NotEmbedded(usize),
    #[error("the bottom flat has no product of linear forms")]
    BottomFlat,
}

/// Finitely many linear subspaces of `Q^n`, none containing another. Each
/// subspace is stored through a linearly independent list of linear forms
/// cutting it out.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SubspaceArrangement {
    ring: Ring,
    subspaces: Vec<Vec<LinearForm>>,
}

impl SubspaceArrangement {
    /// Forms that are already independent are kept (normalized); otherwise the
    /// subspace is replaced by the reduced echelon basis of their span.
    pub fn new(ring: Ring, subspaces: Vec<Vec<LinearForm>>) -> Result<Self, ArrangementError> {
        let dim = ring.nvars();
        if subspaces.is_empty() {
            return Err(ArrangementError::Empty);
        }
        let mut stored = Vec::with_capacity(subspaces.len());
        for (i, forms) in subspaces.into_iter().enumerate() {
            if forms.is_empty() {
                return Err(ArrangementError::WholeSpace(i));
            }
            for f in &forms {
                if f.dim() != dim {
                    return Err(ExactError::DimensionMismatch {
                        expected: dim,
                        found: f.dim(),
                    }
                    .into());
                }
                if f.is_zero() {
                    return Err(ArrangementError::ZeroForm(i));
                }
            }
            let basis = span_basis(&forms, dim);
            let kept = if basis.len() == forms.len() {
                forms.iter().map(normalize_form).collect::<Result<_, _>>()?
            } else {
                basis
            };
            stored.push(kept);
        }
        for i in 0..stored.len() {
            for j in 0..stored.len() {
                if i == j {
                    continue;
                }
                // V_j ⊆ V_i exactly when the forms of V_i lie in span(forms of V_j)
                if span_includes(&stored[j], &stored[i], dim) {
                    if span_includes(&stored[i], &stored[j], dim) {
                        return Err(ArrangementError::Duplicate(i.min(j), i.max(j)));
                    }
                    return Err(ArrangementError::Containment { outer: i, inner: j });
                }
            }
        }
        Ok(SubspaceArrangement {
            ring,
            subspaces: stored,
        })
    }

    /// An arrangement in the ring `x1..xn`.
    pub fn standard(dim: usize, subspaces: Vec<Vec<LinearForm>>) -> Result<Self, ArrangementError> {
        SubspaceArrangement::new(Ring::standard(dim), subspaces)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn dim(&self) -> usize {
        self.ring.nvars()
    }

    pub fn len(&self) -> usize {
        self.subspaces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.subspaces.is_empty()
    }

    pub fn subspaces(&self) -> &[Vec<LinearForm>] {
        &self.subspaces
    }

    /// The prime ideal of subspace `i`.
    pub fn linear_ideal(&self, i: usize) -> Ideal {
        let gens = self.subspaces[i].iter().map(Polynomial::from_linear).collect();
        Ideal::new(self.ring.clone(), gens).expect("forms live in the arrangement's ring")
    }
}

/// `I_1 ∩ ... ∩ I_r`, intersecting in a balanced binary tree.
pub fn vanishing_ideal(a: &SubspaceArrangement) -> Result<Ideal, ArrangementError> {
    let mut layer: Vec<Ideal> = (0..a.len()).map(|i| a.linear_ideal(i)).collect();
    while layer.len() > 1 {
        let mut next = Vec::with_capacity(layer.len().div_ceil(2));
        let mut it = layer.into_iter();
        while let Some(x) = it.next() {
            match it.next() {
                Some(y) => next.push(intersect_ideals(&x, &y)?),
                None => next.push(x),
            }
        }
        layer = next;
    }
    Ok(layer.pop().expect("arrangements are nonempty"))
}

/// A subspace arrangement together with a hyperplane arrangement in which
/// every subspace is an intersection of hyperplanes.
#[derive(Clone, Debug)]
pub struct Embedding {
    arrangement: SubspaceArrangement,
    host: HyperplaneArrangement,
    hsets: Vec<HyperplaneSet>,
    lattice: OnceLock<IntersectionLattice>,
}

impl Embedding {
    pub fn new(arrangement: SubspaceArrangement, host: HyperplaneArrangement) -> Result<Self, ArrangementError> {
        let dim = arrangement.dim();
        if host.dim() != dim {
            return Err(ExactError::DimensionMismatch {
                expected: dim,
                found: host.dim(),
            }
            .into());
        }
        let mut hsets = Vec::with_capacity(arrangement.len());
        for (i, forms) in arrangement.subspaces.iter().enumerate() {
            let hs = host.containing(forms);
            if !span_includes(&host.forms_of(&hs), forms, dim) {
                return Err(ArrangementError::NotEmbedded(i));
            }
            hsets.push(hs);
        }
        Ok(Embedding {
            arrangement,
            host,
            hsets,
            lattice: OnceLock::new(),
        })
    }

    pub fn arrangement(&self) -> &SubspaceArrangement {
        &self.arrangement
    }

    pub fn host(&self) -> &HyperplaneArrangement {
        &self.host
    }

    /// For each subspace, the hyperplanes containing it.
    pub fn hsets(&self) -> &[HyperplaneSet] {
        &self.hsets
    }

    /// The intersection lattice of the host, built on first use.
    pub fn lattice(&self) -> &IntersectionLattice {
        self.lattice.get_or_init(|| IntersectionLattice::build(&self.host))
    }

    /// The subspaces as an antichain of the host lattice.
    pub fn antichain(&self) -> Antichain {
        let l = self.lattice();
        let ids = self
            .hsets
            .iter()
            .map(|hs| l.id_of(hs).expect("subspace hyperplane sets are closed"));
        l.antichain(ids)
            .expect("subspaces of an arrangement are pairwise incomparable")
    }
}

/// Hosts the arrangement in the hyperplanes given by its own stored forms.
pub fn canonical_embedding(a: &SubspaceArrangement) -> Embedding {
    let host = HyperplaneArrangement::new(a.dim(), a.subspaces.iter().flatten().cloned())
        .expect("stored forms are nonzero and of the right dimension");
    Embedding::new(a.clone(), host).expect("every subspace is cut out by its own forms")
}
