use std::collections::HashMap;

use super::products::{blocker_ideal, h_product_ideal, minimal_covers};
use super::{canonical_embedding, vanishing_ideal, ArrangementError, Embedding, SubspaceArrangement};
use crate::exact::{echelon_contains, intersect_spans, span_basis, LinearForm};
use crate::lattice::{Antichain, HyperplaneArrangement};
use crate::poly::{hilbert_function, ideal_compare, limit, Containment, Ideal, Polynomial};

/// Adds hyperplanes to the host until, for every set of subspaces, the
/// intersection of their spaces of linear forms has a basis made of host
/// forms. The original hyperplanes keep their indices.
pub fn enlarge_embedding(e: &Embedding) -> Result<Embedding, ArrangementError> {
    let a = e.arrangement();
    let dim = a.dim();
    let bases: Vec<Vec<LinearForm>> = a.subspaces().iter().map(|f| span_basis(f, dim)).collect();
    let mut walk = Enlarge {
        bases: &bases,
        host: e.host().clone(),
        visited: HashMap::new(),
    };
    for (i, b) in bases.iter().enumerate() {
        walk.visit(b, i + 1)?;
    }
    Embedding::new(a.clone(), walk.host)
}

struct Enlarge<'a> {
    bases: &'a [Vec<LinearForm>],
    host: HyperplaneArrangement,
    /// Smallest start index each span has been explored from.
    visited: HashMap<Vec<LinearForm>, usize>,
}

impl Enlarge<'_> {
    /// Explores all sets `T ∪ S` where `span` is the intersection over `T`
    /// and `S` draws from subspaces numbered `start` and up.
    fn visit(&mut self, span: &[LinearForm], start: usize) -> Result<(), ArrangementError> {
        limit::check()?;
        match self.visited.get(span) {
            // the earlier exploration covered every set reachable from here
            Some(&s) if s <= start => return Ok(()),
            Some(_) => {}
            None => self.ensure_basis(span)?,
        }
        self.visited.insert(span.to_vec(), start);
        for j in start..self.bases.len() {
            let next = intersect_spans(span, &self.bases[j]);
            // an unchanged span is explored from `span` itself with fewer constraints
            if next.is_empty() || next.as_slice() == span {
                continue;
            }
            self.visit(&next, j + 1)?;
        }
        Ok(())
    }

    fn ensure_basis(&mut self, span: &[LinearForm]) -> Result<(), ArrangementError> {
        let dim = self.host.dim();
        let mut inside: Vec<LinearForm> = self
            .host
            .forms()
            .iter()
            .filter(|f| echelon_contains(span, f))
            .cloned()
            .collect();
        let mut have = span_basis(&inside, dim);
        for b in span {
            if have.len() == span.len() {
                break;
            }
            if !echelon_contains(&have, b) {
                self.host.push(b)?;
                inside.push(b.clone());
                have = span_basis(&inside, dim);
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct PlOptions {
    /// Last degree of the Hilbert trace; defaults to the largest degree among
    /// the computed generators of the vanishing ideal.
    pub max_degree: Option<u32>,
}

/// One row of the Hilbert trace: `dim (R/I_A)_t` and `dim (R/F)_t`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HilbertRow {
    pub degree: u32,
    pub vanishing: u64,
    pub product: u64,
}

/// Result of the decision procedure for generation by products of linear forms.
#[derive(Clone, Debug)]
pub struct PlCertificate {
    pub verdict: bool,
    /// How the product ideal compares to the vanishing ideal.
    pub comparison: Containment,
    pub vanishing_ideal: Ideal,
    pub product_ideal: Ideal,
    pub enlarged: Embedding,
    /// Hyperplanes appended to the starting host by the enlargement.
    pub added_hyperplanes: Vec<LinearForm>,
    /// Number of minimal covers over the enlarged host.
    pub covers: usize,
    /// A minimal generating set of the product ideal, made of products of host forms.
    pub product_generators: Vec<Polynomial>,
    /// A Gröbner basis element of the vanishing ideal, of least degree, that
    /// is not in the product ideal.
    pub witness: Option<Polynomial>,
    pub hilbert_trace: Vec<HilbertRow>,
}

pub fn pl_check(a: &SubspaceArrangement) -> Result<PlCertificate, ArrangementError> {
    pl_check_embedding(&canonical_embedding(a), PlOptions::default())
}

/// Runs the decision procedure starting from a given embedding.
pub fn pl_check_embedding(e: &Embedding, options: PlOptions) -> Result<PlCertificate, ArrangementError> {
    let vanishing = vanishing_ideal(e.arrangement())?;
    let enlarged = enlarge_embedding(e)?;
    let added_hyperplanes = enlarged.host().forms()[e.host().len()..].to_vec();
    let product = h_product_ideal(&enlarged)?;
    let comparison = ideal_compare(&product, &vanishing)?;
    let verdict = comparison == Containment::Equal;

    let witness = if verdict {
        None
    } else {
        let gb = product.groebner()?;
        let basis = vanishing.groebner()?;
        let mut candidates: Vec<&Polynomial> = basis.elements().iter().collect();
        candidates.sort_by_key(|p| p.total_degree());
        let mut found = None;
        for g in candidates {
            if !gb.contains(g)? {
                found = Some(g.clone());
                break;
            }
        }
        found
    };

    let top = options.max_degree.unwrap_or_else(|| {
        vanishing
            .generators()
            .iter()
            .filter_map(Polynomial::total_degree)
            .max()
            .unwrap_or(0)
    });
    let hilbert_trace = (0..=top)
        .map(|t| {
            Ok(HilbertRow {
                degree: t,
                vanishing: hilbert_function(&vanishing, t)?,
                product: hilbert_function(&product, t)?,
            })
        })
        .collect::<Result<Vec<_>, ArrangementError>>()?;

    Ok(PlCertificate {
        verdict,
        comparison,
        covers: minimal_covers(&enlarged).len(),
        product_generators: product.minimal_generators()?,
        vanishing_ideal: vanishing,
        product_ideal: product,
        enlarged,
        added_hyperplanes,
        witness,
        hilbert_trace,
    })
}

/// Containments between the blocker ideal and the vanishing ideals of the
/// arrangement and of its double blocker.
#[derive(Clone, Debug)]
pub struct BlockerChecks {
    pub blocker: Antichain,
    pub double_blocker: Antichain,
    pub blocker_ideal: Ideal,
    pub vanishing_ideal: Ideal,
    /// The double blocker realized as a subspace arrangement.
    pub double_arrangement: SubspaceArrangement,
    pub double_vanishing_ideal: Ideal,
    pub double_equals_original: bool,
    pub blocker_in_vanishing: bool,
    pub blocker_in_double: bool,
    pub blocker_equals_vanishing: bool,
    /// Comparison of the double blocker's vanishing ideal with `I_A`.
    pub double_vs_vanishing: Containment,
}

pub fn blocker_ideal_checks(e: &Embedding) -> Result<BlockerChecks, ArrangementError> {
    let l = e.lattice();
    let original = e.antichain();
    let blocker = l.blocker(&original);
    let double_blocker = l.blocker(&blocker);
    let b = blocker_ideal(e)?;
    let vanishing = vanishing_ideal(e.arrangement())?;

    let double_equals_original = double_blocker == original;
    let double_arrangement = SubspaceArrangement::new(
        e.arrangement().ring().clone(),
        double_blocker
            .members()
            .iter()
            .map(|&x| l.flat(x).basis().to_vec())
            .collect(),
    )?;
    let double_vanishing = if double_equals_original {
        vanishing.clone()
    } else {
        vanishing_ideal(&double_arrangement)?
    };

    let blocker_in_vanishing = vanishing.contains_ideal(&b)?;
    let blocker_in_double = double_vanishing.contains_ideal(&b)?;
    let blocker_equals_vanishing = blocker_in_vanishing && b.contains_ideal(&vanishing)?;
    let double_vs_vanishing = ideal_compare(&double_vanishing, &vanishing)?;
    Ok(BlockerChecks {
        blocker,
        double_blocker,
        blocker_ideal: b,
        vanishing_ideal: vanishing,
        double_arrangement,
        double_vanishing_ideal: double_vanishing,
        double_equals_original,
        blocker_in_vanishing,
        blocker_in_double,
        blocker_equals_vanishing,
        double_vs_vanishing,
    })
}
