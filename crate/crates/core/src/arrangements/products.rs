use std::collections::BTreeSet;

use super::{ArrangementError, Embedding};
use crate::lattice::{Flat, HyperplaneArrangement, HyperplaneSet};
use crate::poly::{Ideal, Polynomial};

/// Product of the forms of all hyperplanes containing the flat `x`.
pub fn flat_product(x: &Flat, h: &HyperplaneArrangement) -> Result<Polynomial, ArrangementError> {
    if x.hset().is_empty() {
        return Err(ArrangementError::BottomFlat);
    }
    Ok(set_product(x.hset(), h))
}

fn set_product(s: &HyperplaneSet, h: &HyperplaneArrangement) -> Polynomial {
    Polynomial::product_of_forms(h.dim(), s.iter().map(|i| &h.forms()[i]))
}

/// The ideal generated by the flat products over the blocker of the
/// arrangement's antichain.
pub fn blocker_ideal(e: &Embedding) -> Result<Ideal, ArrangementError> {
    let l = e.lattice();
    let blocker = l.blocker(&e.antichain());
    let gens = blocker
        .members()
        .iter()
        .map(|&x| flat_product(l.flat(x), e.host()))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Ideal::new(e.arrangement().ring().clone(), gens)?)
}

/// Inclusion-minimal sets of host hyperplanes such that every subspace lies
/// in one of the chosen hyperplanes, sorted by size and then by content.
///
/// These are the minimal transversals of the hypergraph whose edges are the
/// hyperplane sets of the subspaces, enumerated edge by edge (Berge's method).
pub fn minimal_covers(e: &Embedding) -> Vec<HyperplaneSet> {
    let mut edges: Vec<&HyperplaneSet> = e.hsets().iter().collect();
    if edges.iter().any(|s| s.is_empty()) {
        return Vec::new();
    }
    edges.sort_by_key(|s| s.len());
    let mut current: Vec<HyperplaneSet> = vec![HyperplaneSet::new()];
    for edge in edges {
        let mut next: BTreeSet<HyperplaneSet> = BTreeSet::new();
        for t in &current {
            if t.intersects(edge) {
                next.insert(t.clone());
            } else {
                for i in edge.iter() {
                    let mut u = t.clone();
                    u.insert(i);
                    next.insert(u);
                }
            }
        }
        current = minimize(next.into_iter().collect());
    }
    current.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
    current
}

fn minimize(mut sets: Vec<HyperplaneSet>) -> Vec<HyperplaneSet> {
    sets.sort_by_key(HyperplaneSet::len);
    let mut kept: Vec<HyperplaneSet> = Vec::new();
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(&s)) {
            kept.push(s);
        }
    }
    kept
}

/// The ideal generated by the products over all minimal covers.
pub fn h_product_ideal(e: &Embedding) -> Result<Ideal, ArrangementError> {
    let gens = minimal_covers(e)
        .iter()
        .map(|s| set_product(s, e.host()))
        .collect();
    Ok(Ideal::new(e.arrangement().ring().clone(), gens)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arrangements::{canonical_embedding, vanishing_ideal, SubspaceArrangement};
    use crate::exact::LinearForm;
    use crate::poly::{ideal_compare, Containment, Ring};

    fn lf(c: &[i64]) -> LinearForm {
        LinearForm::from_ints(c)
    }

    fn ideal(n: usize, gens: &[&str]) -> Ideal {
        Ideal::parse(Ring::standard(n), gens).unwrap()
    }

    fn equal(a: &Ideal, b: &Ideal) -> bool {
        ideal_compare(a, b).unwrap() == Containment::Equal
    }

    /// Brute force over all subsets of host hyperplanes.
    fn covers_oracle(e: &Embedding) -> Vec<HyperplaneSet> {
        let p = e.host().len();
        let covering: Vec<HyperplaneSet> = (0u32..1 << p)
            .map(|mask| HyperplaneSet::from_indices((0..p).filter(|i| mask & (1 << i) != 0)))
            .filter(|s| e.hsets().iter().all(|h| h.intersects(s)))
            .collect();
        let mut minimal: Vec<HyperplaneSet> = covering
            .iter()
            .filter(|s| !covering.iter().any(|t| t != *s && t.is_subset(s)))
            .cloned()
            .collect();
        minimal.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.iter().cmp(b.iter())));
        minimal
    }

    fn example_planes() -> SubspaceArrangement {
        SubspaceArrangement::standard(3, vec![vec![lf(&[1, -1, 0])], vec![lf(&[1, 0, -1])]]).unwrap()
    }

    fn braid3_host() -> HyperplaneArrangement {
        HyperplaneArrangement::new(3, [lf(&[1, -1, 0]), lf(&[1, 0, -1]), lf(&[0, 1, -1])]).unwrap()
    }

    #[test]
    fn flat_products() {
        let h = braid3_host();
        let e = Embedding::new(example_planes(), h.clone()).unwrap();
        let l = e.lattice();
        assert_eq!(flat_product(l.flat(l.bottom()), &h), Err(ArrangementError::BottomFlat));
        let atom = l.flat(l.atoms()[0]);
        assert_eq!(flat_product(atom, &h).unwrap().total_degree(), Some(1));
        let top = flat_product(l.flat(l.top()), &h).unwrap();
        assert_eq!(top, ideal(3, &["(x1 - x2)*(x1 - x3)*(x2 - x3)"]).generators()[0]);
    }

    #[test]
    fn example_with_two_planes() {
        let e = Embedding::new(example_planes(), braid3_host()).unwrap();
        let b = blocker_ideal(&e).unwrap();
        let f = h_product_ideal(&e).unwrap();
        let i = vanishing_ideal(e.arrangement()).unwrap();
        assert!(equal(&b, &ideal(3, &["(x1 - x2)*(x1 - x3)*(x2 - x3)"])));
        assert!(equal(&f, &ideal(3, &["(x1 - x2)*(x1 - x3)"])));
        assert!(equal(&f, &i));
        assert_eq!(ideal_compare(&b, &f).unwrap(), Containment::FirstInsideSecond);
        assert_eq!(minimal_covers(&e), vec![HyperplaneSet::from_indices([0, 1])]);
        assert_eq!(minimal_covers(&e), covers_oracle(&e));
    }

    #[test]
    fn kozlov_embeddings() {
        let first = SubspaceArrangement::standard(
            3,
            vec![vec![lf(&[1, -1, 0]), lf(&[1, 1, 0])], vec![lf(&[1, 0, -1]), lf(&[1, 0, 1])]],
        )
        .unwrap();
        let e = canonical_embedding(&first);
        let monomial = ideal(3, &["x1^2", "x1*x2", "x1*x3", "x2*x3"]);
        let b = blocker_ideal(&e).unwrap();
        let f = h_product_ideal(&e).unwrap();
        assert!(equal(&b, &monomial));
        assert!(equal(&f, &monomial));
        assert_eq!(minimal_covers(&e), covers_oracle(&e));

        let coords = SubspaceArrangement::standard(
            3,
            vec![vec![lf(&[1, 0, 0]), lf(&[0, 1, 0])], vec![lf(&[1, 0, 0]), lf(&[0, 0, 1])]],
        )
        .unwrap();
        let e = canonical_embedding(&coords);
        assert_eq!(
            minimal_covers(&e),
            vec![HyperplaneSet::from_indices([0]), HyperplaneSet::from_indices([1, 2])]
        );
        let target = ideal(3, &["x1", "x2*x3"]);
        assert!(equal(&blocker_ideal(&e).unwrap(), &target));
        assert!(equal(&h_product_ideal(&e).unwrap(), &target));
        assert!(equal(&vanishing_ideal(&coords).unwrap(), &target));
    }

    #[test]
    fn single_subspace_singleton_covers() {
        let a = SubspaceArrangement::standard(3, vec![vec![lf(&[1, 0, 0]), lf(&[0, 1, 0])]]).unwrap();
        let host = HyperplaneArrangement::new(3, [lf(&[1, 0, 0]), lf(&[0, 1, 0]), lf(&[1, 1, 0])]).unwrap();
        let e = Embedding::new(a, host).unwrap();
        let covers = minimal_covers(&e);
        assert_eq!(covers.len(), 3);
        assert!(covers.iter().all(|c| c.len() == 1));
    }

    #[test]
    fn hyperplane_arrangement_is_its_own_blocker() {
        let a = SubspaceArrangement::standard(
            3,
            vec![vec![lf(&[1, -1, 0])], vec![lf(&[1, 0, -1])], vec![lf(&[0, 1, -1])]],
        )
        .unwrap();
        let e = canonical_embedding(&a);
        let target = ideal(3, &["(x1 - x2)*(x1 - x3)*(x2 - x3)"]);
        assert!(equal(&blocker_ideal(&e).unwrap(), &target));
        assert!(equal(&h_product_ideal(&e).unwrap(), &target));
        assert!(equal(&vanishing_ideal(&a).unwrap(), &target));
    }
}
