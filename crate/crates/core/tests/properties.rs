//! Property tests for the invariants of each layer.

use std::collections::BTreeSet;

use num_traits::Zero;
use plgen::arrangements::{
    blocker_ideal, canonical_embedding, enlarge_embedding, h_product_ideal, pl_check, pl_check_embedding,
    vanishing_ideal, Embedding, PlOptions, SubspaceArrangement,
};
use plgen::exact::{
    int, intersect_spans, kernel_basis, normalize_form, rank, ratio, rref, span_basis, span_includes,
    LinearForm, RationalMatrix,
};
use plgen::families::{
    blocks_family, braid_arrangement, f_pi_ideal, hook, orbit_family, partitions_of_shape, polygraph,
};
use plgen::lattice::{build_lattice, Antichain, FlatId, HyperplaneArrangement, IntersectionLattice};
use plgen::poly::{
    buchberger, hilbert_function, ideal_compare, intersect_ideals, Containment, Ideal, Monomial, MonomialOrder,
    Polynomial, Ring,
};
use proptest::prelude::*;

fn form_strategy(n: usize) -> impl Strategy<Value = LinearForm> {
    prop::collection::vec(-3i64..=3, n).prop_map(|c| LinearForm::from_ints(&c))
}

fn nonzero_form(n: usize) -> impl Strategy<Value = LinearForm> {
    form_strategy(n).prop_filter("nonzero", |f| !f.is_zero())
}

fn forms(n: usize, max: usize) -> impl Strategy<Value = Vec<LinearForm>> {
    prop::collection::vec(form_strategy(n), 0..=max)
}

fn matrix() -> impl Strategy<Value = RationalMatrix> {
    (1usize..=5, 0usize..=4).prop_flat_map(|(ncols, nrows)| {
        prop::collection::vec(prop::collection::vec(-4i64..=4, ncols), nrows).prop_map(move |rows| {
            let rows: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
            RationalMatrix::from_ints(&rows, ncols).expect("rectangular")
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_plus_nullity(m in matrix()) {
        let kernel = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + kernel.len(), m.ncols());
        for v in &kernel {
            prop_assert!(m.apply(v).iter().all(Zero::is_zero));
        }
        let r = rref(&m);
        prop_assert_eq!(r.rank, r.pivots.len());
    }

    #[test]
    fn span_intersection_laws(a in forms(4, 3), b in forms(4, 3)) {
        let ab = intersect_spans(&a, &b);
        let ba = intersect_spans(&b, &a);
        prop_assert_eq!(&ab, &ba);
        prop_assert!(span_includes(&a, &ab, 4));
        prop_assert!(span_includes(&b, &ab, 4));
        prop_assert_eq!(intersect_spans(&a, &a), span_basis(&a, 4));
        // dim(A ∩ B) = dim A + dim B - dim(A + B)
        let sum: Vec<LinearForm> = a.iter().chain(&b).cloned().collect();
        let (da, db, ds) = (span_basis(&a, 4).len(), span_basis(&b, 4).len(), span_basis(&sum, 4).len());
        prop_assert_eq!(ab.len() + ds, da + db);
    }

    #[test]
    fn normalization_ignores_scaling(f in nonzero_form(4), num in 1i64..=7, den in 1i64..=7, neg in any::<bool>()) {
        let c = if neg { ratio(-num, den) } else { ratio(num, den) };
        let g = normalize_form(&f).unwrap();
        prop_assert!(g.is_normalized());
        prop_assert_eq!(normalize_form(&f.scaled(&c)).unwrap(), g);
    }
}

fn poly_strategy(n: usize) -> impl Strategy<Value = Polynomial> {
    prop::collection::vec((prop::collection::vec(0u16..=2, n), -3i64..=3), 1..=3).prop_map(move |terms| {
        Polynomial::from_terms(n, terms.into_iter().map(|(e, c)| (Monomial::from_exps(&e), int(c))))
    })
}

fn ideal_strategy(n: usize) -> impl Strategy<Value = Ideal> {
    prop::collection::vec(poly_strategy(n), 1..=3).prop_map(move |g| Ideal::new(Ring::standard(n), g).unwrap())
}

fn homogeneous_ideal(n: usize) -> impl Strategy<Value = Ideal> {
    let product = prop::collection::vec(form_strategy(n), 1..=2)
        .prop_map(move |fs| Polynomial::product_of_forms(n, &fs));
    prop::collection::vec(product, 1..=3).prop_map(move |g| Ideal::new(Ring::standard(n), g).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn groebner_bases_pass_audit(i in ideal_strategy(3)) {
        for order in [MonomialOrder::GrevLex, MonomialOrder::Lex, MonomialOrder::Elimination { block: 1 }] {
            let gb = buchberger(i.generators(), order).unwrap();
            prop_assert!(gb.audit());
            for g in i.generators() {
                prop_assert!(gb.contains(g).unwrap());
            }
        }
    }

    #[test]
    fn intersection_agrees_with_membership(
        i in homogeneous_ideal(3),
        j in homogeneous_ideal(3),
        samples in prop::collection::vec(prop::collection::vec(form_strategy(3), 1..=4), 8),
    ) {
        let both = intersect_ideals(&i, &j).unwrap();
        prop_assert!(i.contains_ideal(&both).unwrap());
        prop_assert!(j.contains_ideal(&both).unwrap());
        let gi = &i.generators()[0];
        let gj = &j.generators()[0];
        for (k, fs) in samples.iter().enumerate() {
            let base = Polynomial::product_of_forms(3, fs);
            let f = if k % 2 == 0 { &(gi * gj) * &base } else { base };
            let expected = i.contains(&f).unwrap() && j.contains(&f).unwrap();
            prop_assert_eq!(both.contains(&f).unwrap(), expected);
        }
    }

    #[test]
    fn hilbert_function_matches_standard_monomials(
        n in 1usize..=4,
        exps in prop::collection::vec(prop::collection::vec(0u16..=3, 4), 1..=4),
    ) {
        let gens: Vec<Monomial> = exps.iter().map(|e| Monomial::from_exps(&e[..n])).collect();
        let ideal = Ideal::new(
            Ring::standard(n),
            gens.iter().map(|m| Polynomial::monomial(m.clone(), int(1))).collect(),
        ).unwrap();
        for t in 0..=6 {
            let brute = Monomial::all_of_degree(n, t)
                .iter()
                .filter(|m| !gens.iter().any(|g| g.divides(m)))
                .count() as u64;
            prop_assert_eq!(hilbert_function(&ideal, t).unwrap(), brute);
        }
    }

    #[test]
    fn hilbert_function_matches_linear_algebra(i in homogeneous_ideal(3), t in 0u32..=4) {
        // dim I_t = rank of all products (monomial of degree t - deg g) * g
        let monos = Monomial::all_of_degree(3, t);
        let mut rows: Vec<Vec<plgen::exact::Scalar>> = Vec::new();
        for g in i.generators() {
            let d = g.homogeneous_degree().unwrap();
            if d > t {
                continue;
            }
            for m in Monomial::all_of_degree(3, t - d) {
                let p = g.mul_monomial(&m);
                rows.push(monos.iter().map(|x| p.coefficient(x)).collect());
            }
        }
        let r = if rows.is_empty() { 0 } else { rank(&RationalMatrix::new(rows, monos.len()).unwrap()) };
        prop_assert_eq!(hilbert_function(&i, t).unwrap(), (monos.len() - r) as u64);
    }

    #[test]
    fn comparison_is_consistent(i in ideal_strategy(2), j in ideal_strategy(2)) {
        prop_assert_eq!(ideal_compare(&i, &i).unwrap(), Containment::Equal);
        let ij = ideal_compare(&i, &j).unwrap();
        let ji = ideal_compare(&j, &i).unwrap();
        let mirrored = match ij {
            Containment::FirstInsideSecond => Containment::SecondInsideFirst,
            Containment::SecondInsideFirst => Containment::FirstInsideSecond,
            other => other,
        };
        prop_assert_eq!(ji, mirrored);
        let sum = i.sum(&j).unwrap();
        prop_assert!(matches!(
            ideal_compare(&i, &sum).unwrap(),
            Containment::Equal | Containment::FirstInsideSecond
        ));
    }
}

fn braid(n: usize) -> IntersectionLattice {
    build_lattice(&braid_arrangement(n).unwrap())
}

fn boolean(n: usize) -> IntersectionLattice {
    build_lattice(&HyperplaneArrangement::new(n, (0..n).map(|i| LinearForm::variable(n, i))).unwrap())
}

/// A random antichain `a` and an antichain `b` with `a ≤ b`, obtained by
/// moving each member of `a` up to a random flat above it.
fn comparable_pair(l: &IntersectionLattice, picks: &[usize], lifts: &[usize]) -> (Antichain, Antichain) {
    let candidates: Vec<FlatId> = picks.iter().map(|p| 1 + p % (l.len() - 1)).collect();
    let a = l.minimal_antichain(candidates).unwrap();
    let ups = a.members().iter().zip(lifts.iter().cycle()).map(|(&x, &k)| {
        let above: Vec<FlatId> = (0..l.len()).filter(|&y| l.leq(x, y)).collect();
        above[k % above.len()]
    });
    let b = l.minimal_antichain(ups).unwrap();
    (a, b)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn blocker_reverses_order(
        n in 2usize..=5,
        use_braid in any::<bool>(),
        picks in prop::collection::vec(any::<usize>(), 1..=5),
        lifts in prop::collection::vec(any::<usize>(), 1..=5),
    ) {
        let l = if use_braid { braid(n) } else { boolean(n) };
        let (a, b) = comparable_pair(&l, &picks, &lifts);
        prop_assert!(l.antichain_leq(&a, &b));
        let (sa, sb) = (l.blocker(&a), l.blocker(&b));
        prop_assert!(l.antichain(sa.members().iter().copied()).is_ok());
        prop_assert!(!sa.contains(l.bottom()));
        prop_assert!(l.antichain_leq(&sb, &sa));
        let double = l.blocker(&sa);
        prop_assert!(l.antichain_leq(&double, &a));
        prop_assert_eq!(l.blocker(&double), sa);
        if !use_braid {
            prop_assert_eq!(double, a);
        }
    }
}

#[test]
fn orbit_antichains_of_pi_6_satisfy_blocker_laws() {
    let l = braid(6);
    let mut shapes: Vec<Vec<usize>> = plgen::families::all_partitions(6).iter().map(|p| p.shape()).collect();
    shapes.sort();
    shapes.dedup();
    for s in shapes.iter().filter(|s| s.len() < 6) {
        let parts = partitions_of_shape(s, 6).unwrap();
        let a = plgen::families::partition_antichain(&parts, &l).unwrap();
        let star = l.blocker(&a);
        let double = l.blocker(&star);
        assert!(l.antichain_leq(&double, &a), "{s:?}");
        assert_eq!(l.blocker(&double), star, "{s:?}");
    }
}

#[test]
fn boolean_lattices_are_blocker_involutive() {
    for n in 1..=4 {
        let l = boolean(n);
        let k = l.len() - 1;
        for mask in 1u64..(1 << k) {
            let members = (0..k).filter(|i| mask & (1 << i) != 0).map(|i| i + 1);
            if let Ok(a) = l.antichain(members) {
                assert_eq!(l.double_blocker(&a), a);
            }
        }
    }
}

fn subspace(n: usize) -> impl Strategy<Value = Vec<LinearForm>> {
    (1..n).prop_flat_map(move |c| prop::collection::vec(nonzero_form(n), c))
}

fn arrangement(max_subspaces: usize) -> impl Strategy<Value = SubspaceArrangement> {
    (3usize..=4)
        .prop_flat_map(move |n| prop::collection::vec(subspace(n), 2..=max_subspaces).prop_map(move |s| (n, s)))
        .prop_filter_map("valid arrangement", |(n, s)| SubspaceArrangement::standard(n, s).ok())
}

/// `p` vanishes on the subspace cut out by `forms`.
fn vanishes_on(p: &Polynomial, forms: &[LinearForm]) -> bool {
    let ideal = Ideal::new(
        Ring::standard(p.nvars()),
        forms.iter().map(Polynomial::from_linear).collect(),
    )
    .unwrap();
    ideal.contains(p).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn pairs_of_subspaces_are_pl_generated(
        n in 2usize..=5,
        seed in prop::collection::vec(prop::collection::vec(-2i64..=2, 5), 2..=8),
        split in 1usize..=4,
    ) {
        let rows: Vec<LinearForm> = seed.iter().map(|r| LinearForm::from_ints(&r[..n])).filter(|f| !f.is_zero()).collect();
        let k = split.min(rows.len().saturating_sub(1)).max(1);
        prop_assume!(rows.len() >= 2);
        let Ok(a) = SubspaceArrangement::standard(n, vec![rows[..k].to_vec(), rows[k..].to_vec()]) else {
            return Ok(());
        };
        prop_assert!(pl_check(&a).unwrap().verdict);
    }

    #[test]
    fn product_ideals_are_nested(a in arrangement(3)) {
        let e = canonical_embedding(&a);
        let big = enlarge_embedding(&e).unwrap();
        for emb in [&e, &big] {
            let b = blocker_ideal(emb).unwrap();
            let f = h_product_ideal(emb).unwrap();
            let i = vanishing_ideal(&a).unwrap();
            prop_assert!(f.contains_ideal(&b).unwrap());
            prop_assert!(i.contains_ideal(&f).unwrap());
            for g in f.generators() {
                for forms in a.subspaces() {
                    prop_assert!(vanishes_on(g, forms));
                }
            }
        }
    }

    #[test]
    fn enlargement_only_adds_and_is_idempotent(a in arrangement(4)) {
        let e = canonical_embedding(&a);
        let big = enlarge_embedding(&e).unwrap();
        prop_assert_eq!(&big.host().forms()[..e.host().len()], e.host().forms());
        let again = enlarge_embedding(&big).unwrap();
        prop_assert_eq!(again.host(), big.host());
    }

    #[test]
    fn verdict_is_independent_of_the_embedding(a in arrangement(3), extra in prop::collection::vec(nonzero_form(4), 0..=2)) {
        let n = a.dim();
        let canonical = pl_check(&a).unwrap();
        // a different host: reduced echelon bases of the subspaces plus some extra hyperplanes
        let host_forms = a
            .subspaces()
            .iter()
            .flat_map(|s| span_basis(s, n))
            .chain(extra.iter().map(|f| LinearForm::new(f.coeffs()[..n].to_vec())).filter(|f| !f.is_zero()));
        let host = HyperplaneArrangement::new(n, host_forms).unwrap();
        let other = Embedding::new(a.clone(), host).unwrap();
        let cert = pl_check_embedding(&other, PlOptions::default()).unwrap();
        prop_assert_eq!(cert.verdict, canonical.verdict);
        prop_assert_eq!(ideal_compare(&cert.product_ideal, &canonical.product_ideal).unwrap(), Containment::Equal);
    }

    #[test]
    fn hyperplane_arrangements_have_one_generator(forms in prop::collection::vec(nonzero_form(3), 1..=4)) {
        let h = HyperplaneArrangement::new(3, forms).unwrap();
        let a = SubspaceArrangement::standard(3, h.forms().iter().map(|f| vec![f.clone()]).collect()).unwrap();
        let e = canonical_embedding(&a);
        let product = Ideal::new(Ring::standard(3), vec![Polynomial::product_of_forms(3, h.forms())]).unwrap();
        for ideal in [blocker_ideal(&e).unwrap(), h_product_ideal(&e).unwrap(), vanishing_ideal(&a).unwrap()] {
            prop_assert_eq!(ideal_compare(&ideal, &product).unwrap(), Containment::Equal);
        }
    }
}

#[test]
fn orbit_sizes_match_multinomials() {
    // n! / (prod parts! * prod multiplicities!)
    let cases: &[(&[usize], usize)] = &[
        (&[4, 2], 15),
        (&[3, 3], 10),
        (&[3, 2, 1], 60),
        (&[2, 2, 2], 15),
        (&[2, 2, 1, 1], 45),
        (&[5, 1], 6),
        (&[4, 1, 1], 15),
        (&[3, 1, 1, 1], 20),
    ];
    for (shape, count) in cases {
        let fam = orbit_family(&[shape.to_vec()], 6).unwrap();
        assert_eq!(fam.arrangement().len(), *count, "{shape:?}");
    }
}

#[test]
fn hooks_and_unions_up_to_small_n() {
    for n in 2..=4 {
        for m in 2..=n {
            let hooks = orbit_family(&[hook(m, n)], n).unwrap();
            let gens = plgen::families::partitions_with_blocks(n, m - 1);
            let i = vanishing_ideal(hooks.arrangement()).unwrap();
            assert_eq!(ideal_compare(&i, &f_pi_ideal(&gens, n)).unwrap(), Containment::Equal);

            let union = blocks_family(n, m - 1).unwrap();
            let gens = partitions_of_shape(&hook(m, n), n).unwrap();
            let i = vanishing_ideal(union.arrangement()).unwrap();
            assert_eq!(ideal_compare(&i, &f_pi_ideal(&gens, n)).unwrap(), Containment::Equal);
        }
    }
}

#[test]
fn polygraph_blockers_up_to_five_variables() {
    for n in 1..=4 {
        for m in 1..=(5 - n) {
            let p = polygraph(n, m).unwrap();
            let q = Ideal::new(p.arrangement().ring().clone(), p.q.clone()).unwrap();
            let b = blocker_ideal(&p.embedding).unwrap();
            let i = vanishing_ideal(p.arrangement()).unwrap();
            assert_eq!(ideal_compare(&b, &i).unwrap(), Containment::Equal, "({n}, {m})");
            assert_eq!(ideal_compare(&q, &i).unwrap(), Containment::Equal, "({n}, {m})");
            let l = p.embedding.lattice();
            let a = p.embedding.antichain();
            assert_eq!(l.double_blocker(&a), a, "({n}, {m})");
            // the blocker consists of the m flats Q ∪ {p_i}
            assert_eq!(l.blocker(&a).len(), m);
        }
    }
}

#[test]
fn many_general_points_are_not_pl_generated() {
    let points = plgen::families::point_preset("general7").unwrap();
    let cert = pl_check(&plgen::families::p2_points(&points).unwrap()).unwrap();
    assert!(!cert.verdict);
    // the least product degree is ceil(7/2) = 4 while the ideal has cubics
    let degrees: BTreeSet<u32> = cert.product_generators.iter().filter_map(Polynomial::total_degree).collect();
    assert_eq!(degrees.first(), Some(&4));
    assert_eq!(cert.vanishing_ideal.min_degree().unwrap(), Some(3));
}
