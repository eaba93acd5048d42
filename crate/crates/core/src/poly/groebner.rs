//! Buchberger's algorithm with the coprime and chain criteria.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashSet};

use num_traits::{One, Zero};

use super::{limit, Monomial, MonomialOrder, PolyError, Polynomial};
use crate::exact::Scalar;

type Term = (Monomial, Scalar);

/// Reduced Gröbner basis: monic elements sorted by decreasing leading monomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    nvars: usize,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    sorted: Vec<Vec<Term>>,
}

impl GroebnerBasis {
    /// Wraps polynomials already known to form a reduced Gröbner basis.
    pub(crate) fn from_reduced(nvars: usize, order: MonomialOrder, elements: Vec<Polynomial>) -> Self {
        let mut sorted: Vec<Vec<Term>> = elements.iter().map(|p| p.sorted_terms(order)).collect();
        sorted.sort_by(|a, b| order.compare(&b[0].0, &a[0].0));
        let elements = sorted
            .iter()
            .map(|t| Polynomial::from_terms(nvars, t.iter().cloned()))
            .collect();
        GroebnerBasis {
            nvars,
            order,
            elements,
            sorted,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn leading_monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.sorted.iter().map(|t| &t[0].0)
    }

    /// Whether the basis generates the unit ideal.
    pub fn is_unit(&self) -> bool {
        self.leading_monomials().any(Monomial::is_one)
    }

    pub fn reduce(&self, f: &Polynomial) -> Result<Polynomial, PolyError> {
        normal_form(f, self)
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, PolyError> {
        Ok(self.reduce(f)?.is_zero())
    }

    /// Whether some leading monomial divides `m`.
    pub fn is_reducible(&self, m: &Monomial) -> bool {
        self.leading_monomials().any(|l| l.divides(m))
    }

    /// Checks that every S-polynomial reduces to zero and that the basis is
    /// reduced. Applies no criteria.
    pub fn audit(&self) -> bool {
        let n = self.sorted.len();
        for (i, g) in self.sorted.iter().enumerate() {
            if !g[0].1.is_one() {
                return false;
            }
            for (j, h) in self.sorted.iter().enumerate() {
                if i != j && g.iter().any(|(m, _)| h[0].0.divides(m)) {
                    return false;
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                let s = s_polynomial(&self.sorted[i], &self.sorted[j], self.order);
                let r = reduce_terms(s, &self.sorted, self.order, false)
                    .expect("no time limit during audit");
                if !r.is_empty() {
                    return false;
                }
            }
        }
        true
    }
}

/// Remainder of `f` on multivariate division by `g`; zero iff `f ∈ (g)`.
pub fn normal_form(f: &Polynomial, g: &GroebnerBasis) -> Result<Polynomial, PolyError> {
    f.check_ring(g.nvars)?;
    let r = reduce_terms(f.sorted_terms(g.order), &g.sorted, g.order, true)?;
    Ok(Polynomial::from_terms(g.nvars, r))
}

/// Reduced Gröbner basis of the ideal generated by `gens`.
pub fn buchberger(gens: &[Polynomial], order: MonomialOrder) -> Result<GroebnerBasis, PolyError> {
    let Some(nvars) = gens.first().map(Polynomial::nvars) else {
        return Ok(GroebnerBasis::from_reduced(0, order, Vec::new()));
    };
    for g in gens {
        g.check_ring(nvars)?;
    }
    let inputs = preprocess(gens, order);
    let mut state = Buchberger::new(order);
    for f in inputs {
        limit::check()?;
        let r = reduce_terms(f, &state.basis, order, true)?;
        if !r.is_empty() {
            state.insert(make_monic(r));
        }
    }
    state.run()?;
    state.finish(nvars)
}

struct Buchberger {
    order: MonomialOrder,
    basis: Vec<Vec<Term>>,
    queue: BTreeSet<(u32, usize, usize)>,
    pending: HashSet<(usize, usize)>,
}

impl Buchberger {
    fn new(order: MonomialOrder) -> Self {
        Buchberger {
            order,
            basis: Vec::new(),
            queue: BTreeSet::new(),
            pending: HashSet::new(),
        }
    }

    fn insert(&mut self, g: Vec<Term>) {
        let j = self.basis.len();
        for i in 0..j {
            let deg = self.basis[i][0].0.lcm(&g[0].0).degree();
            self.queue.insert((deg, j, i));
            self.pending.insert((i, j));
        }
        self.basis.push(g);
    }

    fn run(&mut self) -> Result<(), PolyError> {
        while let Some((_, j, i)) = self.queue.pop_first() {
            limit::check()?;
            self.pending.remove(&(i, j));
            let (li, lj) = (&self.basis[i][0].0, &self.basis[j][0].0);
            if li.is_coprime(lj) {
                continue;
            }
            if self.chain_criterion(i, j) {
                continue;
            }
            let s = s_polynomial(&self.basis[i], &self.basis[j], self.order);
            let r = reduce_terms(s, &self.basis, self.order, true)?;
            if !r.is_empty() {
                self.insert(make_monic(r));
            }
        }
        Ok(())
    }

    fn chain_criterion(&self, i: usize, j: usize) -> bool {
        let lcm = self.basis[i][0].0.lcm(&self.basis[j][0].0);
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        (0..self.basis.len()).any(|k| {
            k != i
                && k != j
                && self.basis[k][0].0.divides(&lcm)
                && !self.pending.contains(&key(i, k))
                && !self.pending.contains(&key(j, k))
        })
    }

    fn finish(self, nvars: usize) -> Result<GroebnerBasis, PolyError> {
        let order = self.order;
        // Minimal basis: drop elements whose leading monomial is divisible by
        // another's; among equal leading monomials keep the first.
        let lms: Vec<&Monomial> = self.basis.iter().map(|g| &g[0].0).collect();
        let keep: Vec<usize> = (0..lms.len())
            .filter(|&i| {
                !(0..lms.len()).any(|k| {
                    k != i && lms[k].divides(lms[i]) && (lms[k] != lms[i] || k < i)
                })
            })
            .collect();
        let minimal: Vec<Vec<Term>> = keep.iter().map(|&i| self.basis[i].clone()).collect();
        let mut reduced = Vec::with_capacity(minimal.len());
        for (i, g) in minimal.iter().enumerate() {
            let others: Vec<Vec<Term>> = minimal
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, h)| h.clone())
                .collect();
            let head = g[0].clone();
            let tail = reduce_terms(g[1..].to_vec(), &others, order, true)?;
            let mut terms = vec![head];
            terms.extend(tail);
            reduced.push(Polynomial::from_terms(nvars, terms));
        }
        Ok(GroebnerBasis::from_reduced(nvars, order, reduced))
    }
}

fn make_monic(mut terms: Vec<Term>) -> Vec<Term> {
    let lc = terms[0].1.clone();
    if !lc.is_one() {
        let inv = lc.recip();
        for (_, c) in terms.iter_mut() {
            *c *= &inv;
        }
    }
    terms
}

/// Drops zeros and duplicates; for homogeneous input also replaces the
/// generators of each degree by an echelon basis of their span.
fn preprocess(gens: &[Polynomial], order: MonomialOrder) -> Vec<Vec<Term>> {
    let nonzero: Vec<&Polynomial> = gens.iter().filter(|g| !g.is_zero()).collect();
    let mut out: Vec<Vec<Term>> = if nonzero.iter().all(|g| g.is_homogeneous()) {
        let mut by_degree: BTreeMap<u32, Vec<&Polynomial>> = BTreeMap::new();
        for g in nonzero {
            by_degree
                .entry(g.homogeneous_degree().expect("homogeneous"))
                .or_default()
                .push(g);
        }
        by_degree
            .into_values()
            .flat_map(|ps| echelon(&ps, order))
            .collect()
    } else {
        nonzero.iter().map(|g| make_monic(g.sorted_terms(order))).collect()
    };
    out.sort_by(|a, b| {
        order
            .compare(&a[0].0, &b[0].0)
            .then_with(|| a.len().cmp(&b.len()))
    });
    out.dedup();
    out
}

/// Echelon basis (monic, fully reduced against each other) of the span of
/// the given polynomials.
fn echelon(ps: &[&Polynomial], order: MonomialOrder) -> Vec<Vec<Term>> {
    let mut span = LinearSpan::new(order);
    for p in ps {
        span.insert(p);
    }
    span.rows().to_vec()
}

/// Incrementally maintained echelon basis of a space of polynomials.
pub(crate) struct LinearSpan {
    order: MonomialOrder,
    rows: Vec<Vec<Term>>,
}

impl LinearSpan {
    pub(crate) fn new(order: MonomialOrder) -> Self {
        LinearSpan {
            order,
            rows: Vec::new(),
        }
    }

    /// Adds `p`; returns whether it was independent of the current span.
    pub(crate) fn insert(&mut self, p: &Polynomial) -> bool {
        let v = reduce_linear(p.sorted_terms(self.order), &self.rows, self.order);
        if v.is_empty() {
            return false;
        }
        let v = make_monic(v);
        let one = Monomial::one(v[0].0.nvars());
        for r in self.rows.iter_mut() {
            let c = coefficient_of(r, &v[0].0);
            if !c.is_zero() {
                *r = sub_mul(r, &c, &one, &v, self.order);
            }
        }
        self.rows.push(v);
        true
    }

    pub(crate) fn rows(&self) -> &[Vec<Term>] {
        &self.rows
    }
}

fn coefficient_of(terms: &[Term], m: &Monomial) -> Scalar {
    terms
        .iter()
        .find(|(k, _)| k == m)
        .map(|(_, c)| c.clone())
        .unwrap_or_else(Scalar::zero)
}

/// Linear reduction: eliminates every term equal to some row's leading monomial.
fn reduce_linear(mut v: Vec<Term>, rows: &[Vec<Term>], order: MonomialOrder) -> Vec<Term> {
    let one = match v.first() {
        Some((m, _)) => Monomial::one(m.nvars()),
        None => return v,
    };
    for r in rows {
        let c = coefficient_of(&v, &r[0].0);
        if !c.is_zero() {
            v = sub_mul(&v, &c, &one, r, order);
        }
    }
    v
}

fn s_polynomial(f: &[Term], g: &[Term], order: MonomialOrder) -> Vec<Term> {
    let lcm = f[0].0.lcm(&g[0].0);
    let mf = f[0].0.divide_into(&lcm).expect("lcm divisible");
    let mg = g[0].0.divide_into(&lcm).expect("lcm divisible");
    // f, g monic: S = mf*f - mg*g
    let scaled: Vec<Term> = f
        .iter()
        .map(|(m, c)| (m.mul(&mf), c / &f[0].1))
        .collect();
    sub_mul(&scaled, &(Scalar::one() / &g[0].1), &mg, g, order)
}

/// `f - c * m * g`, all term lists sorted decreasingly.
fn sub_mul(f: &[Term], c: &Scalar, m: &Monomial, g: &[Term], order: MonomialOrder) -> Vec<Term> {
    let mut out = Vec::with_capacity(f.len() + g.len());
    let mut a = f.iter().peekable();
    let mut b = g.iter().map(|(k, d)| (k.mul(m), d)).peekable();
    loop {
        match (a.peek(), b.peek()) {
            (None, None) => break,
            (Some(_), None) => out.push(a.next().expect("peeked").clone()),
            (None, Some(_)) => {
                let (k, d) = b.next().expect("peeked");
                out.push((k, -(c * d)));
            }
            (Some(x), Some(y)) => match order.compare(&x.0, &y.0) {
                Ordering::Greater => out.push(a.next().expect("peeked").clone()),
                Ordering::Less => {
                    let (k, d) = b.next().expect("peeked");
                    out.push((k, -(c * d)));
                }
                Ordering::Equal => {
                    let (k, cx) = a.next().expect("peeked");
                    let (_, d) = b.next().expect("peeked");
                    let v = cx - c * d;
                    if !v.is_zero() {
                        out.push((k.clone(), v));
                    }
                }
            },
        }
    }
    out
}

/// Full reduction of `f` by monic (or arbitrary) polynomials `basis`.
fn reduce_terms(
    f: Vec<Term>,
    basis: &[Vec<Term>],
    order: MonomialOrder,
    check_limit: bool,
) -> Result<Vec<Term>, PolyError> {
    let mut rem: Vec<Term> = Vec::new();
    let mut p = f;
    let mut start = 0;
    let mut steps = 0u32;
    while start < p.len() {
        steps = steps.wrapping_add(1);
        if check_limit && steps.is_multiple_of(128) {
            limit::check()?;
        }
        let (lm, lc) = &p[start];
        match basis.iter().find(|g| g[0].0.divides(lm)) {
            Some(g) => {
                let q = g[0].0.divide_into(lm).expect("divides");
                let c = lc / &g[0].1;
                p = sub_mul(&p[start..], &c, &q, g, order);
                start = 0;
            }
            None => {
                rem.push(p[start].clone());
                start += 1;
            }
        }
    }
    Ok(rem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Ring;

    fn gb(ring: &Ring, gens: &[&str]) -> GroebnerBasis {
        let ps: Vec<Polynomial> = gens.iter().map(|s| ring.parse(s).unwrap()).collect();
        buchberger(&ps, MonomialOrder::GrevLex).unwrap()
    }

    fn texts(ring: &Ring, g: &GroebnerBasis) -> Vec<String> {
        g.elements().iter().map(|p| ring.format(p)).collect()
    }

    #[test]
    fn monomial_generators_are_a_basis() {
        let r = Ring::standard(3);
        let g = gb(&r, &["x1", "x2"]);
        assert_eq!(texts(&r, &g), vec!["x1", "x2"]);
        let g = gb(&r, &["x1^2", "x1*x2", "x1*x3", "x2*x3"]);
        assert_eq!(texts(&r, &g), vec!["x1^2", "x1*x2", "x1*x3", "x2*x3"]);
        assert!(g.audit());
    }

    #[test]
    fn linear_generators_row_reduce() {
        let r = Ring::standard(3);
        let g = gb(&r, &["x1 - x2", "x1 + x2"]);
        assert_eq!(texts(&r, &g), vec!["x1", "x2"]);
    }

    #[test]
    fn empty_and_zero_input() {
        let g = buchberger(&[], MonomialOrder::GrevLex).unwrap();
        assert!(g.is_empty());
        let g = buchberger(&[Polynomial::zero(2)], MonomialOrder::GrevLex).unwrap();
        assert!(g.is_empty());
    }

    #[test]
    fn normal_form_examples() {
        let r = Ring::standard(3);
        let g = gb(&r, &["x1"]);
        assert!(normal_form(&r.parse("x1*x2").unwrap(), &g).unwrap().is_zero());

        let g = gb(&r, &["x1^2", "x1*x2", "x1*x3", "x2*x3"]);
        let nf = normal_form(&r.parse("x2*x3 + x1").unwrap(), &g).unwrap();
        assert_eq!(nf, r.parse("x1").unwrap());

        let g = gb(&r, &["(x1-x2)*(x1-x3)"]);
        let f = r.parse("(x1-x2)*(x1-x3)*(x2-x3)").unwrap();
        assert!(normal_form(&f, &g).unwrap().is_zero());
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let g = gb(&Ring::standard(3), &["x1"]);
        let f = Polynomial::var(2, 0);
        assert!(matches!(normal_form(&f, &g), Err(PolyError::RingMismatch { .. })));
    }

    #[test]
    fn nonhomogeneous_basis_passes_audit() {
        let r = Ring::standard(3);
        let g = gb(&r, &["x1^2 - x2", "x1*x2 - x3", "x3^2 - x1"]);
        assert!(g.audit());
        for s in ["x1^2 - x2", "x1*x2 - x3", "x3^2 - x1"] {
            assert!(g.contains(&r.parse(s).unwrap()).unwrap());
        }
    }

    #[test]
    fn lex_basis_of_twisted_cubic() {
        let r = Ring::new(["t", "x", "y", "z"]).unwrap();
        let ps: Vec<Polynomial> = ["x - t", "y - t^2", "z - t^3"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let g = buchberger(&ps, MonomialOrder::Lex).unwrap();
        assert!(g.audit());
        let elim: Vec<String> = g
            .elements()
            .iter()
            .filter(|p| !p.involves(0))
            .map(|p| r.format_in(p, MonomialOrder::Lex))
            .collect();
        assert_eq!(elim, vec!["x^2 - y", "x*y - z", "x*z - y^2", "y^3 - z^2"]);
    }

    #[test]
    fn time_limit_interrupts() {
        let r = Ring::standard(4);
        let ps: Vec<Polynomial> = ["x1^3 - x2*x3*x4", "x2^3 - x1*x3*x4 + x1", "x3^3 - x1*x2 - x4^2"]
            .iter()
            .map(|s| r.parse(s).unwrap())
            .collect();
        let out = limit::with_time_limit(Some(std::time::Duration::ZERO), || {
            buchberger(&ps, MonomialOrder::GrevLex)
        });
        assert_eq!(out, Err(PolyError::TimeLimit));
    }
}
