use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex};

use super::groebner::{buchberger, GroebnerBasis, LinearSpan};
use super::{Monomial, MonomialOrder, PolyError, Polynomial, Ring};

/// An ideal given by generators, with reduced Gröbner bases cached per order.
pub struct Ideal {
    ring: Ring,
    generators: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<GroebnerBasis>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        Ideal {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            cache: Mutex::new(self.cache.lock().expect("cache lock").clone()),
        }
    }
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.generators.iter().map(|g| self.ring.format(g)).collect();
        f.debug_struct("Ideal")
            .field("ring", &self.ring.to_string())
            .field("generators", &gens)
            .finish()
    }
}

impl Ideal {
    pub fn new(ring: Ring, generators: Vec<Polynomial>) -> Result<Ideal, PolyError> {
        for g in &generators {
            g.check_ring(ring.nvars())?;
        }
        Ok(Ideal {
            ring,
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn zero(ring: Ring) -> Ideal {
        Ideal::new(ring, Vec::new()).expect("no generators")
    }

    /// Parses each generator with the ring's variable names.
    pub fn parse(ring: Ring, generators: &[&str]) -> Result<Ideal, PolyError> {
        let gens = generators
            .iter()
            .map(|s| ring.parse(s))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(ring, gens)
    }

    pub(crate) fn with_basis(ring: Ring, gb: GroebnerBasis) -> Ideal {
        let ideal = Ideal::new(ring, gb.elements().to_vec()).expect("same ring");
        ideal
            .cache
            .lock()
            .expect("cache lock")
            .insert(gb.order(), Arc::new(gb));
        ideal
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    /// Reduced Gröbner basis in graded reverse lexicographic order.
    pub fn groebner(&self) -> Result<Arc<GroebnerBasis>, PolyError> {
        self.groebner_in(MonomialOrder::GrevLex)
    }

    pub fn groebner_in(&self, order: MonomialOrder) -> Result<Arc<GroebnerBasis>, PolyError> {
        if let Some(gb) = self.cache.lock().expect("cache lock").get(&order) {
            return Ok(Arc::clone(gb));
        }
        let gb = if self.generators.is_empty() {
            GroebnerBasis::from_reduced(self.ring.nvars(), order, Vec::new())
        } else {
            buchberger(&self.generators, order)?
        };
        // A concurrent writer may have inserted the same basis meanwhile;
        // either copy is valid, keep the first.
        let mut cache = self.cache.lock().expect("cache lock");
        Ok(Arc::clone(cache.entry(order).or_insert_with(|| Arc::new(gb))))
    }

    pub fn contains(&self, f: &Polynomial) -> Result<bool, PolyError> {
        f.check_ring(self.ring.nvars())?;
        self.groebner()?.contains(f)
    }

    /// Whether `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool, PolyError> {
        self.check_same_ring(other)?;
        let gb = self.groebner()?;
        for g in &other.generators {
            if !gb.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// First generator of `other` not in `self`.
    pub fn first_non_member<'a>(&self, other: &'a Ideal) -> Result<Option<&'a Polynomial>, PolyError> {
        self.check_same_ring(other)?;
        let gb = self.groebner()?;
        for g in &other.generators {
            if !gb.contains(g)? {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }

    pub fn check_same_ring(&self, other: &Ideal) -> Result<(), PolyError> {
        if self.ring != other.ring {
            return Err(PolyError::RingMismatch {
                expected: self.ring.nvars(),
                found: other.ring.nvars(),
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal, PolyError> {
        self.check_same_ring(other)?;
        let mut gens = self.generators.clone();
        gens.extend(other.generators.iter().cloned());
        Ideal::new(self.ring.clone(), gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal, PolyError> {
        self.check_same_ring(other)?;
        let gens = self
            .generators
            .iter()
            .flat_map(|a| other.generators.iter().map(move |b| a * b))
            .collect();
        Ideal::new(self.ring.clone(), gens)
    }

    /// Smallest degree of a nonzero element of a homogeneous ideal.
    pub fn min_degree(&self) -> Result<Option<u32>, PolyError> {
        if !self.is_homogeneous() {
            return Err(PolyError::NonHomogeneous);
        }
        Ok(self
            .generators
            .iter()
            .filter_map(Polynomial::homogeneous_degree)
            .min())
    }

    /// A minimal homogeneous generating set chosen among the given
    /// generators, in increasing degree.
    pub fn minimal_generators(&self) -> Result<Vec<Polynomial>, PolyError> {
        if !self.is_homogeneous() {
            return Err(PolyError::NonHomogeneous);
        }
        let mut by_degree: BTreeMap<u32, Vec<&Polynomial>> = BTreeMap::new();
        for g in &self.generators {
            by_degree
                .entry(g.homogeneous_degree().expect("nonzero homogeneous"))
                .or_default()
                .push(g);
        }
        let n = self.ring.nvars();
        let mut kept: Vec<Polynomial> = Vec::new();
        for (_, candidates) in by_degree {
            let lower = if kept.is_empty() {
                None
            } else {
                Some(buchberger(&kept, MonomialOrder::GrevLex)?)
            };
            let mut span = LinearSpan::new(MonomialOrder::GrevLex);
            let mut chosen = Vec::new();
            for g in candidates {
                let nf = match &lower {
                    Some(gb) => gb.reduce(g)?,
                    None => g.clone(),
                };
                debug_assert_eq!(nf.nvars(), n);
                if span.insert(&nf) {
                    chosen.push(g.clone());
                }
            }
            kept.extend(chosen);
        }
        Ok(kept)
    }

    /// Degree of every minimal generator, sorted.
    pub fn minimal_generator_degrees(&self) -> Result<Vec<u32>, PolyError> {
        Ok(self
            .minimal_generators()?
            .iter()
            .filter_map(Polynomial::homogeneous_degree)
            .collect())
    }
}

/// Outcome of comparing two ideals by containment.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Containment {
    Equal,
    /// The first ideal is strictly contained in the second.
    FirstInsideSecond,
    /// The second ideal is strictly contained in the first.
    SecondInsideFirst,
    Incomparable,
}

impl Containment {
    pub fn as_str(&self) -> &'static str {
        match self {
            Containment::Equal => "equal",
            Containment::FirstInsideSecond => "first-strictly-inside-second",
            Containment::SecondInsideFirst => "second-strictly-inside-first",
            Containment::Incomparable => "incomparable",
        }
    }
}

/// Decides the containment relation by reducing each generating set against
/// the other ideal's Gröbner basis.
pub fn ideal_compare(i: &Ideal, j: &Ideal) -> Result<Containment, PolyError> {
    let i_in_j = j.contains_ideal(i)?;
    let j_in_i = i.contains_ideal(j)?;
    Ok(match (i_in_j, j_in_i) {
        (true, true) => Containment::Equal,
        (true, false) => Containment::FirstInsideSecond,
        (false, true) => Containment::SecondInsideFirst,
        (false, false) => Containment::Incomparable,
    })
}

/// `I ∩ J`, computed by eliminating `t` from `t·I + (1 − t)·J`.
pub fn intersect_ideals(i: &Ideal, j: &Ideal) -> Result<Ideal, PolyError> {
    i.check_same_ring(j)?;
    let ring = i.ring.clone();
    if i.is_zero() || j.is_zero() {
        return Ok(Ideal::zero(ring));
    }
    let n = ring.nvars();
    let t = Polynomial::var(n + 1, 0);
    let one_minus_t = &Polynomial::one(n + 1) - &t;
    let gens: Vec<Polynomial> = i
        .generators
        .iter()
        .map(|f| &t * &f.extend_front(1))
        .chain(j.generators.iter().map(|g| &one_minus_t * &g.extend_front(1)))
        .collect();
    let gb = buchberger(&gens, MonomialOrder::Elimination { block: 1 })?;
    let eliminated: Vec<Polynomial> = gb
        .elements()
        .iter()
        .filter_map(|p| p.drop_front(1))
        .collect();
    // The t-free part of a reduced basis for the block order is a reduced
    // basis of the intersection for grevlex on the remaining variables.
    Ok(Ideal::with_basis(
        ring,
        GroebnerBasis::from_reduced(n, MonomialOrder::GrevLex, eliminated),
    ))
}

/// `dim_Q (R / I)_t` for a homogeneous ideal.
pub fn hilbert_function(i: &Ideal, t: u32) -> Result<u64, PolyError> {
    if !i.is_homogeneous() {
        return Err(PolyError::NonHomogeneous);
    }
    let gb = i.groebner()?;
    Ok(count_standard_monomials(&gb, i.ring.nvars(), t))
}

fn count_standard_monomials(gb: &GroebnerBasis, nvars: usize, t: u32) -> u64 {
    Monomial::all_of_degree(nvars, t)
        .iter()
        .filter(|m| !gb.is_reducible(m))
        .count() as u64
}
