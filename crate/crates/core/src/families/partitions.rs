//! Set partitions of `[n]`, the braid arrangement, and orbit arrangements.

use std::fmt;

use super::FamilyError;
use crate::arrangements::{Embedding, SubspaceArrangement};
use crate::exact::LinearForm;
use crate::lattice::{Antichain, FlatId, HyperplaneArrangement, HyperplaneSet, IntersectionLattice};
use crate::poly::{Ideal, Polynomial, Ring};

/// A set partition of `{0, ..., n-1}`, stored as a restricted growth string:
/// `labels[i]` is the block of `i`, blocks numbered by first appearance.
/// Displayed with 1-based elements, e.g. `12|34`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Partition {
    labels: Vec<usize>,
}

impl Partition {
    /// Builds a partition from blocks of 0-based elements.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Partition, FamilyError> {
        let mut owner = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(FamilyError::InvalidPartition("empty block".into()));
            }
            for &i in block {
                if i >= n || owner[i] != usize::MAX {
                    return Err(FamilyError::InvalidPartition(format!(
                        "element {} is out of range or repeated",
                        i + 1
                    )));
                }
                owner[i] = b;
            }
        }
        if owner.contains(&usize::MAX) {
            return Err(FamilyError::InvalidPartition("blocks do not cover [n]".into()));
        }
        Ok(Partition::relabel(&owner))
    }

    fn relabel(owner: &[usize]) -> Partition {
        let mut map: Vec<(usize, usize)> = Vec::new();
        let labels = owner
            .iter()
            .map(|&o| match map.iter().find(|(k, _)| *k == o) {
                Some(&(_, v)) => v,
                None => {
                    map.push((o, map.len()));
                    map.len() - 1
                }
            })
            .collect();
        Partition { labels }
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().max().map_or(0, |m| m + 1)
    }

    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (i, &b) in self.labels.iter().enumerate() {
            blocks[b].push(i);
        }
        blocks
    }

    /// Block sizes in non-increasing order.
    pub fn shape(&self) -> Vec<usize> {
        let mut s: Vec<usize> = self.blocks().iter().map(Vec::len).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    pub fn same_block(&self, i: usize, j: usize) -> bool {
        self.labels[i] == self.labels[j]
    }

    /// All blocks are singletons.
    pub fn is_discrete(&self) -> bool {
        self.num_blocks() == self.n()
    }

    /// Pairs `i < j` lying in a common block.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .filter(|&(i, j)| self.same_block(i, j))
            .collect()
    }

    /// Forms `x_{b_0} - x_{b_j}` for each block `b_0 < b_1 < ...`.
    pub fn subspace_forms(&self) -> Vec<LinearForm> {
        let n = self.n();
        self.blocks()
            .iter()
            .flat_map(|b| b[1..].iter().map(move |&j| difference(n, b[0], j)))
            .collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.n() >= 10 { "," } else { "" };
        let parts: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                b.iter()
                    .map(|i| (i + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(sep)
            })
            .collect();
        write!(f, "{}", parts.join("|"))
    }
}

/// The form `x_i - x_j` (0-based indices) in `n` variables.
fn difference(n: usize, i: usize, j: usize) -> LinearForm {
    let mut c = vec![0i64; n];
    c[i] = 1;
    c[j] = -1;
    LinearForm::from_ints(&c)
}

/// Every set partition of `[n]`, in lexicographic order of restricted growth strings.
pub fn all_partitions(n: usize) -> Vec<Partition> {
    fn go(labels: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Partition>) {
        if labels.len() == n {
            out.push(Partition {
                labels: labels.clone(),
            });
            return;
        }
        let limit = if labels.is_empty() { 0 } else { max + 1 };
        for b in 0..=limit {
            labels.push(b);
            go(labels, max.max(b), n, out);
            labels.pop();
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::with_capacity(n), 0, n, &mut out);
    out
}

/// Checks that `shape` lists positive parts summing to `n`, and sorts it.
pub fn validate_shape(shape: &[usize], n: usize) -> Result<Vec<usize>, FamilyError> {
    if shape.contains(&0) || shape.iter().sum::<usize>() != n {
        return Err(FamilyError::InvalidShape(format!("{shape:?} is not a partition of {n}")));
    }
    let mut s = shape.to_vec();
    s.sort_unstable_by(|a, b| b.cmp(a));
    Ok(s)
}

pub fn partitions_of_shape(shape: &[usize], n: usize) -> Result<Vec<Partition>, FamilyError> {
    let s = validate_shape(shape, n)?;
    Ok(all_partitions(n).into_iter().filter(|p| p.shape() == s).collect())
}

pub fn partitions_with_blocks(n: usize, blocks: usize) -> Vec<Partition> {
    all_partitions(n)
        .into_iter()
        .filter(|p| p.num_blocks() == blocks)
        .collect()
}

/// The hook shape `(m, 1, ..., 1)` of `n`.
pub fn hook(m: usize, n: usize) -> Vec<usize> {
    let mut s = vec![m];
    s.extend(std::iter::repeat_n(1, n - m));
    s
}

/// The hyperplanes `x_i - x_j`, `i < j`, in lexicographic order of `(i, j)`.
pub fn braid_arrangement(n: usize) -> Result<HyperplaneArrangement, FamilyError> {
    if n < 2 {
        return Err(FamilyError::Parameter(format!("braid arrangement needs n >= 2, got {n}")));
    }
    let forms = (0..n).flat_map(|i| (i + 1..n).map(move |j| difference(n, i, j)));
    Ok(HyperplaneArrangement::new(n, forms).expect("braid forms are nonzero"))
}

/// Flat of the lattice of the braid arrangement that corresponds to `p`.
pub fn partition_flat(p: &Partition, l: &IntersectionLattice) -> Result<FlatId, FamilyError> {
    let n = p.n();
    let h = l.host();
    let mut hs = HyperplaneSet::new();
    for (i, j) in p.pairs() {
        let idx = h
            .index_of(&difference(n, i, j))
            .ok_or_else(|| FamilyError::Parameter("lattice is not a braid lattice of matching size".into()))?;
        hs.insert(idx);
    }
    l.id_of(&hs)
        .ok_or_else(|| FamilyError::Parameter("lattice is not a braid lattice of matching size".into()))
}

/// `f_π`: the product of `x_i - x_j` over pairs in a common block. The
/// discrete partition gives the constant 1.
pub fn f_pi(p: &Partition) -> Polynomial {
    let n = p.n();
    let forms: Vec<LinearForm> = p.pairs().into_iter().map(|(i, j)| difference(n, i, j)).collect();
    Polynomial::product_of_forms(n, &forms)
}

/// The ideal generated by `f_π` over the given partitions.
pub fn f_pi_ideal(partitions: &[Partition], n: usize) -> Ideal {
    Ideal::new(Ring::standard(n), partitions.iter().map(f_pi).collect()).expect("standard ring")
}

/// An orbit arrangement, or a union of them, embedded in the braid arrangement.
#[derive(Clone, Debug)]
pub struct OrbitFamily {
    pub partitions: Vec<Partition>,
    pub embedding: Embedding,
}

impl OrbitFamily {
    pub fn arrangement(&self) -> &SubspaceArrangement {
        self.embedding.arrangement()
    }

    pub fn antichain(&self) -> Antichain {
        self.embedding.antichain()
    }
}

/// All subspaces of partitions whose shape is one of `shapes`.
pub fn orbit_family(shapes: &[Vec<usize>], n: usize) -> Result<OrbitFamily, FamilyError> {
    let mut wanted = Vec::new();
    for s in shapes {
        let s = validate_shape(s, n)?;
        if s.iter().all(|&p| p == 1) {
            return Err(FamilyError::InvalidShape(
                "the all-singletons shape gives the whole space".into(),
            ));
        }
        wanted.push(s);
    }
    let partitions: Vec<Partition> = all_partitions(n)
        .into_iter()
        .filter(|p| wanted.contains(&p.shape()))
        .collect();
    if partitions.is_empty() {
        return Err(FamilyError::InvalidShape("no shapes given".into()));
    }
    from_partitions(partitions, n)
}

/// The union of orbit arrangements over all partitions with `blocks` blocks.
pub fn blocks_family(n: usize, blocks: usize) -> Result<OrbitFamily, FamilyError> {
    if blocks == 0 || blocks >= n {
        return Err(FamilyError::Parameter(format!("need 1 <= blocks < n, got {blocks}")));
    }
    from_partitions(partitions_with_blocks(n, blocks), n)
}

fn from_partitions(partitions: Vec<Partition>, n: usize) -> Result<OrbitFamily, FamilyError> {
    let subspaces = partitions.iter().map(Partition::subspace_forms).collect();
    let arrangement = SubspaceArrangement::standard(n, subspaces)?;
    let embedding = Embedding::new(arrangement, braid_arrangement(n)?)?;
    Ok(OrbitFamily {
        partitions,
        embedding,
    })
}

/// Antichain of the flats of the given partitions.
pub fn partition_antichain(partitions: &[Partition], l: &IntersectionLattice) -> Result<Antichain, FamilyError> {
    let ids = partitions
        .iter()
        .map(|p| partition_flat(p, l))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(l.antichain(ids)?)
}

/// Describes an antichain of a braid lattice as the list of shapes occurring
/// in it, provided it is a union of complete orbits.
pub fn orbit_shapes(a: &Antichain, l: &IntersectionLattice, n: usize) -> Option<Vec<Vec<usize>>> {
    let all = all_partitions(n);
    let by_flat: Vec<(FlatId, &Partition)> = all
        .iter()
        .map(|p| (partition_flat(p, l).expect("braid lattice"), p))
        .collect();
    let members: Vec<&Partition> = a
        .members()
        .iter()
        .map(|&x| by_flat.iter().find(|(id, _)| *id == x).map(|(_, p)| *p))
        .collect::<Option<_>>()?;
    let mut shapes: Vec<Vec<usize>> = members.iter().map(|p| p.shape()).collect();
    shapes.sort();
    shapes.dedup();
    let orbit_total: usize = shapes
        .iter()
        .map(|s| all.iter().filter(|p| p.shape() == *s).count())
        .sum();
    (orbit_total == members.len()).then(|| {
        shapes.sort_by(|a, b| b.cmp(a));
        shapes
    })
}
