//! Polygraph arrangements with one-dimensional fibres.

use super::FamilyError;
use crate::arrangements::{Embedding, SubspaceArrangement};
use crate::exact::LinearForm;
use crate::lattice::HyperplaneArrangement;
use crate::poly::{Polynomial, Ring};

/// The arrangement of all `W_f`, `f: [m] -> [n]`, in `Q[x1..xn, a1..am]`,
/// hosted by the hyperplanes `x_j - a_i`.
#[derive(Clone, Debug)]
pub struct Polygraph {
    pub n: usize,
    pub m: usize,
    /// The functions `f`, 0-based, in lexicographic order.
    pub functions: Vec<Vec<usize>>,
    pub embedding: Embedding,
    /// `q_i = prod_j (x_j - a_i)`.
    pub q: Vec<Polynomial>,
}

impl Polygraph {
    pub fn arrangement(&self) -> &SubspaceArrangement {
        self.embedding.arrangement()
    }
}

pub fn polygraph(n: usize, m: usize) -> Result<Polygraph, FamilyError> {
    if n == 0 || m == 0 {
        return Err(FamilyError::Parameter("polygraphs need n, m >= 1".into()));
    }
    let names: Vec<String> = (1..=n)
        .map(|j| format!("x{j}"))
        .chain((1..=m).map(|i| format!("a{i}")))
        .collect();
    let ring = Ring::new(names)?;
    let dim = n + m;
    // x_j - a_i with 0-based j < n, i < m
    let form = |j: usize, i: usize| {
        let mut c = vec![0i64; dim];
        c[j] = 1;
        c[n + i] = -1;
        LinearForm::from_ints(&c)
    };

    let mut functions = Vec::new();
    let mut f = vec![0usize; m];
    loop {
        functions.push(f.clone());
        let Some(k) = (0..m).rev().find(|&k| f[k] + 1 < n) else {
            break;
        };
        f[k] += 1;
        for v in &mut f[k + 1..] {
            *v = 0;
        }
    }
    let subspaces = functions
        .iter()
        .map(|f| f.iter().enumerate().map(|(i, &j)| form(j, i)).collect())
        .collect();
    let arrangement = SubspaceArrangement::new(ring, subspaces)?;
    let host = HyperplaneArrangement::new(dim, (0..m).flat_map(|i| (0..n).map(move |j| form(j, i))))?;
    let embedding = Embedding::new(arrangement, host)?;
    let q = (0..m)
        .map(|i| {
            let forms: Vec<LinearForm> = (0..n).map(|j| form(j, i)).collect();
            Polynomial::product_of_forms(dim, &forms)
        })
        .collect();
    Ok(Polygraph {
        n,
        m,
        functions,
        embedding,
        q,
    })
}
