//! Exact rational scalars and the row-reduction toolkit built on them.
//!
//! Everything here works over the rationals with arbitrary precision; there
//! is no floating point anywhere in the crate.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

/// A rational number in lowest terms with positive denominator.
pub type Scalar = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExactError {
    #[error("not a hyperplane: the zero linear form")]
    NotAHyperplane,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("row {row} has length {found}, expected {expected}")]
    RaggedRow {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("invalid rational number `{0}`")]
    BadScalar(String),
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p`, `-p` or `p/q`.
pub fn parse_scalar(text: &str) -> Result<Scalar, ExactError> {
    let bad = || ExactError::BadScalar(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Scalar::new(num, den))
}

/// Formats a scalar as `p` or `p/q`.
pub fn format_scalar(s: &Scalar) -> String {
    if s.is_integer() {
        s.numer().to_string()
    } else {
        format!("{}/{}", s.numer(), s.denom())
    }
}

/// Coefficient vector of a linear form `c_1 x_1 + ... + c_n x_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct LinearForm {
    coeffs: Vec<Scalar>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<Scalar>) -> Self {
        LinearForm { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        LinearForm::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    /// The coordinate form `x_{index+1}` in `dim` variables.
    pub fn variable(dim: usize, index: usize) -> Self {
        let mut coeffs = vec![Scalar::zero(); dim];
        coeffs[index] = Scalar::one();
        LinearForm { coeffs }
    }

    pub fn dim(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Scalar> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn scaled(&self, c: &Scalar) -> LinearForm {
        LinearForm::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Evaluates the form at a point.
    pub fn eval(&self, point: &[Scalar]) -> Scalar {
        self.coeffs
            .iter()
            .zip(point)
            .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn is_normalized(&self) -> bool {
        self.coeffs
            .iter()
            .find(|c| !c.is_zero())
            .is_some_and(One::is_one)
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(format_scalar).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Scales `f` so that its first nonzero coefficient is 1.
pub fn normalize_form(f: &LinearForm) -> Result<LinearForm, ExactError> {
    let lead = f
        .coeffs
        .iter()
        .find(|c| !c.is_zero())
        .ok_or(ExactError::NotAHyperplane)?;
    let inv = lead.recip();
    Ok(f.scaled(&inv))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalMatrix {
    rows: Vec<Vec<Scalar>>,
    ncols: usize,
}

impl RationalMatrix {
    pub fn new(rows: Vec<Vec<Scalar>>, ncols: usize) -> Result<Self, ExactError> {
        for (i, r) in rows.iter().enumerate() {
            if r.len() != ncols {
                return Err(ExactError::RaggedRow {
                    row: i,
                    expected: ncols,
                    found: r.len(),
                });
            }
        }
        Ok(RationalMatrix { rows, ncols })
    }

    pub fn from_ints(rows: &[&[i64]], ncols: usize) -> Result<Self, ExactError> {
        RationalMatrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&c| int(c)).collect())
                .collect(),
            ncols,
        )
    }

    pub fn from_forms(forms: &[LinearForm], ncols: usize) -> Result<Self, ExactError> {
        RationalMatrix::new(forms.iter().map(|f| f.coeffs.clone()).collect(), ncols)
    }

    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        RationalMatrix {
            rows: vec![vec![Scalar::zero(); ncols]; nrows],
            ncols,
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = Scalar::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn into_rows(self) -> Vec<Vec<Scalar>> {
        self.rows
    }

    pub fn mul(&self, other: &RationalMatrix) -> Result<RationalMatrix, ExactError> {
        if self.ncols != other.nrows() {
            return Err(ExactError::DimensionMismatch {
                expected: self.ncols,
                found: other.nrows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                (0..other.ncols)
                    .map(|j| {
                        r.iter()
                            .zip(&other.rows)
                            .fold(Scalar::zero(), |acc, (a, row)| acc + a * &row[j])
                    })
                    .collect()
            })
            .collect();
        Ok(RationalMatrix {
            rows,
            ncols: other.ncols,
        })
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Scalar]) -> Vec<Scalar> {
        self.rows
            .iter()
            .map(|r| {
                r.iter()
                    .zip(v)
                    .fold(Scalar::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect()
    }
}

/// Reduced row echelon form together with its pivot data.
#[derive(Clone, Debug)]
pub struct Rref {
    /// Nonzero rows only, so `matrix.nrows() == rank`.
    pub matrix: RationalMatrix,
    pub pivots: Vec<usize>,
    pub rank: usize,
}

/// Row-reduces `m`, dropping zero rows.
pub fn rref(m: &RationalMatrix) -> Rref {
    rref_impl(m, None).0
}

/// Like [`rref`], but also returns `T` with `T * m` equal to the full
/// (zero rows kept) reduced matrix, whose first `rank` rows are the result.
pub fn rref_with_transform(m: &RationalMatrix) -> (Rref, RationalMatrix) {
    let (r, t) = rref_impl(m, Some(RationalMatrix::identity(m.nrows())));
    (r, t.expect("transform requested"))
}

fn rref_impl(m: &RationalMatrix, mut track: Option<RationalMatrix>) -> (Rref, Option<RationalMatrix>) {
    let mut rows = m.rows.clone();
    let nrows = rows.len();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..m.ncols {
        if r == nrows {
            break;
        }
        let Some(p) = (r..nrows).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        if let Some(t) = track.as_mut() {
            t.rows.swap(r, p);
        }
        let inv = rows[r][col].recip();
        if !inv.is_one() {
            for x in rows[r].iter_mut() {
                *x *= &inv;
            }
            if let Some(t) = track.as_mut() {
                for x in t.rows[r].iter_mut() {
                    *x *= &inv;
                }
            }
        }
        for i in 0..nrows {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let factor = rows[i][col].clone();
            let (pivot_row, row_i) = pick_two(&mut rows, r, i);
            for (a, b) in row_i.iter_mut().zip(pivot_row.iter()).skip(col) {
                if !b.is_zero() {
                    *a -= &factor * b;
                }
            }
            if let Some(t) = track.as_mut() {
                let (pivot_row, row_i) = pick_two(&mut t.rows, r, i);
                for (a, b) in row_i.iter_mut().zip(pivot_row.iter()) {
                    if !b.is_zero() {
                        *a -= &factor * b;
                    }
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    let rank = r;
    (
        Rref {
            matrix: RationalMatrix {
                rows,
                ncols: m.ncols,
            },
            pivots,
            rank,
        },
        track,
    )
}

fn pick_two<T>(v: &mut [T], a: usize, b: usize) -> (&T, &mut T) {
    assert_ne!(a, b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&lo[a], &mut hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&hi[0], &mut lo[b])
    }
}

pub fn rank(m: &RationalMatrix) -> usize {
    rref(m).rank
}

/// Basis of the right kernel `{ v : m v = 0 }`.
pub fn kernel_basis(m: &RationalMatrix) -> Vec<Vec<Scalar>> {
    let red = rref(m);
    let n = m.ncols;
    let mut is_pivot = vec![false; n];
    for &p in &red.pivots {
        is_pivot[p] = true;
    }
    (0..n)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Scalar::zero(); n];
            v[free] = Scalar::one();
            for (row, &p) in red.matrix.rows.iter().zip(&red.pivots) {
                v[p] = -row[free].clone();
            }
            v
        })
        .collect()
}

/// Reduced echelon basis of the span of `forms` in dimension `dim`.
pub fn span_basis(forms: &[LinearForm], dim: usize) -> Vec<LinearForm> {
    let m = RationalMatrix {
        rows: forms.iter().map(|f| f.coeffs.clone()).collect(),
        ncols: dim,
    };
    rref(&m)
        .matrix
        .rows
        .into_iter()
        .map(LinearForm::new)
        .collect()
}

pub fn span_rank(forms: &[LinearForm], dim: usize) -> usize {
    span_basis(forms, dim).len()
}

/// Whether `f` lies in the span of the echelon basis `basis` (as returned by
/// [`span_basis`]).
pub fn echelon_contains(basis: &[LinearForm], f: &LinearForm) -> bool {
    let mut v = f.coeffs.clone();
    for b in basis {
        let Some(p) = b.coeffs.iter().position(|c| !c.is_zero()) else {
            continue;
        };
        if v[p].is_zero() {
            continue;
        }
        let factor = v[p].clone();
        for (x, y) in v.iter_mut().zip(&b.coeffs) {
            if !y.is_zero() {
                *x -= &factor * y;
            }
        }
    }
    v.iter().all(Zero::is_zero)
}

pub fn span_contains(forms: &[LinearForm], f: &LinearForm, dim: usize) -> bool {
    echelon_contains(&span_basis(forms, dim), f)
}

/// Whether `span(inner) ⊆ span(outer)`.
pub fn span_includes(outer: &[LinearForm], inner: &[LinearForm], dim: usize) -> bool {
    let basis = span_basis(outer, dim);
    inner.iter().all(|f| echelon_contains(&basis, f))
}

/// Reduced echelon basis of `span(a) ∩ span(b)`.
pub fn intersect_spans(a: &[LinearForm], b: &[LinearForm]) -> Vec<LinearForm> {
    let Some(dim) = a.iter().chain(b).map(LinearForm::dim).next() else {
        return Vec::new();
    };
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    // Solve sum alpha_i a_i - sum beta_j b_j = 0; each solution gives a
    // common vector sum alpha_i a_i.
    let ncols = a.len() + b.len();
    let rows: Vec<Vec<Scalar>> = (0..dim)
        .map(|k| {
            a.iter()
                .map(|f| f.coeffs[k].clone())
                .chain(b.iter().map(|f| -f.coeffs[k].clone()))
                .collect()
        })
        .collect();
    let m = RationalMatrix { rows, ncols };
    let common: Vec<LinearForm> = kernel_basis(&m)
        .into_iter()
        .map(|sol| {
            let mut v = vec![Scalar::zero(); dim];
            for (alpha, f) in sol.iter().zip(a) {
                if alpha.is_zero() {
                    continue;
                }
                for (x, c) in v.iter_mut().zip(&f.coeffs) {
                    *x += alpha * c;
                }
            }
            LinearForm::new(v)
        })
        .collect();
    span_basis(&common, dim)
}

/// Basis of the linear forms vanishing at every given point.
pub fn annihilator(points: &[Vec<Scalar>], dim: usize) -> Vec<LinearForm> {
    let m = RationalMatrix {
        rows: points.to_vec(),
        ncols: dim,
    };
    let kernel: Vec<LinearForm> = kernel_basis(&m).into_iter().map(LinearForm::new).collect();
    span_basis(&kernel, dim)
}
