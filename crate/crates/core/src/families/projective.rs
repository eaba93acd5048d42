//! Point configurations in the projective plane and lines in projective
//! 3-space, together with the specific checks run on them.

use super::FamilyError;
use crate::arrangements::{pl_check, vanishing_ideal, SubspaceArrangement};
use crate::exact::{annihilator, int, rank, LinearForm, RationalMatrix, Scalar};
use crate::poly::{hilbert_function, ideal_compare, Containment, Ideal, Monomial, Polynomial, Ring};

use num_traits::Zero;

/// Homogeneous coordinates of a point, not all zero.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ProjectivePoint {
    coords: Vec<Scalar>,
}

impl ProjectivePoint {
    pub fn new(coords: Vec<Scalar>) -> Result<Self, FamilyError> {
        if coords.iter().all(Zero::is_zero) {
            return Err(FamilyError::Degenerate("a point needs a nonzero coordinate".into()));
        }
        Ok(ProjectivePoint { coords })
    }

    pub fn from_ints(coords: &[i64]) -> Result<Self, FamilyError> {
        ProjectivePoint::new(coords.iter().map(|&c| int(c)).collect())
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    /// Linear forms vanishing at the point (a basis of them).
    pub fn ideal_forms(&self) -> Vec<LinearForm> {
        annihilator(std::slice::from_ref(&self.coords), self.coords.len())
    }
}

fn matrix_rank(rows: Vec<Vec<Scalar>>, ncols: usize) -> usize {
    rank(&RationalMatrix::new(rows, ncols).expect("rows of equal length"))
}

/// The line through two points of the plane, as the cross product of their coordinates.
pub fn line_through(p: &ProjectivePoint, q: &ProjectivePoint) -> LinearForm {
    let (a, b) = (&p.coords, &q.coords);
    LinearForm::new(vec![
        &a[1] * &b[2] - &a[2] * &b[1],
        &a[2] * &b[0] - &a[0] * &b[2],
        &a[0] * &b[1] - &a[1] * &b[0],
    ])
}

fn check_plane_points(points: &[ProjectivePoint]) -> Result<(), FamilyError> {
    if points.is_empty() {
        return Err(FamilyError::Parameter("at least one point is required".into()));
    }
    for (i, p) in points.iter().enumerate() {
        if p.coords.len() != 3 {
            return Err(FamilyError::Parameter(format!("point {} does not have 3 coordinates", i + 1)));
        }
        for (j, q) in points[..i].iter().enumerate() {
            if matrix_rank(vec![p.coords.clone(), q.coords.clone()], 3) < 2 {
                return Err(FamilyError::Degenerate(format!("points {} and {} coincide", j + 1, i + 1)));
            }
        }
    }
    Ok(())
}

/// Points of the plane as lines through the origin of `Q^3`, in `Q[x1, x2, x3]`.
pub fn p2_points(points: &[ProjectivePoint]) -> Result<SubspaceArrangement, FamilyError> {
    check_plane_points(points)?;
    let subspaces = points.iter().map(ProjectivePoint::ideal_forms).collect();
    Ok(SubspaceArrangement::standard(3, subspaces)?)
}

/// No three of the points are collinear.
pub fn linearly_general(points: &[ProjectivePoint]) -> bool {
    let n = points.len();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let rows = vec![points[i].coords.clone(), points[j].coords.clone(), points[k].coords.clone()];
                if matrix_rank(rows, 3) < 3 {
                    return false;
                }
            }
        }
    }
    true
}

fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// The Hilbert function of the points equals `min(r, C(t+2, 2))` in every degree.
pub fn is_generic(points: &[ProjectivePoint]) -> Result<bool, FamilyError> {
    let a = p2_points(points)?;
    let i = vanishing_ideal(&a)?;
    let r = points.len() as u64;
    let mut t = 0u32;
    loop {
        let expected = r.min(binomial(u64::from(t) + 2, 2));
        if hilbert_function(&i, t)? != expected {
            return Ok(false);
        }
        // once the value reaches r it stays there
        if expected == r {
            return Ok(true);
        }
        t += 1;
    }
}

/// The four products of three lines through pairs of six linearly general
/// points: `L12·L34·L56`, `L12·L35·L46`, `L15·L26·L34`, `L13·L26·L45`.
pub fn six_point_cubics(points: &[ProjectivePoint]) -> Result<[Polynomial; 4], FamilyError> {
    check_plane_points(points)?;
    if points.len() != 6 || !linearly_general(points) {
        return Err(FamilyError::Degenerate("six linearly general points are required".into()));
    }
    let l = |i: usize, j: usize| line_through(&points[i - 1], &points[j - 1]);
    let cubic = |a: (usize, usize), b: (usize, usize), c: (usize, usize)| {
        Polynomial::product_of_forms(3, &[l(a.0, a.1), l(b.0, b.1), l(c.0, c.1)])
    };
    let qs = [
        cubic((1, 2), (3, 4), (5, 6)),
        cubic((1, 2), (3, 5), (4, 6)),
        cubic((1, 5), (2, 6), (3, 4)),
        cubic((1, 3), (2, 6), (4, 5)),
    ];
    let monomials = Monomial::all_of_degree(3, 3);
    let rows = qs
        .iter()
        .map(|q| monomials.iter().map(|m| q.coefficient(m)).collect())
        .collect();
    if matrix_rank(rows, monomials.len()) != 4 {
        return Err(FamilyError::Degenerate("the four cubics are linearly dependent".into()));
    }
    Ok(qs)
}

/// Points on the lines `L1: x3 = 0` and `L2: x2 = 0`, avoiding their common
/// point, with the generators predicted for their ideal.
#[derive(Clone, Debug)]
pub struct TwoLinePoints {
    pub points: Vec<ProjectivePoint>,
    pub arrangement: SubspaceArrangement,
    pub expected: Ideal,
}

/// `p_i = (1 : i : 0)` for `i = 1..r1` and `q_j = (1 : 0 : j)` for `j = 1..r2`.
/// `h_i` joins `p_i` to `q_i` when `i <= r2` and `p_i` to `(0 : 0 : 1)` otherwise.
pub fn two_line_points(r1: usize, r2: usize) -> Result<TwoLinePoints, FamilyError> {
    if r2 == 0 || r1 < r2 {
        return Err(FamilyError::Parameter(format!("need r1 >= r2 >= 1, got ({r1}, {r2})")));
    }
    let pt = |c: [i64; 3]| ProjectivePoint::from_ints(&c).expect("nonzero");
    let ps: Vec<ProjectivePoint> = (1..=r1 as i64).map(|i| pt([1, i, 0])).collect();
    let qs: Vec<ProjectivePoint> = (1..=r2 as i64).map(|j| pt([1, 0, j])).collect();
    let apex = pt([0, 0, 1]);
    let h: Vec<LinearForm> = (0..r1)
        .map(|i| line_through(&ps[i], qs.get(i).unwrap_or(&apex)))
        .collect();
    let l1 = LinearForm::from_ints(&[0, 0, 1]);
    let l2 = LinearForm::from_ints(&[0, 1, 0]);
    let conic = Polynomial::product_of_forms(3, &[l1.clone(), l2]);
    let mut gens = vec![conic];
    if r1 > r2 {
        gens.push(Polynomial::product_of_forms(3, std::iter::once(&l1).chain(&h[..r2])));
    }
    gens.push(Polynomial::product_of_forms(3, &h));
    let points: Vec<ProjectivePoint> = ps.into_iter().chain(qs).collect();
    Ok(TwoLinePoints {
        arrangement: p2_points(&points)?,
        points,
        expected: Ideal::new(Ring::standard(3), gens)?,
    })
}

/// The ring `Q[w, x, y, z]` of projective 3-space.
pub fn p3_ring() -> Ring {
    Ring::new(["w", "x", "y", "z"]).expect("valid names")
}

/// Lines on the quadric `wz - xy`: parameter `t` gives `(x - t·w, z - t·y)`
/// and `None` gives the line `(w, y)`.
pub fn skew_lines_with(params: &[Option<Scalar>]) -> Result<SubspaceArrangement, FamilyError> {
    for (i, p) in params.iter().enumerate() {
        if params[..i].contains(p) {
            return Err(FamilyError::Parameter(format!("parameter {} is repeated", i + 1)));
        }
    }
    let line = |p: &Option<Scalar>| match p {
        None => vec![LinearForm::from_ints(&[1, 0, 0, 0]), LinearForm::from_ints(&[0, 0, 1, 0])],
        Some(t) => vec![
            LinearForm::new(vec![-t.clone(), int(1), int(0), int(0)]),
            LinearForm::new(vec![int(0), int(0), -t.clone(), int(1)]),
        ],
    };
    let lines: Vec<Vec<LinearForm>> = params.iter().map(line).collect();
    for i in 0..lines.len() {
        for j in 0..i {
            let rows = lines[i].iter().chain(&lines[j]).map(|f| f.coeffs().to_vec()).collect();
            if matrix_rank(rows, 4) < 4 {
                return Err(FamilyError::Degenerate(format!("lines {} and {} meet", j + 1, i + 1)));
            }
        }
    }
    Ok(SubspaceArrangement::new(p3_ring(), lines)?)
}

/// `r` lines of one ruling, with parameters `∞, 0, 1, ..., r-2`.
pub fn skew_lines(r: usize) -> Result<SubspaceArrangement, FamilyError> {
    if r < 2 {
        return Err(FamilyError::Parameter("need at least two lines".into()));
    }
    let params: Vec<Option<Scalar>> = std::iter::once(None)
        .chain((0..r as i64 - 1).map(|t| Some(int(t))))
        .collect();
    skew_lines_with(&params)
}

/// Outcome of comparing the product of the point ideals, the product ideal
/// of the pl-check, and the vanishing ideal of a cone over five points.
#[derive(Clone, Debug)]
pub struct ConeReport {
    pub arrangement: SubspaceArrangement,
    pub vanishing: Ideal,
    pub product_ideal: Ideal,
    pub ideal_product: Ideal,
    /// Least degrees of nonzero elements of `I_A`, `F` and `I_1···I_5`.
    pub min_degrees: (u32, u32, u32),
    pub vanishing_vs_product_ideal: Containment,
    pub vanishing_vs_ideal_product: Containment,
    pub product_ideal_vs_ideal_product: Containment,
    /// No generator of the three ideals involves `w`.
    pub w_free: bool,
}

impl ConeReport {
    pub fn all_different(&self) -> bool {
        [
            self.vanishing_vs_product_ideal,
            self.vanishing_vs_ideal_product,
            self.product_ideal_vs_ideal_product,
        ]
        .iter()
        .all(|c| *c != Containment::Equal)
    }
}

/// Cone over five linearly general plane points, in `Q[w, x, y, z]`.
pub fn cone_checks(points: &[ProjectivePoint]) -> Result<ConeReport, FamilyError> {
    check_plane_points(points)?;
    if points.len() != 5 || !linearly_general(points) {
        return Err(FamilyError::Degenerate("five linearly general points are required".into()));
    }
    let lift = |f: &LinearForm| {
        LinearForm::new(std::iter::once(int(0)).chain(f.coeffs().iter().cloned()).collect())
    };
    let subspaces: Vec<Vec<LinearForm>> = points
        .iter()
        .map(|p| p.ideal_forms().iter().map(lift).collect())
        .collect();
    let arrangement = SubspaceArrangement::new(p3_ring(), subspaces)?;
    let cert = pl_check(&arrangement)?;
    let ideal_product = (1..arrangement.len()).try_fold(arrangement.linear_ideal(0), |acc, i| {
        acc.product(&arrangement.linear_ideal(i))
    })?;
    let vanishing = cert.vanishing_ideal;
    let product_ideal = cert.product_ideal;
    let degree = |i: &Ideal| -> Result<u32, FamilyError> { Ok(i.min_degree()?.unwrap_or(0)) };
    let min_degrees = (degree(&vanishing)?, degree(&product_ideal)?, degree(&ideal_product)?);
    let w_free = vanishing
        .groebner()?
        .elements()
        .iter()
        .chain(product_ideal.generators())
        .chain(ideal_product.generators())
        .all(|g| !g.involves(0));
    Ok(ConeReport {
        vanishing_vs_product_ideal: ideal_compare(&vanishing, &product_ideal)?,
        vanishing_vs_ideal_product: ideal_compare(&vanishing, &ideal_product)?,
        product_ideal_vs_ideal_product: ideal_compare(&product_ideal, &ideal_product)?,
        arrangement,
        vanishing,
        product_ideal,
        ideal_product,
        min_degrees,
        w_free,
    })
}

/// Named point sets used by tests and the command line.
pub fn point_preset(name: &str) -> Option<Vec<ProjectivePoint>> {
    let coords: &[[i64; 3]] = match name {
        "coordinate3" => &[[1, 0, 0], [0, 1, 0], [0, 0, 1]],
        "general5" => &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3]],
        "generic6" => &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3], [1, 4, 9]],
        "general7" => &[[1, 0, 0], [0, 1, 0], [0, 0, 1], [1, 1, 1], [1, 2, 3], [1, 4, 9], [1, 3, -2]],
        _ => return None,
    };
    Some(
        coords
            .iter()
            .map(|c| ProjectivePoint::from_ints(c).expect("nonzero"))
            .collect(),
    )
}

pub const POINT_PRESETS: &[&str] = &["coordinate3", "general5", "generic6", "general7"];
