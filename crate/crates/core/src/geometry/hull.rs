use num_traits::{One, Zero};

use super::linalg::{rref, solve_affine};
use super::lp::{lp_feasible, LinearSystem};
use super::{check_parts, Point, Rational};
use crate::error::Result;

/// A common point of several convex hulls together with the convex weights
/// realizing it in each part.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HullWitness {
    pub point: Point,
    /// `weights[i][j]` is the coefficient of point `j` of part `i`.
    pub weights: Vec<Vec<Rational>>,
}

impl HullWitness {
    /// Exact check that `point` is the stated convex combination in every part.
    pub fn verify(&self, parts: &[Vec<Point>]) -> bool {
        self.weights.len() == parts.len()
            && parts.iter().zip(&self.weights).all(|(part, w)| {
                w.len() == part.len()
                    && w.iter().all(|x| x >= &Rational::zero())
                    && w.iter().sum::<Rational>() == Rational::one()
                    && Point::combination(self.point.dim(), w.iter().zip(part)) == self.point
            })
    }

    /// For each part, the indices of points with nonzero weight.
    pub fn support(&self) -> Vec<Vec<usize>> {
        self.weights
            .iter()
            .map(|w| (0..w.len()).filter(|&j| !w[j].is_zero()).collect())
            .collect()
    }
}

/// Rows of `Σ_j λ^i_j = 1` for each part and `Σ λ^i p^i = Σ λ^0 p^0` for each
/// part after the first, over one variable per point.
fn barycenter_rows(parts: &[Vec<Point>], dim: usize) -> (usize, Vec<(Vec<Rational>, Rational)>) {
    let offsets: Vec<usize> = parts
        .iter()
        .scan(0, |acc, p| {
            let o = *acc;
            *acc += p.len();
            Some(o)
        })
        .collect();
    let vars: usize = parts.iter().map(Vec::len).sum();
    let mut rows = Vec::new();
    for (part, &o) in parts.iter().zip(&offsets) {
        let mut row = vec![Rational::zero(); vars];
        for j in 0..part.len() {
            row[o + j] = Rational::one();
        }
        rows.push((row, Rational::one()));
    }
    for (part, &o) in parts.iter().zip(&offsets).skip(1) {
        for c in 0..dim {
            let mut row = vec![Rational::zero(); vars];
            for (j, p) in part.iter().enumerate() {
                row[o + j] = p.coords()[c].clone();
            }
            for (j, p) in parts[0].iter().enumerate() {
                row[j] = -p.coords()[c].clone();
            }
            rows.push((row, Rational::zero()));
        }
    }
    (vars, rows)
}

fn split(flat: &[Rational], parts: &[Vec<Point>]) -> Vec<Vec<Rational>> {
    let mut out = Vec::with_capacity(parts.len());
    let mut rest = flat;
    for p in parts {
        let (head, tail) = rest.split_at(p.len());
        out.push(head.to_vec());
        rest = tail;
    }
    out
}

/// A point common to the convex hulls of all `parts`, with its weights.
///
/// The weights form a basic solution of the convex-combination system, so at
/// most `(d+1)(r-1)+1` of them are nonzero.
pub fn convex_hull_witness(parts: &[Vec<Point>]) -> Result<Option<HullWitness>> {
    let dim = check_parts(parts)?;
    let (vars, rows) = barycenter_rows(parts, dim);
    let system = LinearSystem::from_rows(vars, rows)?;
    Ok(lp_feasible(&system).map(|x| {
        let weights = split(&x, parts);
        let point = Point::combination(dim, weights[0].iter().zip(&parts[0]));
        HullWitness { point, weights }
    }))
}

/// A point in `⋂ conv(parts[i])`, or `None` if the hulls miss each other.
pub fn convex_hulls_intersect(parts: &[Vec<Point>]) -> Result<Option<Point>> {
    Ok(convex_hull_witness(parts)?.map(|w| w.point))
}

/// An affine subspace given by a base point and independent directions; the
/// empty flat has no base point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineFlat {
    pub basepoint: Option<Point>,
    pub directions: Vec<Vec<Rational>>,
}

impl AffineFlat {
    pub fn empty() -> Self {
        AffineFlat {
            basepoint: None,
            directions: Vec::new(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.basepoint.is_none()
    }

    pub fn is_point(&self) -> bool {
        self.basepoint.is_some() && self.directions.is_empty()
    }

    /// Dimension, or `None` for the empty flat.
    pub fn dim(&self) -> Option<usize> {
        self.basepoint.as_ref().map(|_| self.directions.len())
    }
}

/// The intersection of the affine hulls of all `parts`.
pub fn affine_intersection(parts: &[Vec<Point>]) -> Result<AffineFlat> {
    let dim = check_parts(parts)?;
    let (vars, rows) = barycenter_rows(parts, dim);
    let augmented: Vec<Vec<Rational>> = rows
        .into_iter()
        .map(|(mut a, b)| {
            a.push(b);
            a
        })
        .collect();
    let Some((particular, kernel)) = solve_affine(augmented, vars) else {
        return Ok(AffineFlat::empty());
    };
    let first = &parts[0];
    let k0 = first.len();
    let basepoint = Point::combination(dim, particular[..k0].iter().zip(first));
    let mut images: Vec<Vec<Rational>> = kernel
        .iter()
        .map(|v| Point::combination(dim, v[..k0].iter().zip(first)).coords().to_vec())
        .filter(|v| v.iter().any(|c| !c.is_zero()))
        .collect();
    let directions = if images.is_empty() {
        Vec::new()
    } else {
        let pivots = rref(&mut images, dim);
        images.truncate(pivots.len());
        images
    };
    Ok(AffineFlat {
        basepoint: Some(basepoint),
        directions,
    })
}
