//! Exact rational geometry: linear feasibility, hull intersections, general
//! position predicates and moment-curve point sequences.
//!
//! Nothing here uses floating point.

mod hull;
mod linalg;
mod lp;
mod position;

pub use hull::{
    affine_intersection, convex_hull_witness, convex_hulls_intersect, AffineFlat, HullWitness,
};
pub use linalg::rank;
pub use lp::{lp_feasible, LinearSystem};
pub use position::{in_general_position, in_strong_general_position, moment_curve};

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Arbitrary precision rational, always in lowest terms.
pub type Rational = num_rational::BigRational;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn integer(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `num/den`, also for integers.
pub fn format_rational(q: &Rational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

/// A point with exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point(Vec<Rational>);

impl Point {
    pub fn new(coords: Vec<Rational>) -> Self {
        Point(coords)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Point(coords.iter().map(|&c| integer(c)).collect())
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn origin(dim: usize) -> Self {
        Point(vec![Rational::zero(); dim])
    }

    /// `Σ weights[k] · points[k]`.
    pub fn combination<'a>(
        dim: usize,
        terms: impl IntoIterator<Item = (&'a Rational, &'a Point)>,
    ) -> Point {
        let mut acc = vec![Rational::zero(); dim];
        for (w, p) in terms {
            if w.is_zero() {
                continue;
            }
            for (a, c) in acc.iter_mut().zip(&p.0) {
                *a += w * c;
            }
        }
        Point(acc)
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(format_rational).collect();
        f.write_str(&parts.join(" "))
    }
}

/// An ordered list of points sharing one ambient dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSequence {
    dim: usize,
    points: Vec<Point>,
}

impl PointSequence {
    pub fn new(dim: usize, points: Vec<Point>) -> Result<Self> {
        if let Some(p) = points.iter().find(|p| p.dim() != dim) {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.dim(),
            });
        }
        Ok(PointSequence { dim, points })
    }

    /// Points `values[i]` on the real line.
    pub fn on_line(values: &[Rational]) -> Self {
        PointSequence {
            dim: 1,
            points: values.iter().map(|v| Point(vec![v.clone()])).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The points at `indices`, in the given order.
    pub fn select(&self, indices: &[usize]) -> Result<Vec<Point>> {
        indices
            .iter()
            .map(|&i| {
                self.points.get(i).cloned().ok_or(Error::IndexOutOfRange {
                    index: i,
                    len: self.points.len(),
                })
            })
            .collect()
    }
}

pub(crate) fn check_parts(parts: &[Vec<Point>]) -> Result<usize> {
    let first = parts.first().ok_or(Error::NoParts)?;
    if let Some(k) = parts.iter().position(|p| p.is_empty()) {
        return Err(Error::EmptyPart(k as u32 + 1));
    }
    let dim = first[0].dim();
    if let Some(p) = parts.iter().flatten().find(|p| p.dim() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: p.dim(),
        });
    }
    Ok(dim)
}
