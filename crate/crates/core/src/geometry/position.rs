use num_traits::One;
use rayon::prelude::*;

use super::hull::affine_intersection;
use super::linalg::rank;
use super::{integer, Point, PointSequence, Rational};
use crate::enumerate::PartSearch;
use crate::error::{Error, Result};

fn affinely_independent(points: &[&Point]) -> bool {
    let Some((first, rest)) = points.split_first() else {
        return true;
    };
    let diffs: Vec<Vec<Rational>> = rest
        .iter()
        .map(|p| {
            p.coords()
                .iter()
                .zip(first.coords())
                .map(|(a, b)| a - b)
                .collect()
        })
        .collect();
    rank(&diffs) == rest.len()
}

fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if !f(&idx) {
            return false;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] < n - k + i) else {
            return true;
        };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// No `k ≤ d+1` of the points lie on a common `(k-2)`-flat.
///
/// Checking the subsets of size `min(n, d+1)` suffices, since subsets of
/// affinely independent sets are independent.
pub fn in_general_position(seq: &PointSequence) -> bool {
    let n = seq.len();
    let k = n.min(seq.dim() + 1);
    let pts = seq.points();
    for_each_subset(n, k, |idx| {
        let chosen: Vec<&Point> = idx.iter().map(|&i| &pts[i]).collect();
        affinely_independent(&chosen)
    })
}

/// Strong general position via the Perles–Sigron criterion.
///
/// For every tuple of `r ≥ 2` disjoint nonempty subsets, each of size at most
/// `d` and with `m ≤ (d+1)(r-1)+1` points in total, the affine hulls must meet
/// in exactly one point when `m = (d+1)(r-1)+1` and not at all otherwise.
/// The input must be in general position. The search is exponential; it is
/// meant for sequences of up to about eight points in the plane.
pub fn in_strong_general_position(seq: &PointSequence) -> Result<bool> {
    if !in_general_position(seq) {
        return Err(Error::NotInGeneralPosition);
    }
    let d = seq.dim();
    let n = seq.len();
    if n < 2 {
        return Ok(true);
    }
    let search = PartSearch {
        points: n,
        min_parts: 2,
        max_parts: n,
        max_part_size: d,
        max_total: n,
    };
    let tuples: Vec<Vec<Vec<usize>>> = search
        .tuples()
        .into_iter()
        .filter(|t| {
            let m: usize = t.iter().map(Vec::len).sum();
            m <= (d + 1) * (t.len() - 1) + 1
        })
        .collect();
    let satisfied = |tuple: &Vec<Vec<usize>>| -> Result<bool> {
        let parts: Vec<Vec<Point>> = tuple
            .iter()
            .map(|idx| seq.select(idx))
            .collect::<Result<_>>()?;
        let m: usize = tuple.iter().map(Vec::len).sum();
        let flat = affine_intersection(&parts)?;
        Ok(if m == (d + 1) * (tuple.len() - 1) + 1 {
            flat.is_point()
        } else {
            flat.is_empty()
        })
    };
    let verdicts: Vec<Result<bool>> = tuples.par_iter().map(satisfied).collect();
    for v in verdicts {
        if !v? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Points `(t, t², …, t^d)` with `t = base^i` for `i = 1..=n`.
pub fn moment_curve(n: usize, d: usize, base: &Rational) -> Result<PointSequence> {
    if n == 0 || d == 0 {
        return Err(Error::InvalidParameter(
            "moment curve needs n >= 1 and d >= 1".into(),
        ));
    }
    if base < &integer(2) {
        return Err(Error::InvalidParameter(format!(
            "moment curve base must be at least 2, got {base}"
        )));
    }
    let points = (1..=n)
        .map(|i| {
            let t: Rational = base.pow(i as i32);
            let mut coords = Vec::with_capacity(d);
            let mut power = Rational::one();
            for _ in 0..d {
                power *= &t;
                coords.push(power.clone());
            }
            Point::new(coords)
        })
        .collect();
    PointSequence::new(d, points)
}
