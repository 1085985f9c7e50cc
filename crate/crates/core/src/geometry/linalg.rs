use num_traits::{One, Zero};

use super::Rational;

/// Reduced row echelon form in place. Returns the pivot column of each
/// nonzero row.
pub(crate) fn rref(rows: &mut [Vec<Rational>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let factor = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                if !pv.is_zero() {
                    *v -= &factor * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank of a list of vectors of equal length.
pub fn rank(vectors: &[Vec<Rational>]) -> usize {
    let Some(cols) = vectors.first().map(Vec::len) else {
        return 0;
    };
    let mut rows = vectors.to_vec();
    rref(&mut rows, cols).len()
}

/// Solutions of `A x = b` as `(particular, kernel basis)`, or `None` when the
/// system is inconsistent. Each row of `augmented` is `[A | b]`.
pub(crate) fn solve_affine(
    mut augmented: Vec<Vec<Rational>>,
    vars: usize,
) -> Option<(Vec<Rational>, Vec<Vec<Rational>>)> {
    let pivots = rref(&mut augmented, vars + 1);
    if pivots.last() == Some(&vars) {
        return None;
    }
    let mut particular = vec![Rational::zero(); vars];
    for (row, &c) in augmented.iter().zip(&pivots) {
        particular[c] = row[vars].clone();
    }
    let mut is_pivot = vec![false; vars];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let kernel = (0..vars)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![Rational::zero(); vars];
            v[f] = Rational::one();
            for (row, &c) in augmented.iter().zip(&pivots) {
                v[c] = -row[f].clone();
            }
            v
        })
        .collect();
    Some((particular, kernel))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::integer;

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter()
            .map(|r| r.iter().map(|&v| integer(v)).collect())
            .collect()
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(&ints(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(&ints(&[&[1, 0], &[0, 1], &[1, 1]])), 2);
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn solve_with_kernel() {
        // x + y = 2
        let (p, k) = solve_affine(ints(&[&[1, 1, 2]]), 2).unwrap();
        assert_eq!(p, vec![integer(2), integer(0)]);
        assert_eq!(k, vec![vec![integer(-1), integer(1)]]);
        assert!(solve_affine(ints(&[&[1, 1, 2], &[1, 1, 3]]), 2).is_none());
    }
}
