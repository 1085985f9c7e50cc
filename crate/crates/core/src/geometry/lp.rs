//! Phase-one simplex over exact rationals.

use num_traits::{Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// Equalities `A x = b` over variables constrained to `x ≥ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    num_vars: usize,
    rows: Vec<Vec<Rational>>,
    rhs: Vec<Rational>,
}

impl LinearSystem {
    pub fn new(num_vars: usize) -> Self {
        LinearSystem {
            num_vars,
            rows: Vec::new(),
            rhs: Vec::new(),
        }
    }

    pub fn add_equation(&mut self, coeffs: Vec<Rational>, rhs: Rational) -> Result<()> {
        if coeffs.len() != self.num_vars {
            return Err(Error::MalformedSystem(format!(
                "equation has {} coefficients for {} variables",
                coeffs.len(),
                self.num_vars
            )));
        }
        self.rows.push(coeffs);
        self.rhs.push(rhs);
        Ok(())
    }

    pub fn from_rows(num_vars: usize, rows: Vec<(Vec<Rational>, Rational)>) -> Result<Self> {
        let mut system = LinearSystem::new(num_vars);
        for (coeffs, rhs) in rows {
            system.add_equation(coeffs, rhs)?;
        }
        Ok(system)
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_equations(&self) -> usize {
        self.rows.len()
    }

    /// Whether `x` satisfies every equality and `x ≥ 0`, exactly.
    pub fn is_satisfied_by(&self, x: &[Rational]) -> bool {
        x.len() == self.num_vars
            && x.iter().all(|v| !v.is_negative())
            && self.rows.iter().zip(&self.rhs).all(|(row, b)| {
                let lhs: Rational = row.iter().zip(x).map(|(a, v)| a * v).sum();
                &lhs == b
            })
    }
}

/// A nonnegative exact solution of `system`, or `None` when infeasible.
///
/// Minimizes the sum of artificial variables with Bland's smallest-index
/// rule for both entering and leaving variables, which rules out cycling.
/// The returned point is a basic solution, so at most `num_equations`
/// coordinates are nonzero.
pub fn lp_feasible(system: &LinearSystem) -> Option<Vec<Rational>> {
    let n = system.num_vars;
    let m = system.rows.len();
    let width = n + m + 1;
    let mut tab: Vec<Vec<Rational>> = Vec::with_capacity(m);
    for (i, (row, b)) in system.rows.iter().zip(&system.rhs).enumerate() {
        let flip = b.is_negative();
        let mut t = Vec::with_capacity(width);
        t.extend(row.iter().map(|a| if flip { -a.clone() } else { a.clone() }));
        t.extend((0..m).map(|k| if k == i { super::integer(1) } else { Rational::zero() }));
        t.push(if flip { -b.clone() } else { b.clone() });
        tab.push(t);
    }
    let mut basis: Vec<usize> = (n..n + m).collect();

    // Reduced costs of the phase-one objective; the last entry is minus the objective value.
    let mut cost = vec![Rational::zero(); width];
    for row in &tab {
        for j in 0..n {
            cost[j] -= &row[j];
        }
        cost[width - 1] -= &row[width - 1];
    }

    while let Some(enter) = (0..n + m).find(|&j| cost[j].is_negative()) {
        let mut leave: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !tab[i][enter].is_positive() {
                continue;
            }
            let ratio = &tab[i][width - 1] / &tab[i][enter];
            let better = match &leave {
                None => true,
                Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
            };
            if better {
                leave = Some((i, ratio));
            }
        }
        let (pivot_row, _) = leave.expect("phase-one objective is bounded below");
        pivot(&mut tab, &mut cost, pivot_row, enter);
        basis[pivot_row] = enter;
    }

    if !cost[width - 1].is_zero() {
        return None;
    }
    let mut x = vec![Rational::zero(); n];
    for (i, &b) in basis.iter().enumerate() {
        if b < n {
            x[b] = tab[i][width - 1].clone();
        }
    }
    debug_assert!(system.is_satisfied_by(&x));
    Some(x)
}

fn pivot(tab: &mut [Vec<Rational>], cost: &mut [Rational], r: usize, c: usize) {
    let inv = super::integer(1) / &tab[r][c];
    for v in tab[r].iter_mut() {
        if !v.is_zero() {
            *v *= &inv;
        }
    }
    let pivot_row = tab[r].clone();
    let eliminate = |row: &mut Vec<Rational>| {
        if row[c].is_zero() {
            return;
        }
        let factor = row[c].clone();
        for (v, p) in row.iter_mut().zip(&pivot_row) {
            if !p.is_zero() {
                *v -= &factor * p;
            }
        }
    };
    for (i, row) in tab.iter_mut().enumerate() {
        if i != r {
            eliminate(row);
        }
    }
    let mut cost_row = cost.to_vec();
    eliminate(&mut cost_row);
    cost.clone_from_slice(&cost_row);
}
