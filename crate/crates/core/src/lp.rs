//! Exact revised simplex for packing-type linear programs
//!
//! ```text
//! maximize c.x  subject to  A x <= b,  x >= 0,  with b >= 0
//! ```
//!
//! The all-slack basis is feasible, so no phase one is needed. Pivoting uses
//! Bland's rule (smallest eligible entering index, smallest leaving variable
//! among ratio ties), which terminates and makes results reproducible.

use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Debug)]
pub struct Column {
    pub cost: Rational,
    /// `(row, coefficient)` pairs; rows not listed are zero.
    pub entries: Vec<(usize, Rational)>,
}

#[derive(Clone, Debug)]
pub struct LinearProgram {
    pub rhs: Vec<Rational>,
    pub columns: Vec<Column>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LpSolution {
    pub objective: Rational,
    pub primal: Vec<Rational>,
    /// Optimal dual prices, one per row; `rhs . dual == objective`.
    pub dual: Vec<Rational>,
    /// Structural columns in the final basis.
    pub basic_columns: Vec<usize>,
}

impl LinearProgram {
    pub fn new(rhs: Vec<Rational>) -> Self {
        LinearProgram {
            rhs,
            columns: Vec::new(),
        }
    }

    pub fn add_column(&mut self, cost: Rational, entries: Vec<(usize, Rational)>) -> usize {
        self.columns.push(Column { cost, entries });
        self.columns.len() - 1
    }

    pub fn solve(&self) -> Result<LpSolution> {
        let m = self.rhs.len();
        let k = self.columns.len();
        if self.rhs.iter().any(Rational::is_negative) {
            return Err(Error::InvalidArgument(
                "packing LP needs a non-negative right-hand side".into(),
            ));
        }
        for col in &self.columns {
            if col.entries.iter().any(|&(r, _)| r >= m) {
                return Err(Error::InvalidArgument(
                    "column entry outside the row range".into(),
                ));
            }
        }
        // Basis variables: 0..k structural, k..k+m slack of row (j - k).
        let mut basis: Vec<usize> = (k..k + m).collect();
        let mut binv: Vec<Vec<Rational>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if i == j {
                            Rational::one()
                        } else {
                            Rational::zero()
                        }
                    })
                    .collect()
            })
            .collect();
        let mut xb = self.rhs.clone();
        let cost_of = |var: usize| -> Rational {
            if var < k {
                self.columns[var].cost.clone()
            } else {
                Rational::zero()
            }
        };

        loop {
            // Dual prices y = c_B B^-1.
            let mut y = vec![Rational::zero(); m];
            for (i, &var) in basis.iter().enumerate() {
                let c = cost_of(var);
                if c.is_zero() {
                    continue;
                }
                for (j, yj) in y.iter_mut().enumerate() {
                    if !binv[i][j].is_zero() {
                        *yj += &(&c * &binv[i][j]);
                    }
                }
            }
            // Bland: first variable with positive reduced cost.
            let mut entering = None;
            for (j, col) in self.columns.iter().enumerate() {
                let mut d = col.cost.clone();
                for (r, a) in &col.entries {
                    if !y[*r].is_zero() {
                        d -= &(&y[*r] * a);
                    }
                }
                if d.is_positive() {
                    entering = Some(j);
                    break;
                }
            }
            if entering.is_none() {
                if let Some(i) = y.iter().position(Rational::is_negative) {
                    entering = Some(k + i);
                }
            }
            let Some(enter) = entering else {
                let mut primal = vec![Rational::zero(); k];
                for (i, &var) in basis.iter().enumerate() {
                    if var < k {
                        primal[var] = xb[i].clone();
                    }
                }
                let objective: Rational = self
                    .columns
                    .iter()
                    .zip(&primal)
                    .map(|(c, x)| &c.cost * x)
                    .sum();
                let mut basic_columns: Vec<usize> =
                    basis.iter().copied().filter(|&v| v < k).collect();
                basic_columns.sort_unstable();
                return Ok(LpSolution {
                    objective,
                    primal,
                    dual: y,
                    basic_columns,
                });
            };
            // Direction u = B^-1 a_enter.
            let u: Vec<Rational> = if enter < k {
                (0..m)
                    .map(|i| {
                        self.columns[enter]
                            .entries
                            .iter()
                            .map(|(r, a)| &binv[i][*r] * a)
                            .sum()
                    })
                    .collect()
            } else {
                (0..m).map(|i| binv[i][enter - k].clone()).collect()
            };
            let mut leave: Option<(usize, Rational)> = None;
            for i in 0..m {
                if !u[i].is_positive() {
                    continue;
                }
                let ratio = &xb[i] / &u[i];
                let better = match &leave {
                    None => true,
                    Some((li, best)) => ratio < *best || (ratio == *best && basis[i] < basis[*li]),
                };
                if better {
                    leave = Some((i, ratio));
                }
            }
            let Some((row, _)) = leave else {
                return Err(Error::InvalidArgument("linear program is unbounded".into()));
            };
            let pivot = u[row].clone();
            for x in binv[row].iter_mut() {
                *x = &*x / &pivot;
            }
            xb[row] = &xb[row] / &pivot;
            for i in 0..m {
                if i == row || u[i].is_zero() {
                    continue;
                }
                let factor = u[i].clone();
                let pivot_row = binv[row].clone();
                for (x, p) in binv[i].iter_mut().zip(&pivot_row) {
                    if !p.is_zero() {
                        *x -= &(&factor * p);
                    }
                }
                let delta = &factor * &xb[row];
                xb[i] -= &delta;
            }
            basis[row] = enter;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(p: i64, q: i64) -> Rational {
        Rational::new(p, q)
    }

    #[test]
    fn textbook_example() {
        // max 3x + 5y, x <= 4, 2y <= 12, 3x + 2y <= 18  ->  36 at (2, 6)
        let mut lp = LinearProgram::new(vec![r(4, 1), r(12, 1), r(18, 1)]);
        lp.add_column(r(3, 1), vec![(0, r(1, 1)), (2, r(3, 1))]);
        lp.add_column(r(5, 1), vec![(1, r(2, 1)), (2, r(2, 1))]);
        let s = lp.solve().unwrap();
        assert_eq!(s.objective, r(36, 1));
        assert_eq!(s.primal, vec![r(2, 1), r(6, 1)]);
        let dual_obj: Rational = s.dual.iter().zip(&lp.rhs).map(|(y, b)| y * b).sum();
        assert_eq!(dual_obj, s.objective);
    }

    #[test]
    fn unbounded_is_reported() {
        let mut lp = LinearProgram::new(vec![r(1, 1)]);
        lp.add_column(r(1, 1), vec![]);
        assert!(lp.solve().is_err());
    }

    #[test]
    fn empty_program() {
        let lp = LinearProgram::new(vec![r(1, 1), r(1, 1)]);
        let s = lp.solve().unwrap();
        assert_eq!(s.objective, Rational::zero());
        assert_eq!(s.dual, vec![Rational::zero(), Rational::zero()]);
    }
}
