//! Dense two-phase simplex with Bland's rule.
//!
//! Solves `maximize c.x` subject to linear constraints and `x >= 0`. Callers
//! with free variables split them into a difference of two nonnegative ones.

use crate::scalar::Real;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

#[derive(Debug, Clone)]
pub struct Constraint<T> {
    pub coeffs: Vec<T>,
    pub relation: Relation,
    pub rhs: T,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpOutcome<T> {
    Optimal { x: Vec<T>, objective: T },
    Infeasible,
    Unbounded,
}

const MAX_PIVOTS: usize = 100_000;

struct Tableau<T> {
    /// `rows x (cols + 1)`; last column is the right-hand side.
    a: Vec<Vec<T>>,
    basis: Vec<usize>,
    cols: usize,
}

impl<T: Real> Tableau<T> {
    fn pivot(&mut self, row: usize, col: usize, obj: &mut [T]) {
        let p = self.a[row][col];
        for v in self.a[row].iter_mut() {
            *v = *v / p;
        }
        let pivot_row = self.a[row].clone();
        for (r, line) in self.a.iter_mut().enumerate() {
            if r == row {
                continue;
            }
            let f = line[col];
            if f != T::zero() {
                for (x, &y) in line.iter_mut().zip(&pivot_row) {
                    *x = *x - f * y;
                }
            }
        }
        let f = obj[col];
        if f != T::zero() {
            for (x, &y) in obj.iter_mut().zip(&pivot_row) {
                *x = *x - f * y;
            }
        }
        self.basis[row] = col;
    }

    /// Reduced-cost row for maximizing `cost` over the current basis.
    fn objective_row(&self, cost: &[T]) -> Vec<T> {
        let mut obj: Vec<T> = cost.to_vec();
        obj.push(T::zero());
        for (r, &b) in self.basis.iter().enumerate() {
            let cb = cost[b];
            if cb != T::zero() {
                for (x, &y) in obj.iter_mut().zip(&self.a[r]) {
                    *x = *x - cb * y;
                }
            }
        }
        obj
    }

    /// Runs Bland's-rule pivots on columns with `allowed[j]`. Returns `false`
    /// when the objective is unbounded.
    fn optimize(&mut self, obj: &mut [T], allowed: &[bool]) -> Option<bool> {
        let eps = T::of(T::PIVOT_TOL);
        for _ in 0..MAX_PIVOTS {
            let Some(enter) = (0..self.cols).find(|&j| allowed[j] && obj[j] > eps) else {
                return Some(true);
            };
            let mut leave: Option<(usize, T)> = None;
            for (r, line) in self.a.iter().enumerate() {
                let coef = line[enter];
                if coef > eps {
                    let ratio = line[self.cols] / coef;
                    leave = match leave {
                        None => Some((r, ratio)),
                        Some((lr, lratio)) => {
                            if ratio < lratio - eps || ((ratio - lratio).abs() <= eps && self.basis[r] < self.basis[lr])
                            {
                                Some((r, ratio))
                            } else {
                                Some((lr, lratio))
                            }
                        }
                    };
                }
            }
            match leave {
                None => return Some(false),
                Some((row, _)) => self.pivot(row, enter, obj),
            }
        }
        None
    }
}

/// Maximizes `objective . x` subject to `constraints` and `x >= 0`.
///
/// Returns `None` only if the pivot budget is exhausted, which Bland's rule
/// rules out in exact arithmetic.
pub fn maximize<T: Real>(objective: &[T], constraints: &[Constraint<T>]) -> Option<LpOutcome<T>> {
    let nvars = objective.len();
    let rows = constraints.len();
    let eps = T::of(T::PIVOT_TOL);

    // Normalize to nonnegative right-hand sides.
    let normalized: Vec<(Vec<T>, Relation, T)> = constraints
        .iter()
        .map(|c| {
            assert_eq!(c.coeffs.len(), nvars, "constraint width");
            if c.rhs < T::zero() {
                let flipped = match c.relation {
                    Relation::Le => Relation::Ge,
                    Relation::Ge => Relation::Le,
                    Relation::Eq => Relation::Eq,
                };
                (c.coeffs.iter().map(|&v| -v).collect(), flipped, -c.rhs)
            } else {
                (c.coeffs.clone(), c.relation, c.rhs)
            }
        })
        .collect();

    let slack_count = normalized.iter().filter(|c| c.1 != Relation::Eq).count();
    let artificial_count = normalized.iter().filter(|c| c.1 != Relation::Le).count();
    let cols = nvars + slack_count + artificial_count;
    let artificial_start = nvars + slack_count;

    let mut a = vec![vec![T::zero(); cols + 1]; rows];
    let mut basis = vec![0; rows];
    let mut next_slack = nvars;
    let mut next_art = artificial_start;
    for (r, (coeffs, rel, rhs)) in normalized.iter().enumerate() {
        a[r][..nvars].copy_from_slice(coeffs);
        a[r][cols] = *rhs;
        match rel {
            Relation::Le => {
                a[r][next_slack] = T::one();
                basis[r] = next_slack;
                next_slack += 1;
            }
            Relation::Ge => {
                a[r][next_slack] = -T::one();
                next_slack += 1;
                a[r][next_art] = T::one();
                basis[r] = next_art;
                next_art += 1;
            }
            Relation::Eq => {
                a[r][next_art] = T::one();
                basis[r] = next_art;
                next_art += 1;
            }
        }
    }
    let mut tab = Tableau { a, basis, cols };

    if artificial_count > 0 {
        let mut phase1_cost = vec![T::zero(); cols];
        for c in phase1_cost.iter_mut().skip(artificial_start) {
            *c = -T::one();
        }
        let mut obj = tab.objective_row(&phase1_cost);
        let allowed = vec![true; cols];
        tab.optimize(&mut obj, &allowed)?;
        // obj[cols] holds minus the objective value, i.e. the artificial sum.
        if obj[cols] > eps * T::of_usize(rows.max(1)) {
            return Some(LpOutcome::Infeasible);
        }
        // Drive zero-level artificials out of the basis.
        let mut r = 0;
        while r < tab.a.len() {
            if tab.basis[r] >= artificial_start {
                match (0..artificial_start).find(|&j| tab.a[r][j].abs() > eps) {
                    Some(j) => {
                        let mut dummy = vec![T::zero(); cols + 1];
                        tab.pivot(r, j, &mut dummy);
                    }
                    None => {
                        // redundant row
                        tab.a.remove(r);
                        tab.basis.remove(r);
                        continue;
                    }
                }
            }
            r += 1;
        }
    }

    let mut cost = vec![T::zero(); cols];
    cost[..nvars].copy_from_slice(objective);
    let mut obj = tab.objective_row(&cost);
    let allowed: Vec<bool> = (0..cols).map(|j| j < artificial_start).collect();
    if !tab.optimize(&mut obj, &allowed)? {
        return Some(LpOutcome::Unbounded);
    }
    let mut x = vec![T::zero(); nvars];
    for (r, &b) in tab.basis.iter().enumerate() {
        if b < nvars {
            x[b] = tab.a[r][cols];
        }
    }
    let objective_value = x.iter().zip(objective).map(|(&xi, &ci)| xi * ci).sum();
    Some(LpOutcome::Optimal { x, objective: objective_value })
}
