//! Small dense two-phase simplex over exact rationals, Bland's rule.
//!
//! Solves `max c·x` subject to rows `a·x (≤ | =) b` with `b ≥ 0` and `x ≥ 0`.
//! Only the matching LPs use it; instances have a few dozen columns.

use num_rational::Rational64;
use num_traits::{One, Signed, Zero};

pub(crate) type Q = Rational64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) enum Relation {
    Le,
    Eq,
}

#[derive(Debug, Clone)]
pub(crate) struct Row {
    pub coeffs: Vec<Q>,
    pub rel: Relation,
    pub rhs: Q,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum LpError {
    Infeasible,
    Unbounded,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct LpSolution {
    pub value: Q,
    pub x: Vec<Q>,
}

struct Tableau {
    rows: Vec<Vec<Q>>,
    basis: Vec<usize>,
    width: usize,
}

impl Tableau {
    fn rhs(&self, i: usize) -> Q {
        self.rows[i][self.width]
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.rows[r][c];
        for v in self.rows[r].iter_mut() {
            *v /= p;
        }
        let pivot_row = self.rows[r].clone();
        for (i, row) in self.rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c];
            for (v, pv) in row.iter_mut().zip(&pivot_row) {
                *v -= f * pv;
            }
        }
        self.basis[r] = c;
    }

    fn reduced_cost(&self, cost: &[Q], j: usize) -> Q {
        let mut z = -cost[j];
        for (i, row) in self.rows.iter().enumerate() {
            z += cost[self.basis[i]] * row[j];
        }
        z
    }

    /// Maximizes `cost·x` over the current basis. Columns with `allowed[j] == false`
    /// never enter.
    fn optimize(&mut self, cost: &[Q], allowed: &[bool]) -> Result<(), LpError> {
        loop {
            let entering = (0..self.width).find(|&j| allowed[j] && self.reduced_cost(cost, j).is_negative());
            let Some(c) = entering else {
                return Ok(());
            };
            let mut leave: Option<(usize, Q)> = None;
            for i in 0..self.rows.len() {
                let a = self.rows[i][c];
                if !a.is_positive() {
                    continue;
                }
                let ratio = self.rhs(i) / a;
                leave = match leave {
                    None => Some((i, ratio)),
                    Some((bi, br)) => {
                        if ratio < br || (ratio == br && self.basis[i] < self.basis[bi]) {
                            Some((i, ratio))
                        } else {
                            Some((bi, br))
                        }
                    }
                };
            }
            let Some((r, _)) = leave else {
                return Err(LpError::Unbounded);
            };
            self.pivot(r, c);
        }
    }

    fn value(&self, cost: &[Q]) -> Q {
        (0..self.rows.len()).map(|i| cost[self.basis[i]] * self.rhs(i)).fold(Q::zero(), |a, b| a + b)
    }
}

pub(crate) fn maximize(objective: &[Q], rows: &[Row]) -> Result<LpSolution, LpError> {
    let n = objective.len();
    let slack_count = rows.iter().filter(|r| r.rel == Relation::Le).count();
    let art_count = rows.len() - slack_count;
    let width = n + slack_count + art_count;

    let mut table = Vec::with_capacity(rows.len());
    let mut basis = Vec::with_capacity(rows.len());
    let (mut next_slack, mut next_art) = (n, n + slack_count);
    for row in rows {
        debug_assert_eq!(row.coeffs.len(), n);
        debug_assert!(!row.rhs.is_negative());
        let mut t = vec![Q::zero(); width + 1];
        t[..n].copy_from_slice(&row.coeffs);
        t[width] = row.rhs;
        match row.rel {
            Relation::Le => {
                t[next_slack] = Q::one();
                basis.push(next_slack);
                next_slack += 1;
            }
            Relation::Eq => {
                t[next_art] = Q::one();
                basis.push(next_art);
                next_art += 1;
            }
        }
        table.push(t);
    }
    let mut tab = Tableau { rows: table, basis, width };
    let is_art = |j: usize| j >= n + slack_count && j < width;

    if art_count > 0 {
        let phase1: Vec<Q> = (0..width).map(|j| if is_art(j) { -Q::one() } else { Q::zero() }).collect();
        tab.optimize(&phase1, &vec![true; width])?;
        if tab.value(&phase1).is_negative() {
            return Err(LpError::Infeasible);
        }
        // Drive zero-level artificials out of the basis; drop redundant rows.
        let mut i = 0;
        while i < tab.rows.len() {
            if is_art(tab.basis[i]) {
                match (0..n + slack_count).find(|&j| !tab.rows[i][j].is_zero()) {
                    Some(c) => tab.pivot(i, c),
                    None => {
                        tab.rows.remove(i);
                        tab.basis.remove(i);
                        continue;
                    }
                }
            }
            i += 1;
        }
    }

    let cost: Vec<Q> = (0..width).map(|j| if j < n { objective[j] } else { Q::zero() }).collect();
    let allowed: Vec<bool> = (0..width).map(|j| !is_art(j)).collect();
    tab.optimize(&cost, &allowed)?;

    let mut x = vec![Q::zero(); n];
    for (i, &b) in tab.basis.iter().enumerate() {
        if b < n {
            x[b] = tab.rhs(i);
        }
    }
    Ok(LpSolution { value: tab.value(&cost), x })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Q {
        Q::from_integer(n)
    }

    fn row(c: &[i64], rel: Relation, rhs: i64) -> Row {
        Row { coeffs: c.iter().map(|&v| q(v)).collect(), rel, rhs: q(rhs) }
    }

    #[test]
    fn textbook_le_problem() {
        // max 3x + 5y, x ≤ 4, 2y ≤ 12, 3x + 2y ≤ 18 → 36 at (2, 6).
        let sol = maximize(
            &[q(3), q(5)],
            &[row(&[1, 0], Relation::Le, 4), row(&[0, 2], Relation::Le, 12), row(&[3, 2], Relation::Le, 18)],
        )
        .unwrap();
        assert_eq!(sol.value, q(36));
        assert_eq!(sol.x, vec![q(2), q(6)]);
    }

    #[test]
    fn equality_and_fraction() {
        // max x s.t. 2x + 2y = 1, x ≤ 1 → x = 1/2.
        let sol = maximize(&[q(1), q(0)], &[row(&[2, 2], Relation::Eq, 1), row(&[1, 0], Relation::Le, 1)]).unwrap();
        assert_eq!(sol.value, Q::new(1, 2));
    }

    #[test]
    fn infeasible_and_unbounded() {
        assert_eq!(
            maximize(&[q(1)], &[row(&[1], Relation::Eq, 2), row(&[1], Relation::Le, 1)]),
            Err(LpError::Infeasible)
        );
        assert_eq!(maximize(&[q(1), q(0)], &[row(&[0, 1], Relation::Le, 1)]), Err(LpError::Unbounded));
    }

    #[test]
    fn redundant_equalities() {
        let sol = maximize(&[q(1), q(1)], &[row(&[1, 1], Relation::Eq, 1), row(&[2, 2], Relation::Eq, 2)]).unwrap();
        assert_eq!(sol.value, q(1));
    }
}
