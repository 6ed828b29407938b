//! Exact linear feasibility.
//!
//! Decides whether `A x = b` has a solution with `x_j >= 0` for the
//! flagged variables (the rest are free).  Free variables are split into
//! differences of two nonnegative ones, rows are flipped so the right
//! hand side is nonnegative, and a phase-one simplex minimizes the sum
//! of artificial slacks.  Pivoting uses Bland's least-index rule on both
//! the entering and the leaving choice, which together with exact
//! rational arithmetic rules out cycling, so termination is
//! unconditional.  Feasible iff the phase-one optimum is zero.

use super::Rational;
use num::{One, Signed, Zero};

/// Decide feasibility of `{ rows * x = rhs, x_j >= 0 for flagged j }`.
///
/// `rows` is a list of equality constraints over `nonneg.len()`
/// variables; `rhs` holds one value per row.  Panics if the shapes are
/// inconsistent — shape errors are caller bugs, not data conditions.
pub fn linear_feasible(rows: &[Vec<Rational>], rhs: &[Rational], nonneg: &[bool]) -> bool {
    assert_eq!(rows.len(), rhs.len(), "one rhs entry per row");
    let vars = nonneg.len();
    assert!(
        rows.iter().all(|r| r.len() == vars),
        "every row needs one coefficient per variable"
    );
    if rows.is_empty() {
        return true;
    }

    // Columns of the standard-form program: one per nonnegative
    // variable, a (+,-) pair per free variable.
    let mut columns: Vec<Vec<Rational>> = Vec::new();
    for (j, &flag) in nonneg.iter().enumerate() {
        let col: Vec<Rational> = rows.iter().map(|r| r[j].clone()).collect();
        if flag {
            columns.push(col);
        } else {
            columns.push(col.clone());
            columns.push(col.into_iter().map(|v| -v).collect());
        }
    }

    let m = rows.len();
    let n = columns.len();
    // Tableau: structural columns, artificial identity, rhs column.
    // Row signs flipped so every rhs entry is >= 0.
    let mut t: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let flip = rhs[i].is_negative();
            let mut row: Vec<Rational> = (0..n)
                .map(|j| {
                    let v = columns[j][i].clone();
                    if flip {
                        -v
                    } else {
                        v
                    }
                })
                .collect();
            for k in 0..m {
                row.push(if k == i {
                    Rational::one()
                } else {
                    Rational::zero()
                });
            }
            row.push(if flip { -rhs[i].clone() } else { rhs[i].clone() });
            row
        })
        .collect();

    let total_cols = n + m;
    let rhs_col = total_cols;
    // Basis starts as the artificials; objective = sum of artificials.
    let mut basis: Vec<usize> = (0..m).map(|i| n + i).collect();
    // Reduced cost row for "minimize sum of artificials": start from
    // cost (0..0, 1..1) and subtract the artificial rows.
    let mut cost: Vec<Rational> = vec![Rational::zero(); total_cols + 1];
    for c in cost[n..total_cols].iter_mut() {
        *c = Rational::one();
    }
    for row in &t {
        for j in 0..=total_cols {
            let delta = row[j].clone();
            cost[j] = &cost[j] - &delta;
        }
    }

    // Bland: enter the smallest column index with negative reduced cost.
    while let Some(entering) = (0..total_cols).find(|&j| cost[j].is_negative()) {
        // Ratio test; Bland tie-break on the basic variable index.
        let mut leaving: Option<(usize, Rational)> = None;
        for i in 0..m {
            if !t[i][entering].is_positive() {
                continue;
            }
            let ratio = &t[i][rhs_col] / &t[i][entering];
            leaving = match leaving {
                None => Some((i, ratio)),
                Some((best_i, best)) => {
                    if ratio < best || (ratio == best && basis[i] < basis[best_i]) {
                        Some((i, ratio))
                    } else {
                        Some((best_i, best))
                    }
                }
            };
        }
        // Phase-one objective is bounded below by zero, so some row
        // always limits the entering column.
        let (pivot_row, _) = leaving.expect("phase-one column cannot be unbounded");

        // Pivot: normalize the row, eliminate the column elsewhere.
        let pivot = t[pivot_row][entering].clone();
        for v in t[pivot_row].iter_mut() {
            *v = &*v / &pivot;
        }
        let pivot_row_copy = t[pivot_row].clone();
        for (i, row) in t.iter_mut().enumerate() {
            if i == pivot_row || row[entering].is_zero() {
                continue;
            }
            let factor = row[entering].clone();
            for (v, pv) in row.iter_mut().zip(&pivot_row_copy) {
                let delta = &factor * pv;
                *v = &*v - &delta;
            }
        }
        if !cost[entering].is_zero() {
            let factor = cost[entering].clone();
            for (v, pv) in cost.iter_mut().zip(&pivot_row_copy) {
                let delta = &factor * pv;
                *v = &*v - &delta;
            }
        }
        basis[pivot_row] = entering;
    }

    // cost[rhs_col] carries minus the objective value.
    cost[rhs_col].is_zero()
}

#[cfg(test)]
mod tests {
    use super::super::{rat, ratio};
    use super::*;

    fn r(vals: &[i64]) -> Vec<Rational> {
        vals.iter().map(|&v| rat(v)).collect()
    }

    #[test]
    fn single_row_examples() {
        // x1 + x2 = 1 with both nonnegative: feasible.
        assert!(linear_feasible(&[r(&[1, 1])], &r(&[1]), &[true, true]));
        // x1 = -1 with x1 >= 0: infeasible.
        assert!(!linear_feasible(&[r(&[1])], &r(&[-1]), &[true]));
        // Same with x1 free: feasible.
        assert!(linear_feasible(&[r(&[1])], &r(&[-1]), &[false]));
    }

    #[test]
    fn no_constraints_is_feasible() {
        assert!(linear_feasible(&[], &[], &[true, true]));
    }

    #[test]
    fn inconsistent_rows_detected() {
        // x = 1 and x = 2.
        assert!(!linear_feasible(
            &[r(&[1]), r(&[1])],
            &r(&[1, 2]),
            &[true]
        ));
        // 0 = 1.
        assert!(!linear_feasible(&[r(&[0])], &r(&[1]), &[true]));
    }

    #[test]
    fn crossing_segments_meet() {
        // Convex weights on segment {(-1,0),(1,0)} and on {(0,-1),(0,1)}
        // describing a common point: x-coordinates match, y-coordinates
        // match, each pair of weights sums to one.  The segments cross at
        // the origin, so this must be feasible.
        let rows = vec![
            r(&[1, 1, 0, 0]),   // a1 + a2 = 1
            r(&[0, 0, 1, 1]),   // b1 + b2 = 1
            r(&[-1, 1, 0, 0]),  // x of first segment = 0 = x of second
            r(&[0, 0, -1, 1]),  // y of second segment = 0 = y of first
        ];
        let rhs = r(&[1, 1, 0, 0]);
        assert!(linear_feasible(&rows, &rhs, &[true, true, true, true]));
    }

    #[test]
    fn disjoint_segments_do_not_meet() {
        // Segments {(1,0),(2,0)} and {(-1,0),(-2,0)}: common point needs
        // a1 + 2 a2 = -b1 - 2 b2 with convex weights, impossible.
        let rows = vec![
            r(&[1, 1, 0, 0]),
            r(&[0, 0, 1, 1]),
            r(&[1, 2, 1, 2]), // x_left - x_right = 0, folded into one row
        ];
        let rhs = r(&[1, 1, 0]);
        assert!(!linear_feasible(&rows, &rhs, &[true; 4]));
    }

    #[test]
    fn fractional_data_stays_exact() {
        // 3x = 1 with x >= 0: feasible at x = 1/3; adding x = 1/4 breaks it.
        assert!(linear_feasible(&[vec![rat(3)]], &[rat(1)], &[true]));
        assert!(!linear_feasible(
            &[vec![rat(3)], vec![rat(1)]],
            &[rat(1), ratio(1, 4)],
            &[true]
        ));
    }

    #[test]
    fn degenerate_system_terminates() {
        // Redundant and degenerate rows exercise the anti-cycling rule.
        let rows = vec![
            r(&[1, 1, 1, 0]),
            r(&[1, 1, 1, 0]),
            r(&[1, -1, 0, 1]),
            r(&[0, 0, 0, 0]),
        ];
        let rhs = r(&[1, 1, 0, 0]);
        assert!(linear_feasible(&rows, &rhs, &[true; 4]));
    }

    // Randomized agreement with the basic-solution enumeration oracle
    // lives in `naive::tests` next to the oracle itself.
}
