//! Small dense exact linear algebra: determinant signs, rank, square
//! solves.  Plain fraction-arithmetic Gaussian elimination — matrices
//! here are tiny (at most `d+2` rows), so simplicity beats cleverness.

// The elimination loops index two rows of the same matrix at once;
// iterator forms would need split_at_mut gymnastics for no gain.
#![allow(clippy::needless_range_loop)]

use super::{Rational, Sign};
use num::{Signed, Zero};

/// Sign of the determinant of a square matrix.  Consumes the matrix.
pub(crate) fn det_sign(mut m: Vec<Vec<Rational>>) -> Sign {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n));
    let mut swaps = 0usize;
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Sign::Zero;
        };
        if pivot_row != col {
            m.swap(col, pivot_row);
            swaps += 1;
        }
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &m[col][col];
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &delta;
            }
        }
    }
    let mut negatives = swaps;
    for (i, row) in m.iter().enumerate() {
        if row[i].is_negative() {
            negatives += 1;
        }
    }
    if negatives.is_multiple_of(2) {
        Sign::Positive
    } else {
        Sign::Negative
    }
}

/// Rank of a rectangular matrix.
pub(crate) fn rank(mut m: Vec<Vec<Rational>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for col in 0..cols {
        let Some(pivot_row) = (r..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(r, pivot_row);
        for i in r + 1..rows {
            if m[i][col].is_zero() {
                continue;
            }
            let factor = &m[i][col] / &m[r][col];
            for c in col..cols {
                let delta = &factor * &m[r][c];
                m[i][c] = &m[i][c] - &delta;
            }
        }
        r += 1;
        if r == rows {
            break;
        }
    }
    r
}

/// Solve the square system `m * x = rhs`.  `None` if `m` is singular.
pub(crate) fn solve_square(
    mut m: Vec<Vec<Rational>>,
    mut rhs: Vec<Rational>,
) -> Option<Vec<Rational>> {
    let n = m.len();
    debug_assert_eq!(rhs.len(), n);
    for col in 0..n {
        let pivot_row = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(col, pivot_row);
        rhs.swap(col, pivot_row);
        for r in 0..n {
            if r == col || m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &m[col][col];
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &delta;
            }
            let delta = &factor * &rhs[col];
            rhs[r] = &rhs[r] - &delta;
        }
    }
    Some(
        (0..n)
            .map(|i| &rhs[i] / &m[i][i])
            .collect(),
    )
}
