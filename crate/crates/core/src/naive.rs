//! Slow reference implementations used to cross-check the real ones.
//!
//! Everything here is deliberately written on a different route from the
//! production code: determinants by Laplace expansion instead of
//! elimination, containment by explicit barycentric coordinates or by
//! linear programming instead of orientation signs, partition counting
//! by unrestricted enumeration instead of pruned canonical search, and
//! linear feasibility by enumerating basic solutions instead of
//! pivoting.  None of it is fast; all of it is obviously correct.  The
//! test suites (unit, integration, acceptance) compare the optimized
//! counters against these on small instances.

use crate::kernel::{linear_feasible, Configuration, Point, Rational};
use itertools::Itertools;
use num::{One, Signed, Zero};

/// Determinant by recursive Laplace expansion along the first row.
pub fn laplace_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return Rational::one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = Rational::zero();
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = entry * &laplace_det(&minor);
        if j % 2 == 0 {
            acc = &acc + &term;
        } else {
            acc = &acc - &term;
        }
    }
    acc
}

/// Barycentric-coordinate test: the origin written as an affine
/// combination of the `d+1` vertices has all weights strictly positive
/// iff it lies in the open interior.  `None` when the simplex is
/// degenerate.  Weights come from Cramer's rule, so this path shares no
/// code with the orientation predicate.
pub fn barycentric_contains_origin(simplex: &[Point]) -> Option<bool> {
    let d = simplex[0].dim();
    assert_eq!(simplex.len(), d + 1, "need d+1 vertices");
    // Columns are the lifted vertices (coords, then 1); solve M w = e_{d+1}.
    let m: Vec<Vec<Rational>> = (0..=d)
        .map(|row| {
            simplex
                .iter()
                .map(|p| {
                    if row < d {
                        p.coord(row).clone()
                    } else {
                        Rational::one()
                    }
                })
                .collect()
        })
        .collect();
    let det = laplace_det(&m);
    if det.is_zero() {
        return None;
    }
    for j in 0..=d {
        let mut replaced = m.clone();
        for (row, mrow) in replaced.iter_mut().enumerate() {
            mrow[j] = if row < d {
                Rational::zero()
            } else {
                Rational::one()
            };
        }
        let w = laplace_det(&replaced) / det.clone();
        if !w.is_positive() {
            return Some(false);
        }
    }
    Some(true)
}

/// Origin-in-hull decided by linear programming: convex weights on the
/// given points summing to the zero vector.  Closed containment.
pub fn contains_origin_lp(points: &[Point]) -> bool {
    let d = points[0].dim();
    let k = points.len();
    let mut rows: Vec<Vec<Rational>> = Vec::with_capacity(d + 1);
    for c in 0..d {
        rows.push(points.iter().map(|p| p.coord(c).clone()).collect());
    }
    rows.push(vec![Rational::one(); k]);
    let mut rhs = vec![Rational::zero(); d];
    rhs.push(Rational::one());
    linear_feasible(&rows, &rhs, &vec![true; k])
}

/// Linear feasibility by basic-solution enumeration.
///
/// If `{Ax = b, x >= 0}` (after splitting free variables) has any
/// solution, it has one whose support columns are linearly independent,
/// hence of size at most the row count.  Try every such support.
/// Exponential, fine for the handful of variables the tests use.
pub fn feasible_by_basic_solutions(
    rows: &[Vec<Rational>],
    rhs: &[Rational],
    nonneg: &[bool],
) -> bool {
    if rows.is_empty() {
        return true;
    }
    let mut cols: Vec<Vec<Rational>> = Vec::new();
    for (j, &flag) in nonneg.iter().enumerate() {
        let col: Vec<Rational> = rows.iter().map(|r| r[j].clone()).collect();
        if flag {
            cols.push(col);
        } else {
            cols.push(col.clone());
            cols.push(col.into_iter().map(|v| -v).collect());
        }
    }
    if rhs.iter().all(|v| v.is_zero()) {
        return true; // empty support
    }
    let m = rows.len();
    for size in 1..=m.min(cols.len()) {
        for support in (0..cols.len()).combinations(size) {
            let picked: Vec<&Vec<Rational>> = support.iter().map(|&j| &cols[j]).collect();
            if let Some(y) = solve_independent_columns(&picked, rhs) {
                if y.iter().all(|v| !v.is_negative()) {
                    return true;
                }
            }
        }
    }
    false
}

/// Solve `cols * y = b` where the columns are expected independent.
/// `None` if they are dependent or the system is inconsistent.
fn solve_independent_columns(cols: &[&Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let m = b.len();
    let t = cols.len();
    let mut aug: Vec<Vec<Rational>> = (0..m)
        .map(|i| {
            let mut row: Vec<Rational> = cols.iter().map(|c| c[i].clone()).collect();
            row.push(b[i].clone());
            row
        })
        .collect();
    let mut pivot_row_of: Vec<usize> = Vec::with_capacity(t);
    let mut r = 0;
    for c in 0..t {
        let pr = (r..m).find(|&i| !aug[i][c].is_zero())?; // dependent column
        aug.swap(r, pr);
        let pivot = aug[r][c].clone();
        for v in aug[r].iter_mut() {
            *v = &*v / &pivot;
        }
        let prow = aug[r].clone();
        for (i, row) in aug.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (v, pv) in row.iter_mut().zip(&prow) {
                let delta = &f * pv;
                *v = &*v - &delta;
            }
        }
        pivot_row_of.push(r);
        r += 1;
    }
    for row in aug.iter().skip(r) {
        if !row[t].is_zero() {
            return None; // inconsistent
        }
    }
    Some(pivot_row_of.iter().map(|&i| aug[i][t].clone()).collect())
}

/// Unrestricted Birch counter: every partition of the points into
/// blocks of size `d+1` is generated (no valid-block precomputation)
/// and every block is tested with the LP containment path.
pub fn count_birch_naive(x: &Configuration) -> u64 {
    let d = x.dim();
    let n = x.len();
    assert!(n > 0 && n.is_multiple_of(d + 1), "need k(d+1) points");
    let mut count = 0u64;
    let all: Vec<usize> = (0..n).collect();
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    enumerate_fixed_size_partitions(&all, d + 1, &mut blocks, &mut |blocks| {
        let good = blocks.iter().all(|b| {
            let pts: Vec<Point> = b.iter().map(|&i| x.point(i).clone()).collect();
            contains_origin_lp(&pts)
        });
        if good {
            count += 1;
        }
    });
    count
}

fn enumerate_fixed_size_partitions(
    unassigned: &[usize],
    block_size: usize,
    blocks: &mut Vec<Vec<usize>>,
    visit: &mut impl FnMut(&[Vec<usize>]),
) {
    if unassigned.is_empty() {
        visit(blocks);
        return;
    }
    let anchor = unassigned[0];
    let rest = &unassigned[1..];
    for mates in rest.iter().copied().combinations(block_size - 1) {
        let mut block = vec![anchor];
        block.extend(&mates);
        let remaining: Vec<usize> = rest.iter().copied().filter(|i| !mates.contains(i)).collect();
        blocks.push(block);
        enumerate_fixed_size_partitions(&remaining, block_size, blocks, visit);
        blocks.pop();
    }
}

/// Unrestricted Tverberg counter: every partition of the points into
/// exactly `q` nonempty blocks of arbitrary sizes is generated and
/// checked with a hull-intersection LP encoded here, independently of
/// the production encoder.
pub fn count_tverberg_naive(x: &Configuration, q: usize) -> u64 {
    let n = x.len();
    assert!(q >= 2 && n >= q);
    let mut count = 0u64;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    enumerate_q_partitions(0, n, q, &mut blocks, &mut |blocks| {
        if hulls_meet_lp(x, blocks) {
            count += 1;
        }
    });
    count
}

fn enumerate_q_partitions(
    next: usize,
    n: usize,
    q: usize,
    blocks: &mut Vec<Vec<usize>>,
    visit: &mut impl FnMut(&[Vec<usize>]),
) {
    if next == n {
        if blocks.len() == q {
            visit(blocks);
        }
        return;
    }
    let left_after = n - next - 1;
    for i in 0..blocks.len() {
        // Enough elements must remain to open the missing blocks.
        if left_after >= q - blocks.len() {
            blocks[i].push(next);
            enumerate_q_partitions(next + 1, n, q, blocks, visit);
            blocks[i].pop();
        }
    }
    if blocks.len() < q {
        blocks.push(vec![next]);
        enumerate_q_partitions(next + 1, n, q, blocks, visit);
        blocks.pop();
    }
}

/// Hull-intersection test used by the unrestricted counter.  Encodes
/// one common point variable-free: blocks beyond the first must match
/// the first block's convex combination coordinate by coordinate.
pub fn hulls_meet_lp(x: &Configuration, blocks: &[Vec<usize>]) -> bool {
    let d = x.dim();
    let nvars: usize = blocks.iter().map(|b| b.len()).sum();
    let offsets: Vec<usize> = blocks
        .iter()
        .scan(0, |acc, b| {
            let o = *acc;
            *acc += b.len();
            Some(o)
        })
        .collect();
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (bi, block) in blocks.iter().enumerate() {
        let mut row = vec![Rational::zero(); nvars];
        for slot in 0..block.len() {
            row[offsets[bi] + slot] = Rational::one();
        }
        rows.push(row);
        rhs.push(Rational::one());
    }
    for bi in 1..blocks.len() {
        for c in 0..d {
            let mut row = vec![Rational::zero(); nvars];
            for (slot, &pt) in blocks[bi].iter().enumerate() {
                row[offsets[bi] + slot] = x.point(pt).coord(c).clone();
            }
            for (slot, &pt) in blocks[0].iter().enumerate() {
                row[offsets[0] + slot] = -x.point(pt).coord(c).clone();
            }
            rows.push(row);
            rhs.push(Rational::zero());
        }
    }
    linear_feasible(&rows, &rhs, &vec![true; nvars])
}
