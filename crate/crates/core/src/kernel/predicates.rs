//! Orientation and containment predicates.

use super::linalg::{det_sign, rank, solve_square};
use super::{Configuration, KernelError, Point, Rational, Sign};
use itertools::Itertools;
use num::{One, Signed};

/// Orientation of an ordered `(d+1)`-tuple of points in `R^d`: the sign
/// of the determinant of the matrix whose rows are the points with an
/// appended `1`.  `Zero` exactly when the tuple is affinely dependent.
pub fn orientation(simplex: &[Point]) -> Result<Sign, KernelError> {
    let d = check_uniform_dim(simplex)?;
    if simplex.len() != d + 1 {
        return Err(KernelError::InvalidInput(format!(
            "orientation needs d+1 = {} points, got {}",
            d + 1,
            simplex.len()
        )));
    }
    Ok(det_sign(lifted_rows(simplex)))
}

fn lifted_rows(points: &[Point]) -> Vec<Vec<Rational>> {
    points
        .iter()
        .map(|p| {
            let mut row = p.coords().to_vec();
            row.push(Rational::one());
            row
        })
        .collect()
}

fn check_uniform_dim(points: &[Point]) -> Result<usize, KernelError> {
    let Some(first) = points.first() else {
        return Err(KernelError::InvalidInput("empty point list".into()));
    };
    let d = first.dim();
    if points.iter().any(|p| p.dim() != d) {
        return Err(KernelError::InvalidInput(
            "points of mixed dimension".into(),
        ));
    }
    Ok(d)
}

/// Whether `x` (together with `p`, if given) is in general position:
/// every subset of size `m <= d+1` is affinely independent.  Checked
/// exhaustively by exact rank computation; in particular any duplicate
/// point or any `d+1` points on a common hyperplane fail.
pub fn is_general_position(x: &Configuration, p: Option<&Point>) -> Result<bool, KernelError> {
    let d = x.dim();
    if let Some(extra) = p {
        if extra.dim() != d {
            return Err(KernelError::InvalidInput(format!(
                "extra point has {} coordinates, expected {}",
                extra.dim(),
                d
            )));
        }
    }
    let pts: Vec<&Point> = x.points().iter().chain(p).collect();
    let n = pts.len();
    for m in 2..=(d + 1).min(n) {
        for subset in (0..n).combinations(m) {
            let base = pts[subset[0]];
            let diffs: Vec<Vec<Rational>> = subset[1..]
                .iter()
                .map(|&i| pts[i].sub(base).coords().to_vec())
                .collect();
            if rank(diffs) != m - 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Whether the origin lies strictly inside the convex hull of the
/// `d+1` points of `s`.
///
/// Test: replacing vertex `i` by the origin yields a tuple whose
/// orientation, relative to the original, carries the sign of the
/// origin's `i`-th barycentric weight.  All weights positive: inside.
/// Any weight negative: outside.  A zero weight with none negative
/// puts the origin exactly on the hull boundary; that case is rejected
/// rather than given a convention — it cannot occur for inputs in
/// general position with respect to the origin.
pub fn simplex_contains_origin(s: &[Point]) -> Result<bool, KernelError> {
    let base = orientation(s)?;
    if base == Sign::Zero {
        return Err(KernelError::DegenerateSimplex(
            "vertices are affinely dependent".into(),
        ));
    }
    let d = s[0].dim();
    let mut zero_weight = false;
    for i in 0..s.len() {
        let mut replaced = s.to_vec();
        replaced[i] = Point::origin(d);
        match det_sign(lifted_rows(&replaced)) {
            Sign::Zero => zero_weight = true,
            sign if sign != base => return Ok(false),
            _ => {}
        }
    }
    if zero_weight {
        return Err(KernelError::DegenerateSimplex(
            "origin lies on the hull boundary".into(),
        ));
    }
    Ok(true)
}

/// Whether `w` lies in the strictly positive cone spanned by the `d`
/// linearly independent generators `s`: solve `sum_i lambda_i s_i = w`
/// and test `lambda_i > 0` for all `i`.
pub fn cone_contains(w: &Point, s: &[Point]) -> Result<bool, KernelError> {
    let d = check_uniform_dim(s)?;
    if w.dim() != d {
        return Err(KernelError::InvalidInput(format!(
            "target has {} coordinates, expected {}",
            w.dim(),
            d
        )));
    }
    if s.len() != d {
        return Err(KernelError::InvalidInput(format!(
            "cone in R^{} needs exactly {} generators, got {}",
            d,
            d,
            s.len()
        )));
    }
    // Columns are the generators.
    let matrix: Vec<Vec<Rational>> = (0..d)
        .map(|row| s.iter().map(|g| g.coord(row).clone()).collect())
        .collect();
    let Some(lambda) = solve_square(matrix, w.coords().to_vec()) else {
        return Err(KernelError::SingularGenerators);
    };
    Ok(lambda.iter().all(|l| l.is_positive()))
}
