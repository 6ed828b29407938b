//! Exact geometric kernel.
//!
//! Scalars are arbitrary-precision rationals ([`Rational`]); every
//! predicate below returns a decision, not an approximation.  The three
//! geometric predicates (`orientation`, `simplex_contains_origin`,
//! `cone_contains`) reduce to determinant signs and exact linear solves;
//! [`linear_feasible`] decides equality systems with sign-constrained
//! variables by exact phase-one pivoting.

mod feasible;
mod linalg;
mod predicates;

pub use feasible::linear_feasible;
pub use predicates::{cone_contains, is_general_position, orientation, simplex_contains_origin};

use num::{BigInt, BigRational, Signed, Zero};
use thiserror::Error;

/// Exact scalar type: arbitrary-precision rational, always in lowest
/// terms with positive denominator (maintained by `num`).
pub type Rational = BigRational;

/// Rational from an integer.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair.  Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

#[derive(Debug, Error)]
pub enum KernelError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("degenerate simplex: {0}")]
    DegenerateSimplex(String),
    #[error("cone generators are linearly dependent")]
    SingularGenerators,
}

/// Sign of an exact scalar.  The ordering `Negative < Zero < Positive`
/// matches the ordering of the underlying values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Sign {
    Negative,
    Zero,
    Positive,
}

impl Sign {
    pub fn of(r: &Rational) -> Sign {
        if r.is_zero() {
            Sign::Zero
        } else if r.is_positive() {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Negative => Sign::Positive,
            Sign::Zero => Sign::Zero,
            Sign::Positive => Sign::Negative,
        }
    }
}

/// A point of `R^d` with exact rational coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Point {
    coords: Vec<Rational>,
}

impl Point {
    pub fn new(coords: Vec<Rational>) -> Point {
        Point { coords }
    }

    pub fn from_ints(coords: &[i64]) -> Point {
        Point::new(coords.iter().map(|&c| rat(c)).collect())
    }

    pub fn origin(dim: usize) -> Point {
        Point::new(vec![Rational::zero(); dim])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn coord(&self, i: usize) -> &Rational {
        &self.coords[i]
    }

    pub fn is_origin(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// Coordinate-wise sum `self + other`.
    pub fn add(&self, other: &Point) -> Point {
        debug_assert_eq!(self.dim(), other.dim());
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Coordinate-wise difference `self - other`.
    pub fn sub(&self, other: &Point) -> Point {
        debug_assert_eq!(self.dim(), other.dim());
        Point::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// The point scaled by `factor`.
    pub fn scale(&self, factor: &Rational) -> Point {
        Point::new(self.coords.iter().map(|c| c * factor).collect())
    }
}

/// A finite labelled point configuration in fixed dimension.
///
/// Invariants: every point has exactly `dim` coordinates and no two
/// points coincide.  Both are enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    dim: usize,
    points: Vec<Point>,
    label: String,
}

impl Configuration {
    pub fn new(
        dim: usize,
        points: Vec<Point>,
        label: impl Into<String>,
    ) -> Result<Configuration, KernelError> {
        if dim == 0 {
            return Err(KernelError::InvalidInput("dimension must be >= 1".into()));
        }
        for (i, p) in points.iter().enumerate() {
            if p.dim() != dim {
                return Err(KernelError::InvalidInput(format!(
                    "point {} has {} coordinates, expected {}",
                    i,
                    p.dim(),
                    dim
                )));
            }
        }
        let mut sorted = points.clone();
        sorted.sort();
        if sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(KernelError::InvalidInput(
                "configuration contains duplicate points".into(),
            ));
        }
        Ok(Configuration {
            dim,
            points,
            label: label.into(),
        })
    }

    /// Convenience constructor from integer coordinate rows.
    pub fn from_int_rows(dim: usize, rows: &[&[i64]]) -> Result<Configuration, KernelError> {
        Configuration::new(dim, rows.iter().map(|r| Point::from_ints(r)).collect(), "")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn point(&self, i: usize) -> &Point {
        &self.points[i]
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Configuration {
        self.label = label.into();
        self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sign_order_matches_value_order() {
        assert!(Sign::Negative < Sign::Zero);
        assert!(Sign::Zero < Sign::Positive);
        assert_eq!(Sign::of(&ratio(-1, 3)), Sign::Negative);
        assert_eq!(Sign::of(&rat(0)), Sign::Zero);
        assert_eq!(Sign::of(&ratio(7, 2)), Sign::Positive);
        assert_eq!(Sign::Positive.flip(), Sign::Negative);
        assert_eq!(Sign::Zero.flip(), Sign::Zero);
    }

    #[test]
    fn ratio_normalizes() {
        assert_eq!(ratio(2, 4), ratio(1, 2));
        assert_eq!(ratio(1, -2), ratio(-1, 2));
        assert_eq!(ratio(-3, -6), ratio(1, 2));
    }

    #[test]
    fn configuration_rejects_dimension_mismatch() {
        let pts = vec![Point::from_ints(&[1, 0]), Point::from_ints(&[1])];
        assert!(matches!(
            Configuration::new(2, pts, ""),
            Err(KernelError::InvalidInput(_))
        ));
    }

    #[test]
    fn configuration_rejects_duplicates() {
        let pts = vec![
            Point::from_ints(&[1, 0]),
            Point::from_ints(&[0, 1]),
            Point::from_ints(&[1, 0]),
        ];
        assert!(matches!(
            Configuration::new(2, pts, ""),
            Err(KernelError::InvalidInput(_))
        ));
    }

    #[test]
    fn duplicate_check_is_exact_not_representational() {
        // 1/2 and 2/4 are the same rational; construction must see that.
        let pts = vec![
            Point::new(vec![ratio(1, 2)]),
            Point::new(vec![ratio(2, 4)]),
        ];
        assert!(Configuration::new(1, pts, "").is_err());
    }
}
