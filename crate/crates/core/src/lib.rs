//! Exact counting of Birch and Tverberg partitions.
//!
//! A *Birch partition* of `k(d+1)` points in `R^d` splits the points into
//! `k` blocks of `d+1` whose convex hulls all contain the origin.  A
//! *Tverberg partition* of `(d+1)(q-1)+1` points splits them into `q`
//! blocks whose convex hulls share at least one common point.  For points
//! in general position both counts obey strong structural laws (parity,
//! factorial lower bounds, closed forms on the line); this crate computes
//! the counts exactly and ships the machinery to probe those laws.
//!
//! All geometry runs over arbitrary-precision rationals — no floating
//! point anywhere — so every predicate is decided, never estimated.
//!
//! Layout:
//! * [`kernel`] — rational scalars, points, orientation/containment
//!   predicates, and an exact linear feasibility solver.
//! * [`birch`] — valid-block precomputation and canonical enumeration of
//!   Birch partitions; the pair lemma check.
//! * [`tverberg`] — Tverberg partition enumeration restricted to the
//!   admissible block-size signatures, classification, and lower bounds.
//! * [`configs`] — deterministic generators and exact file I/O.
//! * [`naive`] — deliberately unoptimized reference implementations used
//!   by the test suite to cross-check every counter.

pub mod birch;
pub mod configs;
pub mod kernel;
pub mod naive;
pub mod tverberg;

pub use kernel::{Configuration, Point, Rational, Sign};
