//! Tverberg partitions: split `(d+1)(q-1)+1` points into `q` blocks
//! whose convex hulls share at least one common point.
//!
//! For points in general position only two block-size shapes can occur:
//! one singleton whose point lies in `q-1` full simplices (type I), or
//! `k` low-dimensional blocks meeting in a point that also lies in
//! `q-k` full simplices (type II, `1 < k <= min(d,q)`).  The counter
//! therefore enumerates only partitions with those size signatures —
//! the unrestricted reference counter in [`crate::naive`] exists to
//! validate exactly this restriction — and decides each candidate with
//! an exact hull-intersection feasibility check.

use crate::birch::{factorial, Partition};
use crate::kernel::{self, linear_feasible, Configuration, KernelError, Point, Rational};
use itertools::Itertools;
use num::{BigInt, BigUint, One, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TverbergError {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("configuration is not in general position")]
    NotGeneralPosition,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("unclassifiable partition: {0}")]
    UnclassifiablePartition(String),
    #[error("{0} is not a prime power")]
    NotPrimePower(usize),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// Shape of a Tverberg partition in general position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionType {
    /// One singleton `{vertex}`; every other block is a full simplex
    /// containing that vertex.
    TypeI { vertex: usize },
    /// `k` blocks of size at most `d` whose hulls meet in a point lying
    /// in the remaining `q-k` full simplices.
    TypeII { k: usize },
}

impl PartitionType {
    pub fn class(self) -> TypeClass {
        match self {
            PartitionType::TypeI { .. } => TypeClass::I,
            PartitionType::TypeII { k } => TypeClass::II(k),
        }
    }
}

/// Partition type with the witness data dropped; used as a tally key.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum TypeClass {
    I,
    II(usize),
}

impl fmt::Display for TypeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TypeClass::I => write!(f, "I"),
            TypeClass::II(k) => write!(f, "II(k={})", k),
        }
    }
}

/// Result of a Tverberg count.
#[derive(Debug, Clone)]
pub struct TverbergReport {
    pub total: u64,
    /// Counts per partition shape; values sum to `total`.
    pub by_type: BTreeMap<TypeClass, u64>,
    pub q: usize,
    pub d: usize,
    /// All counted partitions when collection was requested, in
    /// canonical enumeration order.
    pub witnesses: Option<Vec<Partition>>,
}

/// Whether the convex hulls of the given blocks share a common point.
///
/// Decided exactly: barycentric weights per block, coupled through the
/// requirement that every block's weighted point equals the first
/// block's.  A cheap per-axis projection test short-circuits the
/// obvious misses before the feasibility solve.
pub fn hulls_have_common_point(blocks: &[Vec<Point>]) -> Result<bool, TverbergError> {
    if blocks.is_empty() || blocks.iter().any(|b| b.is_empty()) {
        return Err(TverbergError::InvalidInput(
            "every block needs at least one point".into(),
        ));
    }
    let d = blocks[0][0].dim();
    if blocks.iter().flatten().any(|p| p.dim() != d) {
        return Err(TverbergError::InvalidInput(
            "blocks contain points of mixed dimension".into(),
        ));
    }

    // A common point projects into every block's coordinate range.
    for c in 0..d {
        let mut lo: Option<Rational> = None;
        let mut hi: Option<Rational> = None;
        for b in blocks {
            let bmin = b.iter().map(|p| p.coord(c)).min().unwrap().clone();
            let bmax = b.iter().map(|p| p.coord(c)).max().unwrap().clone();
            lo = Some(match lo {
                Some(v) => v.max(bmin),
                None => bmin,
            });
            hi = Some(match hi {
                Some(v) => v.min(bmax),
                None => bmax,
            });
        }
        if lo.unwrap() > hi.unwrap() {
            return Ok(false);
        }
    }

    let nvars: usize = blocks.iter().map(|b| b.len()).sum();
    let offsets: Vec<usize> = blocks
        .iter()
        .scan(0usize, |acc, b| {
            let o = *acc;
            *acc += b.len();
            Some(o)
        })
        .collect();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    let mut rhs: Vec<Rational> = Vec::new();
    for (bi, block) in blocks.iter().enumerate() {
        let mut row = vec![Rational::zero(); nvars];
        for slot in 0..block.len() {
            row[offsets[bi] + slot] = Rational::one();
        }
        rows.push(row);
        rhs.push(Rational::one());
    }
    for (bi, block) in blocks.iter().enumerate().skip(1) {
        for c in 0..d {
            let mut row = vec![Rational::zero(); nvars];
            for (slot, p) in block.iter().enumerate() {
                row[offsets[bi] + slot] = p.coord(c).clone();
            }
            for (slot, p) in blocks[0].iter().enumerate() {
                row[offsets[0] + slot] = -p.coord(c).clone();
            }
            rows.push(row);
            rhs.push(Rational::zero());
        }
    }
    Ok(linear_feasible(&rows, &rhs, &vec![true; nvars]))
}

/// The block-size signatures a Tverberg partition of points in general
/// position can have: sizes ascending, type I first, then type II by
/// increasing `k`.
fn admissible_signatures(d: usize, q: usize) -> Vec<Vec<usize>> {
    let mut sigs = Vec::new();
    let mut type_i = vec![1];
    type_i.extend(std::iter::repeat_n(d + 1, q - 1));
    sigs.push(type_i);
    for k in 2..=d.min(q) {
        let target = (d + 1) * k - d;
        let mut parts = Vec::new();
        collect_bounded_multisets(k, target, 1, d, &mut Vec::new(), &mut parts);
        for small in parts {
            let mut sig = small;
            sig.extend(std::iter::repeat_n(d + 1, q - k));
            sigs.push(sig);
        }
    }
    sigs
}

/// Nondecreasing multisets of `count` values in `min..=max` with the
/// given sum.
fn collect_bounded_multisets(
    count: usize,
    sum: usize,
    min: usize,
    max: usize,
    acc: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if count == 0 {
        if sum == 0 {
            out.push(acc.clone());
        }
        return;
    }
    for v in min..=max.min(sum) {
        // Even the largest remaining values must be able to reach `sum`.
        if v * count > sum || sum > v + max * (count - 1) {
            continue;
        }
        acc.push(v);
        collect_bounded_multisets(count - 1, sum - v, v, max, acc, out);
        acc.pop();
    }
}

/// Number of candidate partitions the restricted Tverberg enumeration
/// ranges over: the sum over admissible signatures of the multinomial
/// partition counts.
pub fn tverberg_candidate_partitions(d: usize, q: usize) -> BigUint {
    let n = (d + 1) * (q - 1) + 1;
    let fact = |m: usize| -> BigUint { (1..=m as u64).map(BigUint::from).product() };
    let mut total = BigUint::zero();
    for sig in admissible_signatures(d, q) {
        let mut denom = BigUint::one();
        for &s in &sig {
            denom *= fact(s);
        }
        for (_, group) in &sig.iter().chunk_by(|&&s| s) {
            denom *= fact(group.count());
        }
        total += fact(n) / denom;
    }
    total
}

/// Count the Tverberg partitions of `x` into `q` blocks, optionally
/// collecting all of them.
///
/// `x` must consist of `(d+1)(q-1)+1` points in general position.  The
/// enumeration is canonical (the block holding the smallest unassigned
/// index is chosen at each level) and restricted to the admissible size
/// signatures; every candidate is decided by [`hulls_have_common_point`].
/// Partial partitions whose hulls already fail to meet are pruned —
/// adding blocks can only shrink the intersection.  The count is
/// deterministic and independent of thread count.
pub fn count_tverberg(
    x: &Configuration,
    q: usize,
    collect_witnesses: bool,
) -> Result<TverbergReport, TverbergError> {
    let d = x.dim();
    let n = x.len();
    if q < 2 {
        return Err(TverbergError::SizeMismatch(format!(
            "q must be at least 2, got {}",
            q
        )));
    }
    let expected = (d + 1) * (q - 1) + 1;
    if n != expected {
        return Err(TverbergError::SizeMismatch(format!(
            "|X| = {} but q = {} in dimension {} needs (d+1)(q-1)+1 = {}",
            n, q, d, expected
        )));
    }
    if n > 64 {
        return Err(TverbergError::SizeMismatch(format!(
            "{} points exceed the supported maximum of 64",
            n
        )));
    }
    if !kernel::is_general_position(x, None)? {
        return Err(TverbergError::NotGeneralPosition);
    }

    // Top-level tasks: one per (signature, block containing index 0);
    // each is explored sequentially, results combine in task order.
    struct Task {
        remaining: Vec<usize>,
        first_block: Vec<usize>,
    }
    let mut tasks = Vec::new();
    for sig in admissible_signatures(d, q) {
        for s in sig.iter().copied().dedup() {
            let mut remaining = sig.clone();
            remaining.remove(remaining.iter().position(|&v| v == s).unwrap());
            for mates in (1..n).combinations(s - 1) {
                let mut first = vec![0];
                first.extend(&mates);
                tasks.push(Task {
                    remaining: remaining.clone(),
                    first_block: first,
                });
            }
        }
    }

    type Branch = Result<(u64, BTreeMap<TypeClass, u64>, Vec<Partition>), TverbergError>;
    let branches: Vec<Branch> = tasks
            .par_iter()
            .map(|task| {
                let mut blocks = vec![task.first_block.clone()];
                let mut hulls = vec![points_of(x, &task.first_block)];
                let mut remaining = task.remaining.clone();
                let mut tally = BTreeMap::new();
                let mut witnesses = Vec::new();
                let count = explore(
                    x,
                    q,
                    &mut remaining,
                    &mut blocks,
                    &mut hulls,
                    collect_witnesses,
                    &mut tally,
                    &mut witnesses,
                )?;
                Ok((count, tally, witnesses))
            })
            .collect();

    let mut total = 0u64;
    let mut by_type: BTreeMap<TypeClass, u64> = BTreeMap::new();
    let mut witnesses = collect_witnesses.then(Vec::new);
    for branch in branches {
        let (c, tally, wits) = branch?;
        total += c;
        for (class, v) in tally {
            *by_type.entry(class).or_insert(0) += v;
        }
        if let Some(all) = witnesses.as_mut() {
            all.extend(wits);
        }
    }
    debug_assert_eq!(total, by_type.values().sum::<u64>());
    Ok(TverbergReport {
        total,
        by_type,
        q,
        d,
        witnesses,
    })
}

fn points_of(x: &Configuration, block: &[usize]) -> Vec<Point> {
    block.iter().map(|&i| x.point(i).clone()).collect()
}

#[allow(clippy::too_many_arguments)]
fn explore(
    x: &Configuration,
    q: usize,
    remaining: &mut Vec<usize>,
    blocks: &mut Vec<Vec<usize>>,
    hulls: &mut Vec<Vec<Point>>,
    collect: bool,
    tally: &mut BTreeMap<TypeClass, u64>,
    witnesses: &mut Vec<Partition>,
) -> Result<u64, TverbergError> {
    // The intersection already failed upstream or gets checked when the
    // newest block lands; checking here, once per node, keeps every
    // counted leaf certified by the full predicate.
    if blocks.len() >= 2 && !hulls_have_common_point(hulls)? {
        return Ok(0);
    }
    if remaining.is_empty() {
        let partition =
            Partition::new(blocks.clone()).expect("enumeration emits canonical partitions");
        let ptype = classify(&partition, x, q)?;
        *tally.entry(ptype.class()).or_insert(0) += 1;
        if collect {
            witnesses.push(partition);
        }
        return Ok(1);
    }

    let assigned: Vec<bool> = {
        let mut a = vec![false; x.len()];
        for b in blocks.iter() {
            for &i in b {
                a[i] = true;
            }
        }
        a
    };
    let anchor = assigned.iter().position(|&v| !v).expect("sizes sum to n");
    let free: Vec<usize> = (anchor + 1..x.len()).filter(|&i| !assigned[i]).collect();

    let mut count = 0;
    let sizes: Vec<usize> = remaining.iter().copied().dedup().collect();
    for s in sizes {
        let pos = remaining.iter().position(|&v| v == s).unwrap();
        remaining.remove(pos);
        for mates in free.iter().copied().combinations(s - 1) {
            let mut block = vec![anchor];
            block.extend(&mates);
            hulls.push(points_of(x, &block));
            blocks.push(block);
            count += explore(x, q, remaining, blocks, hulls, collect, tally, witnesses)?;
            blocks.pop();
            hulls.pop();
        }
        remaining.insert(pos, s);
    }
    Ok(count)
}

/// Classify a Tverberg partition of `x` by its block-size shape.
pub fn classify(
    p: &Partition,
    x: &Configuration,
    q: usize,
) -> Result<PartitionType, TverbergError> {
    let d = x.dim();
    let sizes = p.block_sizes();
    if p.blocks().len() != q || p.ground_size() != x.len() {
        return Err(TverbergError::UnclassifiablePartition(format!(
            "expected {} blocks over {} points, got {} blocks over {}",
            q,
            x.len(),
            p.blocks().len(),
            p.ground_size()
        )));
    }
    let singletons = sizes.iter().filter(|&&s| s == 1).count();
    let fulls = sizes.iter().filter(|&&s| s == d + 1).count();
    if singletons == 1 && fulls == q - 1 {
        let vertex = p
            .blocks()
            .iter()
            .find(|b| b.len() == 1)
            .expect("counted above")[0];
        return Ok(PartitionType::TypeI { vertex });
    }
    let smalls: Vec<usize> = sizes.iter().copied().filter(|&s| s <= d).collect();
    let k = smalls.len();
    if k >= 2
        && k <= d.min(q)
        && fulls == q - k
        && smalls.iter().sum::<usize>() == (d + 1) * k - d
    {
        return Ok(PartitionType::TypeII { k });
    }
    Err(TverbergError::UnclassifiablePartition(format!(
        "block sizes {:?} fit neither one singleton plus full simplices \
         nor 1<k<=min(d,q) small blocks plus full simplices",
        sizes
    )))
}

/// Guaranteed minimum number of Tverberg partitions: `(q-d)!` in
/// general (1 when `q <= d`), sharpened to `(q-1)!` when a type I
/// partition exists and `(q-k)!` when a type II partition with `k`
/// small blocks exists.
pub fn tverberg_lower_bound(q: usize, d: usize, observed: Option<PartitionType>) -> u64 {
    match observed {
        None => {
            if q > d {
                factorial(q - d)
            } else {
                1
            }
        }
        Some(PartitionType::TypeI { .. }) => factorial(q - 1),
        Some(PartitionType::TypeII { k }) => factorial(q - k),
    }
}

/// Largest prime power decomposition: `Some((p, r))` iff `q == p^r`.
fn prime_power(q: usize) -> Option<(usize, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q {
        if q.is_multiple_of(p) {
            let mut rest = q;
            let mut r = 0;
            while rest.is_multiple_of(p) {
                rest /= p;
                r += 1;
            }
            return (rest == 1).then_some((p, r));
        }
        p += 1;
    }
    Some((q, 1))
}

/// Exact evaluation of the prime-power lower bound on the number of
/// Tverberg partitions: for `q = p^r` and `N = (d+1)(q-1)`,
///
/// ```text
///   1/(q-1)!  *  ( q/(r+1) )^ceil(N/2)
/// ```
///
/// Returned as an exact rational; rejects `q` with more than one prime
/// factor.
pub fn topological_lower_bound(q: usize, d: usize) -> Result<Rational, TverbergError> {
    if d < 1 {
        return Err(TverbergError::InvalidInput(
            "dimension must be at least 1".into(),
        ));
    }
    let Some((_, r)) = prime_power(q) else {
        return Err(TverbergError::NotPrimePower(q));
    };
    let n_big = (d + 1) * (q - 1);
    let exponent = n_big.div_ceil(2);
    let base = Rational::new(BigInt::from(q), BigInt::from(r + 1));
    let mut value = Rational::one();
    for _ in 0..exponent {
        value *= &base;
    }
    let fact: BigInt = (1..q as u64).map(BigInt::from).product();
    Ok(value / Rational::from_integer(fact))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{rat, ratio};
    use crate::naive;

    fn cfg(d: usize, rows: &[&[i64]]) -> Configuration {
        Configuration::from_int_rows(d, rows).unwrap()
    }

    fn pts(rows: &[&[i64]]) -> Vec<Point> {
        rows.iter().map(|r| Point::from_ints(r)).collect()
    }

    #[test]
    fn hulls_examples() {
        assert!(hulls_have_common_point(&[
            pts(&[&[-1, 0], &[1, 0]]),
            pts(&[&[0, -1], &[0, 1]]),
        ])
        .unwrap());
        assert!(!hulls_have_common_point(&[
            pts(&[&[0, 0]]),
            pts(&[&[1, 0], &[2, 0], &[1, 1]]),
        ])
        .unwrap());
        assert!(hulls_have_common_point(&[
            pts(&[&[0, 0]]),
            pts(&[&[1, 0], &[0, 1], &[-1, -1]]),
        ])
        .unwrap());
    }

    #[test]
    fn hulls_rejects_bad_input() {
        assert!(hulls_have_common_point(&[]).is_err());
        assert!(hulls_have_common_point(&[pts(&[&[1, 0]]), vec![]]).is_err());
        assert!(
            hulls_have_common_point(&[pts(&[&[1, 0]]), vec![Point::from_ints(&[1])]]).is_err()
        );
    }

    #[test]
    fn hulls_agree_with_reference_encoder_on_random_blocks() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(99);
        let mut done = 0;
        while done < 150 {
            let d = rng.gen_range(1..=3usize);
            let n = rng.gen_range(3..=6usize);
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..d).map(|_| rng.gen_range(-5i64..=5)).collect())
                .collect();
            let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
            let Ok(x) = Configuration::from_int_rows(d, &refs) else {
                continue;
            };
            // Random split into two or three nonempty blocks.
            let nblocks = rng.gen_range(2..=3.min(n));
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); nblocks];
            for i in 0..n {
                blocks[rng.gen_range(0..nblocks)].push(i);
            }
            if blocks.iter().any(|b| b.is_empty()) {
                continue;
            }
            let point_blocks: Vec<Vec<Point>> = blocks
                .iter()
                .map(|b| b.iter().map(|&i| x.point(i).clone()).collect())
                .collect();
            assert_eq!(
                hulls_have_common_point(&point_blocks).unwrap(),
                naive::hulls_meet_lp(&x, &blocks),
            );
            done += 1;
        }
    }

    #[test]
    fn signatures_line_and_plane() {
        assert_eq!(admissible_signatures(1, 3), vec![vec![1, 2, 2]]);
        assert_eq!(
            admissible_signatures(2, 4),
            vec![vec![1, 3, 3, 3], vec![2, 2, 3, 3]]
        );
        assert_eq!(
            admissible_signatures(3, 3),
            vec![vec![1, 4, 4], vec![2, 3, 4], vec![3, 3, 3]]
        );
    }

    #[test]
    fn candidate_partition_table() {
        assert_eq!(tverberg_candidate_partitions(2, 4), BigUint::from(9100u64));
        assert_eq!(tverberg_candidate_partitions(1, 3), BigUint::from(15u64));
        assert_eq!(tverberg_candidate_partitions(2, 2), BigUint::from(7u64));
    }

    #[test]
    fn radon_on_the_line() {
        let x = cfg(1, &[&[-1], &[1], &[2]]);
        let report = count_tverberg(&x, 2, true).unwrap();
        assert_eq!(report.total, 1);
        assert_eq!(report.by_type.get(&TypeClass::I), Some(&1));
        let w = &report.witnesses.unwrap()[0];
        assert_eq!(w.blocks(), &[vec![0, 2], vec![1]]);
    }

    #[test]
    fn radon_in_the_plane() {
        // Diagonals of the unit square cross; T = 1, type II.
        let x = cfg(2, &[&[0, 0], &[1, 0], &[0, 1], &[1, 1]]);
        let report = count_tverberg(&x, 2, false).unwrap();
        assert_eq!(report.total, 1);
        assert_eq!(report.by_type.get(&TypeClass::II(2)), Some(&1));
        assert_eq!(report.total, naive::count_tverberg_naive(&x, 2));
    }

    #[test]
    fn restricted_count_matches_unrestricted_reference() {
        // d=2, q=3 on seven points: the reference enumerates all 301
        // partitions into three blocks, shapes unrestricted.
        let x = cfg(
            2,
            &[&[3, 1], &[-2, 4], &[-4, -3], &[5, -2], &[1, 5], &[-5, 1], &[0, -5]],
        );
        let report = count_tverberg(&x, 3, false).unwrap();
        assert_eq!(report.total, naive::count_tverberg_naive(&x, 3));
        assert!(report.total >= tverberg_lower_bound(3, 2, None));
    }

    #[test]
    fn line_q4_count_is_even_and_bounded() {
        let x = cfg(1, &[&[-3], &[-1], &[2], &[5], &[9], &[-7], &[4]]);
        let report = count_tverberg(&x, 4, false).unwrap();
        assert_eq!(report.total, naive::count_tverberg_naive(&x, 4));
        // q = 4 > d+1 = 2: even; existence gives at least (q-d)!.
        assert_eq!(report.total % 2, 0);
        assert!(report.total >= tverberg_lower_bound(4, 1, None));
    }

    #[test]
    fn witnesses_are_certified_partitions() {
        let x = cfg(
            2,
            &[&[3, 1], &[-2, 4], &[-4, -3], &[5, -2], &[1, 5], &[-5, 1], &[0, -5]],
        );
        let report = count_tverberg(&x, 3, true).unwrap();
        let witnesses = report.witnesses.unwrap();
        assert_eq!(witnesses.len() as u64, report.total);
        for w in &witnesses {
            let blocks: Vec<Vec<Point>> = w
                .blocks()
                .iter()
                .map(|b| b.iter().map(|&i| x.point(i).clone()).collect())
                .collect();
            assert!(hulls_have_common_point(&blocks).unwrap());
            classify(w, &x, 3).unwrap();
        }
        // Distinct and canonically ordered.
        let mut sorted = witnesses.clone();
        sorted.dedup();
        assert_eq!(sorted.len(), witnesses.len());
    }

    #[test]
    fn count_rejects_bad_shapes() {
        let x = cfg(1, &[&[-1], &[1], &[2]]);
        assert!(matches!(
            count_tverberg(&x, 3, false),
            Err(TverbergError::SizeMismatch(_))
        ));
        assert!(matches!(
            count_tverberg(&x, 1, false),
            Err(TverbergError::SizeMismatch(_))
        ));
        let collinear = cfg(2, &[&[0, 1], &[1, 1], &[2, 1], &[5, 2]]);
        assert!(matches!(
            count_tverberg(&collinear, 2, false),
            Err(TverbergError::NotGeneralPosition)
        ));
    }

    #[test]
    fn classify_examples() {
        let x = cfg(
            2,
            &[&[3, 1], &[-2, 4], &[-4, -3], &[5, -2], &[1, 5], &[-5, 1], &[0, -5],
              &[7, 7], &[-7, 6], &[6, -7]],
        );
        let p = Partition::new(vec![vec![4], vec![0, 1, 2], vec![3, 5, 6], vec![7, 8, 9]]).unwrap();
        assert_eq!(
            classify(&p, &x, 4).unwrap(),
            PartitionType::TypeI { vertex: 4 }
        );
        let p = Partition::new(vec![vec![0, 1], vec![2, 3], vec![4, 5, 6], vec![7, 8, 9]]).unwrap();
        assert_eq!(classify(&p, &x, 4).unwrap(), PartitionType::TypeII { k: 2 });
        // {2,2,2,4}: no size-4 block is admissible in the plane.
        let p = Partition::new(vec![vec![0, 1], vec![2, 3], vec![4, 5], vec![6, 7, 8, 9]]).unwrap();
        assert!(matches!(
            classify(&p, &x, 4),
            Err(TverbergError::UnclassifiablePartition(_))
        ));
        // Wrong block count.
        let p = Partition::new(vec![vec![0, 1, 2, 3, 4], vec![5, 6, 7, 8, 9]]).unwrap();
        assert!(matches!(
            classify(&p, &x, 4),
            Err(TverbergError::UnclassifiablePartition(_))
        ));
    }

    #[test]
    fn lower_bounds() {
        assert_eq!(tverberg_lower_bound(4, 2, None), 2);
        assert_eq!(tverberg_lower_bound(2, 3, None), 1); // q <= d clamps
        assert_eq!(
            tverberg_lower_bound(4, 2, Some(PartitionType::TypeI { vertex: 0 })),
            6
        );
        assert_eq!(
            tverberg_lower_bound(4, 2, Some(PartitionType::TypeII { k: 2 })),
            2
        );
    }

    #[test]
    fn prime_power_recognition() {
        assert_eq!(prime_power(2), Some((2, 1)));
        assert_eq!(prime_power(4), Some((2, 2)));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(9), Some((3, 2)));
        assert_eq!(prime_power(7), Some((7, 1)));
        assert_eq!(prime_power(6), None);
        assert_eq!(prime_power(12), None);
        assert_eq!(prime_power(1), None);
        assert_eq!(prime_power(0), None);
    }

    #[test]
    fn prime_power_bound_values() {
        assert_eq!(topological_lower_bound(3, 2).unwrap(), ratio(27, 16));
        assert_eq!(topological_lower_bound(2, 1).unwrap(), rat(1));
        assert_eq!(topological_lower_bound(4, 2).unwrap(), ratio(512, 729));
        assert!(matches!(
            topological_lower_bound(6, 2),
            Err(TverbergError::NotPrimePower(6))
        ));
    }
}
