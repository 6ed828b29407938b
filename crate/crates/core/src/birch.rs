//! Birch partitions: split `k(d+1)` points into `k` blocks of `d+1`
//! whose hulls each contain the origin.
//!
//! The counter first computes every origin-containing `(d+1)`-subset
//! (`valid_blocks`), then enumerates canonically: the block containing
//! the smallest unassigned index is chosen at each level, so each
//! unordered partition is produced exactly once and pruning against the
//! valid-block table cuts dead branches early.  For points in general
//! position with respect to the origin the count is even for `k >= 2`
//! and, when positive, at least `k!`; both facts are re-checked after
//! every count and a violation surfaces as [`BirchError::InconsistencyDetected`]
//! rather than a silent wrong answer.

use crate::kernel::{self, Configuration, KernelError, Point};
use itertools::Itertools;
use rayon::prelude::*;
use std::fmt;
use std::time::{Duration, Instant};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum BirchError {
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("configuration is not in general position with respect to the origin")]
    NotGeneralPosition,
    #[error("inconsistency detected: {what} is {observed}, expected {expected}")]
    InconsistencyDetected {
        what: String,
        observed: u64,
        expected: String,
    },
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// An unordered partition of `{0, …, n-1}` in canonical form: each
/// block ascending, blocks ordered by their smallest element, blocks
/// disjoint and jointly covering the whole index range.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Partition, BirchError> {
        if blocks.iter().any(|b| b.is_empty()) {
            return Err(BirchError::InvalidPartition("empty block".into()));
        }
        let mut blocks = blocks;
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort_by_key(|b| b[0]);
        let mut all: Vec<usize> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(BirchError::InvalidPartition(
                "blocks are not disjoint".into(),
            ));
        }
        if all.first() != Some(&0) || *all.last().unwrap() != all.len() - 1 {
            return Err(BirchError::InvalidPartition(
                "blocks must cover 0..n without gaps".into(),
            ));
        }
        Ok(Partition { blocks })
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.len()).collect()
    }

    /// Total number of partitioned indices.
    pub fn ground_size(&self) -> usize {
        self.blocks.iter().map(|b| b.len()).sum()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered = self
            .blocks
            .iter()
            .map(|b| format!("{{{}}}", b.iter().join(",")))
            .join(" | ");
        f.write_str(&rendered)
    }
}

/// Result of a Birch count.
#[derive(Debug, Clone)]
pub struct BirchReport {
    pub count: u64,
    pub k: usize,
    /// All counted partitions, present iff collection was requested;
    /// in canonical enumeration order.
    pub witnesses: Option<Vec<Partition>>,
    pub elapsed: Duration,
}

/// Exact factorial; callers keep `n` at desk scale (`n <= 20` fits u64).
pub fn factorial(n: usize) -> u64 {
    (1..=n as u64).product()
}

/// The conjectured ceiling `(k!)^d`, `None` if it overflows u64.
pub fn conjectured_ceiling(k: usize, d: usize) -> Option<u64> {
    if k > 20 {
        return None;
    }
    let mut acc: u64 = 1;
    for _ in 0..d {
        acc = acc.checked_mul(factorial(k))?;
    }
    Some(acc)
}

/// Number of candidate partitions the Birch enumeration ranges over:
/// `n! / (k! * ((d+1)!)^k)` for `n = k(d+1)`.
pub fn birch_candidate_partitions(d: usize, k: usize) -> num::BigUint {
    use num::BigUint;
    let n = k * (d + 1);
    let fact = |m: usize| -> BigUint {
        (1..=m as u64).map(BigUint::from).product::<BigUint>().max(BigUint::from(1u64))
    };
    fact(n) / (fact(k) * fact(d + 1).pow(k as u32))
}

/// All `(d+1)`-subsets of `x` whose hull strictly contains the origin,
/// in lexicographic order.
pub fn valid_blocks(x: &Configuration) -> Result<Vec<Vec<usize>>, BirchError> {
    require_origin_general_position(x)?;
    valid_blocks_unchecked(x)
}

fn require_origin_general_position(x: &Configuration) -> Result<(), BirchError> {
    if !kernel::is_general_position(x, Some(&Point::origin(x.dim())))? {
        return Err(BirchError::NotGeneralPosition);
    }
    Ok(())
}

fn valid_blocks_unchecked(x: &Configuration) -> Result<Vec<Vec<usize>>, BirchError> {
    let d = x.dim();
    let n = x.len();
    if n < d + 1 {
        return Err(BirchError::SizeMismatch(format!(
            "need at least d+1 = {} points, got {}",
            d + 1,
            n
        )));
    }
    let mut out = Vec::new();
    for subset in (0..n).combinations(d + 1) {
        let pts: Vec<Point> = subset.iter().map(|&i| x.point(i).clone()).collect();
        if kernel::simplex_contains_origin(&pts)? {
            out.push(subset);
        }
    }
    Ok(out)
}

/// Count the Birch partitions of `x`, optionally collecting all of them.
///
/// `x` must consist of `k(d+1)` points in general position with respect
/// to the origin.  The reported count is deterministic and independent
/// of thread count; witnesses, when collected, come back in canonical
/// enumeration order.
pub fn count_birch(x: &Configuration, collect_witnesses: bool) -> Result<BirchReport, BirchError> {
    let start = Instant::now();
    let d = x.dim();
    let n = x.len();
    if n == 0 || !n.is_multiple_of(d + 1) {
        return Err(BirchError::SizeMismatch(format!(
            "|X| = {} is not a positive multiple of d+1 = {}",
            n,
            d + 1
        )));
    }
    if n > 64 {
        return Err(BirchError::SizeMismatch(format!(
            "{} points exceed the supported maximum of 64",
            n
        )));
    }
    let k = n / (d + 1);
    require_origin_general_position(x)?;
    let blocks = valid_blocks_unchecked(x)?;

    // Index blocks by their smallest member; the recursion always
    // extends the partition at the smallest unassigned index.
    let entries: Vec<(u64, &Vec<usize>)> = blocks
        .iter()
        .map(|b| (b.iter().fold(0u64, |m, &i| m | (1 << i)), b))
        .collect();
    let mut by_min: Vec<Vec<(u64, &Vec<usize>)>> = vec![Vec::new(); n];
    for &(mask, b) in &entries {
        by_min[b[0]].push((mask, b));
    }
    let full: u64 = if n == 64 { !0 } else { (1 << n) - 1 };

    // The first block always contains index 0; its choices split the
    // search into independent branches.
    let branches: Vec<(u64, u64, Vec<Partition>)> = by_min[0]
        .par_iter()
        .map(|&(mask, b)| {
            let mut witnesses = Vec::new();
            let mut stack = vec![b.clone()];
            let c = extend_partition(
                mask,
                full,
                &by_min,
                collect_witnesses,
                &mut stack,
                &mut witnesses,
            );
            (mask, c, witnesses)
        })
        .collect();

    let count: u64 = branches.iter().map(|(_, c, _)| c).sum();
    let witnesses = collect_witnesses.then(|| {
        branches
            .into_iter()
            .flat_map(|(_, _, w)| w)
            .collect::<Vec<_>>()
    });

    if k >= 2 && !count.is_multiple_of(2) {
        return Err(BirchError::InconsistencyDetected {
            what: format!("Birch count for k = {}", k),
            observed: count,
            expected: "an even value".into(),
        });
    }
    if k <= 20 && count > 0 && count < factorial(k) {
        return Err(BirchError::InconsistencyDetected {
            what: format!("positive Birch count for k = {}", k),
            observed: count,
            expected: format!("0 or at least k! = {}", factorial(k)),
        });
    }
    if let Some(w) = &witnesses {
        debug_assert_eq!(w.len() as u64, count);
    }
    Ok(BirchReport {
        count,
        k,
        witnesses,
        elapsed: start.elapsed(),
    })
}

fn extend_partition(
    assigned: u64,
    full: u64,
    by_min: &[Vec<(u64, &Vec<usize>)>],
    collect: bool,
    stack: &mut Vec<Vec<usize>>,
    witnesses: &mut Vec<Partition>,
) -> u64 {
    if assigned == full {
        if collect {
            witnesses.push(
                Partition::new(stack.clone()).expect("enumeration emits canonical partitions"),
            );
        }
        return 1;
    }
    let next = (!assigned).trailing_zeros() as usize;
    let mut count = 0;
    for &(mask, b) in &by_min[next] {
        if mask & assigned != 0 {
            continue;
        }
        if collect {
            stack.push(b.clone());
        }
        count += extend_partition(assigned | mask, full, by_min, collect, stack, witnesses);
        if collect {
            stack.pop();
        }
    }
    count
}

/// For `d+2` points in general position with respect to the origin,
/// count how many of the `d+2` possible `(d+1)`-simplices contain the
/// origin.  The answer is always 0 or 2; anything else is reported as an
/// inconsistency instead of being returned.
pub fn check_pair_lemma(y: &Configuration) -> Result<u64, BirchError> {
    let d = y.dim();
    if y.len() != d + 2 {
        return Err(BirchError::SizeMismatch(format!(
            "pair check needs exactly d+2 = {} points, got {}",
            d + 2,
            y.len()
        )));
    }
    require_origin_general_position(y)?;
    let containing = valid_blocks_unchecked(y)?.len() as u64;
    if containing != 0 && containing != 2 {
        return Err(BirchError::InconsistencyDetected {
            what: format!("origin-containing simplices among {} points", d + 2),
            observed: containing,
            expected: "0 or 2".into(),
        });
    }
    Ok(containing)
}
