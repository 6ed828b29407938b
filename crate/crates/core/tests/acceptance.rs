//! Acceptance gate: one check per release criterion, each printing a
//! pass/fail line (visible with `--nocapture`).  Budgets and expected
//! values are pinned here; the test fails if any criterion does.

use std::time::{Duration, Instant};

use birch_core::birch::{count_birch, check_pair_lemma, factorial};
use birch_core::configs::{gen_line_balanced, gen_random, gen_sierksma_birch, gen_sierksma_tverberg};
use birch_core::kernel::{self, rat, ratio, Configuration, Point, Rational};
use birch_core::naive;
use birch_core::tverberg::{count_tverberg, topological_lower_bound, TverbergError};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const EPS: fn() -> Rational = || ratio(1, 16);
const COORD_BOUND: i64 = 50;

const C1_BUDGET: Duration = Duration::from_secs(5);
const C2_BUDGET: Duration = Duration::from_secs(60);
const C3_BUDGET: Duration = Duration::from_secs(10);
const C4_BUDGET: Duration = Duration::from_secs(300);
const C6_BUDGET: Duration = Duration::from_secs(60);
const C8_BUDGET: Duration = Duration::from_secs(600);

struct Tally {
    failures: Vec<String>,
}

impl Tally {
    fn criterion(&mut self, n: usize, name: &str, f: impl FnOnce() -> Result<String, String>) {
        match f() {
            Ok(msg) => println!("criterion {:02} ({}): PASS — {}", n, name, msg),
            Err(msg) => {
                println!("criterion {:02} ({}): FAIL — {}", n, name, msg);
                self.failures.push(format!("{:02} {}", n, name));
            }
        }
    }
}

fn budgeted(detail: String, elapsed: Duration, budget: Duration) -> Result<String, String> {
    if elapsed <= budget {
        Ok(format!("{} in {:.2?} (budget {:?})", detail, elapsed, budget))
    } else {
        Err(format!("{}, but {:.2?} exceeds budget {:?}", detail, elapsed, budget))
    }
}

#[test]
fn acceptance_criteria() {
    let mut t = Tally { failures: Vec::new() };

    t.criterion(1, "sierksma birch count", || {
        let start = Instant::now();
        let x = gen_sierksma_birch(2, 3, EPS()).map_err(|e| e.to_string())?;
        let report = count_birch(&x, false).map_err(|e| e.to_string())?;
        if report.count != 36 {
            return Err(format!("expected 36, got {}", report.count));
        }
        budgeted("count=36".into(), start.elapsed(), C1_BUDGET)
    });

    t.criterion(2, "sierksma tverberg count", || {
        let start = Instant::now();
        let x = gen_sierksma_tverberg(2, 4, EPS()).map_err(|e| e.to_string())?;
        let report = count_tverberg(&x, 4, false).map_err(|e| e.to_string())?;
        if report.total != 36 {
            return Err(format!("expected 36, got {}", report.total));
        }
        budgeted(format!("total=36, by type {:?}", report.by_type), start.elapsed(), C2_BUDGET)
    });

    t.criterion(3, "line closed form", || {
        let start = Instant::now();
        for k in 1..=5usize {
            let x = gen_line_balanced(k).map_err(|e| e.to_string())?;
            let got = count_birch(&x, false).map_err(|e| e.to_string())?.count;
            if got != factorial(k) {
                return Err(format!("k={}: expected {}, got {}", k, factorial(k), got));
            }
        }
        budgeted("count=k! for k=1..5".into(), start.elapsed(), C3_BUDGET)
    });

    // Criteria 4 and 5 share one stream of trials: the same seeded
    // configurations are checked for evenness and for the k! bound.
    let mut shared_counts: Vec<(usize, usize, u64, u64)> = Vec::new();
    t.criterion(4, "parity campaign", || {
        let start = Instant::now();
        let mut violations = 0;
        for &(d, k) in &[(2usize, 2usize), (2, 3), (3, 2)] {
            for trial in 0..200u64 {
                let seed = 40_000 + trial;
                let x = gen_random(d, k * (d + 1), seed, COORD_BOUND, true)
                    .map_err(|e| e.to_string())?;
                match count_birch(&x, false) {
                    Ok(report) => {
                        if k >= 2 && report.count % 2 != 0 {
                            violations += 1;
                        }
                        shared_counts.push((d, k, seed, report.count));
                    }
                    Err(e) => return Err(format!("d={} k={} seed={}: {}", d, k, seed, e)),
                }
            }
        }
        if violations > 0 {
            return Err(format!("{} parity violations", violations));
        }
        budgeted("600 trials, all counts even".into(), start.elapsed(), C4_BUDGET)
    });

    t.criterion(5, "lower-bound campaign", || {
        if shared_counts.len() != 600 {
            return Err("parity campaign did not complete".into());
        }
        for &(d, k, seed, count) in &shared_counts {
            if count > 0 && count < factorial(k) {
                return Err(format!(
                    "d={} k={} seed={}: count {} in (0, {})",
                    d, k, seed, count, factorial(k)
                ));
            }
        }
        Ok("same 600 trials, every positive count >= k!".into())
    });

    t.criterion(6, "pair lemma", || {
        let start = Instant::now();
        let mut zeros = 0u32;
        let mut twos = 0u32;
        for d in 1..=3usize {
            for trial in 0..500u64 {
                let seed = 60_000 + trial;
                let y = gen_random(d, d + 2, seed, COORD_BOUND, true).map_err(|e| e.to_string())?;
                match check_pair_lemma(&y) {
                    Ok(0) => zeros += 1,
                    Ok(2) => twos += 1,
                    Ok(v) => return Err(format!("d={} seed={}: value {}", d, seed, v)),
                    Err(e) => return Err(format!("d={} seed={}: {}", d, seed, e)),
                }
            }
        }
        budgeted(
            format!("1500 sets, values in {{0,2}} ({} zeros, {} twos)", zeros, twos),
            start.elapsed(),
            C6_BUDGET,
        )
    });

    t.criterion(7, "convexity-lemma equivalence", || {
        let mut rng = ChaCha8Rng::seed_from_u64(70_000);
        for trial in 0..1000u64 {
            let d = rng.gen_range(1..=3usize);
            let x = gen_random(d, d + 1, 70_001 + trial, COORD_BOUND, true)
                .map_err(|e| e.to_string())?;
            let simplex: Vec<Point> = x.points().to_vec();
            let v = rng.gen_range(0..simplex.len());
            let rest: Vec<Point> = simplex
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != v)
                .map(|(_, p)| p.clone())
                .collect();
            let negated = simplex[v].scale(&rat(-1));
            let lhs = kernel::simplex_contains_origin(&simplex).map_err(|e| e.to_string())?;
            let rhs = kernel::cone_contains(&negated, &rest).map_err(|e| e.to_string())?;
            if lhs != rhs {
                return Err(format!("trial {}: containment {} vs cone {}", trial, lhs, rhs));
            }
        }
        Ok("1000 instances, containment == cone membership".into())
    });

    t.criterion(8, "tverberg parity and bound", || {
        let start = Instant::now();
        for &(d, q) in &[(1usize, 3usize), (1, 4), (2, 4)] {
            for trial in 0..100u64 {
                let seed = 80_000 + trial;
                let n = (d + 1) * (q - 1) + 1;
                let x = gen_random(d, n, seed, COORD_BOUND, false).map_err(|e| e.to_string())?;
                let report = count_tverberg(&x, q, false).map_err(|e| e.to_string())?;
                if report.total % 2 != 0 {
                    return Err(format!("d={} q={} seed={}: odd total {}", d, q, seed, report.total));
                }
                if (d, q) == (2, 4) && report.total < 2 {
                    return Err(format!("d=2 q=4 seed={}: total {} < 2", seed, report.total));
                }
            }
        }
        for trial in 0..50u64 {
            let seed = 80_500 + trial;
            let x = gen_random(2, 4, seed, COORD_BOUND, false).map_err(|e| e.to_string())?;
            let report = count_tverberg(&x, 2, false).map_err(|e| e.to_string())?;
            let oracle = naive::count_tverberg_naive(&x, 2);
            if report.total != 1 || oracle != 1 {
                return Err(format!("seed={}: radon count {} (oracle {})", seed, report.total, oracle));
            }
        }
        budgeted("300 parity trials + 50 radon trials".into(), start.elapsed(), C8_BUDGET)
    });

    t.criterion(9, "oracle equivalence", || {
        for &(d, k, seed) in &[
            (1usize, 2usize, 90_001u64),
            (1, 2, 90_002),
            (1, 3, 90_003),
            (1, 3, 90_004),
            (2, 2, 90_005),
            (2, 2, 90_006),
            (2, 3, 90_007),
            (2, 3, 90_008),
            (3, 2, 90_009),
            (3, 2, 90_010),
        ] {
            let x = gen_random(d, k * (d + 1), seed, COORD_BOUND, true).map_err(|e| e.to_string())?;
            let fast = count_birch(&x, false).map_err(|e| e.to_string())?.count;
            let slow = naive::count_birch_naive(&x);
            if fast != slow {
                return Err(format!("birch d={} k={} seed={}: {} vs naive {}", d, k, seed, fast, slow));
            }
        }
        for &(d, q, seed) in &[
            (1usize, 2usize, 91_001u64),
            (1, 3, 91_002),
            (1, 4, 91_003),
            (2, 2, 91_004),
            (2, 3, 91_005),
            (2, 3, 91_006),
            (3, 2, 91_007),
            (3, 2, 91_008),
            (1, 4, 91_009),
            (2, 2, 91_010),
        ] {
            let n = (d + 1) * (q - 1) + 1;
            let x = gen_random(d, n, seed, COORD_BOUND, false).map_err(|e| e.to_string())?;
            let fast = count_tverberg(&x, q, false).map_err(|e| e.to_string())?.total;
            let slow = naive::count_tverberg_naive(&x, q);
            if fast != slow {
                return Err(format!("tverberg d={} q={} seed={}: {} vs naive {}", d, q, seed, fast, slow));
            }
        }
        Ok("20 instances, pruned counters == unrestricted oracles".into())
    });

    t.criterion(10, "invariance suite", || {
        let mut rng = ChaCha8Rng::seed_from_u64(100_000);
        for trial in 0..50u64 {
            let x = gen_random(2, 6, 100_001 + trial, COORD_BOUND, true).map_err(|e| e.to_string())?;
            let base = count_birch(&x, false).map_err(|e| e.to_string())?.count;

            // Scaling one point along its ray; resample the factor if it
            // happens to land the set outside general position.
            let scaled = loop {
                let i = rng.gen_range(0..x.len());
                let lambda = ratio(rng.gen_range(1..=24), rng.gen_range(1..=24));
                let points: Vec<Point> = x
                    .points()
                    .iter()
                    .enumerate()
                    .map(|(j, p)| if j == i { p.scale(&lambda) } else { p.clone() })
                    .collect();
                let Ok(candidate) = Configuration::new(2, points, "") else {
                    continue;
                };
                if kernel::is_general_position(&candidate, Some(&Point::origin(2)))
                    .map_err(|e| e.to_string())?
                {
                    break candidate;
                }
            };
            let after_scale = count_birch(&scaled, false).map_err(|e| e.to_string())?.count;
            if after_scale != base {
                return Err(format!("trial {}: scaling changed {} -> {}", trial, base, after_scale));
            }

            // Random unimodular map: a short product of elementary
            // integer row operations, always invertible over the integers.
            let mut m = [[rat(1), rat(0)], [rat(0), rat(1)]];
            for _ in 0..4 {
                match rng.gen_range(0..3) {
                    0 => {
                        let c = rat([-3, -2, -1, 1, 2, 3][rng.gen_range(0..6)]);
                        let (src, dst) = if rng.gen() { (0, 1) } else { (1, 0) };
                        m[dst] = [&m[dst][0] + &c * &m[src][0], &m[dst][1] + &c * &m[src][1]];
                    }
                    1 => m.swap(0, 1),
                    _ => {
                        let r = rng.gen_range(0..2);
                        m[r] = [-m[r][0].clone(), -m[r][1].clone()];
                    }
                }
            }
            let mapped_points: Vec<Point> = x
                .points()
                .iter()
                .map(|p| {
                    Point::new(vec![
                        &m[0][0] * p.coord(0) + &m[0][1] * p.coord(1),
                        &m[1][0] * p.coord(0) + &m[1][1] * p.coord(1),
                    ])
                })
                .collect();
            let mapped = Configuration::new(2, mapped_points, "").map_err(|e| e.to_string())?;
            let after_map = count_birch(&mapped, false).map_err(|e| e.to_string())?.count;
            if after_map != base {
                return Err(format!("trial {}: linear map changed {} -> {}", trial, base, after_map));
            }
        }
        Ok("50 instances invariant under scaling and unimodular maps".into())
    });

    t.criterion(11, "prime-power bound calculator", || {
        let a = topological_lower_bound(3, 2).map_err(|e| e.to_string())?;
        if a != ratio(27, 16) {
            return Err(format!("(q=3,d=2): expected 27/16, got {}", a));
        }
        let b = topological_lower_bound(2, 1).map_err(|e| e.to_string())?;
        if b != rat(1) {
            return Err(format!("(q=2,d=1): expected 1, got {}", b));
        }
        match topological_lower_bound(6, 2) {
            Err(TverbergError::NotPrimePower(6)) => {}
            other => return Err(format!("q=6: expected NotPrimePower, got {:?}", other)),
        }
        Ok("27/16 and 1 exact; q=6 rejected".into())
    });

    assert!(
        t.failures.is_empty(),
        "failed acceptance criteria: {}",
        t.failures.join(", ")
    );
}
