//! Seeded property campaigns: run many random configurations through a
//! check and report violations.  Every campaign is reproducible from
//! (name, parameters, seed); worker count never changes a reported
//! number.
//!
//! The ceiling `(k!)^d` is a conjecture, so campaigns report whether it
//! held but never assert it — `conjecture-search` exists to look for
//! counterexamples, and finding one is a headline result, not an error.

use std::process::ExitCode;
use std::time::Instant;

use birch_core::birch::{self, BirchError};
use birch_core::configs::{self, gen_random};
use birch_core::tverberg;
use clap::ValueEnum;
use num::BigUint;
use serde::Serialize;

use crate::Format;

/// Candidate partitions allowed per trial; keeps campaign runtimes
/// predictable at desk scale.
const MAX_CANDIDATES_PER_TRIAL: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CampaignName {
    /// Birch counts are even (k >= 2)
    Parity,
    /// Positive Birch counts are at least k!
    LowerBound,
    /// d+2 points yield either 0 or 2 origin-containing simplices
    PairLemma,
    /// Tverberg counts are even for q > d+1
    TverbergParity,
    /// Look for Birch counts above the conjectured ceiling (k!)^d
    ConjectureSearch,
}

impl CampaignName {
    fn as_str(self) -> &'static str {
        match self {
            CampaignName::Parity => "parity",
            CampaignName::LowerBound => "lower-bound",
            CampaignName::PairLemma => "pair-lemma",
            CampaignName::TverbergParity => "tverberg-parity",
            CampaignName::ConjectureSearch => "conjecture-search",
        }
    }
}

#[derive(Serialize)]
pub struct Violation {
    pub seed: u64,
    pub parameters: String,
    pub observed: String,
    pub expected: String,
}

#[derive(Serialize)]
pub struct Parameters {
    pub d: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    pub trials: u64,
    pub seed: u64,
    pub coord_bound: i64,
}

#[derive(Serialize)]
pub struct CampaignReport {
    pub campaign: &'static str,
    pub parameters: Parameters,
    pub trials: u64,
    pub violations: Vec<Violation>,
    pub max_observed: u64,
    pub conjecture_ceiling: Option<u64>,
    pub within_ceiling: Option<bool>,
    /// Full configuration text when a count exceeded the ceiling.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
    pub elapsed_ms: u128,
}

#[allow(clippy::too_many_arguments)]
pub fn run(
    name: CampaignName,
    d: usize,
    k: Option<usize>,
    q: Option<usize>,
    trials: u64,
    seed: u64,
    coord_bound: i64,
    format: Format,
) -> Result<ExitCode, String> {
    if d < 1 {
        return Err("--d must be at least 1".into());
    }
    let start = Instant::now();
    let mut report = match name {
        CampaignName::Parity | CampaignName::LowerBound | CampaignName::ConjectureSearch => {
            let k = k.unwrap_or(2);
            if name == CampaignName::Parity && k < 2 {
                return Err("parity holds for k >= 2; pass --k 2 or larger".into());
            }
            if k < 1 {
                return Err("--k must be at least 1".into());
            }
            check_ceiling(birch::birch_candidate_partitions(d, k), &format!("d={} k={}", d, k))?;
            run_birch(name, d, k, trials, seed, coord_bound)?
        }
        CampaignName::PairLemma => run_pair_lemma(d, trials, seed, coord_bound)?,
        CampaignName::TverbergParity => {
            let q = q.unwrap_or(d + 2);
            if q <= d + 1 {
                return Err(format!(
                    "tverberg parity holds for q > d+1; got q={} at d={}",
                    q, d
                ));
            }
            check_ceiling(
                tverberg::tverberg_candidate_partitions(d, q),
                &format!("d={} q={}", d, q),
            )?;
            run_tverberg_parity(d, q, trials, seed, coord_bound)?
        }
    };
    report.elapsed_ms = start.elapsed().as_millis();

    match format {
        Format::Human => print!("{}", render_human(&report)),
        Format::Structured => {
            println!("{}", serde_json::to_string_pretty(&report).expect("serializable"))
        }
    }
    Ok(exit_code(&report))
}

fn check_ceiling(candidates: BigUint, params: &str) -> Result<(), String> {
    if candidates > BigUint::from(MAX_CANDIDATES_PER_TRIAL) {
        return Err(format!(
            "{} means {} candidate partitions per trial, above the {} desk-scale ceiling",
            params, candidates, MAX_CANDIDATES_PER_TRIAL
        ));
    }
    Ok(())
}

fn run_birch(
    name: CampaignName,
    d: usize,
    k: usize,
    trials: u64,
    seed: u64,
    coord_bound: i64,
) -> Result<CampaignReport, String> {
    let params = format!("d={} k={}", d, k);
    let ceiling = birch::conjectured_ceiling(k, d);
    let mut violations = Vec::new();
    let mut max_observed = 0u64;
    let mut counterexample = None;
    for trial in 0..trials {
        let trial_seed = seed + trial;
        let x = gen_random(d, k * (d + 1), trial_seed, coord_bound, true)
            .map_err(|e| format!("seed {}: {}", trial_seed, e))?;
        let count = match birch::count_birch(&x, false) {
            Ok(report) => report.count,
            // The engine itself refuses to return a law-breaking count;
            // surface that as the campaign violation it is.
            Err(BirchError::InconsistencyDetected { observed, expected, .. }) => {
                violations.push(Violation {
                    seed: trial_seed,
                    parameters: params.clone(),
                    observed: observed.to_string(),
                    expected,
                });
                continue;
            }
            Err(e) => return Err(format!("seed {}: {}", trial_seed, e)),
        };
        max_observed = max_observed.max(count);
        match name {
            CampaignName::Parity => {
                if count % 2 != 0 {
                    violations.push(Violation {
                        seed: trial_seed,
                        parameters: params.clone(),
                        observed: count.to_string(),
                        expected: "an even count".into(),
                    });
                }
            }
            CampaignName::LowerBound => {
                if count > 0 && count < birch::factorial(k) {
                    violations.push(Violation {
                        seed: trial_seed,
                        parameters: params.clone(),
                        observed: count.to_string(),
                        expected: format!("0 or at least {}", birch::factorial(k)),
                    });
                }
            }
            CampaignName::ConjectureSearch => {
                if counterexample.is_none() && ceiling.is_some_and(|c| count > c) {
                    counterexample = Some(configs::write_configuration(&x));
                }
            }
            _ => unreachable!(),
        }
    }
    Ok(CampaignReport {
        campaign: name.as_str(),
        parameters: Parameters {
            d,
            k: Some(k),
            q: None,
            trials,
            seed,
            coord_bound,
        },
        trials,
        violations,
        max_observed,
        conjecture_ceiling: ceiling,
        within_ceiling: ceiling.map(|c| max_observed <= c),
        counterexample,
        elapsed_ms: 0,
    })
}

fn run_pair_lemma(
    d: usize,
    trials: u64,
    seed: u64,
    coord_bound: i64,
) -> Result<CampaignReport, String> {
    let params = format!("d={}", d);
    let mut violations = Vec::new();
    let mut max_observed = 0u64;
    for trial in 0..trials {
        let trial_seed = seed + trial;
        let y = gen_random(d, d + 2, trial_seed, coord_bound, true)
            .map_err(|e| format!("seed {}: {}", trial_seed, e))?;
        match birch::check_pair_lemma(&y) {
            Ok(v) => {
                max_observed = max_observed.max(v);
                if v != 0 && v != 2 {
                    violations.push(Violation {
                        seed: trial_seed,
                        parameters: params.clone(),
                        observed: v.to_string(),
                        expected: "0 or 2".into(),
                    });
                }
            }
            Err(BirchError::InconsistencyDetected { observed, expected, .. }) => {
                violations.push(Violation {
                    seed: trial_seed,
                    parameters: params.clone(),
                    observed: observed.to_string(),
                    expected,
                });
            }
            Err(e) => return Err(format!("seed {}: {}", trial_seed, e)),
        }
    }
    Ok(CampaignReport {
        campaign: CampaignName::PairLemma.as_str(),
        parameters: Parameters {
            d,
            k: None,
            q: None,
            trials,
            seed,
            coord_bound,
        },
        trials,
        violations,
        max_observed,
        conjecture_ceiling: None,
        within_ceiling: None,
        counterexample: None,
        elapsed_ms: 0,
    })
}

fn run_tverberg_parity(
    d: usize,
    q: usize,
    trials: u64,
    seed: u64,
    coord_bound: i64,
) -> Result<CampaignReport, String> {
    let params = format!("d={} q={}", d, q);
    let n = (d + 1) * (q - 1) + 1;
    let mut violations = Vec::new();
    let mut max_observed = 0u64;
    for trial in 0..trials {
        let trial_seed = seed + trial;
        let x = gen_random(d, n, trial_seed, coord_bound, false)
            .map_err(|e| format!("seed {}: {}", trial_seed, e))?;
        let report = tverberg::count_tverberg(&x, q, false)
            .map_err(|e| format!("seed {}: {}", trial_seed, e))?;
        max_observed = max_observed.max(report.total);
        if report.total % 2 != 0 {
            violations.push(Violation {
                seed: trial_seed,
                parameters: params.clone(),
                observed: report.total.to_string(),
                expected: "an even total".into(),
            });
        }
    }
    Ok(CampaignReport {
        campaign: CampaignName::TverbergParity.as_str(),
        parameters: Parameters {
            d,
            k: None,
            q: Some(q),
            trials,
            seed,
            coord_bound,
        },
        trials,
        violations,
        max_observed,
        conjecture_ceiling: None,
        within_ceiling: None,
        counterexample: None,
        elapsed_ms: 0,
    })
}

pub fn exit_code(report: &CampaignReport) -> ExitCode {
    if report.violations.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

pub fn render_human(report: &CampaignReport) -> String {
    let mut out = format!("campaign: {}\n", report.campaign);
    let p = &report.parameters;
    let mut line = format!("parameters: d={}", p.d);
    if let Some(k) = p.k {
        line.push_str(&format!(" k={}", k));
    }
    if let Some(q) = p.q {
        line.push_str(&format!(" q={}", q));
    }
    line.push_str(&format!(
        " trials={} seed={} coord-bound={}",
        p.trials, p.seed, p.coord_bound
    ));
    out.push_str(&line);
    out.push('\n');
    if report.violations.is_empty() {
        out.push_str("violations: none\n");
    } else {
        out.push_str(&format!("violations: {}\n", report.violations.len()));
        for v in &report.violations {
            out.push_str(&format!(
                "  seed={} {}: observed {}, expected {}\n",
                v.seed, v.parameters, v.observed, v.expected
            ));
        }
    }
    out.push_str(&format!("max observed: {}\n", report.max_observed));
    if let Some(c) = report.conjecture_ceiling {
        out.push_str(&format!(
            "conjectured ceiling (k!)^d: {} (within: {})\n",
            c,
            report.within_ceiling.unwrap_or(true)
        ));
    }
    if let Some(cfg) = &report.counterexample {
        out.push_str(&format!(
            "COUNTEREXAMPLE FOUND: max observed {} exceeds the conjectured ceiling\n",
            report.max_observed
        ));
        out.push_str("configuration for reproduction:\n");
        out.push_str(cfg);
    }
    out.push_str(&format!("elapsed: {}ms\n", report.elapsed_ms));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn report(violations: Vec<Violation>, counterexample: Option<String>) -> CampaignReport {
        CampaignReport {
            campaign: "parity",
            parameters: Parameters {
                d: 2,
                k: Some(2),
                q: None,
                trials: 5,
                seed: 0,
                coord_bound: 50,
            },
            trials: 5,
            violations,
            max_observed: 4,
            conjecture_ceiling: Some(4),
            within_ceiling: Some(true),
            counterexample,
            elapsed_ms: 12,
        }
    }

    #[test]
    fn violations_drive_the_exit_code() {
        assert_eq!(exit_code(&report(vec![], None)), ExitCode::SUCCESS);
        let bad = report(
            vec![Violation {
                seed: 7,
                parameters: "d=2 k=2".into(),
                observed: "3".into(),
                expected: "an even count".into(),
            }],
            None,
        );
        assert_eq!(exit_code(&bad), ExitCode::from(1));
    }

    #[test]
    fn human_rendering_mentions_violations_and_banner() {
        let text = render_human(&report(vec![], None));
        assert!(text.contains("violations: none"));
        assert!(text.contains("conjectured ceiling (k!)^d: 4"));
        assert!(!text.contains("COUNTEREXAMPLE"));

        let loud = render_human(&report(vec![], Some("dim=2\n1 1\n".into())));
        assert!(loud.contains("COUNTEREXAMPLE FOUND"));
        assert!(loud.contains("dim=2"));
    }
}
