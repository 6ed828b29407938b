//! File-facing operations: read a configuration and count, or run a
//! generator and write.  All numbers are printed exactly — counts as
//! integers, bounds as `a/b` rationals.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use birch_core::birch;
use birch_core::configs::{self, GeneratorKind, GeneratorSpec};
use birch_core::kernel::{self, Configuration, Point};
use birch_core::tverberg::{self, TverbergError};
use serde::Serialize;

use crate::Format;

fn is_json(path: &Path) -> bool {
    path.extension().is_some_and(|e| e.eq_ignore_ascii_case("json"))
}

pub fn read_input(path: &Path) -> Result<Configuration, String> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| format!("{}: {}", path.display(), e))?;
    let parsed = if is_json(path) {
        configs::read_configuration_json(&text)
    } else {
        configs::read_configuration(&text)
    };
    parsed.map_err(|e| format!("{}: {}", path.display(), e))
}

fn blocks_of(p: &birch::Partition) -> Vec<Vec<usize>> {
    p.blocks().to_vec()
}

#[derive(Serialize)]
struct BirchCountOut {
    command: &'static str,
    subject: &'static str,
    input: String,
    label: String,
    points: usize,
    dim: usize,
    k: usize,
    count: u64,
    lower_bound_factorial: u64,
    conjectured_ceiling: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witnesses: Option<Vec<Vec<Vec<usize>>>>,
    elapsed_ms: u128,
}

pub fn count_birch_file(input: &Path, witnesses: bool, format: Format) -> Result<ExitCode, String> {
    let x = read_input(input)?;
    let start = Instant::now();
    let report = birch::count_birch(&x, witnesses).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let ceiling = birch::conjectured_ceiling(report.k, x.dim());
    match format {
        Format::Human => {
            describe(&x);
            println!("count: {}", report.count);
            println!("lower bound k! = {}", birch::factorial(report.k));
            match ceiling {
                Some(c) => println!(
                    "conjectured ceiling (k!)^d = {} (reported, not asserted)",
                    c
                ),
                None => println!("conjectured ceiling (k!)^d overflows u64"),
            }
            if let Some(list) = &report.witnesses {
                println!("witnesses:");
                for p in list {
                    println!("  {}", p);
                }
            }
            println!("elapsed: {:.2?}", elapsed);
        }
        Format::Structured => {
            let out = BirchCountOut {
                command: "count",
                subject: "birch",
                input: input.display().to_string(),
                label: x.label().to_string(),
                points: x.len(),
                dim: x.dim(),
                k: report.k,
                count: report.count,
                lower_bound_factorial: birch::factorial(report.k),
                conjectured_ceiling: ceiling,
                witnesses: report.witnesses.as_ref().map(|l| l.iter().map(blocks_of).collect()),
                elapsed_ms: elapsed.as_millis(),
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct TverbergCountOut {
    command: &'static str,
    subject: &'static str,
    input: String,
    label: String,
    points: usize,
    dim: usize,
    q: usize,
    total: u64,
    by_type: Vec<(String, u64)>,
    lower_bound: u64,
    prime_power_bound: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witnesses: Option<Vec<Vec<Vec<usize>>>>,
    elapsed_ms: u128,
}

pub fn count_tverberg_file(
    input: &Path,
    q: usize,
    witnesses: bool,
    format: Format,
) -> Result<ExitCode, String> {
    let x = read_input(input)?;
    let start = Instant::now();
    let report = tverberg::count_tverberg(&x, q, witnesses).map_err(|e| e.to_string())?;
    let elapsed = start.elapsed();
    let bound = tverberg::tverberg_lower_bound(q, x.dim(), None);
    let pp = match tverberg::topological_lower_bound(q, x.dim()) {
        Ok(v) => Some(v.to_string()),
        Err(TverbergError::NotPrimePower(_)) => None,
        Err(e) => return Err(e.to_string()),
    };
    match format {
        Format::Human => {
            describe(&x);
            println!("total: {}", report.total);
            for (class, count) in &report.by_type {
                println!("  type {}: {}", class, count);
            }
            println!("lower bound (q-d)! = {}", bound);
            match &pp {
                Some(v) => println!("prime-power bound: {}", v),
                None => println!("prime-power bound: n/a ({} is not a prime power)", q),
            }
            if let Some(list) = &report.witnesses {
                println!("witnesses:");
                for p in list {
                    println!("  {}", p);
                }
            }
            println!("elapsed: {:.2?}", elapsed);
        }
        Format::Structured => {
            let out = TverbergCountOut {
                command: "count",
                subject: "tverberg",
                input: input.display().to_string(),
                label: x.label().to_string(),
                points: x.len(),
                dim: x.dim(),
                q,
                total: report.total,
                by_type: report
                    .by_type
                    .iter()
                    .map(|(c, v)| (c.to_string(), *v))
                    .collect(),
                lower_bound: bound,
                prime_power_bound: pp,
                witnesses: report.witnesses.as_ref().map(|l| l.iter().map(blocks_of).collect()),
                elapsed_ms: elapsed.as_millis(),
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn describe(x: &Configuration) {
    if x.label().is_empty() {
        println!("configuration: {} points, dimension {}", x.len(), x.dim());
    } else {
        println!(
            "configuration: {} ({} points, dimension {})",
            x.label(),
            x.len(),
            x.dim()
        );
    }
}

pub struct GenerateArgs {
    pub kind: GeneratorKind,
    pub out: PathBuf,
    pub d: usize,
    pub k: Option<usize>,
    pub q: Option<usize>,
    pub n: Option<usize>,
    pub seed: u64,
    pub epsilon: String,
    pub coord_bound: i64,
    pub wrt_origin: bool,
}

#[derive(Serialize)]
struct GenerateOut {
    command: &'static str,
    wrote: String,
    label: String,
    points: usize,
    dim: usize,
    general_position: bool,
    general_position_with_origin: bool,
}

pub fn generate_file(args: GenerateArgs, format: Format) -> Result<ExitCode, String> {
    let epsilon = configs::parse_rational(&args.epsilon)
        .ok_or_else(|| format!("--epsilon {:?} is not an exact rational", args.epsilon))?;
    let require = |value: Option<usize>, flag: &str| {
        value.ok_or_else(|| format!("{:?} generator needs {}", args.kind, flag))
    };
    let k_or_q = match args.kind {
        GeneratorKind::SierksmaBirch | GeneratorKind::LineBalanced => require(args.k, "--k")?,
        GeneratorKind::SierksmaTverberg => require(args.q, "--q")?,
        GeneratorKind::Random => require(args.n, "--n")?,
    };
    let spec = GeneratorSpec {
        kind: args.kind,
        d: args.d,
        k_or_q,
        epsilon,
        seed: args.seed,
        coord_bound: args.coord_bound,
        wrt_origin: args.wrt_origin,
    };
    let x = configs::generate(&spec).map_err(|e| e.to_string())?;
    let rendered = if is_json(&args.out) {
        configs::write_configuration_json(&x)
    } else {
        configs::write_configuration(&x)
    };
    std::fs::write(&args.out, rendered).map_err(|e| format!("{}: {}", args.out.display(), e))?;

    let gp = kernel::is_general_position(&x, None).map_err(|e| e.to_string())?;
    let gp_origin =
        kernel::is_general_position(&x, Some(&Point::origin(x.dim()))).map_err(|e| e.to_string())?;
    match format {
        Format::Human => {
            println!(
                "wrote {} ({} points, dimension {}) to {}",
                x.label(),
                x.len(),
                x.dim(),
                args.out.display()
            );
            println!(
                "general position: {}; with origin: {}",
                if gp { "yes" } else { "no" },
                if gp_origin { "yes" } else { "no" }
            );
        }
        Format::Structured => {
            let out = GenerateOut {
                command: "generate",
                wrote: args.out.display().to_string(),
                label: x.label().to_string(),
                points: x.len(),
                dim: x.dim(),
                general_position: gp,
                general_position_with_origin: gp_origin,
            };
            println!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        }
    }
    Ok(ExitCode::SUCCESS)
}
