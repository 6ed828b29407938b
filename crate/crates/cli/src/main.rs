//! `birch` — exact partition counting from the command line.
//!
//! Exit codes are a stable contract: 0 on success, 1 when a property
//! campaign observes a violation, 2 on usage or input errors.

mod campaign;
mod ops;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Structured,
}

#[derive(Parser)]
#[command(name = "birch", version, about = "Exact counting of Birch and Tverberg partitions")]
struct Cli {
    /// Worker threads; defaults to $BIRCH_WORKERS, then all cores.
    /// Affects elapsed time only, never a reported number.
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// Output style: readable text or machine-readable JSON
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count partitions of a configuration read from a file
    #[command(subcommand)]
    Count(CountCmd),
    /// Write a reference or random configuration to a file
    Generate {
        /// Which generator to run
        kind: GeneratorName,
        /// Output path; a .json extension selects the structured format
        #[arg(long)]
        out: PathBuf,
        /// Ambient dimension
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Block count (sierksma-birch) or positive-side count (line-balanced)
        #[arg(long)]
        k: Option<usize>,
        /// Block count for sierksma-tverberg
        #[arg(long)]
        q: Option<usize>,
        /// Point count for the random generator
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Cluster radius for the sierksma generators, in (0, 1/10)
        #[arg(long, default_value = "1/16")]
        epsilon: String,
        /// Coordinate range for the random generator
        #[arg(long, default_value_t = 50)]
        coord_bound: i64,
        /// Ask the random generator for general position w.r.t. the origin
        #[arg(long)]
        wrt_origin: bool,
    },
    /// Run a seeded property campaign over random configurations
    Campaign {
        name: campaign::CampaignName,
        #[arg(long, default_value_t = 2)]
        d: usize,
        /// Blocks per Birch partition (parity, lower-bound, conjecture-search)
        #[arg(long)]
        k: Option<usize>,
        /// Blocks per Tverberg partition (tverberg-parity)
        #[arg(long)]
        q: Option<usize>,
        #[arg(long, default_value_t = 100)]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        coord_bound: i64,
    },
}

#[derive(Subcommand)]
enum CountCmd {
    /// Birch partitions: blocks of d+1 points whose hulls contain the origin
    Birch {
        #[arg(long)]
        input: PathBuf,
        /// List every partition found
        #[arg(long)]
        witnesses: bool,
    },
    /// Tverberg partitions: q blocks whose hulls share a common point
    Tverberg {
        #[arg(long)]
        input: PathBuf,
        /// Number of blocks
        #[arg(long)]
        q: usize,
        /// List every partition found
        #[arg(long)]
        witnesses: bool,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GeneratorName {
    SierksmaBirch,
    SierksmaTverberg,
    LineBalanced,
    Random,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let workers = cli.workers.or_else(|| {
        std::env::var("BIRCH_WORKERS")
            .ok()
            .and_then(|v| v.parse().ok())
    });
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(w) = workers {
        builder = builder.num_threads(w);
    }
    let pool = match builder.build() {
        Ok(pool) => pool,
        Err(e) => return fail(&format!("worker pool: {}", e)),
    };

    let outcome = pool.install(|| match cli.command {
        Command::Count(CountCmd::Birch { input, witnesses }) => {
            ops::count_birch_file(&input, witnesses, cli.format)
        }
        Command::Count(CountCmd::Tverberg { input, q, witnesses }) => {
            ops::count_tverberg_file(&input, q, witnesses, cli.format)
        }
        Command::Generate {
            kind,
            out,
            d,
            k,
            q,
            n,
            seed,
            epsilon,
            coord_bound,
            wrt_origin,
        } => ops::generate_file(
            ops::GenerateArgs {
                kind: match kind {
                    GeneratorName::SierksmaBirch => birch_core::configs::GeneratorKind::SierksmaBirch,
                    GeneratorName::SierksmaTverberg => {
                        birch_core::configs::GeneratorKind::SierksmaTverberg
                    }
                    GeneratorName::LineBalanced => birch_core::configs::GeneratorKind::LineBalanced,
                    GeneratorName::Random => birch_core::configs::GeneratorKind::Random,
                },
                out,
                d,
                k,
                q,
                n,
                seed,
                epsilon,
                coord_bound,
                wrt_origin,
            },
            cli.format,
        ),
        Command::Campaign {
            name,
            d,
            k,
            q,
            trials,
            seed,
            coord_bound,
        } => campaign::run(name, d, k, q, trials, seed, coord_bound, cli.format),
    });

    match outcome {
        Ok(code) => code,
        Err(msg) => fail(&msg),
    }
}

fn fail(msg: &str) -> ExitCode {
    eprintln!("error: {}", msg);
    ExitCode::from(2)
}
