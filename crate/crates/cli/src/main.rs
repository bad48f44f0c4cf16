//! Command-line front end: grow networks from generator programs, evolve
//! generators against a target network, score and compare networks, and
//! measure generator similarity.
//!
//! Vertex identifiers are semantically meaningful: generators can read them
//! (`i`, `j`), so ingestion order matters. Edge-list labels map to 1-based
//! sequential identifiers in first-appearance order unless `--shuffle-ids`
//! is given.

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

mod commands;

use commands::CliError;

#[derive(Parser)]
#[command(
    name = "netmorph",
    about = "Evolutionary discovery of decentralized network growth programs",
    version,
    after_help = "Edge-list labels map to 1-based sequential identifiers in \
first-appearance order. Identifiers are semantically meaningful: generator \
programs can read them as `i` and `j` to express a-priori vertex \
heterogeneity, so ingestion order matters; use --shuffle-ids to randomize \
the assignment instead."
)]
struct Cli {
    /// Cap worker threads (defaults to the number of CPUs). The
    /// NETMORPH_CACHE_DIR environment variable sets the baseline cache
    /// directory (default: .netmorph-cache).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone, Copy)]
struct GrowthFlags {
    /// Candidate sample size as a fraction of |V|²
    #[arg(long, default_value_t = 0.01)]
    sample_ratio: f64,
    /// Lower bound on the candidate sample size
    #[arg(long, default_value_t = 50)]
    min_sample: usize,
    /// Random walks per distance estimate
    #[arg(long, default_value_t = 3)]
    walk_count: usize,
    /// Maximum steps per walk (the unreachable cap is this plus one)
    #[arg(long, default_value_t = 10)]
    walk_max_len: usize,
}

impl GrowthFlags {
    fn to_params(self) -> netmorph::GrowthParams {
        netmorph::GrowthParams {
            sample_ratio: self.sample_ratio,
            min_sample: self.min_sample,
            walk_count: self.walk_count,
            walk_max_len: self.walk_max_len,
            distance_cap: (self.walk_max_len + 1) as f64,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Grow a network from a generator program and write its edge list
    Synth {
        /// Program file (one s-expression, `#` comments allowed)
        #[arg(long)]
        program: PathBuf,
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        arcs: usize,
        /// Treat the network as undirected
        #[arg(long)]
        undirected: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output edge list path
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        growth: GrowthFlags,
    },
    /// Evolve a generator for a target network and write the run directory
    Evolve {
        /// Target edge list
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        undirected: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Run directory (run.json, history.csv, best.gen, shortest.gen,
        /// synthetic.edges)
        #[arg(long)]
        out_dir: PathBuf,
        /// Anti-bloat tolerance (0.15 tends to stall evolution, 0.05 to
        /// yield bloated solutions)
        #[arg(long, default_value_t = 0.10)]
        tolerance: f64,
        /// Stop after this many consecutive unchanged generations
        #[arg(long = "stable-gens", default_value_t = 1000)]
        stable_gens: u32,
        /// Erdős–Rényi baseline ensemble size
        #[arg(long, default_value_t = 30)]
        ensemble: u32,
        /// Assign random identifiers instead of first-appearance order
        #[arg(long)]
        shuffle_ids: bool,
        #[command(flatten)]
        growth: GrowthFlags,
    },
    /// Score a candidate (grown from a program, or an existing edge list)
    /// against a target network
    Eval {
        /// Generator program to grow the candidate from
        #[arg(long, conflicts_with = "candidate")]
        program: Option<PathBuf>,
        /// Existing candidate edge list to score as-is
        #[arg(long)]
        candidate: Option<PathBuf>,
        #[arg(long)]
        target: PathBuf,
        #[arg(long)]
        undirected: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 30)]
        ensemble: u32,
        #[arg(long)]
        shuffle_ids: bool,
        #[command(flatten)]
        growth: GrowthFlags,
    },
    /// Print the dissimilarity vector between two networks
    Compare {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        undirected: bool,
        /// Dump distance histograms and triad counts (`bin count` lines)
        /// into this directory
        #[arg(long)]
        hist_dir: Option<PathBuf>,
    },
    /// Build (and cache) the Erdős–Rényi baseline norms for a target
    Baseline {
        #[arg(long)]
        target: PathBuf,
        /// Ensemble size
        #[arg(long, default_value_t = 30)]
        count: u32,
        #[arg(long)]
        undirected: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        shuffle_ids: bool,
    },
    /// Behavioral dissimilarity between two generator programs
    Gensim {
        #[arg(long)]
        a: PathBuf,
        #[arg(long)]
        b: PathBuf,
        #[arg(long)]
        vertices: usize,
        #[arg(long)]
        arcs: usize,
        #[arg(long)]
        undirected: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        growth: GrowthFlags,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global();
    }
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Input(msg)) => {
            eprintln!("input error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
