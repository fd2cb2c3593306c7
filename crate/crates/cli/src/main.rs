//! `kforce`: generation, closure simulation, exact solving, transforms, bounds and verification.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error, 3 solver budget
//! exceeded, 4 hypothesis not met.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use kforce_core::enumerate::DEFAULT_BUDGET;
use kforce_core::Error;

#[derive(Parser, Debug)]
#[command(name = "kforce", version, about = "k-forcing and k-power domination toolkit")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub global: Global,
}

#[derive(Args, Debug, Clone)]
pub struct Global {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,
    /// Maximum number of candidate sets per exact search.
    #[arg(long, default_value_t = DEFAULT_BUDGET, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    pub budget: u64,
    /// Worker threads for solver and partition parallelism.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..), global = true)]
    pub workers: u64,
    /// Seed for every random choice.
    #[arg(long, default_value_t = 0, global = true)]
    pub seed: u64,
    /// Include wall-clock timings (output is then no longer reproducible byte for byte).
    #[arg(long, global = true)]
    pub timings: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Generate a graph family member and its metadata sidecar.
    Gen(GenArgs),
    /// Run the synchronous closure from a seed set.
    Closure(ClosureArgs),
    /// Exact minimum of a parameter.
    Solve(SolveArgs),
    /// Contract a vertex set to a single vertex.
    Contract(SetTransformArgs),
    /// Build the pendant-augmented induced subgraph of a vertex set.
    Xhat(SetTransformArgs),
    /// Contraction and partition bounds.
    #[command(subcommand)]
    Bound(BoundCommand),
    /// Evaluate the inequality suite or a targeted check.
    Verify(VerifyArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Family {
    Sierpinski,
    Uq,
    Lq,
    Tkc,
    Gpr,
    Path,
    Cycle,
    Complete,
    Star,
    CompleteBipartite,
    Random,
}

#[derive(Args, Debug)]
pub struct GenArgs {
    #[arg(value_enum)]
    pub family: Family,
    #[arg(long)]
    pub p: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(short, long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub c: Option<usize>,
    #[arg(long)]
    pub r: Option<usize>,
    /// First side of a complete bipartite graph.
    #[arg(long)]
    pub a: Option<usize>,
    /// Second side of a complete bipartite graph.
    #[arg(long)]
    pub b: Option<usize>,
    /// Edge probability for random graphs.
    #[arg(long)]
    pub prob: Option<f64>,
    /// Graph file to write; metadata goes to FILE.meta.json.
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Forcing,
    Power,
}

#[derive(Args, Debug)]
pub struct ClosureArgs {
    #[arg(long, value_enum)]
    pub mode: ModeArg,
    #[arg(short)]
    pub k: usize,
    /// Comma-separated vertex ids.
    #[arg(long)]
    pub seed_set: String,
    pub file: PathBuf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum ParamArg {
    Zk,
    Pdk,
    Gamma,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    #[arg(long, value_enum)]
    pub param: ParamArg,
    #[arg(short, default_value_t = 1)]
    pub k: usize,
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct SetTransformArgs {
    /// Comma-separated vertex ids.
    #[arg(long)]
    pub set: String,
    pub file: PathBuf,
    /// Graph file to write.
    #[arg(short, long)]
    pub output: PathBuf,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum BoundParam {
    Zk,
    Pdk,
}

#[derive(Subcommand, Debug)]
pub enum BoundCommand {
    /// Bounds on G from G/X and the augmented graph of X.
    Contraction(ContractionArgs),
    /// Upper bound from a vertex partition.
    Partition(PartitionArgs),
    /// Compare power domination (k = 1) of G and G/X for a low-degree connected X.
    Monotone(MonotoneArgs),
}

#[derive(Args, Debug)]
pub struct ContractionArgs {
    #[arg(long, value_enum)]
    pub param: BoundParam,
    #[arg(short)]
    pub k: usize,
    #[arg(long)]
    pub set: String,
    /// Use the component count of G[X] as the additive term (X needs degree at most k+1 for pdk, k for zk).
    #[arg(long)]
    pub low_degree: bool,
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct PartitionArgs {
    #[arg(long, value_enum)]
    pub param: BoundParam,
    #[arg(short)]
    pub k: usize,
    /// JSON array of vertex-id arrays.
    #[arg(long)]
    pub parts: PathBuf,
    pub file: PathBuf,
}

#[derive(Args, Debug)]
pub struct MonotoneArgs {
    #[arg(long)]
    pub set: String,
    pub file: PathBuf,
}

#[derive(Args, Debug)]
#[command(args_conflicts_with_subcommands = true)]
pub struct VerifyArgs {
    #[command(subcommand)]
    pub target: Option<VerifyTarget>,
    #[arg(short)]
    pub k: Option<usize>,
    pub file: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum VerifyTarget {
    /// Check the closed formula for power domination of Sierpiński graphs.
    Sierpinski(SierpinskiArgs),
    /// Compare an augmented prefix block of S_p^n with S_p^3.
    Block(BlockArgs),
    /// Randomized replaced-set equivalence checks on a graph.
    Surgery(SurgeryArgs),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum SierpinskiModeArg {
    Exact,
    Witness,
}

#[derive(Args, Debug)]
pub struct SierpinskiArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(short)]
    pub k: usize,
    /// Defaults to exact for n = 3 and witness otherwise.
    #[arg(long, value_enum)]
    pub mode: Option<SierpinskiModeArg>,
}

#[derive(Args, Debug)]
pub struct BlockArgs {
    #[arg(long)]
    pub p: usize,
    #[arg(long)]
    pub n: usize,
    #[arg(short)]
    pub k: usize,
    /// Prefix of length n-3, e.g. "0" or "01".
    #[arg(long)]
    pub prefix: String,
}

#[derive(Args, Debug)]
pub struct SurgeryArgs {
    #[arg(short)]
    pub k: usize,
    #[arg(long, default_value_t = 50)]
    pub trials: usize,
    pub file: PathBuf,
}

/// What a successful command wants the process to report.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Fail,
    HypothesisNotMet,
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::BudgetExceeded { .. }) => 3,
        Some(Error::HypothesisNotMet(_)) => 4,
        Some(Error::Internal(_)) => 1,
        _ => 2,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(1),
        Ok(Status::HypothesisNotMet) => ExitCode::from(4),
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
