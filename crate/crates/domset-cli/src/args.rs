use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "domset",
    about = "Distributed-style dominating set solvers, oracles, benchmarks, and simulation",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Solve a single instance and emit one machine-readable record.
    Solve(SolveArgs),
    /// Sweep a directory of instances and emit one CSV row per
    /// instance/algorithm pair.
    Bench(BenchArgs),
    /// Exact brute-force values for small instances.
    Oracle(OracleArgs),
    /// Run an algorithm through the round-synchronous simulator.
    Simulate(SimulateArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Edgelist,
    Metis,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AutoFormat {
    Auto,
    Edgelist,
    Metis,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Algo {
    Alg1,
    Alg2,
    Mod1,
    Mod2,
    CaroweiDs,
    CaroweiTds,
    Kdom,
    Setcover,
}

impl Algo {
    pub fn name(&self) -> &'static str {
        match self {
            Algo::Alg1 => "alg1",
            Algo::Alg2 => "alg2",
            Algo::Mod1 => "mod1",
            Algo::Mod2 => "mod2",
            Algo::CaroweiDs => "carowei-ds",
            Algo::CaroweiTds => "carowei-tds",
            Algo::Kdom => "kdom",
            Algo::Setcover => "setcover",
        }
    }

    /// Scope of the marking phase, as reported in records.
    pub fn scope_name(&self) -> &'static str {
        match self {
            Algo::Mod1 | Algo::Mod2 | Algo::CaroweiTds => "open",
            Algo::Setcover => "-",
            _ => "closed",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum VcBackend {
    Matching,
    Greedy,
    Exact,
}

impl VcBackend {
    pub fn name(&self) -> &'static str {
        match self {
            VcBackend::Matching => "matching",
            VcBackend::Greedy => "greedy",
            VcBackend::Exact => "exact",
        }
    }

    pub fn solver(&self) -> domset_vc::CoverSolver {
        match self {
            VcBackend::Matching => domset_vc::CoverSolver::Matching2Approx,
            VcBackend::Greedy => domset_vc::CoverSolver::Greedy,
            VcBackend::Exact => domset_vc::CoverSolver::exact(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
}

#[derive(Args, Debug)]
pub struct SolveArgs {
    /// Instance path (a graph, or a set-cover instance for --algo setcover).
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Edgelist)]
    pub format: InputFormat,
    #[arg(long, value_enum)]
    pub algo: Algo,
    /// Re-marking rounds.
    #[arg(long, default_value_t = 5)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Vertex-cover backend for the refinement step.
    #[arg(long, value_enum, default_value_t = VcBackend::Matching)]
    pub vc: VcBackend,
    /// Distance bound for --algo kdom.
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    #[arg(long, value_enum, default_value_t = OutputFormat::Json)]
    pub out: OutputFormat,
    /// Re-verify the solution; a failed check exits with code 2.
    #[arg(long)]
    pub verify: bool,
    /// Zero out wall-clock fields so equal runs emit identical bytes.
    #[arg(long)]
    pub stable: bool,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    /// Directory of instance files.
    #[arg(long)]
    pub dir: PathBuf,
    /// Comma-separated algorithms (setcover is not sweepable).
    #[arg(long, value_enum, value_delimiter = ',', required = true)]
    pub algos: Vec<Algo>,
    /// Seeds per instance; the row reports min and mean over them.
    #[arg(long, default_value_t = 1)]
    pub repeat: usize,
    #[arg(long, default_value_t = 5)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = VcBackend::Matching)]
    pub vc: VcBackend,
    #[arg(long, value_enum, default_value_t = AutoFormat::Auto)]
    pub format: AutoFormat,
    #[arg(long, default_value_t = 1)]
    pub k: usize,
    /// Append one JSON record per individual run to this file.
    #[arg(long)]
    pub jsonl: Option<PathBuf>,
    /// Zero out wall-clock fields so equal runs emit identical bytes.
    #[arg(long)]
    pub stable: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OracleWhat {
    Gamma,
    GammaT,
    Beta,
    All,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Edgelist)]
    pub format: InputFormat,
    #[arg(long, value_enum, default_value_t = OracleWhat::All)]
    pub what: OracleWhat,
    #[arg(long)]
    pub stable: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SimAlgo {
    Alg1,
    Carowei,
}

#[derive(Args, Debug)]
pub struct SimulateArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value_t = InputFormat::Edgelist)]
    pub format: InputFormat,
    #[arg(long, value_enum)]
    pub algo: SimAlgo,
    #[arg(long, default_value_t = 5)]
    pub m: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Per-message payload cap in bits for the audit.
    #[arg(long, default_value_t = 128)]
    pub payload_cap: u32,
    /// Write per-round trace lines here instead of stdout.
    #[arg(long)]
    pub trace: Option<PathBuf>,
    #[arg(long)]
    pub stable: bool,
}
