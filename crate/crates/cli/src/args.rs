use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use spantruss::ingest::{IngestConfig, InputFormat};
use spantruss::Algorithm;

#[derive(Debug, Parser)]
#[command(name = "spantruss", version, about = "Mine maximal span-trusses of temporal graphs")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Mine all maximal span-trusses and print one JSON object per result.
    Mine(MineArgs),
    /// Run several strategies on the same graph, check they agree, report timings.
    Bench(BenchArgs),
    /// Truss decomposition of the static graph of one interval.
    Decompose(DecomposeArgs),
    /// Write a synthetic temporal graph in the JSON snapshot format.
    Generate(GenerateArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Konect,
    Snap,
    Csv,
    Json,
}

impl From<FormatArg> for InputFormat {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Konect => InputFormat::Konect,
            FormatArg::Snap => InputFormat::Snap,
            FormatArg::Csv => InputFormat::Csv,
            FormatArg::Json => InputFormat::Json,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgoArg {
    Naive,
    Baseline,
    Streaming,
    Heuristic,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Naive => Algorithm::Naive,
            AlgoArg::Baseline => Algorithm::Baseline,
            AlgoArg::Streaming => Algorithm::Streaming,
            AlgoArg::Heuristic => Algorithm::Heuristic,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct InputArgs {
    /// Edge list or JSON snapshot.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "konect")]
    pub format: FormatArg,
    /// Width of one discrete timestamp in seconds.
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
    pub window_seconds: u64,
    /// Keep self-loops, which makes ingest fail if any are present.
    #[arg(long)]
    pub keep_self_loops: bool,
}

impl InputArgs {
    pub fn ingest_config(&self) -> IngestConfig {
        IngestConfig {
            window_seconds: self.window_seconds,
            format: self.format.into(),
            drop_self_loops: !self.keep_self_loops,
        }
    }
}

#[derive(Debug, Clone, Args)]
pub struct MineArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, default_value = "heuristic")]
    pub algo: AlgoArg,
    /// Only print trusses of at least this order.
    #[arg(long, default_value_t = 2)]
    pub min_k: u32,
    /// Include each truss's edge list.
    #[arg(long)]
    pub emit_edges: bool,
    /// Re-check every heuristic skip with a full decomposition.
    #[arg(long)]
    pub paranoid: bool,
    /// Write the `id,label` vertex table to this file.
    #[arg(long)]
    pub vertex_map: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long, value_enum, value_delimiter = ',', default_value = "baseline,streaming,heuristic")]
    pub algos: Vec<AlgoArg>,
    #[arg(long, value_enum, default_value = "json")]
    pub output: ReportFormat,
    /// Name used in the report; defaults to the input file stem.
    #[arg(long)]
    pub dataset: Option<String>,
}

#[derive(Debug, Clone, Args)]
pub struct DecomposeArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(long)]
    pub t_start: usize,
    #[arg(long)]
    pub t_end: usize,
}

#[derive(Debug, Clone, Args)]
pub struct GenerateArgs {
    #[arg(long)]
    pub vertices: usize,
    #[arg(long)]
    pub timestamps: usize,
    /// Expected fraction of vertex pairs active at a timestamp.
    #[arg(long, default_value_t = 0.1)]
    pub density: f64,
    /// Probability an active edge is still active at the next timestamp.
    #[arg(long, default_value_t = 0.9)]
    pub persistence: f64,
    /// Plant a fully persistent community on this many vertices.
    #[arg(long, default_value_t = 0)]
    pub core_size: usize,
    #[arg(long, default_value_t = 0.8)]
    pub core_density: f64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: PathBuf,
}
