use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "hypermap",
    version,
    about = "Exact generating polynomials for rooted hypermaps"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generating polynomial P_r(m, n) (or the two-face polynomial with --faces 2)
    Poly(CommonArgs),
    /// Coefficient table (r, e, v, count)
    Table(CommonArgs),
    /// Total number of rooted hypermaps with r darts
    Count(CommonArgs),
    /// Unsigned Stirling numbers of the first kind c_r(1..r)
    Stirling(CommonArgs),
    /// Exact mean of Tr[(rho_A)^r] over random pure states of an m x n system
    AvgTrace(AvgTraceArgs),
    /// Cross-validate all methods and report each check
    Verify(CommonArgs),
    /// Time the enumerative and generating-function methods
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Enumerate,
    Closed,
    Recursion,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Enumerate => "enumerate",
            Method::Closed => "closed",
            Method::Recursion => "recursion",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Args)]
pub struct CommonArgs {
    /// Number of darts
    #[arg(long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub r_min: Option<usize>,
    #[arg(long)]
    pub r_max: Option<usize>,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u8).range(1..=2))]
    pub faces: u8,
    /// Defaults to `closed` for a single r and `recursion` for a range
    #[arg(long, value_enum)]
    pub method: Option<Method>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
    /// Write output here instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Worker threads for enumeration: a positive number or `auto`
    #[arg(long, default_value = "auto")]
    pub threads: String,
    #[arg(long, default_value_t = hypermap_core::oracle::DEFAULT_CEILING)]
    pub enum_ceiling: usize,
    /// Enumerate beyond the ceiling
    #[arg(long)]
    pub force: bool,
}

#[derive(Debug, Clone, Args)]
pub struct AvgTraceArgs {
    #[arg(long)]
    pub m: usize,
    #[arg(long)]
    pub n: usize,
    /// Use the m-truncated sum instead of the generating polynomial
    #[arg(long)]
    pub alt: bool,
    #[command(flatten)]
    pub common: CommonArgs,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Timed repetitions per point (median reported, after one discarded warm-up)
    #[arg(long, default_value_t = 5)]
    pub reps: usize,
    #[command(flatten)]
    pub common: CommonArgs,
}
