use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use hh_core::generators::{Family, ADVERSARIAL_DEFAULTS};
use hh_core::{TiePolicy, Weight};

#[derive(Debug, Parser)]
#[command(name = "hh", version, about = "Hub-forced Glory/Gnash consensus: generate, analyze, simulate, sweep, oracle-check")]
pub struct Cli {
    /// Seed for every random choice (BA generation, sampled sweeps, shuffles, random states).
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Aligned tables and key/value blocks.
    Human,
    /// Comma-separated rows behind a versioned `#` header line.
    Csv,
    /// One JSON record.
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a generated graph in the `hh v1` text format.
    Generate(GenerateArgs),
    /// Print exact thresholds and worst-case bounds for a graph.
    Threshold(ThresholdArgs),
    /// Run synchronous steps or a sequential schedule and trace the Glory count.
    Simulate(SimulateArgs),
    /// Sweep a parameter and emit one row per point.
    Sweep(SweepArgs),
    /// Exhaustively check one-step convergence from every initial state.
    ///
    /// Exit status: 0 converges, 1 counterexample found, 2 usage or capacity error.
    Oracle(OracleArgs),
}

#[derive(Debug, Subcommand)]
pub enum FamilyCmd {
    /// k-nearest-neighbour ring.
    Ring {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// 4-neighbour grid.
    Grid {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        torus: bool,
    },
    /// Preferential attachment (uses --seed).
    Ba {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
    },
    /// Heterogeneous graph separating pointwise and classical bounds.
    Adversarial {
        #[arg(long, default_value_t = ADVERSARIAL_DEFAULTS.0)]
        fan_in: usize,
        #[arg(long, default_value_t = ADVERSARIAL_DEFAULTS.1)]
        light_w: Weight,
        #[arg(long, default_value_t = ADVERSARIAL_DEFAULTS.2)]
        heavy_w: Weight,
    },
}

impl FamilyCmd {
    pub fn family(&self, seed: u64) -> Family {
        match *self {
            FamilyCmd::Ring { n, k } => Family::Ring { n, k },
            FamilyCmd::Grid { rows, cols, torus } => Family::Grid { rows, cols, torus },
            FamilyCmd::Ba { n, m } => Family::BarabasiAlbert { n, m, seed },
            FamilyCmd::Adversarial { fan_in, light_w, heavy_w } => Family::AdversarialHetero {
                fan_in,
                light_w,
                heavy_w,
            },
        }
    }
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    /// Uniform hub weight into every base vertex (0 or absent: isolated hub).
    #[arg(long, global = true)]
    pub hub_w: Option<Weight>,

    /// Comma-separated per-seed weights; adds one seed vertex per entry.
    #[arg(long, global = true, value_delimiter = ',', conflicts_with = "hub_w")]
    pub split: Vec<Weight>,

    /// Output file (default: stdout, summary on stderr).
    #[arg(short, long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub family: FamilyCmd,
}

#[derive(Debug, Args)]
pub struct ToleranceArg {
    /// Uniform tolerance for every vertex; replaces `t` lines from the file.
    #[arg(long)]
    pub tau: Option<u64>,
}

#[derive(Debug, Args)]
pub struct ThresholdArgs {
    pub graph: PathBuf,
    #[command(flatten)]
    pub tau: ToleranceArg,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Sync,
    Schedule,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    pub graph: PathBuf,
    /// `all-gnash`, `all-glory`, `random`, or a G/N literal of length n.
    #[arg(long, default_value = "all-gnash")]
    pub init: String,
    #[arg(long, default_value = "glory")]
    pub policy: TiePolicy,
    #[arg(long, value_enum, default_value_t = Mode::Sync)]
    pub mode: Mode,
    /// Maximum synchronous steps.
    #[arg(long, default_value_t = 10)]
    pub steps: usize,
    /// Comma-separated visit order for schedule mode (default: 0..n).
    #[arg(long, conflicts_with = "shuffle")]
    pub schedule: Option<String>,
    /// Visit every vertex once in a random order (uses --seed).
    #[arg(long)]
    pub shuffle: bool,
    /// Comma-separated seed vertices (default: the hub).
    #[arg(long, value_delimiter = ',')]
    pub seeds: Vec<usize>,
    #[command(flatten)]
    pub tau: ToleranceArg,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    pub graph: PathBuf,
    #[arg(long, value_delimiter = ',')]
    pub seeds: Vec<usize>,
    #[arg(long, default_value = "glory")]
    pub policy: TiePolicy,
    #[command(flatten)]
    pub tau: ToleranceArg,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, value_enum, default_value_t = Format::Csv, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub kind: SweepCmd,
}

#[derive(Debug, Args)]
pub struct WRange {
    #[arg(long, default_value_t = 0)]
    pub w_min: Weight,
    #[arg(long)]
    pub w_max: Weight,
    /// Sampled initial states per point when the graph exceeds oracle capacity.
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    #[arg(long, default_value = "glory")]
    pub policy: TiePolicy,
    #[arg(long, default_value_t = 0)]
    pub tau: u64,
}

/// CSV columns per sweep kind (each file starts with `# hh-sweep-<kind> v1`):
///
/// ring|grid|ba: family,params,w,w_star,w_over_wstar,mode,samples,success,steps
///
/// adversarial:  family,fan_in,light_w,heavy_w,maxrest,pointwise_bound,classical_bound,classical_over_pointwise
///
/// split:        family,params,hubs,budget,weights,per_hub_w,criterion,oracle
#[derive(Debug, Subcommand)]
pub enum SweepCmd {
    /// One-step success against uniform hub weight W on a ring.
    Ring {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[command(flatten)]
        range: WRange,
    },
    /// One-step success against uniform hub weight W on a grid.
    Grid {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
        #[arg(long)]
        torus: bool,
        #[command(flatten)]
        range: WRange,
    },
    /// One-step success against uniform hub weight W on a BA graph.
    Ba {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        range: WRange,
    },
    /// Bound comparison on the adversarial family as fan-in grows.
    Adversarial {
        #[arg(long, default_value_t = 1)]
        fan_in_min: usize,
        #[arg(long, default_value_t = ADVERSARIAL_DEFAULTS.0)]
        fan_in_max: usize,
        #[arg(long, default_value_t = 1)]
        fan_in_step: usize,
        #[arg(long, default_value_t = ADVERSARIAL_DEFAULTS.1)]
        light_w: Weight,
        #[arg(long, default_value_t = ADVERSARIAL_DEFAULTS.2)]
        heavy_w: Weight,
    },
    /// Equal splits of a hub budget over 1..=hubs-max seed hubs on a ring.
    Split {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        budget: Weight,
        #[arg(long, default_value_t = 1)]
        hubs_min: usize,
        #[arg(long)]
        hubs_max: usize,
    },
}
