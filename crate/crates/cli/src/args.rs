use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "crossfree",
    version,
    about = "Count, enumerate and analyze non-crossing path partitions on convex sets and double chains",
    after_help = "Brute-force routines refuse oversized inputs. Set CROSSFREE_GUARD_OVERRIDE=<n> to raise \
                  every guard to at least <n>; this may be very slow.\n\n\
                  Exit codes: 0 success, 1 verification mismatch or computation failure, \
                  2 usage or input error, 3 size guard refused the request."
)]
pub struct Cli {
    /// Worker threads for the parallel parts (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    /// Write data to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print a count table (g, gs or go).
    Count(CountArgs),
    /// Enumerate partitions by brute force.
    Enumerate(EnumerateArgs),
    /// Run the acceptance suite, or a quick oracle and series-residual check.
    Verify(VerifyArgs),
    /// Branch point and growth constant of an algebraic relation.
    Asymptotics(AsymptoticsArgs),
    /// Maximize 2^H(a) * beta^(1-a) * gamma^(c*a) over a.
    Optimize(OptimizeArgs),
    /// Double-chain constructions.
    Construct(ConstructArgs),
    /// SVG drawing of a chain graph, a partition or a realization.
    Render(RenderArgs),
    /// The published count tables next to the computed ones.
    Tables(TablesArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BaseClass {
    Ncp,
    Ncpws,
    Ordered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AnyClass {
    Ncp,
    Ncpws,
    Ordered,
    Ordered2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableFormat {
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_enum, default_value = "ncp")]
    pub class: BaseClass,
    #[arg(long)]
    pub n_max: usize,
    #[arg(long, value_enum, default_value = "csv")]
    pub format: TableFormat,
}

#[derive(Debug, Args)]
pub struct EnumerateArgs {
    #[arg(long, value_enum, default_value = "ncp")]
    pub class: AnyClass,
    /// 2-ordered interpretation: A, B or relaxed.
    #[arg(long, default_value = "A")]
    pub variant: String,
    #[arg(long)]
    pub n: usize,
    /// Stream one canonical partition per line as JSON; the summary goes to
    /// stderr.
    #[arg(long)]
    pub jsonl: bool,
    /// Report counts for 1..=n and consecutive ratios instead of one summary.
    #[arg(long, conflicts_with = "jsonl")]
    pub growth: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Oracle up to n = 8 and residuals at order 20 instead of the full
    /// acceptance suite.
    #[arg(long)]
    pub quick: bool,
    #[arg(long, value_enum, default_value = "text")]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct AsymptoticsArgs {
    /// eq8, eq15, eq22, an inline list [[zdeg,wdeg,coef],...] or @FILE
    /// holding such a list.
    pub relation: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct OptimizeArgs {
    #[arg(long)]
    pub beta: String,
    /// A number, or 1+sqrt2.
    #[arg(long, default_value = "1")]
    pub gamma: String,
    #[arg(long, default_value = "0")]
    pub c: String,
    #[arg(long, value_enum, default_value = "json")]
    pub format: ReportFormat,
}

#[derive(Debug, Args)]
pub struct ConstructArgs {
    #[command(subcommand)]
    pub op: ConstructOp,
    /// Also write an SVG drawing of the resulting graph here.
    #[arg(long, global = true)]
    pub svg: Option<PathBuf>,
}

/// JSON inputs are given inline, as a file path, or `-` for stdin.
#[derive(Debug, Subcommand)]
pub enum ConstructOp {
    /// Split a polygonization into one partition per chain.
    Decompose {
        #[arg(long)]
        input: String,
    },
    /// Join two partitions with equal path counts by alternating edges.
    Compose {
        #[arg(long)]
        upper: String,
        #[arg(long)]
        lower: String,
    },
    /// Hamiltonian path from two ordered partitions with equal path counts.
    Hamiltonian {
        #[arg(long)]
        upper: String,
        #[arg(long)]
        lower: String,
    },
    /// Close a constructed Hamiltonian path into a polygonization.
    Close {
        #[arg(long)]
        input: String,
    },
    /// The alternating-edge families A_i and B_i.
    AbFamily {
        #[arg(long)]
        i: usize,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        m: Option<usize>,
        /// Print only the family sizes.
        #[arg(long)]
        counts_only: bool,
    },
    /// Count polygonizations of a double chain.
    CountPolygonizations {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "both")]
        method: CountMethod,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CountMethod {
    Exact,
    Geometric,
    Both,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct RenderArgs {
    /// Chain graph JSON (inline, path or -).
    #[arg(long)]
    pub graph: Option<String>,
    /// Partition JSON (inline, path or -).
    #[arg(long)]
    pub partition: Option<String>,
    /// Standard realization of N,M points.
    #[arg(long, value_name = "N,M")]
    pub realization: Option<String>,
}

#[derive(Debug, Args)]
pub struct TablesArgs {
    #[arg(long, value_enum, default_value = "text")]
    pub format: ReportFormat,
}
