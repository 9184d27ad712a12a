use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use travel_core::{Filter, DEFAULT_ORACLE_LIMIT, DEFAULT_WITNESS_LIMIT};

/// Check, convert and enumerate travel groupoids and T-partition systems on
/// finite graphs.
#[derive(Debug, Parser)]
#[command(name = "travel", version)]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOptions,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct GlobalOptions {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Maximum number of witnesses kept per axiom.
    #[arg(long, default_value_t = DEFAULT_WITNESS_LIMIT, global = true)]
    pub witness_limit: usize,

    /// Also show the operation as a next-hop table: row u, column v is the
    /// next hop from u toward v.
    #[arg(long, global = true)]
    pub as_routing: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check (t1)-(t5) on an operation table, and optionally that it lives on a graph.
    CheckGroupoid {
        table: PathBuf,
        #[arg(long)]
        graph: Option<PathBuf>,
    },
    /// Check the T-partition system conditions and the R3-R5 classes.
    CheckTps { system: PathBuf, graph: PathBuf },
    /// Convert between a travel groupoid and its T-partition system.
    Convert {
        #[arg(value_enum)]
        direction: Direction,
        input: PathBuf,
        graph: PathBuf,
        output: PathBuf,
    },
    /// Enumerate every T-partition system on a graph.
    Enumerate {
        graph: PathBuf,
        #[arg(long, value_enum, default_value_t = FilterArg::All)]
        filter: FilterArg,
        /// Print tallies only.
        #[arg(long)]
        count_only: bool,
        /// Write matching systems, one JSON object per line, in canonical order.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads for the search.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
    /// Cross-check the search against an exhaustive table scan.
    Oracle {
        graph: PathBuf,
        /// Largest vertex count the table scan accepts.
        #[arg(long, default_value_t = DEFAULT_ORACLE_LIMIT)]
        oracle_limit: usize,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::CheckGroupoid { .. } => "check-groupoid",
            Command::CheckTps { .. } => "check-tps",
            Command::Convert { .. } => "convert",
            Command::Enumerate { .. } => "enumerate",
            Command::Oracle { .. } => "oracle",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Direction {
    ToTps,
    ToGroupoid,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FilterArg {
    All,
    Simple,
    Smooth,
    SemiSmooth,
}

impl From<FilterArg> for Filter {
    fn from(arg: FilterArg) -> Filter {
        match arg {
            FilterArg::All => Filter::All,
            FilterArg::Simple => Filter::Simple,
            FilterArg::Smooth => Filter::Smooth,
            FilterArg::SemiSmooth => Filter::SemiSmooth,
        }
    }
}
