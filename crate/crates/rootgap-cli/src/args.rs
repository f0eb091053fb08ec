//! Command line surface.

use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "rootgap",
    version,
    about = "Exact restricted-root data and homological-dimension gap bounds for higher-rank symmetric spaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// List the thirteen group families with their root data shapes,
    /// constants, and the exceptional stubs
    List(ListArgs),
    /// Emit a root-data or bounds table
    Table(TableArgs),
    /// Shorthand for `table bounds`
    Bounds(BoundsArgs),
    /// Sweep the catalog: strict margin checks, exact closed-form fits,
    /// positivity certificates
    Verify(VerifyArgs),
    /// Enumerate maximal strongly orthogonal systems by brute force and
    /// compare the dominant half-sum against the closed form
    Oracle(OracleArgs),
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
}

impl Format {
    pub fn name(self) -> &'static str {
        match self {
            Format::Md => "md",
            Format::Csv => "csv",
            Format::Json => "json",
        }
    }
}

#[derive(Args, Debug)]
pub struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Md)]
    pub format: Format,
    /// Write the report to this file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Copy, Clone, PartialEq, Eq, Debug, ValueEnum)]
pub enum TableKind {
    /// Simple roots, multiplicities, positive roots, 2rho, Theta
    RootData,
    /// Full bound reports per instance
    Bounds,
}

#[derive(Args, Debug)]
pub struct SelectArgs {
    /// Family: a group token (SLR, SLC, SUstar, SO_rk, SOoddC, SpR, SpC,
    /// SU_rk, Sp_rk, SOstar4r, SOstar4r2, SO_rr, SOevenC); root-data and
    /// oracle also accept a restricted letter (A, B, C, D, BC)
    #[arg(long)]
    pub family: String,

    /// Single rank
    #[arg(long, conflicts_with = "ranks")]
    pub rank: Option<u32>,

    /// Inclusive rank range `a..b`
    #[arg(long, value_parser = parse_range)]
    pub ranks: Option<(u32, u32)>,

    /// Single parameter k (parametric families)
    #[arg(long, conflicts_with = "ks")]
    pub k: Option<u32>,

    /// Inclusive k range `a..b`
    #[arg(long, value_parser = parse_range)]
    pub ks: Option<(u32, u32)>,
}

#[derive(Args, Debug)]
pub struct ListArgs {
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct TableArgs {
    /// Which table to emit
    #[arg(value_enum)]
    pub which: TableKind,

    #[command(flatten)]
    pub select: SelectArgs,

    /// Add approximate decimal columns next to exact rationals
    #[arg(long)]
    pub decimal: bool,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[command(flatten)]
    pub select: SelectArgs,

    /// Add approximate decimal columns next to exact rationals
    #[arg(long)]
    pub decimal: bool,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
#[command(group = ArgGroup::new("scope").required(true).args(["all", "family"]))]
pub struct VerifyArgs {
    /// Sweep every family
    #[arg(long)]
    pub all: bool,

    /// Sweep one group family (token)
    #[arg(long)]
    pub family: Option<String>,

    /// Inclusive rank range `a..b` (default from config, else 2..1000)
    #[arg(long, value_parser = parse_range)]
    pub ranks: Option<(u32, u32)>,

    /// Inclusive k range `a..b` (default from config, else 1..100)
    #[arg(long, value_parser = parse_range)]
    pub ks: Option<(u32, u32)>,

    /// Skip the polynomial fits and positivity certificates
    #[arg(long)]
    pub no_fits: bool,

    /// TOML config file overriding the sweep defaults
    #[arg(long)]
    pub config: Option<PathBuf>,

    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    /// Restricted family letter: A, B, C, D, or BC
    #[arg(long)]
    pub family: String,

    /// Rank to enumerate at
    #[arg(long)]
    pub rank: u32,

    /// Exhaustive-search rank cap override
    #[arg(long)]
    pub cap: Option<u32>,

    /// TOML config file (for the oracle rank cap)
    #[arg(long)]
    pub config: Option<PathBuf>,

    #[command(flatten)]
    pub output: OutputArgs,
}

/// Parse an inclusive `a..b` range.
pub fn parse_range(s: &str) -> Result<(u32, u32), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected an inclusive range `a..b`, got `{s}`"))?;
    let lo: u32 = a
        .trim()
        .parse()
        .map_err(|_| format!("invalid range start `{a}`"))?;
    let hi: u32 = b
        .trim()
        .parse()
        .map_err(|_| format!("invalid range end `{b}`"))?;
    if lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    Ok((lo, hi))
}
