use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "thetasg",
    version,
    about = "Numerical semigroups closed under x -> a*x + b"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generators, embedding dimension, Apéry set, Frobenius number, genus.
    Info(InfoArgs),
    /// Members below a limit, one row per residue class modulo c.
    Table(TableArgs),
    /// Membership verdicts for one or more integers.
    Member(MemberArgs),
    /// All gaps (positive integers outside the semigroup).
    Gaps(GapsArgs),
    /// Thabit or Mersenne numerical semigroups.
    Preset(PresetArgs),
    /// Cross-check the closed forms against the brute-force closure.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct TripleArgs {
    /// Affine multiplier.
    #[arg(long)]
    pub a: Option<u128>,
    /// Affine offset.
    #[arg(long)]
    pub b: Option<u128>,
    /// Seed element (at least 2, coprime to b).
    #[arg(long)]
    pub c: Option<u128>,
}

#[derive(Debug, Clone, Args)]
pub struct ReportOptions {
    /// Include the list of gaps.
    #[arg(long)]
    pub gaps: bool,
    /// Include the members below this limit.
    #[arg(long)]
    pub limit: Option<u128>,
    /// Also build the semigroup by brute force and require agreement.
    #[arg(long)]
    pub verify: bool,
    /// Refuse to list gaps when the Frobenius number exceeds this.
    #[arg(long, default_value_t = thetasg::semigroup::DEFAULT_GAPS_CAP)]
    pub max_frobenius: u128,
    /// Largest interval the brute-force closure may materialise.
    #[arg(long, default_value_t = thetasg::oracle::DEFAULT_BOUND_CAP)]
    pub max_bound: u128,
}

#[derive(Debug, Clone, Args)]
pub struct InfoArgs {
    #[command(flatten)]
    pub triple: TripleArgs,
    /// CSV file with header a,b,c; one report per row.
    #[arg(long, conflicts_with_all = ["a", "b", "c"])]
    pub input: Option<PathBuf>,
    #[command(flatten)]
    pub report: ReportOptions,
}

#[derive(Debug, Clone, Args)]
pub struct TableArgs {
    #[command(flatten)]
    pub triple: TripleArgs,
    /// Exclusive upper limit (default: conductor + c).
    #[arg(long)]
    pub limit: Option<u128>,
}

#[derive(Debug, Clone, Args)]
pub struct MemberArgs {
    #[command(flatten)]
    pub triple: TripleArgs,
    /// Integer to test; repeat or separate with commas.
    #[arg(long = "n", required = true, value_delimiter = ',')]
    pub n: Vec<u128>,
}

#[derive(Debug, Clone, Args)]
pub struct GapsArgs {
    #[command(flatten)]
    pub triple: TripleArgs,
    /// Refuse when the Frobenius number exceeds this.
    #[arg(long, default_value_t = thetasg::semigroup::DEFAULT_GAPS_CAP)]
    pub max_frobenius: u128,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PresetName {
    /// T(n) = G_{2,1}(3*2^n - 1)
    Thabit,
    /// M(n) = G_{2,1}(2^n - 1)
    Mersenne,
}

#[derive(Debug, Clone, Args)]
pub struct PresetArgs {
    #[arg(value_enum)]
    pub name: PresetName,
    #[arg(long = "n")]
    pub n: u32,
    #[command(flatten)]
    pub report: ReportOptions,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    /// Value or inclusive range `lo..hi` for a.
    #[arg(long)]
    pub a: Option<Range>,
    /// Value or inclusive range `lo..hi` for b.
    #[arg(long)]
    pub b: Option<Range>,
    /// Value or inclusive range `lo..hi` for c.
    #[arg(long)]
    pub c: Option<Range>,
    /// CSV file with header a,b,c.
    #[arg(long, conflicts_with_all = ["a", "b", "c"])]
    pub input: Option<PathBuf>,
    /// Largest interval the brute-force closure may materialise.
    #[arg(long, default_value_t = thetasg::oracle::DEFAULT_BOUND_CAP)]
    pub max_bound: u128,
}

/// Inclusive integer range, written `v`, `lo..hi` or `lo..=hi`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Range {
    pub lo: u128,
    pub hi: u128,
}

impl Range {
    pub fn iter(&self) -> impl Iterator<Item = u128> {
        self.lo..=self.hi
    }
}

impl FromStr for Range {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parse = |t: &str| t.trim().parse::<u128>().map_err(|e| format!("`{t}`: {e}"));
        let (lo, hi) = match s.split_once("..") {
            Some((lo, hi)) => (parse(lo)?, parse(hi.strip_prefix('=').unwrap_or(hi))?),
            None => {
                let v = parse(s)?;
                (v, v)
            }
        };
        if lo > hi {
            return Err(format!("empty range {lo}..{hi}"));
        }
        Ok(Range { lo, hi })
    }
}
