use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand};
use rice_core::Family;

#[derive(Debug, Parser)]
#[command(
    name = "rice-maxima",
    version,
    about = "Expected number of local maxima below a level of random polynomials with Brownian-motion coefficients"
)]
pub struct Cli {
    /// Print one JSON record instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    /// Report wall time on stderr and in the JSON record.
    #[arg(long, global = true)]
    pub timing: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Density of maxima below u at a point.
    Density(DensityArgs),
    /// Expected number of maxima below u on an interval, by quadrature.
    Expect(ExpectArgs),
    /// Large-n expansion on one of the four canonical intervals.
    Asymptotic(AsymptoticArgs),
    /// Direct simulation.
    Montecarlo(MonteCarloArgs),
    /// Recompute the tabulated kernel integrals and expansion constants.
    VerifyConstants(VerifyArgs),
    /// Exact, asymptotic and simulated values over a grid of n and u.
    Compare(CompareArgs),
}

#[derive(Debug, Args)]
pub struct ModelArgs {
    /// Degree of the polynomial.
    #[arg(long)]
    pub n: usize,

    /// Increment deviations sigma_1..sigma_n, one per line (default all 1).
    #[arg(long)]
    pub sigma_file: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct DensityArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub u: f64,
    #[arg(long, allow_hyphen_values = true)]
    pub x: f64,
}

#[derive(Debug, Args)]
pub struct ExpectArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub u: f64,
    /// `a,b` (with `inf`/`-inf`) or one of pos-tail, neg-tail, unit, neg-unit.
    #[arg(long, default_value = "-inf,inf", allow_hyphen_values = true)]
    pub interval: Interval,
    #[arg(long, default_value_t = 1e-8)]
    pub rel_tol: f64,
}

#[derive(Debug, Args)]
pub struct AsymptoticArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    /// pos-tail, neg-tail, unit, neg-unit, or the index 1..4.
    #[arg(long)]
    pub family: FamilyArg,
    #[arg(long, allow_hyphen_values = true)]
    pub u: f64,
}

#[derive(Debug, Args)]
pub struct McArgs {
    #[arg(long, default_value_t = 100_000)]
    pub trials: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    /// Overridden by RICE_MAXIMA_THREADS. Defaults to the available cores.
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long, default_value_t = 512)]
    pub points_per_unit: usize,
}

#[derive(Debug, Args)]
pub struct MonteCarloArgs {
    #[command(flatten)]
    pub model: ModelArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub u: f64,
    #[arg(long, default_value = "-inf,inf", allow_hyphen_values = true)]
    pub interval: Interval,
    #[command(flatten)]
    pub mc: McArgs,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Relative tolerance for every row instead of the per-row defaults.
    #[arg(long)]
    pub rel_tol: Option<f64>,
}

#[derive(Debug, Args)]
pub struct CompareArgs {
    /// Comma-separated degrees.
    #[arg(long, value_delimiter = ',', num_args = 0..)]
    pub n_list: Vec<usize>,
    /// Comma-separated levels.
    #[arg(
        long,
        value_delimiter = ',',
        allow_hyphen_values = true,
        default_value = "1"
    )]
    pub u_list: Vec<f64>,
    #[arg(long, default_value = "-inf,inf", allow_hyphen_values = true)]
    pub interval: Interval,
    #[arg(long, default_value_t = 1e-8)]
    pub rel_tol: f64,
    /// Simulation trials per cell; 0 leaves the Monte Carlo columns empty.
    #[arg(long, default_value_t = 0)]
    pub trials: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long)]
    pub workers: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    /// Set when given by family name or when it equals a family's range.
    pub family: Option<Family>,
}

impl FromStr for Interval {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        if let Some(f) = Family::from_name(s.trim()) {
            let (lo, hi) = f.x_range();
            return Ok(Interval {
                lo,
                hi,
                family: Some(f),
            });
        }
        let (a, b) = s
            .split_once(',')
            .ok_or_else(|| format!("expected `a,b` or a family name, got {s:?}"))?;
        let parse = |t: &str| t.trim().parse::<f64>().map_err(|e| format!("{t:?}: {e}"));
        let (lo, hi) = (parse(a)?, parse(b)?);
        let family = Family::ALL.into_iter().find(|f| f.x_range() == (lo, hi));
        Ok(Interval { lo, hi, family })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FamilyArg(pub Family);

impl FromStr for FamilyArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Family::from_name(s)
            .or_else(|| s.parse().ok().and_then(Family::from_index))
            .map(FamilyArg)
            .ok_or_else(|| {
                format!("unknown family {s:?}; use pos-tail, neg-tail, unit, neg-unit or 1..4")
            })
    }
}
