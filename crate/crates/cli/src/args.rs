use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Deserialize;

#[derive(Debug, Parser)]
#[command(name = "cir", version, about = "Simulate, fit and forecast the CIR diffusion")]
pub struct Cli {
    /// Seed for random draws (simulate only; accepted everywhere).
    #[arg(long, global = true)]
    pub seed: Option<u64>,
    /// Write results here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Suppress warnings on stderr.
    #[arg(long, global = true)]
    pub quiet: bool,
    /// TOML file with default values; flags take precedence.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Simulate one or more paths on the grid t_i = i h.
    Simulate(SimulateArgs),
    /// Estimate sigma, alpha and beta from an observed path.
    Estimate(EstimateArgs),
    /// Trend and conditional-trend forecasts along an observed path.
    Forecast(ForecastArgs),
    /// Confidence bands for x(s + dt) given x(s).
    Band(BandArgs),
    /// Compare two columns of a CSV file with MAE, RMSE and MAPE.
    Evaluate(EvaluateArgs),
}

/// Either `--alpha --beta` or `--kappa --theta`, plus `--sigma`.
#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    #[arg(long, conflicts_with_all = ["kappa", "theta"], allow_negative_numbers = true)]
    pub alpha: Option<f64>,
    #[arg(long, conflicts_with_all = ["kappa", "theta"], allow_negative_numbers = true)]
    pub beta: Option<f64>,
    /// Mean-reversion speed (beta).
    #[arg(long, allow_negative_numbers = true)]
    pub kappa: Option<f64>,
    /// Long-run level (alpha / beta).
    #[arg(long, allow_negative_numbers = true)]
    pub theta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    pub sigma: Option<f64>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SchemeArg {
    Taylor15,
    Exact,
    Euler,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MethodArg {
    M1,
    M2,
    Both,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    #[arg(long)]
    pub x0: Option<f64>,
    /// Step size.
    #[arg(long)]
    pub h: Option<f64>,
    /// Number of steps; the output has steps + 1 rows.
    #[arg(long)]
    pub steps: Option<usize>,
    #[arg(long, value_enum)]
    pub scheme: Option<SchemeArg>,
    /// Number of independent paths, written as columns x_1..x_N.
    #[arg(long)]
    pub paths: Option<usize>,
    /// Fail on a positivity breach instead of reflecting.
    #[arg(long)]
    pub strict: bool,
}

#[derive(Debug, Args)]
pub struct EstimateArgs {
    /// Trajectory CSV with columns t,x.
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub method: Option<MethodArg>,
}

#[derive(Debug, Args)]
pub struct ForecastArgs {
    /// Trajectory CSV with columns t,x.
    #[arg(long)]
    pub input: PathBuf,
    #[command(flatten)]
    pub params: ParamArgs,
    /// Estimation record written by `cir estimate`.
    #[arg(long, conflicts_with_all = ["alpha", "beta", "kappa", "theta", "sigma"])]
    pub estimates: Option<PathBuf>,
    /// Record to use from a multi-record estimates file.
    #[arg(long, value_enum, requires = "estimates")]
    pub method: Option<MethodArg>,
    /// Append lower,upper band columns at this confidence level.
    #[arg(long)]
    pub level: Option<f64>,
}

#[derive(Debug, Args)]
pub struct BandArgs {
    #[command(flatten)]
    pub params: ParamArgs,
    /// Conditioning state x(s).
    #[arg(long)]
    pub xs: f64,
    /// Comma-separated horizons.
    #[arg(long, value_delimiter = ',', required = true)]
    pub dt: Vec<f64>,
    #[arg(long)]
    pub level: Option<f64>,
}

#[derive(Debug, Args)]
pub struct EvaluateArgs {
    #[arg(long)]
    pub input: PathBuf,
    /// Column holding observations.
    #[arg(long, default_value = "x")]
    pub observed: String,
    /// Column holding forecasts.
    #[arg(long, default_value = "etf")]
    pub predicted: String,
}
