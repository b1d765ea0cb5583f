//! `dpqs` command implementations.
//!
//! Every command writes machine-readable rows to the given writer. Exact
//! values are printed as `p/q` (or `p` when integral) so they can be parsed
//! back into the same rational; `*_float` columns are conveniences.

use std::io::{self, Write};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use dualpivot::experiments::{compare, run_trials, TrialPlan};
use dualpivot::oracle::{
    asymptotics, classic_exchanges_curve, comparisons_curve, cost_distribution_capped, dp_expected,
    dual_exchanges_curve, dual_stages_curve, variance_curve, ClosedForms,
};
use dualpivot::verify::{run_suite, VerifyConfig};
use dualpivot::{Algorithm, Error as CoreError, Metric, Rational, Scalar};

#[derive(Debug, Parser)]
#[command(name = "dpqs", version, about = "Dual-pivot quicksort cost model: exact oracles and Monte Carlo checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run the exact cross-check suite; exit 0 iff every check passes.
    Verify(VerifyArgs),
    /// Seeded Monte Carlo run compared against the oracle.
    Simulate(SimulateArgs),
    /// Exact expectations for a list of sizes.
    Table(TableArgs),
    /// Exact law of a cost metric at one size.
    Dist(DistArgs),
    /// Exact values next to their asymptotic curves.
    Plotdata(PlotArgs),
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, default_value_t = 20)]
    pub n_max: usize,
    #[arg(long, default_value_t = 12)]
    pub dist_cap: usize,
}

#[derive(Debug, Args)]
pub struct SimulateArgs {
    #[arg(long = "alg", value_enum, default_value_t = AlgArg::Dual)]
    pub algorithm: AlgArg,
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value_t = 10_000, value_parser = clap::value_parser!(u64).range(1..))]
    pub trials: u64,
    #[arg(long, default_value_t = 42)]
    pub seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct TableArgs {
    #[arg(long = "alg", value_enum, default_value_t = AlgArg::Dual)]
    pub algorithm: AlgArg,
    /// Sizes, comma separated.
    #[arg(long = "n", value_delimiter = ',', required = true)]
    pub n_list: Vec<usize>,
    #[arg(long, value_enum, value_delimiter = ',', default_values_t = [Quantity::Comparisons, Quantity::Exchanges, Quantity::Stages])]
    pub metrics: Vec<Quantity>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct DistArgs {
    #[arg(long, value_enum)]
    pub metric: MetricArg,
    #[arg(long)]
    pub n: usize,
    /// Floating-point probabilities; allows larger `n`.
    #[arg(long)]
    pub float: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct PlotArgs {
    /// Sizes, comma separated, each at least 2.
    #[arg(long, value_delimiter = ',', required = true)]
    pub n_grid: Vec<usize>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgArg {
    Dual,
    Classic,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MetricArg {
    Comparisons,
    Exchanges,
    Stages,
}

/// A metric mean, or the comparison variance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Quantity {
    Comparisons,
    Exchanges,
    Stages,
    Variance,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

impl From<AlgArg> for Algorithm {
    fn from(a: AlgArg) -> Self {
        match a {
            AlgArg::Dual => Algorithm::Dual,
            AlgArg::Classic => Algorithm::Classic,
        }
    }
}

impl From<MetricArg> for Metric {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::Comparisons => Metric::Comparisons,
            MetricArg::Exchanges => Metric::Exchanges,
            MetricArg::Stages => Metric::Stages,
        }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{failed} verification check(s) failed")]
    Verification { failed: usize },
    #[error(transparent)]
    Io(#[from] io::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 0 success, 1 verification failure, 2 usage error.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }
}

impl From<CoreError> for CliError {
    fn from(e: CoreError) -> Self {
        CliError::Usage(e.to_string())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SimulateRecord {
    pub algorithm: String,
    pub metric: String,
    pub n: usize,
    pub trials: u64,
    pub seed: u64,
    pub theory_exact: String,
    pub theory_float: f64,
    pub empirical_mean: f64,
    pub std_error: Option<f64>,
    pub z_score: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TableRecord {
    pub algorithm: String,
    pub metric: String,
    pub n: usize,
    pub theory_exact: String,
    pub theory_float: f64,
    pub asymptotic: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistRecord {
    pub metric: String,
    pub n: usize,
    pub cost: u64,
    pub probability_exact: Option<String>,
    pub probability_float: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PlotRecord {
    pub n: usize,
    pub curve: String,
    pub exact: String,
    pub exact_float: f64,
    pub asymptotic: f64,
    pub ratio: f64,
}

pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match &cli.command {
        Command::Verify(args) => cmd_verify(args, out),
        Command::Simulate(args) => {
            let rows = cmd_simulate(args)?;
            emit(out, args.format, &rows)
        }
        Command::Table(args) => {
            let rows = cmd_table(args)?;
            emit(out, args.format, &rows)
        }
        Command::Dist(args) => {
            let rows = cmd_dist(args)?;
            emit(out, args.format, &rows)
        }
        Command::Plotdata(args) => {
            let rows = cmd_plotdata(args)?;
            emit(out, args.format, &rows)
        }
    }
}

fn emit<R: Serialize>(out: &mut dyn Write, format: Format, rows: &[R]) -> Result<(), CliError> {
    match format {
        Format::Csv => {
            let mut w = csv::Writer::from_writer(out);
            for row in rows {
                w.serialize(row)?;
            }
            w.flush()?;
        }
        Format::Json => {
            serde_json::to_writer_pretty(&mut *out, rows)?;
            writeln!(out)?;
        }
    }
    Ok(())
}

pub fn cmd_verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    if args.n_max < 4 {
        return Err(CliError::Usage(format!(
            "--n-max must be at least 4 (got {}); closed forms for exchanges and stages start at n = 4",
            args.n_max
        )));
    }
    let results = run_suite(VerifyConfig { n_max: args.n_max, dist_cap: args.dist_cap, ..Default::default() });
    for r in &results {
        writeln!(out, "{r}")?;
    }
    let failed = results.iter().filter(|r| !r.passed()).count();
    writeln!(out, "{} checks, {} failed", results.len(), failed)?;
    if failed > 0 {
        return Err(CliError::Verification { failed });
    }
    Ok(())
}

pub fn cmd_simulate(args: &SimulateArgs) -> Result<Vec<SimulateRecord>, CliError> {
    let algorithm = Algorithm::from(args.algorithm);
    let plan = TrialPlan::new(algorithm, args.n, args.trials, args.seed)?;
    let agg = run_trials(&plan);
    let mut rows = Vec::new();
    for metric in Metric::ALL.into_iter().filter(|&m| algorithm.measures(m)) {
        let row = match compare(&agg, metric) {
            Ok(report) => SimulateRecord {
                algorithm: algorithm.to_string(),
                metric: metric.to_string(),
                n: args.n,
                trials: args.trials,
                seed: args.seed,
                theory_float: report.theory_mean.approx(),
                theory_exact: report.theory_mean.to_string(),
                empirical_mean: report.empirical_mean,
                std_error: Some(report.std_error),
                z_score: report.z_score,
            },
            Err(CoreError::TooFewTrials { .. }) => {
                let theory = dp_expected::<Rational>(algorithm, metric, args.n).values[args.n].clone();
                SimulateRecord {
                    algorithm: algorithm.to_string(),
                    metric: metric.to_string(),
                    n: args.n,
                    trials: args.trials,
                    seed: args.seed,
                    theory_float: theory.approx(),
                    theory_exact: theory.to_string(),
                    empirical_mean: agg.metric(metric).mean().approx(),
                    std_error: None,
                    z_score: None,
                }
            }
            Err(e) => return Err(e.into()),
        };
        rows.push(row);
    }
    Ok(rows)
}

fn mean_curve(algorithm: Algorithm, metric: Metric, n: f64) -> Option<f64> {
    match (algorithm, metric) {
        (_, Metric::Comparisons) => Some(comparisons_curve(n)),
        (Algorithm::Dual, Metric::Exchanges) => Some(dual_exchanges_curve(n)),
        (Algorithm::Classic, Metric::Exchanges) => Some(classic_exchanges_curve(n)),
        (Algorithm::Dual, Metric::Stages) => Some(dual_stages_curve(n)),
        (Algorithm::Classic, Metric::Stages) => None,
    }
}

pub fn cmd_table(args: &TableArgs) -> Result<Vec<TableRecord>, CliError> {
    let algorithm = Algorithm::from(args.algorithm);
    let n_max = args.n_list.iter().copied().max().unwrap_or(0);
    if args.metrics.contains(&Quantity::Variance) && algorithm != Algorithm::Dual {
        return Err(CliError::Usage("variance is only available for --alg dual".into()));
    }
    let mut closed = ClosedForms::<Rational>::new(n_max);
    let mut rows = Vec::new();
    for &quantity in &args.metrics {
        let metric = match quantity {
            Quantity::Comparisons => Some(Metric::Comparisons),
            Quantity::Exchanges => Some(Metric::Exchanges),
            Quantity::Stages => Some(Metric::Stages),
            Quantity::Variance => None,
        };
        let table = metric.map(|m| dp_expected::<Rational>(algorithm, m, n_max));
        for &n in &args.n_list {
            let x = n as f64;
            let (name, value, asymptotic) = match (metric, &table) {
                (Some(m), Some(t)) => (m.to_string(), t[n].clone(), mean_curve(algorithm, m, x)),
                _ => ("variance".to_string(), closed.dual_variance(n), Some(variance_curve(x))),
            };
            rows.push(TableRecord {
                algorithm: algorithm.to_string(),
                metric: name,
                n,
                theory_float: value.approx(),
                theory_exact: value.to_string(),
                asymptotic: asymptotic.filter(|a| a.is_finite() && n >= 2),
            });
        }
    }
    Ok(rows)
}

pub fn cmd_dist(args: &DistArgs) -> Result<Vec<DistRecord>, CliError> {
    let metric = Metric::from(args.metric);
    let rows = if args.float {
        let laws = cost_distribution_capped::<f64>(metric, args.n, <f64 as Scalar>::DISTRIBUTION_CAP)?;
        laws[args.n]
            .probs()
            .iter()
            .map(|(&cost, &p)| DistRecord {
                metric: metric.to_string(),
                n: args.n,
                cost,
                probability_exact: None,
                probability_float: p,
            })
            .collect()
    } else {
        let laws = cost_distribution_capped::<Rational>(metric, args.n, <Rational as Scalar>::DISTRIBUTION_CAP)?;
        laws[args.n]
            .probs()
            .iter()
            .map(|(&cost, p)| DistRecord {
                metric: metric.to_string(),
                n: args.n,
                cost,
                probability_exact: Some(p.to_string()),
                probability_float: p.approx(),
            })
            .collect()
    };
    Ok(rows)
}

pub fn cmd_plotdata(args: &PlotArgs) -> Result<Vec<PlotRecord>, CliError> {
    if let Some(&bad) = args.n_grid.iter().find(|&&n| n < 2) {
        return Err(CliError::Usage(format!("plot sizes must be at least 2 (got {bad})")));
    }
    let mut rows = Vec::new();
    for &n in &args.n_grid {
        let report = asymptotics(n);
        let curves = [
            ("dual_comparisons", &report.dual_comparisons),
            ("dual_exchanges", &report.dual_exchanges),
            ("classic_exchanges", &report.classic_exchanges),
            ("dual_variance", &report.dual_variance),
        ];
        for (name, point) in curves {
            rows.push(PlotRecord {
                n,
                curve: name.to_string(),
                exact: point.exact.to_string(),
                exact_float: point.exact_float,
                asymptotic: point.asymptotic,
                ratio: point.ratio(),
            });
        }
    }
    Ok(rows)
}
