mod commands;
mod grid;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, ColorChoice, CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use shrinkage::ingest::Fixture;

#[derive(Parser, Debug)]
#[command(name = "shrinkage", version, about = "Shrinkage estimation for two-level Normal models")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fit one or more estimators and report shrinkages, estimates and risks.
    Fit(FitArgs),
    /// Place a prior (u, k0) in the propriety and minimaxity regions.
    Classify(ClassifyArgs),
    /// Model-II Monte Carlo curves of risk improvement or interval coverage.
    Evaluate(EvaluateArgs),
    /// Arcsine-transform binomial counts into the normal-data schema.
    Transform(TransformArgs),
}

#[derive(Args, Debug, Clone)]
#[group(required = false, multiple = false)]
struct Source {
    /// Built-in dataset.
    #[arg(long, value_parser = parse_fixture)]
    fixture: Option<Fixture>,
    /// CSV file with columns label?, y, V|sd, x1..xr.
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<OutFormat>,
    /// Directory for emitted files; without it, output goes to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct FitArgs {
    #[command(flatten)]
    source: Source,
    /// Comma-separated methods: js, shp, hb, f, mle, reml, adm, conj.
    #[arg(long, value_delimiter = ',')]
    methods: Vec<String>,
    /// Truncate James–Stein shrinkage at 1.
    #[arg(long)]
    truncate: bool,
    /// Rescale unequal-variance data to y_i/sd_i before James–Stein.
    #[arg(long)]
    standardize: bool,
    /// Prior point for `conj`, as U,K0[,S0].
    #[arg(long)]
    prior: Option<String>,
    #[command(flatten)]
    quad: QuadArgs,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug, Clone)]
struct QuadArgs {
    /// Relative tolerance of the posterior-moment quadrature.
    #[arg(long, default_value_t = 1e-10)]
    quad_rel_tol: f64,
    /// Absolute tolerance of the posterior-moment quadrature.
    #[arg(long, default_value_t = 1e-12)]
    quad_abs_tol: f64,
    #[arg(long, default_value_t = 500)]
    quad_max_subdivisions: usize,
}

#[derive(Args, Debug)]
struct ClassifyArgs {
    #[arg(long, allow_hyphen_values = true)]
    u: Option<f64>,
    #[arg(long, allow_hyphen_values = true)]
    k0: Option<f64>,
    /// Prior point as U,K0[,S0] (alternative to --u/--k0).
    #[arg(long)]
    prior: Option<String>,
    /// Number of components.
    #[arg(long)]
    k: usize,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum EvalKind {
    Risk,
    Coverage,
}

#[derive(Args, Debug)]
struct EvaluateArgs {
    #[arg(value_enum)]
    kind: EvalKind,
    #[command(flatten)]
    source: Source,
    /// Use k equal unit variances instead of a dataset's pattern.
    #[arg(long, requires = "k", conflicts_with_all = ["fixture", "input"])]
    equal: bool,
    #[arg(long)]
    k: Option<usize>,
    /// Estimator to evaluate.
    #[arg(long, default_value = "shp")]
    method: String,
    #[arg(long, default_value_t = shrinkage::evaluation::DEFAULT_REPLICATES)]
    reps: usize,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Worker threads (results do not depend on this).
    #[arg(long)]
    threads: Option<usize>,
    /// `bh=LO:HI:N`, `bh=B1,B2,..`, `a=LO:HI:N` or `a=A1,A2,..`.
    #[arg(long, default_value = "bh=0.02:0.98:15")]
    grid: String,
    /// Draw fresh normals at every grid point instead of reusing them.
    #[arg(long)]
    independent_draws: bool,
    /// Nominal interval multiplier.
    #[arg(long, default_value_t = shrinkage::evaluation::DEFAULT_Z)]
    z: f64,
    #[command(flatten)]
    quad: QuadArgs,
    #[command(flatten)]
    output: Output,
}

#[derive(Args, Debug)]
struct TransformArgs {
    /// Counts CSV with columns label?, d, n.
    #[arg(long, conflicts_with = "fixture")]
    input: Option<PathBuf>,
    /// Built-in fixture with raw counts (ny31).
    #[arg(long, value_parser = parse_fixture)]
    fixture: Option<Fixture>,
    #[command(flatten)]
    output: Output,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
    TsvPlotdata,
}

impl From<OutFormat> for shrinkage::report::Format {
    fn from(f: OutFormat) -> Self {
        match f {
            OutFormat::Csv => Self::Csv,
            OutFormat::Json => Self::Json,
            OutFormat::TsvPlotdata => Self::TsvPlotdata,
        }
    }
}

fn parse_fixture(s: &str) -> Result<Fixture, String> {
    s.parse().map_err(|e: shrinkage::Error| e.to_string())
}

fn main() -> ExitCode {
    let color = if std::env::var_os("NO_COLOR").is_some_and(|v| !v.is_empty()) {
        ColorChoice::Never
    } else {
        ColorChoice::Auto
    };
    let matches = Cli::command().color(color).get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(c) => c,
        Err(e) => e.exit(),
    };
    let result = match cli.command {
        Command::Fit(a) => commands::fit(a),
        Command::Classify(a) => commands::classify(a),
        Command::Evaluate(a) => commands::evaluate(a),
        Command::Transform(a) => commands::transform(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}
