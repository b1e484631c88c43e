use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use ucurve::cost::{
    generate_subset_sum_instance, planted_sample_table, verify_decomposable, DecompositionCheck, Instance, SampleTable,
    VerifyMode,
};
use ucurve::harness::{
    dynamics_profile, dynamics_table, emit_report, instance_seed, run_optimal, suboptimal_budgeted,
    suboptimal_thresholds, thresholds_table, ExperimentConfig, InstanceSet, Mode, ReportFormat, Table,
};
use ucurve::lattice::ElementSet;
use ucurve::oracle::{find_counterexample, random_decomposable_instance};
use ucurve::ucs::{ucs_solve_observed, SearchView, TraceEvent};
use ucurve::{solve, Algorithm, CostEvaluator, CostFunction, Error, StopCriterion};

/// A verification witness was found, or a search came back empty.
const EXIT_NEGATIVE: u8 = 1;
const EXIT_STOPPED: u8 = 2;
const EXIT_INVALID: u8 = 3;

#[derive(Parser)]
#[command(name = "ucurve", version, about = "Solvers for the U-curve optimization problem")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write seeded random instances.
    Generate(GenerateArgs),
    /// Solve one instance and print the report as JSON.
    Solve(SolveArgs),
    /// Run an experiment protocol and write its reports.
    Bench(BenchArgs),
    /// Check that an instance is decomposable in U-shaped curves.
    Verify(VerifyArgs),
    /// Search for an instance on which the original U-Curve algorithm fails.
    FindCounterexample(CounterexampleArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum GenerateKind {
    SubsetSum,
    /// Sample tables wrapped in instance JSON.
    Mce,
    /// Sample tables in the plain text format.
    Samples,
    /// Random decomposable cost tables (n <= 10).
    Explicit,
}

#[derive(clap::Args)]
struct GenerateArgs {
    #[arg(long, value_enum)]
    kind: GenerateKind,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    count: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, default_value_t = ExperimentConfig::DEFAULT_WEIGHT_MAX)]
    weight_max: u64,
    /// Rows per sample table.
    #[arg(long, default_value_t = 200)]
    rows: usize,
}

#[derive(clap::Args)]
struct SolveArgs {
    #[arg(long)]
    algorithm: Algorithm,
    #[arg(long, required_unless_present = "samples", conflicts_with = "samples")]
    instance: Option<PathBuf>,
    /// Sample table in the text format; the cost is the mean conditional entropy.
    #[arg(long)]
    samples: Option<PathBuf>,
    /// Stop after this many distinct cost evaluations.
    #[arg(long, conflicts_with = "cost_target")]
    budget: Option<u64>,
    /// Stop once a subset at or below this cost is found.
    #[arg(long)]
    cost_target: Option<f64>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 0.5)]
    p_up: f64,
    /// Write UCS search events as JSON lines to stderr.
    #[arg(long)]
    trace: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum BenchMode {
    Optimal,
    Suboptimal,
    Dynamics,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Both,
}

#[derive(clap::Args)]
struct BenchArgs {
    #[arg(long)]
    config: PathBuf,
    /// Overrides the mode in the configuration file.
    #[arg(long, value_enum)]
    mode: Option<BenchMode>,
    #[arg(long)]
    out: PathBuf,
    #[arg(long, value_enum, default_value = "both")]
    format: FormatArg,
    /// Overrides the worker count in the configuration file.
    #[arg(long)]
    jobs: Option<usize>,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyModeArg {
    Exhaustive,
    Sampled,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long, required_unless_present = "samples", conflicts_with = "samples")]
    instance: Option<PathBuf>,
    #[arg(long)]
    samples: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "exhaustive")]
    mode: VerifyModeArg,
    #[arg(long, default_value_t = 1000)]
    chains: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(clap::Args)]
struct CounterexampleArgs {
    #[arg(long, default_value_t = 5)]
    n: usize,
    #[arg(long, default_value_t = 10_000)]
    trials: u64,
    #[arg(long, default_value_t = 7)]
    seed: u64,
    /// Where to write the instance as explicit-instance JSON.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_INVALID)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Generate(a) => generate(a),
        Command::Solve(a) => solve_cmd(a),
        Command::Bench(a) => bench(a),
        Command::Verify(a) => verify(a),
        Command::FindCounterexample(a) => counterexample(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_INVALID)
        }
    }
}

fn create_dir(path: &Path) -> Result<(), Error> {
    std::fs::create_dir_all(path).map_err(|e| Error::Io {
        path: path.to_path_buf(),
        source: e,
    })
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidConfig(msg.into())
}

fn generate(a: GenerateArgs) -> Result<u8, Error> {
    if a.n == 0 || a.n > ucurve::lattice::MAX_DEGREE {
        return Err(invalid(format!("--n must lie in 1..={}", ucurve::lattice::MAX_DEGREE)));
    }
    if matches!(a.kind, GenerateKind::Explicit) && a.n > VerifyMode::EXHAUSTIVE_MAX_DEGREE {
        return Err(invalid(format!(
            "explicit instances need n <= {}",
            VerifyMode::EXHAUSTIVE_MAX_DEGREE
        )));
    }
    if a.weight_max == 0 || a.rows == 0 {
        return Err(invalid("--weight-max and --rows must be positive"));
    }
    create_dir(&a.out)?;
    for i in 0..a.count {
        let seed = instance_seed(a.seed, a.n, i);
        let table = || {
            let planted = ElementSet::from_indices(0..a.n.min(3), a.n);
            planted_sample_table(a.n, a.rows, planted, 0.1, seed)
        };
        let stem = format!("n{:02}-{i:03}", a.n);
        match a.kind {
            GenerateKind::SubsetSum => generate_subset_sum_instance(a.n, seed, a.weight_max)
                .save(a.out.join(format!("subset-sum-{stem}.json")))?,
            GenerateKind::Mce => Instance::Mce(table()).save(a.out.join(format!("mce-{stem}.json")))?,
            GenerateKind::Samples => table().save(a.out.join(format!("samples-{stem}.txt")))?,
            GenerateKind::Explicit => Instance::Explicit(random_decomposable_instance(a.n, seed))
                .save(a.out.join(format!("explicit-{stem}.json")))?,
        }
    }
    Ok(0)
}

fn load_cost(instance: Option<&Path>, samples: Option<&Path>) -> Result<Instance, Error> {
    match (instance, samples) {
        (Some(p), _) => Instance::load(p),
        (None, Some(p)) => Ok(Instance::Mce(SampleTable::load(p)?)),
        (None, None) => Err(invalid("either --instance or --samples is required")),
    }
}

fn solve_cmd(a: SolveArgs) -> Result<u8, Error> {
    if !(0.0..=1.0).contains(&a.p_up) {
        return Err(invalid("--p-up must lie in [0, 1]"));
    }
    let cost = load_cost(a.instance.as_deref(), a.samples.as_deref())?;
    if a.algorithm == Algorithm::Exhaustive && cost.degree() > ucurve::oracle::EXHAUSTIVE_MAX_DEGREE {
        return Err(invalid(format!(
            "exhaustive search supports n <= {}",
            ucurve::oracle::EXHAUSTIVE_MAX_DEGREE
        )));
    }
    let stop = match (a.budget, a.cost_target) {
        (Some(k), _) => StopCriterion::NodeBudget(k),
        (None, Some(t)) if t.is_finite() => StopCriterion::CostTarget(t),
        (None, Some(_)) => return Err(invalid("--cost-target must be finite")),
        (None, None) => StopCriterion::None,
    };
    let mut eval = CostEvaluator::with_stop(&cost, stop);
    let report = if a.trace && a.algorithm == Algorithm::Ucs {
        let stderr = std::io::stderr();
        let mut sink = stderr.lock();
        let mut observer = |event: &TraceEvent, _: &SearchView<'_>| {
            let line = serde_json::to_string(event).expect("events serialize");
            let _ = writeln!(sink, "{line}");
        };
        ucs_solve_observed(&mut eval, a.seed, a.p_up, &mut observer)
    } else {
        solve(a.algorithm, &mut eval, a.seed, a.p_up)
    };
    println!("{}", serde_json::to_string_pretty(&report)?);
    Ok(if report.budget_exhausted { EXIT_STOPPED } else { 0 })
}

fn emit_all(table: &Table, out: &Path, stem: &str, format: FormatArg) -> Result<(), Error> {
    let formats: &[ReportFormat] = match format {
        FormatArg::Csv => &[ReportFormat::Csv],
        FormatArg::Json => &[ReportFormat::Json],
        FormatArg::Both => &[ReportFormat::Csv, ReportFormat::Json],
    };
    for &f in formats {
        emit_report(table, f, out.join(format!("{stem}.{}", f.extension())))?;
    }
    Ok(())
}

fn bench(a: BenchArgs) -> Result<u8, Error> {
    let mut config = ExperimentConfig::load(&a.config)?;
    if let Some(mode) = a.mode {
        config.mode = match mode {
            BenchMode::Optimal => Mode::Optimal,
            BenchMode::Suboptimal => Mode::Suboptimal,
            BenchMode::Dynamics => Mode::Dynamics,
        };
    }
    if let Some(jobs) = a.jobs {
        config.jobs = jobs;
    }
    config.validate()?;
    create_dir(&a.out)?;
    match config.mode {
        Mode::Optimal => {
            let s = run_optimal(&config)?;
            emit_all(&s.summary_table(), &a.out, "optimal", a.format)?;
            emit_all(&s.runs_table(), &a.out, "optimal_runs", a.format)?;
            if config.timing_enabled() {
                emit_all(&s.timing_table(), &a.out, "optimal_timing", a.format)?;
            }
        }
        Mode::Suboptimal => {
            let set = InstanceSet::generate(&config);
            let thresholds = suboptimal_thresholds(&config, &set)?;
            // written before step 3 so a failure there keeps them
            emit_all(&thresholds_table(&thresholds), &a.out, "thresholds", a.format)?;
            let s = suboptimal_budgeted(&config, &set, &thresholds)?;
            emit_all(&s.summary_table(), &a.out, "suboptimal", a.format)?;
            emit_all(&s.runs_table(), &a.out, "suboptimal_runs", a.format)?;
            if config.timing_enabled() {
                emit_all(&s.timing_table(), &a.out, "suboptimal_timing", a.format)?;
            }
        }
        Mode::Dynamics => {
            let rows = dynamics_profile(&config)?;
            emit_all(&dynamics_table(&rows), &a.out, "dynamics", a.format)?;
        }
    }
    Ok(0)
}

fn verify(a: VerifyArgs) -> Result<u8, Error> {
    let cost = load_cost(a.instance.as_deref(), a.samples.as_deref())?;
    let mode = match a.mode {
        VerifyModeArg::Exhaustive => VerifyMode::Exhaustive,
        VerifyModeArg::Sampled => VerifyMode::Sampled {
            chains: a.chains,
            seed: a.seed,
        },
    };
    let check = verify_decomposable(&cost, mode)?;
    println!("{}", serde_json::to_string(&check)?);
    Ok(match check {
        DecompositionCheck::Ok => 0,
        DecompositionCheck::Violation(_) => EXIT_NEGATIVE,
    })
}

fn counterexample(a: CounterexampleArgs) -> Result<u8, Error> {
    if !(4..=8).contains(&a.n) {
        return Err(invalid("--n must lie in 4..=8"));
    }
    let Some(found) = find_counterexample(a.n, a.trials, a.seed) else {
        println!("{}", json!({ "found": false, "trials": a.trials }));
        return Ok(EXIT_NEGATIVE);
    };
    if let Some(out) = &a.out {
        found.instance.save(out)?;
    }
    let summary = json!({
        "found": true,
        "trial": found.trial,
        "legacy_seed": found.legacy_seed,
        "legacy_cost": found.legacy_cost,
        "optimum": found.optimum,
    });
    println!("{summary}");
    Ok(0)
}
