//! Library side of the `dimsp` binary: configuration, the four subcommands,
//! and output formatting.

pub mod config;
pub mod output;

use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use dimsp::engine::{run_baseline, run_dimsp, Model};
use dimsp::problems::{parse_instance, serialize_instance, ProblemKind, ProblemSpec};
use dimsp::{summarize, RngStream, RunTrace, SummaryRow};
use rayon::prelude::*;
use serde_json::json;

use crate::config::{GeneratorSpec, RunConfig};
use crate::output::{summary_csv, trace_csv, write_atomic};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("config error: {0}")]
    Config(String),
    #[error("cannot read input: {0}")]
    Input(String),
    #[error("cannot write output: {0}")]
    Output(String),
    #[error(transparent)]
    Core(#[from] dimsp::Error),
}

impl CliError {
    /// 1 for bad input (config, instance file, search space too large),
    /// 2 for failures while running or writing results.
    pub fn exit_code(&self) -> i32 {
        use dimsp::Error as E;
        match self {
            CliError::Config(_) | CliError::Input(_) => 1,
            CliError::Output(_) => 2,
            CliError::Core(e) => match e {
                E::Parse { .. }
                | E::UnsupportedEdgeWeightType(_)
                | E::SpaceTooLarge { .. }
                | E::Config(_)
                | E::MismatchedConfigs(_)
                | E::Io { .. } => 1,
                _ => 2,
            },
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "dimsp", version, about = "Island-model genetic algorithms with spectral-clustering migration")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Run one model for every configured seed.
    Run(RunArgs),
    /// Run several models with identical problem, seeds and operators.
    Compare(RunArgs),
    /// Exhaustively solve a tiny instance.
    Oracle(OracleArgs),
    /// Write a synthetic instance file.
    GenInstance(GenArgs),
}

#[derive(Debug, Clone, Args)]
pub struct RunArgs {
    /// JSON configuration file.
    #[arg(long)]
    pub config: PathBuf,
    /// Output directory.
    #[arg(long, default_value = "results")]
    pub out: PathBuf,
    /// Worker threads.
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    /// Master seeds, overriding the config (comma separated).
    #[arg(long, value_delimiter = ',')]
    pub seeds: Option<Vec<u64>>,
    /// Overrides `max_generations`.
    #[arg(long)]
    pub generations: Option<u64>,
}

#[derive(Debug, Clone, Args)]
pub struct OracleArgs {
    /// jssp, tsp or qmkp.
    pub kind: ProblemKind,
    pub instance: PathBuf,
    #[arg(long, default_value_t = config::DEFAULT_KNAPSACKS)]
    pub knapsacks: usize,
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    /// jssp, tsp or qmkp.
    pub kind: ProblemKind,
    /// Cities, jobs or objects.
    #[arg(long)]
    pub size: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// JSSP machines.
    #[arg(long, default_value_t = 5)]
    pub machines: usize,
    /// JSSP maximum processing time.
    #[arg(long, default_value_t = 99)]
    pub max_time: u64,
    /// TSP coordinate range.
    #[arg(long, default_value_t = 1000)]
    pub extent: u32,
    /// QKP density of nonzero profit coefficients.
    #[arg(long, default_value_t = 0.5)]
    pub density: f64,
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn execute(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Run(args) => cmd_run(&args).map(|rows| print_rows(&rows)),
        Command::Compare(args) => cmd_compare(&args).map(|rows| print_rows(&rows)),
        Command::Oracle(args) => {
            let (best, genome) = cmd_oracle(&args)?;
            let genes: Vec<String> = genome.iter().map(u32::to_string).collect();
            println!("optimum {best}");
            println!("genome {}", genes.join(" "));
            Ok(())
        }
        Command::GenInstance(args) => cmd_gen_instance(&args),
    }
}

fn print_rows(rows: &[SummaryRow]) {
    let mut out = std::io::stdout().lock();
    let _ = write!(out, "{}", summary_csv(rows));
}

fn problem_label(kind: ProblemKind) -> String {
    kind.as_str().to_uppercase()
}

fn load(args: &RunArgs) -> Result<(RunConfig, ProblemSpec), CliError> {
    let mut config = RunConfig::load(&args.config)?;
    if let Some(seeds) = &args.seeds {
        config.seeds = seeds.clone();
    }
    if let Some(g) = args.generations {
        config.max_generations = g;
    }
    config.validate()?;
    if args.jobs == 0 {
        return Err(CliError::Config("--jobs must be at least 1".into()));
    }
    let problem = config.load_problem()?;
    Ok((config, problem))
}

/// Every (model, seed) run, in model order then seed order.
pub fn run_all(config: &RunConfig, problem: &ProblemSpec, jobs: usize) -> Result<Vec<RunTrace>, CliError> {
    let pool = config.pool(problem.encoding())?;
    let tasks: Vec<(Model, u64)> =
        config.models.iter().flat_map(|&m| config.seeds.iter().map(move |&s| (m, s))).collect();
    let threads = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Config(format!("--jobs: {e}")))?;
    let traces: Vec<dimsp::Result<RunTrace>> = threads.install(|| {
        tasks
            .par_iter()
            .map(|&(model, seed)| match config.baseline(model, &pool, seed) {
                Some(b) => run_baseline(problem, b),
                None => run_dimsp(problem, config.dimsp(&pool, seed)),
            })
            .collect()
    });
    traces.into_iter().map(|t| t.map_err(CliError::from)).collect()
}

fn summaries(config: &RunConfig, traces: &[RunTrace]) -> Result<Vec<SummaryRow>, CliError> {
    let per_model = config.seeds.len();
    let mut rows = Vec::new();
    for model in Model::ALL {
        let Some(pos) = config.models.iter().position(|&m| m == model) else {
            continue;
        };
        let mut row = summarize(&traces[pos * per_model..(pos + 1) * per_model])?;
        row.model = model.label().to_string();
        row.problem = problem_label(config.kind);
        rows.push(row);
    }
    Ok(rows)
}

fn write_results(
    out: &Path,
    command: &str,
    config: &RunConfig,
    problem: &ProblemSpec,
    traces: &[RunTrace],
    name: impl Fn(&RunTrace) -> String,
) -> Result<Vec<SummaryRow>, CliError> {
    let mut manifest = Vec::new();
    for trace in traces {
        let file = name(trace);
        write_atomic(&out.join(&file), trace_csv(trace).as_bytes())?;
        let best = trace.top.first();
        manifest.push(json!({
            "file": file,
            "model": trace.model,
            "seed": trace.seed,
            "lineage": RngStream::new(trace.seed).lineage().to_string(),
            "best_score": best.map(|b| b.fitness),
            "best_genome": best.map(|b| b.genome.genes().iter().map(u32::to_string).collect::<Vec<_>>().join(" ")),
        }));
    }
    let rows = summaries(config, traces)?;
    write_atomic(&out.join("summary.csv"), summary_csv(&rows).as_bytes())?;
    let manifest = json!({
        "command": command,
        "problem": { "kind": config.kind.as_str(), "name": problem.name() },
        "runs": manifest,
    });
    let text = serde_json::to_string_pretty(&manifest).expect("json values serialize");
    write_atomic(&out.join("runs.json"), format!("{text}\n").as_bytes())?;
    Ok(rows)
}

/// Writes `trace_seed<k>.csv` per seed, `summary.csv` and `runs.json`.
pub fn cmd_run(args: &RunArgs) -> Result<Vec<SummaryRow>, CliError> {
    let (config, problem) = load(args)?;
    if config.models.len() != 1 {
        return Err(CliError::Config("models: `run` takes a single `model`; use `compare` for several".into()));
    }
    let traces = run_all(&config, &problem, args.jobs)?;
    write_results(&args.out, "run", &config, &problem, &traces, |t| format!("trace_seed{}.csv", t.seed))
}

/// Writes `trace_<model>_seed<k>.csv` per model and seed, `summary.csv` and
/// `runs.json`.
pub fn cmd_compare(args: &RunArgs) -> Result<Vec<SummaryRow>, CliError> {
    let (config, problem) = load(args)?;
    if config.models.len() < 2 {
        return Err(CliError::Config("models: `compare` needs at least two models".into()));
    }
    let traces = run_all(&config, &problem, args.jobs)?;
    write_results(&args.out, "compare", &config, &problem, &traces, |t| format!("trace_{}_seed{}.csv", t.model, t.seed))
}

pub fn cmd_oracle(args: &OracleArgs) -> Result<(f64, Vec<u32>), CliError> {
    let problem = parse_instance(&args.instance, args.kind, args.knapsacks)?;
    let (best, genome) = problem.brute_force_optimum()?;
    Ok((best, genome.genes().to_vec()))
}

pub fn cmd_gen_instance(args: &GenArgs) -> Result<(), CliError> {
    let spec = GeneratorSpec {
        size: args.size,
        seed: args.seed,
        machines: args.machines,
        max_time: args.max_time,
        extent: args.extent,
        density: args.density,
    };
    if spec.size == 0 || spec.machines == 0 || spec.max_time == 0 || spec.extent == 0 {
        return Err(CliError::Config("size, machines, max_time and extent must be positive".into()));
    }
    if !(spec.density > 0.0 && spec.density <= 1.0) {
        return Err(CliError::Config(format!("density: {} is outside (0, 1]", spec.density)));
    }
    let text = serialize_instance(&spec.build(args.kind, 1)?);
    match &args.out {
        Some(path) => write_atomic(path, text.as_bytes()),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
