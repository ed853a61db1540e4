use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use dpp_moea::bench::{self, BenchConfig, SCHEMA_VERSION};
use dpp_moea::{ProblemKind, ProblemSpec, RngStream, SelectionStrategy, SimilarityMode};

#[derive(Parser)]
#[command(name = "dpp-moea", about = "DPP-based many-objective optimiser benchmarks")]
#[command(version = SCHEMA_VERSION)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a configured matrix or a single cell
    Run(RunArgs),
    /// Rank-sum comparison of strategies against a baseline
    Compare {
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, default_value = "dpp")]
        baseline: String,
    },
    /// Sample the true Pareto front
    PfSample {
        #[arg(long)]
        problem: ProblemKind,
        #[arg(long)]
        objectives: usize,
        #[arg(long, default_value_t = 5000)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct RunArgs {
    #[arg(long, conflicts_with_all = ["problem", "objectives"])]
    config: Option<PathBuf>,
    #[arg(long, required_unless_present = "config")]
    problem: Option<ProblemKind>,
    #[arg(long, required_unless_present = "config")]
    objectives: Option<usize>,
    #[arg(long, default_value = "dpp")]
    strategy: SelectionStrategy,
    #[arg(long, default_value = "cos")]
    kernel: SimilarityMode,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 100_000)]
    evals: usize,
    #[arg(long)]
    pop_size: Option<usize>,
    /// Output CSV; defaults to `<out_dir>/results.csv` or stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Run cells one at a time
    #[arg(long)]
    serial: bool,
}

fn output(path: Option<&PathBuf>) -> io::Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => {
            if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)?;
            }
            Box::new(BufWriter::new(File::create(p)?))
        }
        None => Box::new(io::stdout().lock()),
    })
}

fn run(args: RunArgs) -> dpp_moea::Result<ExitCode> {
    let cfg = match (&args.config, args.problem, args.objectives) {
        (Some(path), _, _) => BenchConfig::from_file(path)?,
        (None, Some(kind), Some(m)) => {
            let mut cfg = BenchConfig::single(kind, m, args.strategy, args.seed, args.evals);
            cfg.kernel = args.kernel;
            cfg.pop_size = args.pop_size;
            cfg
        }
        _ => unreachable!("clap enforces --config or --problem/--objectives"),
    };
    let out = args
        .out
        .clone()
        .or_else(|| cfg.out_dir.as_ref().map(|d| d.join("results.csv")));
    let report = bench::run_matrix(&cfg, !args.serial)?;
    bench::write_csv(output(out.as_ref())?, &report.records)?;
    if report.is_complete() {
        return Ok(ExitCode::SUCCESS);
    }
    for (cell, err) in &report.failures {
        eprintln!("failed: {cell}: {err}");
    }
    Ok(ExitCode::FAILURE)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => run(args),
        Command::Compare { input, baseline } => (|| {
            let records = bench::read_csv(File::open(&input)?)?;
            let results = bench::summarize(&records, &baseline)?;
            print!("{}", bench::markdown(&results));
            Ok(ExitCode::SUCCESS)
        })(),
        Command::PfSample {
            problem,
            objectives,
            n,
            seed,
            out,
        } => (|| {
            let spec = ProblemSpec::new(problem, objectives)?;
            let points = dpp_moea::true_pf_sample(&spec, n, &mut RngStream::new(seed))?;
            bench::write_points(output(out.as_ref())?, &points)?;
            Ok(ExitCode::SUCCESS)
        })(),
    };
    outcome.unwrap_or_else(|e: dpp_moea::Error| {
        eprintln!("error: {e}");
        ExitCode::from(2)
    })
}
