use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use molpb::front_io::load_front_csv;
use molpb::metrics::{GdExponent, IndicatorReport};
use molpb::problems::{drop_dominated_rows, problem_by_name, problem_names};
use molpb_bench::campaign::{load_summary, run_campaign, Algorithm, CampaignConfig};
use molpb_bench::reference::MergedReferenceSpec;
use molpb_bench::table::tabulate;
use molpb_bench::{BenchError, Result};

#[derive(Parser)]
#[command(
    name = "bench",
    version,
    about = "Seeded MOLPB / NSGA-II experiment runner"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a seeded multi-run campaign and write fronts and a summary.
    Run(RunArgs),
    /// List the registered problems.
    Problems,
    /// Score a front against a reference front.
    Score {
        #[arg(long)]
        front: PathBuf,
        #[arg(long)]
        reference: PathBuf,
        #[arg(long, default_value_t = 2, value_parser = parse_gd_p)]
        gd_p: u32,
    },
    /// Print comparison tables for every summary in a directory.
    Table {
        #[arg(long = "in")]
        dir: PathBuf,
    },
}

#[derive(clap::Args)]
struct RunArgs {
    #[arg(long, value_parser = parse_algorithm)]
    algo: Algorithm,
    #[arg(long)]
    problem: String,
    #[arg(long, default_value_t = 30)]
    runs: usize,
    #[arg(long, default_value_t = 350)]
    generations: usize,
    #[arg(long, default_value_t = 100)]
    pop: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: PathBuf,
    /// Reference front CSV; defaults to the analytic front or a cached
    /// merged front.
    #[arg(long)]
    reference: Option<PathBuf>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long, default_value_t = 2, value_parser = parse_gd_p)]
    gd_p: u32,
    /// Runs per algorithm when building a merged reference front.
    #[arg(long, default_value_t = 20)]
    reference_runs: usize,
    /// Generations per run when building a merged reference front.
    #[arg(long, default_value_t = 1000)]
    reference_generations: usize,
}

fn parse_algorithm(s: &str) -> std::result::Result<Algorithm, String> {
    s.parse().map_err(|e: BenchError| e.to_string())
}

fn parse_gd_p(s: &str) -> std::result::Result<u32, String> {
    match s {
        "1" => Ok(1),
        "2" => Ok(2),
        _ => Err(format!("gd-p must be 1 or 2, got {s}")),
    }
}

fn gd_exponent(p: u32) -> GdExponent {
    GdExponent::from_int(p).expect("validated by the argument parser")
}

fn run(args: RunArgs) -> Result<()> {
    let config = CampaignConfig {
        runs: args.runs,
        base_seed: args.seed,
        generations: args.generations,
        population: args.pop,
        reference: args.reference,
        jobs: args.jobs,
        gd_p: gd_exponent(args.gd_p),
        merged_reference: MergedReferenceSpec {
            runs: args.reference_runs,
            generations: args.reference_generations,
            ..MergedReferenceSpec::default()
        },
        ..CampaignConfig::new(args.algo, args.problem, args.out)
    };
    let summary = run_campaign(&config)?;
    print!("{}", tabulate(std::slice::from_ref(&summary))?.to_text());
    Ok(())
}

fn list_problems() -> Result<()> {
    println!(
        "{:<16} {:>5} {:>10} {:>11}",
        "problem", "vars", "objectives", "constrained"
    );
    for name in problem_names() {
        let p = problem_by_name(name)?;
        println!(
            "{:<16} {:>5} {:>10} {:>11}",
            name,
            p.n_vars(),
            p.n_objectives(),
            p.is_constrained()
        );
    }
    Ok(())
}

fn load(path: &Path) -> Result<Vec<Vec<f64>>> {
    load_front_csv(path).map_err(|e| BenchError::Reference {
        path: path.into(),
        source: e,
    })
}

fn score(front: &Path, reference: &Path, p: u32) -> Result<()> {
    let front = load(front)?;
    let (reference_points, dropped) = drop_dominated_rows(load(reference)?);
    if !dropped.is_empty() {
        log::warn!(
            "{}: dropped dominated rows at lines {:?}",
            reference.display(),
            dropped
        );
    }
    let report = IndicatorReport::compute(&front, &reference_points, gd_exponent(p))?;
    println!(
        "{}",
        serde_json::to_string_pretty(&report).map_err(|e| BenchError::Numerical(e.to_string()))?
    );
    Ok(())
}

fn table(dir: &Path) -> Result<()> {
    let entries = std::fs::read_dir(dir).map_err(|e| BenchError::io(dir, e))?;
    let mut paths: Vec<PathBuf> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| {
            let name = p.file_name().and_then(|n| n.to_str()).unwrap_or_default();
            name.starts_with("summary_") && name.ends_with(".json")
        })
        .collect();
    paths.sort();
    if paths.is_empty() {
        return Err(BenchError::Config(format!(
            "no summary files in {}",
            dir.display()
        )));
    }
    let summaries = paths
        .iter()
        .map(|p| load_summary(p))
        .collect::<Result<Vec<_>>>()?;
    let mut problems: Vec<&str> = summaries.iter().map(|s| s.problem.as_str()).collect();
    problems.sort_unstable();
    problems.dedup();
    for problem in problems {
        let group: Vec<_> = summaries
            .iter()
            .filter(|s| s.problem == problem)
            .cloned()
            .collect();
        let t = tabulate(&group)?;
        println!("{problem}\n{}", t.to_text());
        let csv_path = dir.join(format!("table_{problem}.csv"));
        std::fs::write(&csv_path, t.to_csv()).map_err(|e| BenchError::io(&csv_path, e))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Run(args) => run(args),
        Command::Problems => list_problems(),
        Command::Score {
            front,
            reference,
            gd_p,
        } => score(&front, &reference, gd_p),
        Command::Table { dir } => table(&dir),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
