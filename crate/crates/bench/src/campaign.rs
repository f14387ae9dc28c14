//! Seeded multi-run campaigns for one algorithm on one problem.

use std::fmt;
use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use molpb::front_io::save_front_csv;
use molpb::metrics::{aggregate, EnsembleStats, GdExponent, IndicatorReport, StdDivisor};
use molpb::molpb::MolpbConfig;
use molpb::nsga2::Nsga2Config;
use molpb::{problem_by_name, Problem, ReferenceSource, RunResult};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{BenchError, Result};
use crate::reference::{resolve_reference, MergedReferenceSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Algorithm {
    Molpb,
    Nsga2,
}

impl Algorithm {
    pub const ALL: [Algorithm; 2] = [Algorithm::Molpb, Algorithm::Nsga2];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Molpb => "molpb",
            Algorithm::Nsga2 => "nsga2",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = BenchError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "molpb" => Ok(Algorithm::Molpb),
            "nsga2" | "nsga-ii" => Ok(Algorithm::Nsga2),
            _ => Err(BenchError::Config(format!(
                "unknown algorithm {s:?} (expected molpb or nsga2)"
            ))),
        }
    }
}

/// Runs one algorithm with its default settings at the given population
/// size, generation count and seed.
pub fn run_once(
    algorithm: Algorithm,
    problem: &Problem,
    population: usize,
    generations: usize,
    seed: u64,
) -> Result<RunResult> {
    let result = match algorithm {
        Algorithm::Molpb => {
            let config = MolpbConfig {
                max_generations: generations,
                seed,
                ..MolpbConfig::for_population(population)
            };
            molpb::molpb::run(&config, problem)?
        }
        Algorithm::Nsga2 => {
            let config = Nsga2Config {
                max_generations: generations,
                seed,
                ..Nsga2Config::for_population(population)
            };
            molpb::nsga2::run(&config, problem)?
        }
    };
    Ok(result)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub algorithm: Algorithm,
    pub problem: String,
    pub runs: usize,
    /// Run `r` uses seed `base_seed + r`.
    pub base_seed: u64,
    pub generations: usize,
    pub population: usize,
    pub out_dir: PathBuf,
    pub reference: Option<PathBuf>,
    /// Worker threads; `None` uses every core.
    pub jobs: Option<usize>,
    pub gd_p: GdExponent,
    /// How engineering reference fronts are built when no file is given.
    pub merged_reference: MergedReferenceSpec,
}

impl CampaignConfig {
    pub fn new(
        algorithm: Algorithm,
        problem: impl Into<String>,
        out_dir: impl Into<PathBuf>,
    ) -> Self {
        Self {
            algorithm,
            problem: problem.into(),
            runs: 30,
            base_seed: 0,
            generations: 350,
            population: 100,
            out_dir: out_dir.into(),
            reference: None,
            jobs: None,
            gd_p: GdExponent::P2,
            merged_reference: MergedReferenceSpec::default(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.runs == 0 {
            return Err(BenchError::Config("runs must be at least 1".into()));
        }
        if self.jobs == Some(0) {
            return Err(BenchError::Config("jobs must be at least 1".into()));
        }
        problem_by_name(&self.problem).map_err(|e| BenchError::Config(e.to_string()))?;
        Ok(())
    }

    pub fn seed(&self, run: usize) -> u64 {
        self.base_seed.wrapping_add(run as u64)
    }
}

pub fn front_file_name(algorithm: Algorithm, problem: &str, seed: u64) -> String {
    format!("front_{algorithm}_{problem}_{seed}.csv")
}

pub fn run_file_name(algorithm: Algorithm, problem: &str, seed: u64) -> String {
    format!("run_{algorithm}_{problem}_{seed}.json")
}

pub fn summary_file_name(algorithm: Algorithm, problem: &str) -> String {
    format!("summary_{algorithm}_{problem}.json")
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub seed: u64,
    pub front_size: usize,
    pub evaluations: usize,
    pub wall_ms: f64,
    pub indicators: IndicatorReport,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub algorithm: Algorithm,
    pub problem: String,
    pub runs: usize,
    pub base_seed: u64,
    pub generations: usize,
    pub population: usize,
    pub gd_p: u32,
    pub reference_source: ReferenceSource,
    pub reference_size: usize,
    pub stats: EnsembleStats,
    /// Summed wall time of all runs.
    pub total_wall_ms: f64,
    pub per_run: Vec<RunReport>,
}

pub(crate) fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| BenchError::Config(format!("cannot start {n} worker threads: {e}")))?;
            Ok(pool.install(f))
        }
    }
}

pub(crate) fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(|e| BenchError::Json {
        path: path.into(),
        source: e,
    })?;
    fs::write(path, text + "\n").map_err(|e| BenchError::io(path, e))
}

/// Runs the campaign, writing per-run fronts and records plus the summary
/// into `out_dir`.
pub fn run_campaign(config: &CampaignConfig) -> Result<CampaignSummary> {
    config.validate()?;
    let problem = problem_by_name(&config.problem)?;
    let name = problem.name().to_string();
    fs::create_dir_all(&config.out_dir).map_err(|e| BenchError::io(&config.out_dir, e))?;

    let reference = with_pool(config.jobs, || {
        resolve_reference(
            &problem,
            config.reference.as_deref(),
            &config.out_dir,
            &config.merged_reference,
        )
    })??;
    log::info!(
        "{} on {}: {} runs, reference front of {} points",
        config.algorithm,
        name,
        config.runs,
        reference.points.len()
    );

    let results: Vec<Result<RunReport>> = with_pool(config.jobs, || {
        (0..config.runs)
            .into_par_iter()
            .map(|r| {
                let seed = config.seed(r);
                let result = run_once(
                    config.algorithm,
                    &problem,
                    config.population,
                    config.generations,
                    seed,
                )?;
                save_front_csv(
                    &config
                        .out_dir
                        .join(front_file_name(config.algorithm, &name, seed)),
                    &result.front,
                )?;
                write_json(
                    &config
                        .out_dir
                        .join(run_file_name(config.algorithm, &name, seed)),
                    &result,
                )?;
                let indicators =
                    IndicatorReport::compute(&result.front, &reference.points, config.gd_p)?;
                let finite = [
                    indicators.gd,
                    indicators.rgd,
                    indicators.spacing,
                    indicators.max_spread,
                ]
                .iter()
                .all(|v| v.is_finite());
                if !finite {
                    return Err(BenchError::Numerical(format!(
                        "non-finite indicator for seed {seed}"
                    )));
                }
                log::debug!("seed {seed}: GD {:.6e}", indicators.gd);
                Ok(RunReport {
                    seed,
                    front_size: result.front.len(),
                    evaluations: result.evaluations,
                    wall_ms: result.wall_ms,
                    indicators,
                })
            })
            .collect()
    })?;
    let per_run = results.into_iter().collect::<Result<Vec<_>>>()?;

    let reports: Vec<IndicatorReport> = per_run.iter().map(|r| r.indicators).collect();
    let summary = CampaignSummary {
        algorithm: config.algorithm,
        problem: name.clone(),
        runs: config.runs,
        base_seed: config.base_seed,
        generations: config.generations,
        population: config.population,
        gd_p: config.gd_p.as_int(),
        reference_source: reference.source,
        reference_size: reference.points.len(),
        stats: aggregate(&reports, StdDivisor::Population)?,
        total_wall_ms: per_run.iter().map(|r| r.wall_ms).sum(),
        per_run,
    };
    write_json(
        &config
            .out_dir
            .join(summary_file_name(config.algorithm, &name)),
        &summary,
    )?;
    Ok(summary)
}

/// Reads a summary JSON written by [`run_campaign`].
pub fn load_summary(path: &Path) -> Result<CampaignSummary> {
    let text = fs::read_to_string(path).map_err(|e| BenchError::io(path, e))?;
    serde_json::from_str(&text).map_err(|e| BenchError::Json {
        path: path.into(),
        source: e,
    })
}
