//! Reference-front resolution: an explicit CSV, the analytic ZDT front, or
//! a merged front of long runs cached next to the campaign output.

use std::path::{Path, PathBuf};

use molpb::front_io::save_front_csv;
use molpb::problems::{
    analytic_reference_front, is_zdt, load_reference_front, merged_reference_front,
};
use molpb::{Problem, ReferenceFront, ReferenceSource};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::campaign::{run_once, Algorithm};
use crate::error::{BenchError, Result};

/// Points sampled on analytic fronts.
pub const ANALYTIC_POINTS: usize = 1000;

/// Long runs of both algorithms used to build a reference front when none
/// is known.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MergedReferenceSpec {
    pub runs: usize,
    pub generations: usize,
    pub population: usize,
    pub base_seed: u64,
}

impl Default for MergedReferenceSpec {
    fn default() -> Self {
        Self {
            runs: 20,
            generations: 1000,
            population: 100,
            base_seed: 1_000_000,
        }
    }
}

pub fn cache_file_name(problem: &str) -> String {
    format!("reference_{problem}.csv")
}

/// Builds the merged front of `spec.runs` runs of each algorithm.
pub fn build_merged_reference(
    problem: &Problem,
    spec: &MergedReferenceSpec,
) -> Result<ReferenceFront> {
    if spec.runs == 0 {
        return Err(BenchError::Config(
            "merged reference needs at least one run".into(),
        ));
    }
    let jobs: Vec<(Algorithm, u64)> = Algorithm::ALL
        .iter()
        .flat_map(|&a| (0..spec.runs).map(move |r| (a, spec.base_seed + r as u64)))
        .collect();
    let fronts = jobs
        .par_iter()
        .map(|&(a, seed)| Ok(run_once(a, problem, spec.population, spec.generations, seed)?.front))
        .collect::<Result<Vec<_>>>()?;
    Ok(merged_reference_front(&fronts)?)
}

/// Resolves the reference front for `problem`. Engineering fronts are
/// cached in `cache_dir` and reused on later calls.
pub fn resolve_reference(
    problem: &Problem,
    path: Option<&Path>,
    cache_dir: &Path,
    spec: &MergedReferenceSpec,
) -> Result<ReferenceFront> {
    let name = problem.name();
    let front = if let Some(path) = path {
        load_reference_front(path).map_err(|e| BenchError::Reference {
            path: path.into(),
            source: e,
        })?
    } else if is_zdt(name) {
        analytic_reference_front(name, ANALYTIC_POINTS)?
    } else {
        let cache: PathBuf = cache_dir.join(cache_file_name(name));
        if cache.exists() {
            log::info!("using cached reference front {}", cache.display());
            let mut front = load_reference_front(&cache).map_err(|e| BenchError::Reference {
                path: cache.clone(),
                source: e,
            })?;
            front.source = ReferenceSource::MergedRuns;
            front
        } else {
            log::info!(
                "building reference front for {name} from {} x {} generation runs per algorithm",
                spec.runs,
                spec.generations
            );
            let front = build_merged_reference(problem, spec)?;
            std::fs::create_dir_all(cache_dir).map_err(|e| BenchError::io(cache_dir, e))?;
            save_front_csv(&cache, &front.points)?;
            front
        }
    };
    if front
        .points
        .iter()
        .any(|p| p.len() != problem.n_objectives())
    {
        return Err(BenchError::Config(format!(
            "reference front dimensionality does not match the {} objectives of {name}",
            problem.n_objectives()
        )));
    }
    Ok(front)
}
