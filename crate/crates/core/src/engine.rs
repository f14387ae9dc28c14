//! Machinery shared by the optimizers: seeded initialization, offspring
//! production, (mu + lambda) environmental selection, archive upkeep and the
//! serialized run record.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::archive::ParetoArchive;
use crate::dominance::{assign_rank_and_crowding, crowded_order};
use crate::error::{Error, Result};
use crate::problem::{Problem, Solution};
use crate::variation::{crossover, mutate, VariationConfig};

/// One entry per completed generation (generation 0 is the initial
/// population).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TracePoint {
    pub generation: usize,
    pub archive_size: usize,
    pub evaluations: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunResult {
    pub algorithm: String,
    pub problem: String,
    pub seed: u64,
    pub generations: usize,
    pub evaluations: usize,
    pub wall_ms: f64,
    /// Objective vectors of the final archive.
    pub front: Vec<Vec<f64>>,
    pub trace: Vec<TracePoint>,
}

impl RunResult {
    /// Equality ignoring `wall_ms`.
    pub fn same_outcome(&self, other: &RunResult) -> bool {
        RunResult {
            wall_ms: 0.0,
            ..self.clone()
        } == RunResult {
            wall_ms: 0.0,
            ..other.clone()
        }
    }
}

/// `n_pop` uniform samples inside the problem box, decoded and evaluated.
pub fn initialize_population<R: rand::Rng + ?Sized>(
    problem: &Problem,
    n_pop: usize,
    rng: &mut R,
) -> Result<Vec<Solution>> {
    (0..n_pop)
        .map(|_| problem.evaluate(&problem.sample(rng)))
        .collect()
}

/// Ranks `merged`, keeps the best `n` by crowded comparison and returns
/// `(survivors, rank-0 members of merged)`. Survivors come out in crowded
/// order and keep the rank and crowding computed over `merged`.
pub fn environmental_selection(
    mut merged: Vec<Solution>,
    n: usize,
) -> Result<(Vec<Solution>, Vec<Solution>)> {
    if merged.len() < n {
        return Err(Error::invalid_state(format!(
            "cannot select {n} survivors from {} candidates",
            merged.len()
        )));
    }
    let partition = assign_rank_and_crowding(&mut merged)?;
    let first_front: Vec<Solution> = partition.fronts[0]
        .iter()
        .map(|&i| merged[i].clone())
        .collect();
    let order = crowded_order(&merged)?;
    let mut slots: Vec<Option<Solution>> = merged.into_iter().map(Some).collect();
    let survivors = order
        .into_iter()
        .take(n)
        .map(|i| slots[i].take().expect("index used once"))
        .collect();
    Ok((survivors, first_front))
}

/// Population, archive, rng and counters of one run.
#[derive(Clone, Debug)]
pub(crate) struct EngineCore {
    pub problem: Problem,
    pub bounds: Vec<(f64, f64)>,
    pub variation: VariationConfig,
    pub rng: ChaCha8Rng,
    pub population: Vec<Solution>,
    pub archive: ParetoArchive,
    pub generation: usize,
    pub evaluations: usize,
    pub trace: Vec<TracePoint>,
    pub seed: u64,
    started: Instant,
}

impl EngineCore {
    pub fn new(
        problem: Problem,
        n_pop: usize,
        variation: VariationConfig,
        archive_capacity: usize,
        seed: u64,
    ) -> Result<Self> {
        variation.validate()?;
        let started = Instant::now();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut population = initialize_population(&problem, n_pop, &mut rng)?;
        let partition = assign_rank_and_crowding(&mut population)?;
        let mut archive = ParetoArchive::new(archive_capacity)?;
        archive.extend(partition.fronts[0].iter().map(|&i| population[i].clone()));
        let mut core = Self {
            bounds: problem.bounds(),
            problem,
            variation,
            rng,
            population,
            archive,
            generation: 0,
            evaluations: n_pop,
            trace: Vec::new(),
            seed,
            started,
        };
        core.record();
        Ok(core)
    }

    fn record(&mut self) {
        self.trace.push(TracePoint {
            generation: self.generation,
            archive_size: self.archive.len(),
            evaluations: self.evaluations,
        });
    }

    /// SBX plus polynomial mutation on each parent pair; two evaluated
    /// children per pair, in pair order.
    pub fn breed(&mut self, pairs: &[(&[f64], &[f64])]) -> Result<Vec<Solution>> {
        let v = &self.variation;
        let mut offspring = Vec::with_capacity(2 * pairs.len());
        for &(p1, p2) in pairs {
            let (c1, c2) = crossover(p1, p2, &self.bounds, v.sbx_eta, &mut self.rng);
            for child in [c1, c2] {
                let child = mutate(
                    &child,
                    &self.bounds,
                    v.mutation_prob,
                    v.pm_eta,
                    &mut self.rng,
                );
                offspring.push(self.problem.decode_and_evaluate(&child)?);
            }
        }
        Ok(offspring)
    }

    /// Merges offspring into the population, selects survivors, updates the
    /// archive and closes the generation.
    pub fn advance(&mut self, offspring: Vec<Solution>) -> Result<()> {
        let n = self.population.len();
        self.evaluations += offspring.len();
        let mut merged = std::mem::take(&mut self.population);
        merged.extend(offspring);
        let (survivors, first_front) = environmental_selection(merged, n)?;
        self.population = survivors;
        self.archive.extend(first_front);
        self.generation += 1;
        self.record();
        Ok(())
    }

    pub fn result(&self, algorithm: &str) -> RunResult {
        RunResult {
            algorithm: algorithm.to_string(),
            problem: self.problem.name().to_string(),
            seed: self.seed,
            generations: self.generation,
            evaluations: self.evaluations,
            wall_ms: self.started.elapsed().as_secs_f64() * 1e3,
            front: self.archive.front(),
            trace: self.trace.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sol(f: &[f64]) -> Solution {
        Solution::from_objectives(f.to_vec())
    }

    #[test]
    fn selection_keeps_whole_fronts_then_crowding() {
        let merged = vec![
            sol(&[2.0, 2.0]),
            sol(&[0.0, 1.0]),
            sol(&[0.5, 0.5]),
            sol(&[1.0, 0.0]),
            sol(&[3.0, 3.0]),
            sol(&[1.0, 3.0]),
            sol(&[3.0, 1.0]),
        ];
        let (survivors, first) = environmental_selection(merged, 5).unwrap();
        assert_eq!(first.len(), 3);
        let fs: Vec<Vec<f64>> = survivors.iter().map(|s| s.f.clone()).collect();
        assert_eq!(fs[..3], [vec![0.0, 1.0], vec![1.0, 0.0], vec![0.5, 0.5]]);
        // second front {(2,2),(1,3),(3,1)}: the extremes have infinite crowding
        assert!(fs[3..].contains(&vec![1.0, 3.0]) && fs[3..].contains(&vec![3.0, 1.0]));
    }

    #[test]
    fn selection_exact_first_front() {
        let merged = vec![sol(&[0.0, 1.0]), sol(&[2.0, 2.0]), sol(&[1.0, 0.0])];
        let (survivors, _) = environmental_selection(merged, 2).unwrap();
        let fs: Vec<Vec<f64>> = survivors.iter().map(|s| s.f.clone()).collect();
        assert_eq!(fs, vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
    }

    #[test]
    fn selection_never_drops_rank0_for_dominated() {
        let merged: Vec<Solution> = (0..20)
            .map(|i| sol(&[i as f64, (20 - i) as f64 + (i % 3) as f64]))
            .collect();
        let (survivors, first) = environmental_selection(merged, 10).unwrap();
        assert!(first.len() < 10);
        for f in &first {
            assert!(survivors.iter().any(|s| s.f == f.f));
        }
    }

    #[test]
    fn selection_underflow_is_error() {
        assert!(environmental_selection(vec![sol(&[1.0])], 2).is_err());
    }
}
