//! NSGA-II with binary crowded tournaments and (mu + lambda) selection.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::archive::ParetoArchive;
use crate::dominance::crowded_compare;
use crate::engine::{EngineCore, RunResult};
use crate::error::{Error, Result};
use crate::problem::{Problem, Solution};
use crate::variation::{
    default_offspring_count, VariationConfig, DEFAULT_MUTATION_PROB, DEFAULT_PM_ETA,
    DEFAULT_SBX_ETA,
};

pub const ALGORITHM_NAME: &str = "nsga2";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Nsga2Config {
    pub n_pop: usize,
    pub offspring_count: usize,
    pub mutation_prob: f64,
    pub sbx_eta: f64,
    pub pm_eta: f64,
    pub archive_capacity: usize,
    pub max_generations: usize,
    pub seed: u64,
}

impl Default for Nsga2Config {
    fn default() -> Self {
        Self::for_population(100)
    }
}

impl Nsga2Config {
    pub fn for_population(n_pop: usize) -> Self {
        Self {
            n_pop,
            offspring_count: default_offspring_count(n_pop),
            mutation_prob: DEFAULT_MUTATION_PROB,
            sbx_eta: DEFAULT_SBX_ETA,
            pm_eta: DEFAULT_PM_ETA,
            archive_capacity: 100,
            max_generations: 350,
            seed: 0,
        }
    }

    pub fn variation(&self) -> VariationConfig {
        VariationConfig {
            offspring_count: self.offspring_count,
            mutation_prob: self.mutation_prob,
            sbx_eta: self.sbx_eta,
            pm_eta: self.pm_eta,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_pop < 2 {
            return Err(Error::invalid_config(
                "population must hold at least two solutions",
            ));
        }
        self.variation().validate()?;
        if self.archive_capacity == 0 {
            return Err(Error::invalid_config("archive capacity must be positive"));
        }
        Ok(())
    }
}

/// Binary tournament by crowded comparison; a tie goes to the first draw.
pub fn tournament<R: Rng + ?Sized>(population: &[Solution], rng: &mut R) -> Result<usize> {
    let a = rng.gen_range(0..population.len());
    let b = rng.gen_range(0..population.len());
    Ok(
        if crowded_compare(&population[b], &population[a])?.is_lt() {
            b
        } else {
            a
        },
    )
}

#[derive(Clone, Debug)]
pub struct Nsga2 {
    config: Nsga2Config,
    core: EngineCore,
}

impl Nsga2 {
    pub fn new(config: Nsga2Config, problem: Problem) -> Result<Self> {
        config.validate()?;
        let core = EngineCore::new(
            problem,
            config.n_pop,
            config.variation(),
            config.archive_capacity,
            config.seed,
        )?;
        Ok(Self { config, core })
    }

    pub fn config(&self) -> &Nsga2Config {
        &self.config
    }

    pub fn population(&self) -> &[Solution] {
        &self.core.population
    }

    pub fn archive(&self) -> &ParetoArchive {
        &self.core.archive
    }

    pub fn generation(&self) -> usize {
        self.core.generation
    }

    pub fn evaluations(&self) -> usize {
        self.core.evaluations
    }

    pub fn is_finished(&self) -> bool {
        self.core.generation >= self.config.max_generations
    }

    pub fn step(&mut self) -> Result<()> {
        let pop = self.core.population.clone();
        let mut parents = Vec::with_capacity(self.config.offspring_count / 2);
        for _ in 0..self.config.offspring_count / 2 {
            let a = tournament(&pop, &mut self.core.rng)?;
            let b = tournament(&pop, &mut self.core.rng)?;
            parents.push((pop[a].x.as_slice(), pop[b].x.as_slice()));
        }
        let offspring = self.core.breed(&parents)?;
        self.core.advance(offspring)
    }

    pub fn run_to_end(&mut self) -> Result<RunResult> {
        while !self.is_finished() {
            self.step()?;
        }
        Ok(self.result())
    }

    pub fn result(&self) -> RunResult {
        self.core.result(ALGORITHM_NAME)
    }
}

/// Runs NSGA-II for `config.max_generations` generations.
pub fn run(config: &Nsga2Config, problem: &Problem) -> Result<RunResult> {
    Nsga2::new(config.clone(), problem.clone())?.run_to_end()
}
