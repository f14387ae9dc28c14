//! MOLPB: each generation a random share `dp` of the population is
//! separated and split into good and bad halves; the rest of the population
//! is routed against the best good and best bad members, and mating pairs
//! are drawn from those groups.

use rand::seq::SliceRandom;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::archive::ParetoArchive;
use crate::dominance::{
    assign_rank_and_crowding, crowded_compare, crowded_order, dominates_unchecked,
};
use crate::engine::{EngineCore, RunResult};
use crate::error::{Error, Result};
use crate::problem::{Problem, Solution};
use crate::variation::{
    default_offspring_count, dp_split_size, VariationConfig, DEFAULT_MUTATION_PROB, DEFAULT_PM_ETA,
    DEFAULT_SBX_ETA,
};

pub const ALGORITHM_NAME: &str = "molpb";

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MolpbConfig {
    pub n_pop: usize,
    /// Division probability: share of the population separated each
    /// generation.
    pub dp: f64,
    pub offspring_count: usize,
    pub mutation_prob: f64,
    pub sbx_eta: f64,
    pub pm_eta: f64,
    pub archive_capacity: usize,
    pub max_generations: usize,
    pub seed: u64,
}

impl Default for MolpbConfig {
    fn default() -> Self {
        Self::for_population(100)
    }
}

impl MolpbConfig {
    /// Defaults scaled to a population size; offspring count follows
    /// `2 * round(0.7 * n_pop)`.
    pub fn for_population(n_pop: usize) -> Self {
        Self {
            n_pop,
            dp: 0.6,
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
        dp_split_size(self.n_pop, self.dp)?;
        self.variation().validate()?;
        if self.archive_capacity == 0 {
            return Err(Error::invalid_config("archive capacity must be positive"));
        }
        Ok(())
    }
}

/// Buckets of one generation. `good` and `bad` split the separated group;
/// `perfect`, `good_extension` and `bad_extension` partition the main
/// population.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SubPopulations {
    pub good: Vec<Solution>,
    pub bad: Vec<Solution>,
    pub perfect: Vec<Solution>,
    pub good_extension: Vec<Solution>,
    pub bad_extension: Vec<Solution>,
}

/// Ranks the separated group on its own and returns `(good, bad)`, each in
/// crowded order: the top `floor(S / 2)` are good.
pub fn split_good_bad(separated: &[Solution]) -> Result<(Vec<Solution>, Vec<Solution>)> {
    if separated.len() < 2 {
        return Err(Error::invalid_input(
            "the separated group needs at least two members",
        ));
    }
    let mut group = separated.to_vec();
    assign_rank_and_crowding(&mut group)?;
    let order = crowded_order(&group)?;
    let half = group.len() / 2;
    let good = order[..half].iter().map(|&i| group[i].clone()).collect();
    let bad = order[half..].iter().map(|&i| group[i].clone()).collect();
    Ok((good, bad))
}

/// Index of the crowded-order minimum of `members` after ranking them
/// among themselves.
fn best_index(members: &[Solution]) -> Result<usize> {
    if members.is_empty() {
        return Err(Error::invalid_state(
            "cannot pick the best of an empty group",
        ));
    }
    let mut ranked = members.to_vec();
    assign_rank_and_crowding(&mut ranked)?;
    Ok(crowded_order(&ranked)?[0])
}

/// The best member of `bad` by crowded comparison within `bad`.
pub fn best_of_bad(bad: &[Solution]) -> Result<Solution> {
    Ok(bad[best_index(bad)?].clone())
}

/// Main-population members not dominated by `best_bad`, order preserved.
pub fn filter_main(main: &[Solution], best_bad: &Solution) -> Vec<Solution> {
    main.iter()
        .filter(|m| !dominates_unchecked(&best_bad.f, &m.f))
        .cloned()
        .collect()
}

/// Routes each main member by crowded comparison over the joint set
/// `main ∪ good ∪ bad`: members not strictly ahead of the best bad member go
/// to `bad_extension`; members strictly ahead of the best good member go to
/// `perfect`; the rest go to `good_extension`. Routed members carry their
/// joint rank and crowding.
pub fn route_main(
    main: &[Solution],
    good: &[Solution],
    bad: &[Solution],
) -> Result<SubPopulations> {
    if good.is_empty() || bad.is_empty() {
        return Err(Error::invalid_input(
            "routing needs non-empty good and bad groups",
        ));
    }
    let mut joint: Vec<Solution> = main.iter().chain(good).chain(bad).cloned().collect();
    assign_rank_and_crowding(&mut joint)?;
    let order = crowded_order(&joint)?;
    let n_main = main.len();
    let n_good = good.len();
    let pivot = |range: std::ops::Range<usize>| {
        *order
            .iter()
            .find(|i| range.contains(i))
            .expect("group is non-empty")
    };
    let best_good = &joint[pivot(n_main..n_main + n_good)];
    let best_bad = &joint[pivot(n_main + n_good..joint.len())];

    let mut subs = SubPopulations {
        good: good.to_vec(),
        bad: bad.to_vec(),
        ..Default::default()
    };
    for m in &joint[..n_main] {
        if crowded_compare(m, best_bad)?.is_ge() {
            subs.bad_extension.push(m.clone());
        } else if crowded_compare(m, best_good)?.is_lt() {
            subs.perfect.push(m.clone());
        } else {
            subs.good_extension.push(m.clone());
        }
    }
    Ok(subs)
}

/// A running MOLPB optimizer that can be stepped one generation at a time.
#[derive(Clone, Debug)]
pub struct Molpb {
    config: MolpbConfig,
    core: EngineCore,
}

impl Molpb {
    /// Validates the configuration and evaluates the initial population.
    pub fn new(config: MolpbConfig, problem: Problem) -> Result<Self> {
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

    pub fn config(&self) -> &MolpbConfig {
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

    /// Mating pairs for one generation as `(parent, partner)` clones, in
    /// order: internal pairs of the first good half, second-half good
    /// members with random main partners, then good extensions with perfect
    /// (or, once those run out, bad) partners. Also returns the routing.
    fn mating_pairs(&mut self) -> Result<(Vec<(Solution, Solution)>, SubPopulations)> {
        let n = self.core.population.len();
        let s = dp_split_size(n, self.config.dp)?;
        let mut idx: Vec<usize> = (0..n).collect();
        idx.shuffle(&mut self.core.rng);
        let (sep_idx, main_idx) = idx.split_at_mut(s);
        sep_idx.sort_unstable();
        main_idx.sort_unstable();
        let pop = &self.core.population;
        let separated: Vec<Solution> = sep_idx.iter().map(|&i| pop[i].clone()).collect();
        let main: Vec<Solution> = main_idx.iter().map(|&i| pop[i].clone()).collect();

        let (good, bad) = split_good_bad(&separated)?;
        let mut pairs = Vec::new();

        // first half of good: adjacent pairs in crowded order; an odd
        // leftover takes the next good member
        let first_half = good.len().div_ceil(2);
        for i in (0..first_half).step_by(2) {
            let j = if i + 1 < first_half {
                i + 1
            } else {
                (i + 1) % good.len()
            };
            pairs.push((good[i].clone(), good[j].clone()));
        }

        // second half of good: uniform partners from the filtered main
        // population, falling back to bad when it is empty
        let best_bad = best_of_bad(&bad)?;
        let filtered = filter_main(&main, &best_bad);
        let pool = if filtered.is_empty() { &bad } else { &filtered };
        for g in &good[first_half..] {
            let k = self.core.rng.gen_range(0..pool.len());
            pairs.push((g.clone(), pool[k].clone()));
        }

        let subs = route_main(&main, &good, &bad)?;
        let n_perfect = subs.perfect.len();
        for (i, g) in subs.good_extension.iter().enumerate() {
            let partner = if i < n_perfect {
                &subs.perfect[i]
            } else {
                &subs.bad[(i - n_perfect) % subs.bad.len()]
            };
            pairs.push((g.clone(), partner.clone()));
        }
        Ok((pairs, subs))
    }

    /// Runs one generation.
    pub fn step(&mut self) -> Result<()> {
        let (pairs, _) = self.mating_pairs()?;
        // cycle or cut the pair list to exactly offspring_count / 2 pairs
        let wanted = self.config.offspring_count / 2;
        let parents: Vec<(&[f64], &[f64])> = pairs
            .iter()
            .cycle()
            .take(wanted)
            .map(|(a, b)| (a.x.as_slice(), b.x.as_slice()))
            .collect();
        let offspring = self.core.breed(&parents)?;
        self.core.advance(offspring)
    }

    /// Steps until `max_generations` is reached.
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

/// Runs MOLPB for `config.max_generations` generations.
pub fn run(config: &MolpbConfig, problem: &Problem) -> Result<RunResult> {
    Molpb::new(config.clone(), problem.clone())?.run_to_end()
}
