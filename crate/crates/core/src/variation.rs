//! Real-coded variation: simulated binary crossover, polynomial mutation,
//! and the division-probability split used to carve out the seed group.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const DEFAULT_SBX_ETA: f64 = 20.0;
pub const DEFAULT_PM_ETA: f64 = 20.0;
pub const DEFAULT_MUTATION_PROB: f64 = 0.02;

/// Offspring produced per generation: `2 * round(0.7 * n_pop)`.
pub fn default_offspring_count(n_pop: usize) -> usize {
    2 * (0.7 * n_pop as f64).round() as usize
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VariationConfig {
    pub offspring_count: usize,
    /// Per-variable mutation probability.
    pub mutation_prob: f64,
    pub sbx_eta: f64,
    pub pm_eta: f64,
}

impl VariationConfig {
    pub fn for_population(n_pop: usize) -> Self {
        Self {
            offspring_count: default_offspring_count(n_pop),
            mutation_prob: DEFAULT_MUTATION_PROB,
            sbx_eta: DEFAULT_SBX_ETA,
            pm_eta: DEFAULT_PM_ETA,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.offspring_count < 2 || !self.offspring_count.is_multiple_of(2) {
            return Err(Error::invalid_config(format!(
                "offspring count must be even and at least 2, got {}",
                self.offspring_count
            )));
        }
        if !(0.0..=1.0).contains(&self.mutation_prob) {
            return Err(Error::invalid_config(format!(
                "mutation probability {} outside [0, 1]",
                self.mutation_prob
            )));
        }
        if !(self.sbx_eta > 0.0 && self.sbx_eta.is_finite()) {
            return Err(Error::invalid_config("sbx_eta must be positive"));
        }
        if !(self.pm_eta > 0.0 && self.pm_eta.is_finite()) {
            return Err(Error::invalid_config("pm_eta must be positive"));
        }
        Ok(())
    }
}

/// Size of the group separated from the main population: `round(n_pop * dp)`
/// rounded half-up, clamped to `[2, n_pop]`.
pub fn dp_split_size(n_pop: usize, dp: f64) -> Result<usize> {
    if !(0.1..=0.9).contains(&dp) {
        return Err(Error::invalid_config(format!(
            "dp = {dp} outside [0.1, 0.9]"
        )));
    }
    if n_pop < 4 {
        return Err(Error::invalid_config(format!(
            "population of {n_pop} is too small to split"
        )));
    }
    let s = (n_pop as f64 * dp + 0.5).floor() as usize;
    Ok(s.clamp(2, n_pop))
}

/// SBX on one coordinate pair for a given uniform draw `u`. Unclamped, so
/// `(c1 + c2) / 2 == (y1 + y2) / 2` up to rounding.
pub fn sbx_pair(y1: f64, y2: f64, u: f64, eta: f64) -> (f64, f64) {
    let beta = if u <= 0.5 {
        (2.0 * u).powf(1.0 / (eta + 1.0))
    } else {
        (1.0 / (2.0 * (1.0 - u))).powf(1.0 / (eta + 1.0))
    };
    let mean = 0.5 * (y1 + y2);
    let half_spread = 0.5 * beta * (y2 - y1);
    (mean - half_spread, mean + half_spread)
}

/// Simulated binary crossover over every coordinate, children clamped to
/// `bounds`.
pub fn crossover<R: Rng + ?Sized>(
    p1: &[f64],
    p2: &[f64],
    bounds: &[(f64, f64)],
    eta: f64,
    rng: &mut R,
) -> (Vec<f64>, Vec<f64>) {
    debug_assert_eq!(p1.len(), p2.len());
    debug_assert_eq!(p1.len(), bounds.len());
    let mut c1 = p1.to_vec();
    let mut c2 = p2.to_vec();
    for (j, &(lo, hi)) in bounds.iter().enumerate() {
        let u: f64 = rng.gen();
        if (p1[j] - p2[j]).abs() <= 1e-14 {
            continue;
        }
        let (a, b) = sbx_pair(p1[j], p2[j], u, eta);
        c1[j] = a.clamp(lo, hi);
        c2[j] = b.clamp(lo, hi);
    }
    (c1, c2)
}

/// Bounded polynomial mutation of one coordinate for a uniform draw `u`.
pub fn polynomial_step(y: f64, lo: f64, hi: f64, u: f64, eta: f64) -> f64 {
    let span = hi - lo;
    if span <= 0.0 {
        return y;
    }
    let d1 = (y - lo) / span;
    let d2 = (hi - y) / span;
    let pow = 1.0 / (eta + 1.0);
    let dq = if u < 0.5 {
        let v = 2.0 * u + (1.0 - 2.0 * u) * (1.0 - d1).powf(eta + 1.0);
        v.powf(pow) - 1.0
    } else {
        let v = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * (1.0 - d2).powf(eta + 1.0);
        1.0 - v.powf(pow)
    };
    (y + dq * span).clamp(lo, hi)
}

/// Polynomial mutation: each coordinate is perturbed independently with
/// probability `prob`.
pub fn mutate<R: Rng + ?Sized>(
    x: &[f64],
    bounds: &[(f64, f64)],
    prob: f64,
    eta: f64,
    rng: &mut R,
) -> Vec<f64> {
    debug_assert_eq!(x.len(), bounds.len());
    x.iter()
        .zip(bounds)
        .map(|(&y, &(lo, hi))| {
            if prob > 0.0 && rng.gen::<f64>() < prob {
                polynomial_step(y, lo, hi, rng.gen(), eta)
            } else {
                y
            }
        })
        .collect()
}
