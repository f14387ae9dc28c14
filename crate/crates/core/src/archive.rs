//! Bounded external archive of mutually non-dominated solutions.

use crate::dominance::{crowding_distance, dominates_unchecked};
use crate::error::{Error, Result};
use crate::problem::Solution;

/// Holds at most `capacity` mutually non-dominated solutions. Overflow is
/// resolved by repeatedly dropping the member with the smallest finite
/// crowding distance.
#[derive(Clone, Debug)]
pub struct ParetoArchive {
    capacity: usize,
    members: Vec<Solution>,
}

impl ParetoArchive {
    pub fn new(capacity: usize) -> Result<Self> {
        if capacity == 0 {
            return Err(Error::invalid_config("archive capacity must be positive"));
        }
        Ok(Self {
            capacity,
            members: Vec::with_capacity(capacity + 1),
        })
    }

    pub fn capacity(&self) -> usize {
        self.capacity
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Solution] {
        &self.members
    }

    pub fn into_members(self) -> Vec<Solution> {
        self.members
    }

    /// Objective vectors of the members, in archive order.
    pub fn front(&self) -> Vec<Vec<f64>> {
        self.members.iter().map(|s| s.f.clone()).collect()
    }

    /// Returns whether the candidate was accepted. Dominated candidates and
    /// exact objective duplicates of a member are rejected.
    pub fn insert(&mut self, candidate: Solution) -> bool {
        let rejected = self
            .members
            .iter()
            .any(|m| m.f == candidate.f || dominates_unchecked(&m.f, &candidate.f));
        if rejected {
            return false;
        }
        self.members
            .retain(|m| !dominates_unchecked(&candidate.f, &m.f));
        self.members.push(candidate);
        if self.members.len() > self.capacity {
            self.truncate();
        }
        true
    }

    /// Inserts in order and returns how many candidates were accepted.
    pub fn extend<I: IntoIterator<Item = Solution>>(&mut self, candidates: I) -> usize {
        let mut accepted = 0;
        for c in candidates {
            if self.insert(c) {
                accepted += 1;
            }
        }
        accepted
    }

    /// Shrinks the archive to capacity, one removal at a time with the
    /// crowding distances recomputed after each removal. Members with
    /// infinite crowding are only removed once no finite one is left; then
    /// the most recent member goes.
    pub fn truncate(&mut self) {
        while self.members.len() > self.capacity {
            let crowding =
                crowding_distance(&self.members).expect("archive members share dimension");
            let victim = crowding
                .iter()
                .enumerate()
                .filter(|(_, c)| c.is_finite())
                .min_by(|a, b| a.1.total_cmp(b.1).then(a.0.cmp(&b.0)))
                .map(|(i, _)| i)
                .unwrap_or(self.members.len() - 1);
            self.members.remove(victim);
        }
    }
}
