//! Pareto dominance, fast non-dominated sorting and crowding distance.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::problem::Solution;

/// `true` iff `a` is no worse than `b` everywhere and strictly better
/// somewhere (minimization).
pub fn dominates(a: &[f64], b: &[f64]) -> Result<bool> {
    if a.len() != b.len() {
        return Err(Error::invalid_input(format!(
            "cannot compare objective vectors of length {} and {}",
            a.len(),
            b.len()
        )));
    }
    Ok(dominates_unchecked(a, b))
}

#[inline]
pub(crate) fn dominates_unchecked(a: &[f64], b: &[f64]) -> bool {
    let mut strictly_better = false;
    for (x, y) in a.iter().zip(b) {
        if x > y {
            return false;
        }
        if x < y {
            strictly_better = true;
        }
    }
    strictly_better
}

/// Fronts of a non-dominated sort, front 0 being the non-dominated set.
/// Indices inside each front are ascending.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FrontPartition {
    pub fronts: Vec<Vec<usize>>,
}

impl FrontPartition {
    pub fn len(&self) -> usize {
        self.fronts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.fronts.is_empty()
    }

    /// Rank of every input index.
    pub fn ranks(&self) -> Vec<usize> {
        let n = self.fronts.iter().map(Vec::len).sum();
        let mut ranks = vec![0; n];
        for (rank, front) in self.fronts.iter().enumerate() {
            for &i in front {
                ranks[i] = rank;
            }
        }
        ranks
    }
}

fn check_uniform<P: AsRef<[f64]>>(points: &[P]) -> Result<usize> {
    let m = points
        .first()
        .map(|p| p.as_ref().len())
        .ok_or_else(|| Error::invalid_input("empty point set"))?;
    if let Some(i) = points.iter().position(|p| p.as_ref().len() != m) {
        return Err(Error::invalid_input(format!(
            "point {i} has {} objectives, expected {m}",
            points[i].as_ref().len()
        )));
    }
    Ok(m)
}

/// Domination-count sort, O(m n^2).
pub fn non_dominated_sort<P: AsRef<[f64]>>(points: &[P]) -> Result<FrontPartition> {
    check_uniform(points)?;
    let n = points.len();
    let mut dominated_by: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut counts = vec![0usize; n];

    for i in 0..n {
        let a = points[i].as_ref();
        for j in (i + 1)..n {
            let b = points[j].as_ref();
            if dominates_unchecked(a, b) {
                dominated_by[i].push(j);
                counts[j] += 1;
            } else if dominates_unchecked(b, a) {
                dominated_by[j].push(i);
                counts[i] += 1;
            }
        }
    }

    let mut fronts = Vec::new();
    let mut current: Vec<usize> = (0..n).filter(|&i| counts[i] == 0).collect();
    while !current.is_empty() {
        let mut next = Vec::new();
        for &p in &current {
            for &q in &dominated_by[p] {
                counts[q] -= 1;
                if counts[q] == 0 {
                    next.push(q);
                }
            }
        }
        next.sort_unstable();
        fronts.push(current);
        current = next;
    }
    Ok(FrontPartition { fronts })
}

/// Indices of the non-dominated members, ascending.
pub fn non_dominated_indices<P: AsRef<[f64]>>(points: &[P]) -> Vec<usize> {
    (0..points.len())
        .filter(|&i| {
            let a = points[i].as_ref();
            !points.iter().any(|q| dominates_unchecked(q.as_ref(), a))
        })
        .collect()
}

/// Crowding distance of each member of a single front.
///
/// Extremes of every objective get `+inf`; an objective whose range is
/// zero contributes nothing to the interior members.
pub fn crowding_distance<P: AsRef<[f64]>>(front: &[P]) -> Result<Vec<f64>> {
    let m = check_uniform(front)?;
    let n = front.len();
    if n <= 2 {
        return Ok(vec![f64::INFINITY; n]);
    }
    let mut distance = vec![0.0; n];
    let mut order: Vec<usize> = (0..n).collect();
    for k in 0..m {
        order.sort_by(|&a, &b| {
            front[a].as_ref()[k]
                .total_cmp(&front[b].as_ref()[k])
                .then(a.cmp(&b))
        });
        let lo = front[order[0]].as_ref()[k];
        let hi = front[order[n - 1]].as_ref()[k];
        distance[order[0]] = f64::INFINITY;
        distance[order[n - 1]] = f64::INFINITY;
        let range = hi - lo;
        if range > 0.0 {
            for w in order.windows(3) {
                let gap = front[w[2]].as_ref()[k] - front[w[0]].as_ref()[k];
                distance[w[1]] += gap / range;
            }
        }
    }
    Ok(distance)
}

/// Ranks every solution and assigns per-front crowding distances.
pub fn assign_rank_and_crowding(solutions: &mut [Solution]) -> Result<FrontPartition> {
    let partition = non_dominated_sort(solutions)?;
    for (rank, front) in partition.fronts.iter().enumerate() {
        let members: Vec<&[f64]> = front.iter().map(|&i| solutions[i].f.as_slice()).collect();
        let crowding = crowding_distance(&members)?;
        for (&i, c) in front.iter().zip(crowding) {
            solutions[i].rank = Some(rank);
            solutions[i].crowding = Some(c);
        }
    }
    Ok(partition)
}

fn rank_and_crowding(s: &Solution) -> Result<(usize, f64)> {
    match (s.rank, s.crowding) {
        (Some(r), Some(c)) => Ok((r, c)),
        _ => Err(Error::invalid_state(
            "crowded comparison needs rank and crowding distance",
        )),
    }
}

/// The crowded-comparison order: `Less` means `a` is preferred. Lower rank
/// wins, then larger crowding distance. Equal pairs compare `Equal`; callers
/// that need a total order break ties by position (see [`crowded_order`]).
pub fn crowded_compare(a: &Solution, b: &Solution) -> Result<Ordering> {
    let (ra, ca) = rank_and_crowding(a)?;
    let (rb, cb) = rank_and_crowding(b)?;
    Ok(ra.cmp(&rb).then_with(|| cb.total_cmp(&ca)))
}

/// Indices sorted by [`crowded_compare`], ties kept in index order.
pub fn crowded_order(solutions: &[Solution]) -> Result<Vec<usize>> {
    let keys = solutions
        .iter()
        .map(rank_and_crowding)
        .collect::<Result<Vec<_>>>()?;
    let mut order: Vec<usize> = (0..solutions.len()).collect();
    order.sort_by(|&a, &b| {
        let (ra, ca) = keys[a];
        let (rb, cb) = keys[b];
        ra.cmp(&rb).then_with(|| cb.total_cmp(&ca)).then(a.cmp(&b))
    });
    Ok(order)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ranked(rank: usize, crowding: f64) -> Solution {
        Solution {
            x: vec![],
            f: vec![0.0, 0.0],
            rank: Some(rank),
            crowding: Some(crowding),
        }
    }

    #[test]
    fn dominance_examples() {
        assert!(dominates(&[1.0, 2.0], &[2.0, 3.0]).unwrap());
        assert!(!dominates(&[1.0, 2.0], &[2.0, 1.0]).unwrap());
        assert!(!dominates(&[2.0, 1.0], &[1.0, 2.0]).unwrap());
        assert!(!dominates(&[1.0, 2.0], &[1.0, 2.0]).unwrap());
        assert!(dominates(&[1.0, 2.0], &[1.0, 3.0]).unwrap());
        assert!(matches!(
            dominates(&[1.0], &[1.0, 2.0]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn sort_examples() {
        assert_eq!(
            non_dominated_sort(&[[1.0, 1.0]]).unwrap().fronts,
            vec![vec![0]]
        );
        let p = non_dominated_sort(&[[1.0, 2.0], [2.0, 1.0], [3.0, 3.0]]).unwrap();
        assert_eq!(p.fronts, vec![vec![0, 1], vec![2]]);
        assert_eq!(p.ranks(), vec![0, 0, 1]);
    }

    #[test]
    fn sort_rejects_empty_and_ragged() {
        let empty: [[f64; 2]; 0] = [];
        assert!(non_dominated_sort(&empty).is_err());
        let ragged = vec![vec![1.0, 2.0], vec![1.0]];
        assert!(non_dominated_sort(&ragged).is_err());
    }

    #[test]
    fn duplicates_share_a_front() {
        let p = non_dominated_sort(&[[1.0, 1.0], [2.0, 2.0], [1.0, 1.0], [2.0, 2.0]]).unwrap();
        assert_eq!(p.fronts, vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn later_fronts_are_index_ordered() {
        let pts = [[3.0, 3.0], [0.0, 0.0], [2.0, 2.5], [2.5, 2.0], [1.0, 1.0]];
        let p = non_dominated_sort(&pts).unwrap();
        assert_eq!(p.fronts, vec![vec![1], vec![4], vec![2, 3], vec![0]]);
    }

    #[test]
    fn crowding_examples() {
        let cd = crowding_distance(&[[0.0, 1.0], [0.5, 0.5], [1.0, 0.0]]).unwrap();
        assert_eq!(cd, vec![f64::INFINITY, 2.0, f64::INFINITY]);
        let cd = crowding_distance(&[[0.0, 1.0], [1.0, 0.0]]).unwrap();
        assert_eq!(cd, vec![f64::INFINITY; 2]);
        let cd = crowding_distance(&[[1.0, 1.0]; 4]).unwrap();
        assert_eq!(cd, vec![f64::INFINITY, 0.0, 0.0, f64::INFINITY]);
    }

    #[test]
    fn crowding_zero_range_objective_contributes_nothing() {
        let cd = crowding_distance(&[[0.0, 5.0], [0.25, 5.0], [1.0, 5.0]]).unwrap();
        assert!(cd[0].is_infinite() && cd[2].is_infinite());
        assert_eq!(cd[1], 1.0);
    }

    #[test]
    fn crowded_compare_examples() {
        let inf = f64::INFINITY;
        assert_eq!(
            crowded_compare(&ranked(1, inf), &ranked(2, inf)).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            crowded_compare(&ranked(1, 2.0), &ranked(1, 0.5)).unwrap(),
            Ordering::Less
        );
        assert_eq!(
            crowded_compare(&ranked(1, 0.5), &ranked(1, 2.0)).unwrap(),
            Ordering::Greater
        );
        assert_eq!(
            crowded_compare(&ranked(1, 1.0), &ranked(1, 1.0)).unwrap(),
            Ordering::Equal
        );
        assert_eq!(
            crowded_order(&[ranked(1, 1.0), ranked(1, 1.0)]).unwrap(),
            vec![0, 1]
        );
        assert_eq!(
            crowded_order(&[ranked(2, inf), ranked(1, 0.5), ranked(1, 3.0)]).unwrap(),
            vec![2, 1, 0]
        );
    }

    #[test]
    fn crowded_compare_requires_bookkeeping() {
        let bare = Solution::from_objectives(vec![1.0, 2.0]);
        assert!(matches!(
            crowded_compare(&bare, &ranked(0, 1.0)),
            Err(Error::InvalidState(_))
        ));
        assert!(crowded_order(&[bare]).is_err());
    }

    #[test]
    fn assign_sets_rank_and_crowding() {
        let mut sols: Vec<Solution> = [[0.0, 1.0], [0.5, 0.5], [1.0, 0.0], [1.0, 1.0]]
            .iter()
            .map(|f| Solution::from_objectives(f.to_vec()))
            .collect();
        assign_rank_and_crowding(&mut sols).unwrap();
        assert_eq!(
            sols.iter().map(|s| s.rank.unwrap()).collect::<Vec<_>>(),
            vec![0, 0, 0, 1]
        );
        assert_eq!(sols[1].crowding, Some(2.0));
        assert_eq!(sols[3].crowding, Some(f64::INFINITY));
    }
}
