use molpb::dominance::{crowding_distance, dominates, non_dominated_sort};
use molpb::problems::{analytic_reference_front, problem_by_name, problem_names, zdt, ZDT_NAMES};
use molpb::{ParetoArchive, Solution};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn points(m: usize, max_n: usize) -> impl Strategy<Value = Vec<Vec<f64>>> {
    // coarse grid values so ties and duplicates actually occur
    prop::collection::vec(
        prop::collection::vec((0u8..8).prop_map(f64::from), m),
        1..max_n,
    )
}

fn brute_force_ranks(pts: &[Vec<f64>]) -> Vec<usize> {
    let mut rank = vec![usize::MAX; pts.len()];
    let mut r = 0;
    while rank.contains(&usize::MAX) {
        let current: Vec<usize> = (0..pts.len())
            .filter(|&i| rank[i] == usize::MAX)
            .filter(|&i| {
                !(0..pts.len())
                    .any(|j| rank[j] == usize::MAX && dominates(&pts[j], &pts[i]).unwrap())
            })
            .collect();
        for i in current {
            rank[i] = r;
        }
        r += 1;
    }
    rank
}

proptest! {
    #[test]
    fn dominance_is_antisymmetric_and_irreflexive(a in prop::collection::vec(-5.0f64..5.0, 3),
                                                  b in prop::collection::vec(-5.0f64..5.0, 3)) {
        prop_assert!(!dominates(&a, &a).unwrap());
        prop_assert!(!(dominates(&a, &b).unwrap() && dominates(&b, &a).unwrap()));
    }

    #[test]
    fn sort_matches_brute_force(pts in points(3, 60)) {
        let partition = non_dominated_sort(&pts).unwrap();
        prop_assert_eq!(partition.ranks(), brute_force_ranks(&pts));
    }

    #[test]
    fn crowding_is_affine_invariant(
        pts in prop::collection::vec(prop::collection::vec(-10.0f64..10.0, 2), 1..30),
        scale in prop::collection::vec(0.1f64..10.0, 2),
        shift in prop::collection::vec(-100.0f64..100.0, 2),
    ) {
        let moved: Vec<Vec<f64>> = pts
            .iter()
            .map(|p| p.iter().zip(&scale).zip(&shift).map(|((v, a), b)| a * v + b).collect())
            .collect();
        let before = crowding_distance(&pts).unwrap();
        let after = crowding_distance(&moved).unwrap();
        for (x, y) in before.iter().zip(&after) {
            if x.is_infinite() {
                prop_assert!(y.is_infinite());
            } else {
                prop_assert!((x - y).abs() <= 1e-9 * x.abs().max(1.0), "{} vs {}", x, y);
            }
        }
    }

    #[test]
    fn archive_stays_non_dominated_and_bounded(pts in points(2, 200), cap in 1usize..20) {
        let mut archive = ParetoArchive::new(cap).unwrap();
        for p in pts {
            archive.insert(Solution::from_objectives(p));
            let m = archive.members();
            prop_assert!(m.len() <= cap);
            for a in m {
                prop_assert!(!m.iter().any(|b| dominates(&b.f, &a.f).unwrap()));
            }
        }
    }
}

#[test]
fn random_points_evaluate_finite_with_nonnegative_violation() {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for name in problem_names() {
        let problem = problem_by_name(name).unwrap();
        for _ in 0..500 {
            let x = problem.sample(&mut rng);
            let s = problem.evaluate(&x).unwrap();
            assert!(s.f.iter().all(|v| v.is_finite()), "{name}: {:?}", s.f);
            if problem.is_constrained() {
                assert!(*s.f.last().unwrap() >= 0.0);
                let feasible = problem.constraints(&x).iter().all(|g| *g >= 0.0);
                assert_eq!(feasible, *s.f.last().unwrap() == 0.0, "{name}");
            }
        }
    }
}

#[test]
fn zdt_points_with_zero_tail_lie_on_the_front() {
    for name in ZDT_NAMES {
        let problem = zdt(name).unwrap();
        let front = analytic_reference_front(name, 2).unwrap();
        let f2_of = |f1: f64| -> f64 {
            match name {
                "ZDT1" | "ZDT4" => 1.0 - f1.sqrt(),
                "ZDT2" | "ZDT6" => 1.0 - f1 * f1,
                _ => 1.0 - f1.sqrt() - f1 * (10.0 * std::f64::consts::PI * f1).sin(),
            }
        };
        assert!((front.points[0][1] - f2_of(front.points[0][0])).abs() < 1e-12);
        for i in 0..=100 {
            let mut x = vec![0.0; problem.n_vars()];
            x[0] = i as f64 / 100.0;
            let f = problem.evaluate(&x).unwrap().f;
            assert!(
                (f[1] - f2_of(f[0])).abs() < 1e-12,
                "{name} at x1 = {}",
                x[0]
            );
        }
    }
}
