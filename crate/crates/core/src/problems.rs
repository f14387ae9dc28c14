//! Bundled problems: the continuous ZDT benchmarks and five constrained
//! engineering design problems, plus their reference fronts.
//!
//! Engineering problems fold their constraints `g_i(x) >= 0` into a last
//! objective holding the total violation.

use std::f64::consts::{PI, SQRT_2};
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::dominance::non_dominated_indices;
use crate::error::{Error, Result};
use crate::front_io::load_front_csv;
use crate::problem::{Problem, Variable};

pub const ZDT_NAMES: [&str; 5] = ["ZDT1", "ZDT2", "ZDT3", "ZDT4", "ZDT6"];

pub const ENGINEERING_NAMES: [&str; 5] = [
    "four_bar_truss",
    "pressure_vessel",
    "coil_spring",
    "speed_reducer",
    "car_side_impact",
];

/// Every registered problem name.
pub fn problem_names() -> Vec<&'static str> {
    ZDT_NAMES
        .iter()
        .chain(ENGINEERING_NAMES.iter())
        .copied()
        .collect()
}

/// Looks up a bundled problem by name (case-insensitive).
pub fn problem_by_name(name: &str) -> Result<Problem> {
    if let Ok(p) = zdt(name) {
        return Ok(p);
    }
    match name.to_ascii_lowercase().replace('-', "_").as_str() {
        "four_bar_truss" => Ok(four_bar_truss()),
        "pressure_vessel" => Ok(pressure_vessel()),
        "coil_spring" => Ok(coil_spring()),
        "speed_reducer" => Ok(speed_reducer()),
        "car_side_impact" => Ok(car_side_impact()),
        _ => Err(Error::invalid_input(format!("unknown problem {name:?}"))),
    }
}

pub fn is_zdt(name: &str) -> bool {
    ZDT_NAMES.iter().any(|z| z.eq_ignore_ascii_case(name))
}

// ---------------------------------------------------------------------------
// ZDT

fn zdt_linear_g(x: &[f64]) -> f64 {
    1.0 + 9.0 * x[1..].iter().sum::<f64>() / (x.len() - 1) as f64
}

fn zdt1(x: &[f64]) -> Vec<f64> {
    let g = zdt_linear_g(x);
    vec![x[0], g * (1.0 - (x[0] / g).sqrt())]
}

fn zdt2(x: &[f64]) -> Vec<f64> {
    let g = zdt_linear_g(x);
    vec![x[0], g * (1.0 - (x[0] / g).powi(2))]
}

fn zdt3(x: &[f64]) -> Vec<f64> {
    let g = zdt_linear_g(x);
    let r = x[0] / g;
    vec![x[0], g * (1.0 - r.sqrt() - r * (10.0 * PI * x[0]).sin())]
}

fn zdt4(x: &[f64]) -> Vec<f64> {
    let g = 1.0
        + 10.0 * (x.len() - 1) as f64
        + x[1..]
            .iter()
            .map(|v| v * v - 10.0 * (4.0 * PI * v).cos())
            .sum::<f64>();
    vec![x[0], g * (1.0 - (x[0] / g).sqrt())]
}

fn zdt6(x: &[f64]) -> Vec<f64> {
    let f1 = 1.0 - (-4.0 * x[0]).exp() * (6.0 * PI * x[0]).sin().powi(6);
    let g = 1.0 + 9.0 * (x[1..].iter().sum::<f64>() / (x.len() - 1) as f64).powf(0.25);
    vec![f1, g * (1.0 - (f1 / g).powi(2))]
}

type ObjectiveFn = fn(&[f64]) -> Vec<f64>;

/// Smallest attainable ZDT6 `f1`, reached near `x1 = 0.0814578`.
pub const ZDT6_MIN_F1: f64 = 0.280_775_318_815_369_4;

/// ZDT1-4 and ZDT6 with their standard dimensions (30 for ZDT1-3, 10 for
/// ZDT4 and ZDT6).
pub fn zdt(name: &str) -> Result<Problem> {
    let upper = name.to_ascii_uppercase();
    let (n, f): (usize, ObjectiveFn) = match upper.as_str() {
        "ZDT1" => (30, zdt1),
        "ZDT2" => (30, zdt2),
        "ZDT3" => (30, zdt3),
        "ZDT4" => (10, zdt4),
        "ZDT6" => (10, zdt6),
        _ => {
            return Err(Error::invalid_input(format!(
                "unknown ZDT problem {name:?}"
            )))
        }
    };
    let variables = if upper == "ZDT4" {
        std::iter::once(Variable::continuous(0.0, 1.0))
            .chain(std::iter::repeat_with(|| Variable::continuous(-5.0, 5.0)).take(n - 1))
            .collect()
    } else {
        vec![Variable::continuous(0.0, 1.0); n]
    };
    Problem::new(upper, variables, 2, f)
}

// ---------------------------------------------------------------------------
// Four-bar truss

pub mod four_bar {
    pub const F: f64 = 10.0;
    pub const E: f64 = 2.0e5;
    pub const L: f64 = 200.0;
    pub const SIGMA: f64 = 10.0;
}

fn four_bar_objectives(x: &[f64]) -> Vec<f64> {
    use four_bar::*;
    let f1 = L * (2.0 * x[0] + SQRT_2 * x[1] + x[2].sqrt() + x[3]);
    let f2 = (F * L / E) * (2.0 / x[0] + 2.0 * SQRT_2 / x[1] - 2.0 * SQRT_2 / x[2] + 2.0 / x[3]);
    vec![f1, f2]
}

/// Structural volume versus joint displacement of a four-bar truss.
pub fn four_bar_truss() -> Problem {
    use four_bar::*;
    let a = F / SIGMA;
    let variables = vec![
        Variable::continuous(a, 3.0 * a),
        Variable::continuous(SQRT_2 * a, 3.0 * a),
        Variable::continuous(SQRT_2 * a, 3.0 * a),
        Variable::continuous(a, 3.0 * a),
    ];
    Problem::new("four_bar_truss", variables, 2, four_bar_objectives).expect("valid bounds")
}

// ---------------------------------------------------------------------------
// Pressure vessel

fn pressure_vessel_cost(x: &[f64]) -> Vec<f64> {
    vec![
        0.6224 * x[0] * x[2] * x[3]
            + 1.7781 * x[1] * x[2] * x[2]
            + 3.1661 * x[0] * x[0] * x[3]
            + 19.84 * x[0] * x[0] * x[2],
    ]
}

fn pressure_vessel_constraints(x: &[f64]) -> Vec<f64> {
    vec![
        x[0] - 0.0193 * x[2],
        x[1] - 0.00954 * x[2],
        PI * x[2] * x[2] * x[3] + 4.0 / 3.0 * PI * x[2].powi(3) - 1_296_000.0,
    ]
}

/// Fabrication cost of a capped cylindrical vessel; shell and head
/// thickness take integer values 1..=100.
pub fn pressure_vessel() -> Problem {
    let variables = vec![
        Variable::integer(1, 100),
        Variable::integer(1, 100),
        Variable::continuous(10.0, 200.0),
        Variable::continuous(10.0, 240.0),
    ];
    Problem::new("pressure_vessel", variables, 1, pressure_vessel_cost)
        .expect("valid bounds")
        .with_constraints(pressure_vessel_constraints)
}

// ---------------------------------------------------------------------------
// Coil compression spring

/// Admissible wire diameters.
pub const SPRING_WIRE_DIAMETERS: [f64; 42] = [
    0.009, 0.0095, 0.0104, 0.0118, 0.0128, 0.0132, 0.014, 0.015, 0.0162, 0.0173, 0.018, 0.02,
    0.023, 0.025, 0.028, 0.032, 0.035, 0.041, 0.047, 0.054, 0.063, 0.072, 0.08, 0.092, 0.105, 0.12,
    0.135, 0.148, 0.162, 0.177, 0.192, 0.207, 0.225, 0.244, 0.263, 0.283, 0.307, 0.331, 0.362,
    0.394, 0.4375, 0.5,
];

pub mod spring {
    /// Highest working load (lb).
    pub const F_MAX: f64 = 1000.0;
    /// Allowed shear stress (psi).
    pub const S: f64 = 189_000.0;
    pub const L_MAX: f64 = 14.0;
    pub const D_MIN: f64 = 0.2;
    pub const D_MAX: f64 = 3.0;
    /// Preload compression force (lb).
    pub const F_P: f64 = 300.0;
    pub const SIGMA_PM: f64 = 6.0;
    pub const SIGMA_W: f64 = 1.25;
    /// Shear modulus.
    pub const G: f64 = 11.5e6;

    /// Stress correction factor `C_f`.
    pub fn stress_factor(x: &[f64]) -> f64 {
        let c = x[1] / x[2];
        (4.0 * c - 1.0) / (4.0 * c - 4.0) + 0.615 * x[2] / x[1]
    }

    /// Spring stiffness `K`.
    pub fn stiffness(x: &[f64]) -> f64 {
        G * x[2].powi(4) / (8.0 * x[0] * x[1].powi(3))
    }

    /// Free length `l_f`.
    pub fn free_length(x: &[f64]) -> f64 {
        F_MAX / stiffness(x) + 1.05 * (x[0] + 2.0) * x[2]
    }
}

fn coil_spring_volume(x: &[f64]) -> Vec<f64> {
    vec![PI * PI * x[1] * x[2] * x[2] * (x[0] + 2.0) / 4.0]
}

fn coil_spring_constraints(x: &[f64]) -> Vec<f64> {
    use spring::*;
    let cf = stress_factor(x);
    let k = stiffness(x);
    let sigma_p = F_P / k;
    let lf = free_length(x);
    vec![
        -8.0 * cf * F_MAX * x[1] / (PI * x[2].powi(3)) + S,
        -lf + L_MAX,
        -3.0 + x[1] / x[2],
        -sigma_p + SIGMA_PM,
        -sigma_p - (F_MAX - F_P) / k - 1.05 * (x[0] + 2.0) * x[2] + lf,
        -SIGMA_W + (F_MAX - F_P) / k,
    ]
}

/// Wire volume of a helical compression spring with integer coil count,
/// continuous outside diameter and a tabulated wire diameter.
pub fn coil_spring() -> Problem {
    let variables = vec![
        Variable::integer(1, 70),
        Variable::continuous(0.6, 30.0),
        Variable::discrete(SPRING_WIRE_DIAMETERS.to_vec()),
    ];
    Problem::new("coil_spring", variables, 1, coil_spring_volume)
        .expect("valid bounds")
        .with_constraints(coil_spring_constraints)
}

// ---------------------------------------------------------------------------
// Speed reducer

fn shaft_stress(x: &[f64]) -> f64 {
    ((745.0 * x[3] / (x[1] * x[2])).powi(2) + 1.69e7).sqrt() / (0.1 * x[5].powi(3))
}

// 0.7854 is the published coefficient, not a rounded pi / 4
#[allow(clippy::approx_constant)]
fn speed_reducer_objectives(x: &[f64]) -> Vec<f64> {
    let f1 = 0.7854 * x[0] * x[1] * x[1] * (10.0 * x[2] * x[2] / 3.0 + 14.933 * x[2] - 43.0934)
        - 1.508 * x[0] * (x[5] * x[5] + x[6] * x[6])
        + 7.477 * (x[5].powi(3) + x[6].powi(3))
        + 0.7854 * (x[3] * x[5] * x[5] + x[4] * x[6] * x[6]);
    vec![f1, shaft_stress(x)]
}

fn speed_reducer_constraints(x: &[f64]) -> Vec<f64> {
    let (x1, x2, x3, x4, x5, x6, x7) = (x[0], x[1], x[2], x[3], x[4], x[5], x[6]);
    vec![
        1.0 / 27.0 - 1.0 / (x1 * x2.powi(3) * x3),
        1.0 / 397.5 - 1.0 / (x1 * x2 * x2 * x3 * x3),
        1.0 / 1.92 - x4.powi(3) / (x2 * x3 * x6.powi(4)),
        1.0 / 1.93 - x5.powi(3) / (x2 * x3 * x7.powi(4)),
        40.0 - x2 * x3,
        12.0 - x1 / x2,
        -5.0 + x1 / x2,
        -1.9 + x4 - 1.6 * x6,
        -1.9 + x5 - 1.1 * x7,
        1300.0 - shaft_stress(x),
        1100.0 - ((745.0 * x5 / (x2 * x3)).powi(2) + 1.575e8).sqrt() / (0.1 * x7.powi(3)),
    ]
}

/// Gearbox volume versus shaft stress; the tooth count is an integer.
pub fn speed_reducer() -> Problem {
    let variables = vec![
        Variable::continuous(2.6, 3.6),
        Variable::continuous(0.7, 0.8),
        Variable::integer(17, 28),
        Variable::continuous(7.8, 8.3),
        Variable::continuous(7.8, 8.3),
        Variable::continuous(2.9, 3.9),
        Variable::continuous(5.0, 5.5),
    ];
    Problem::new("speed_reducer", variables, 2, speed_reducer_objectives)
        .expect("valid bounds")
        .with_constraints(speed_reducer_constraints)
}

// ---------------------------------------------------------------------------
// Car side impact

pub mod car {
    /// Velocity of the B-pillar at the middle point.
    pub fn v_mbp(x: &[f64]) -> f64 {
        10.58 - 0.674 * x[0] - 0.67275 * x[1]
    }

    /// Velocity of the front door at the B-pillar.
    pub fn v_fd(x: &[f64]) -> f64 {
        16.45 - 0.489 * x[2] * x[6] - 0.843 * x[4] * x[5]
    }

    /// Pubic force.
    pub fn pubic_force(x: &[f64]) -> f64 {
        4.72 - 0.5 * x[3] - 0.19 * x[1] * x[2]
    }
}

fn car_objectives(x: &[f64]) -> Vec<f64> {
    let f1 = 1.98
        + 4.9 * x[0]
        + 6.67 * x[1]
        + 6.98 * x[2]
        + 4.01 * x[3]
        + 1.78 * x[4]
        + 1e-5 * x[5]
        + 2.73 * x[6];
    vec![
        f1,
        car::pubic_force(x),
        0.5 * (car::v_mbp(x) + car::v_fd(x)),
    ]
}

fn car_constraints(x: &[f64]) -> Vec<f64> {
    let (x1, x2, x3, x4, x5, x6, x7) = (x[0], x[1], x[2], x[3], x[4], x[5], x[6]);
    vec![
        1.0 - 1.16 + 0.3717 * x2 * x4 + 0.0092928 * x3,
        0.32 - 0.261 + 0.0159 * x1 * x2 + 0.06486 * x1 + 0.019 * x2 * x7
            - 0.0144 * x3 * x5
            - 0.0154464 * x6,
        0.32 - 0.214 - 0.00817 * x5 + 0.045195 * x1 + 0.0135168 * x1 - 0.03099 * x2 * x6
            + 0.018 * x2 * x7
            - 0.007176 * x3
            - 0.023232 * x3
            + 0.00364 * x5 * x6
            + 0.018 * x2 * x2,
        0.32 - 0.74 + 0.61 * x2 + 0.031296 * x3 + 0.031872 * x7 - 0.227 * x2 * x2,
        32.0 - 28.98 - 3.818 * x3 + 4.2 * x1 * x2 - 1.27296 * x6 + 2.68065 * x7,
        32.0 - 33.86 - 2.95 * x3 + 5.057 * x1 * x2 + 3.795 * x2 + 3.4431 * x7 - 1.45728,
        32.0 - 46.36 + 9.9 * x2 + 4.4505 * x1,
        4.0 - car::pubic_force(x),
        9.9 - car::v_mbp(x),
        15.7 - car::v_fd(x),
    ]
}

/// Car side-impact crashworthiness: weight, pubic force and mean pillar
/// velocity, plus the violation of ten safety constraints.
pub fn car_side_impact() -> Problem {
    let variables = vec![
        Variable::continuous(0.5, 1.5),
        Variable::continuous(0.45, 1.35),
        Variable::continuous(0.5, 1.5),
        Variable::continuous(0.5, 1.5),
        Variable::continuous(0.875, 2.625),
        Variable::continuous(0.4, 1.2),
        Variable::continuous(0.4, 1.2),
    ];
    Problem::new("car_side_impact", variables, 3, car_objectives)
        .expect("valid bounds")
        .with_constraints(car_constraints)
}

// ---------------------------------------------------------------------------
// Reference fronts

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReferenceSource {
    Analytic,
    File,
    MergedRuns,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReferenceFront {
    pub points: Vec<Vec<f64>>,
    pub source: ReferenceSource,
}

/// The five disconnected pieces of the ZDT3 front, as `f1` intervals.
const ZDT3_SEGMENTS: [(f64, f64); 5] = [
    (0.0, 0.083_001_534_9),
    (0.182_228_728_0, 0.257_762_363_4),
    (0.409_313_674_8, 0.453_882_104_1),
    (0.618_396_794_4, 0.652_511_703_8),
    (0.823_331_798_3, 0.851_832_865_4),
];

fn linspace(lo: f64, hi: f64, n: usize) -> impl Iterator<Item = f64> {
    let step = if n > 1 {
        (hi - lo) / (n - 1) as f64
    } else {
        0.0
    };
    (0..n).map(move |i| if i + 1 == n { hi } else { lo + step * i as f64 })
}

/// Samples the true front of a ZDT problem, uniform in `f1`.
///
/// ZDT3 samples are spread over its five segments in proportion to their
/// width; the few that fall marginally off the front at segment edges are
/// filtered out, so slightly fewer than `n_points` may be returned.
pub fn analytic_reference_front(name: &str, n_points: usize) -> Result<ReferenceFront> {
    if !is_zdt(name) {
        return Err(Error::Unsupported(format!(
            "no analytic front for {name:?}"
        )));
    }
    if n_points < 2 {
        return Err(Error::invalid_input(
            "an analytic front needs at least 2 points",
        ));
    }
    let points: Vec<Vec<f64>> = match name.to_ascii_uppercase().as_str() {
        "ZDT1" | "ZDT4" => linspace(0.0, 1.0, n_points)
            .map(|f1| vec![f1, 1.0 - f1.sqrt()])
            .collect(),
        "ZDT2" => linspace(0.0, 1.0, n_points)
            .map(|f1| vec![f1, 1.0 - f1 * f1])
            .collect(),
        "ZDT6" => linspace(ZDT6_MIN_F1, 1.0, n_points)
            .map(|f1| vec![f1, 1.0 - f1 * f1])
            .collect(),
        "ZDT3" => {
            let total: f64 = ZDT3_SEGMENTS.iter().map(|(a, b)| b - a).sum();
            let candidates: Vec<Vec<f64>> = ZDT3_SEGMENTS
                .iter()
                .flat_map(|&(a, b)| {
                    let share = ((b - a) / total * n_points as f64).round() as usize;
                    linspace(a, b, share.max(2))
                })
                .map(|f1| vec![f1, 1.0 - f1.sqrt() - f1 * (10.0 * PI * f1).sin()])
                .collect();
            non_dominated_indices(&candidates)
                .into_iter()
                .map(|i| candidates[i].clone())
                .collect()
        }
        _ => unreachable!("checked by is_zdt"),
    };
    Ok(ReferenceFront {
        points,
        source: ReferenceSource::Analytic,
    })
}

/// Non-dominated subset of the union of several fronts, duplicates removed.
pub fn merged_reference_front<P: AsRef<[f64]>>(fronts: &[Vec<P>]) -> Result<ReferenceFront> {
    let union: Vec<Vec<f64>> = fronts
        .iter()
        .flatten()
        .map(|p| p.as_ref().to_vec())
        .collect();
    let m = union
        .first()
        .map(Vec::len)
        .ok_or_else(|| Error::invalid_input("cannot merge empty fronts"))?;
    if union.iter().any(|p| p.len() != m) {
        return Err(Error::invalid_input(
            "fronts to merge have different dimensionality",
        ));
    }
    let mut points: Vec<Vec<f64>> = Vec::new();
    for i in non_dominated_indices(&union) {
        if !points.contains(&union[i]) {
            points.push(union[i].clone());
        }
    }
    Ok(ReferenceFront {
        points,
        source: ReferenceSource::MergedRuns,
    })
}

/// Drops dominated rows of a loaded front. Returns the kept points and the
/// 1-based file line numbers of the dropped rows (the header is line 1).
pub fn drop_dominated_rows(points: Vec<Vec<f64>>) -> (Vec<Vec<f64>>, Vec<usize>) {
    let keep = non_dominated_indices(&points);
    let mut dropped = Vec::new();
    let mut kept = Vec::with_capacity(keep.len());
    let mut next = keep.iter().peekable();
    for (i, p) in points.into_iter().enumerate() {
        if next.peek() == Some(&&i) {
            next.next();
            kept.push(p);
        } else {
            dropped.push(i + 2);
        }
    }
    (kept, dropped)
}

/// Loads a reference front CSV, warning about and discarding dominated rows.
pub fn load_reference_front(path: &Path) -> Result<ReferenceFront> {
    let (points, dropped) = drop_dominated_rows(load_front_csv(path)?);
    if !dropped.is_empty() {
        log::warn!(
            "{}: dropped dominated rows at lines {:?}",
            path.display(),
            dropped
        );
    }
    if points.is_empty() {
        return Err(Error::invalid_input(format!(
            "{}: reference front is empty",
            path.display()
        )));
    }
    Ok(ReferenceFront {
        points,
        source: ReferenceSource::File,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol * b.abs().max(1.0)
    }

    #[test]
    fn zdt_dimensions_and_bounds() {
        for (name, n) in [
            ("ZDT1", 30),
            ("ZDT2", 30),
            ("ZDT3", 30),
            ("ZDT4", 10),
            ("ZDT6", 10),
        ] {
            let p = zdt(name).unwrap();
            assert_eq!(p.n_vars(), n);
            assert_eq!(p.n_objectives(), 2);
            assert!(!p.is_constrained());
        }
        let b = zdt("zdt4").unwrap().bounds();
        assert_eq!(b[0], (0.0, 1.0));
        assert!(b[1..].iter().all(|&r| r == (-5.0, 5.0)));
        assert!(zdt("ZDT5").is_err());
    }

    #[test]
    fn zdt1_fixtures() {
        let p = zdt("ZDT1").unwrap();
        assert_eq!(p.evaluate(&[0.0; 30]).unwrap().f, vec![0.0, 1.0]);
        let mut x = vec![0.0; 30];
        x[0] = 1.0;
        assert_eq!(p.evaluate(&x).unwrap().f, vec![1.0, 0.0]);
        let mut x = vec![0.5; 30];
        x[0] = 0.25;
        let f = p.evaluate(&x).unwrap().f;
        // g = 5.5, f2 = 5.5 (1 - sqrt(0.25 / 5.5))
        assert_eq!(f[0], 0.25);
        assert!((f[1] - 4.327_396_060_044_142).abs() < 1e-12);
    }

    #[test]
    fn zdt2_4_6_fixtures() {
        let mut x = vec![0.0; 30];
        x[0] = 0.5;
        assert_eq!(
            zdt("ZDT2").unwrap().evaluate(&x).unwrap().f,
            vec![0.5, 0.75]
        );

        let mut x = vec![0.0; 10];
        x[0] = 0.5;
        let f = zdt("ZDT4").unwrap().evaluate(&x).unwrap().f;
        assert!((f[1] - (1.0 - 0.5f64.sqrt())).abs() < 1e-12);

        let f = zdt("ZDT6").unwrap().evaluate(&[0.0; 10]).unwrap().f;
        assert_eq!(f, vec![1.0, 0.0]);
    }

    #[test]
    fn zdt6_min_f1() {
        let p = zdt("ZDT6").unwrap();
        let mut x = vec![0.0; 10];
        x[0] = 0.081_457_796_818_485_9;
        assert!((p.evaluate(&x).unwrap().f[0] - ZDT6_MIN_F1).abs() < 1e-12);
    }

    #[test]
    fn four_bar_fixtures() {
        let p = four_bar_truss();
        let f = p.evaluate(&[1.0, SQRT_2, SQRT_2, 1.0]).unwrap().f;
        assert!(close(f[0], 1_237.841_423_000_544_2, 1e-12));
        assert!(close(f[1], 0.04, 1e-12));
        let f = p.evaluate(&[3.0; 4]).unwrap().f;
        assert!(close(f[0], 2_994.938_298_937_632_7, 1e-12));
        let b = p.bounds();
        assert_eq!(b[0], (1.0, 3.0));
        assert!((b[1].0 - SQRT_2).abs() < 1e-15);
    }

    #[test]
    fn pressure_vessel_fixtures() {
        let p = pressure_vessel();
        let x = [1.0, 1.0, 10.0, 10.0];
        let f = p.evaluate(&x).unwrap().f;
        assert!(close(f[0], 470.111, 1e-12));
        assert!(close(f[1], 1_288_669.617_141_623_7, 1e-12));
        let g = p.constraints(&x);
        assert!(close(g[0], 0.807, 1e-12) && close(g[1], 0.9046, 1e-12));
        assert_eq!(p.evaluate(&[1.0, 1.0, 50.0, 200.0]).unwrap().f[1], 0.0);
        assert!(matches!(
            p.variables()[0].kind,
            crate::problem::VariableKind::Integer { lo: 1, hi: 100 }
        ));
    }

    #[test]
    fn coil_spring_fixtures() {
        let p = coil_spring();
        let x = [10.0, 1.0, 0.1];
        assert!(close(
            p.evaluate(&x).unwrap().f[0],
            0.296_088_132_032_680_8,
            1e-12
        ));
        assert!(close(
            spring::stress_factor(&x),
            1.144_833_333_333_333_1,
            1e-12
        ));
        assert!(close(spring::stiffness(&x), 14.375, 1e-12));
        assert_eq!(p.evaluate(&[3.0, 5.0, 0.4375]).unwrap().f[1], 0.0);
        assert_eq!(SPRING_WIRE_DIAMETERS.len(), 42);
        assert_eq!(p.decode(&[10.0, 1.0, 0.05]).unwrap()[2], 0.047);
    }

    #[test]
    fn speed_reducer_fixtures() {
        let p = speed_reducer();
        let x = [3.5, 0.7, 17.0, 7.3, 7.8, 3.35, 5.3];
        let f = p.objectives(&x);
        assert!(close(f[1], 1_100.211_475_675_520_7, 1e-12));
        let g = p.constraints(&x);
        assert!(close(g[4], 28.1, 1e-12));
        assert!(g[6].abs() < 1e-12);
        let feasible = [3.55, 0.7, 23.0, 8.28, 8.07, 3.21, 5.11];
        assert_eq!(p.evaluate(&feasible).unwrap().f[2], 0.0);
        assert_eq!(p.n_objectives(), 3);
    }

    #[test]
    fn car_side_impact_fixtures() {
        let p = car_side_impact();
        let ones = [1.0; 7];
        assert!(close(car::pubic_force(&ones), 4.03, 1e-12));
        assert!(close(car::v_mbp(&ones), 9.23325, 1e-12));
        assert_eq!(p.n_objectives(), 4);
        assert_eq!(p.constraints(&ones).len(), 10);
        let feasible = [1.1, 1.34, 1.04, 1.13, 2.0, 0.7, 0.57];
        assert_eq!(p.evaluate(&feasible).unwrap().f[3], 0.0);
    }

    #[test]
    fn registry_lookup() {
        for name in problem_names() {
            assert_eq!(problem_by_name(name).unwrap().name(), name);
        }
        assert!(problem_by_name("zdt1").is_ok());
        assert!(problem_by_name("welded_beam").is_err());
    }

    #[test]
    fn analytic_fronts() {
        let f = analytic_reference_front("ZDT1", 1000).unwrap();
        assert_eq!(f.points.len(), 1000);
        assert_eq!(f.points[0], vec![0.0, 1.0]);
        assert_eq!(*f.points.last().unwrap(), vec![1.0, 0.0]);
        let f = analytic_reference_front("ZDT2", 3).unwrap();
        assert_eq!(f.points[1], vec![0.5, 0.75]);
        for name in ZDT_NAMES {
            let f = analytic_reference_front(name, 500).unwrap();
            assert_eq!(
                non_dominated_indices(&f.points).len(),
                f.points.len(),
                "{name}"
            );
            assert!(f.points.len() >= 490, "{name}: {}", f.points.len());
        }
        assert!(matches!(
            analytic_reference_front("coil_spring", 10),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn zdt3_front_agrees_with_brute_force() {
        // dense sweep of g = 1 filtered by dominance; every analytic point
        // should sit within the sweep resolution of a surviving point
        let n = 200_000;
        let sweep: Vec<Vec<f64>> = (0..=n)
            .map(|i| {
                let f1 = i as f64 / n as f64;
                vec![f1, 1.0 - f1.sqrt() - f1 * (10.0 * PI * f1).sin()]
            })
            .collect();
        let mut best = f64::INFINITY;
        let survivors: Vec<&Vec<f64>> = sweep
            .iter()
            .filter(|p| {
                let keep = p[1] < best;
                best = best.min(p[1]);
                keep
            })
            .collect();
        let front = analytic_reference_front("ZDT3", 300).unwrap();
        for p in &front.points {
            let d = survivors
                .iter()
                .map(|s| ((s[0] - p[0]).powi(2) + (s[1] - p[1]).powi(2)).sqrt())
                .fold(f64::INFINITY, f64::min);
            assert!(d < 1e-4, "{p:?} is {d} away from the brute-force front");
        }
    }

    #[test]
    fn merged_front_examples() {
        let a = vec![vec![0.0, 1.0], vec![1.0, 0.0]];
        assert_eq!(
            merged_reference_front(&[a.clone(), a.clone()])
                .unwrap()
                .points,
            a
        );
        let m = merged_reference_front(&[vec![vec![1.0, 2.0]], vec![vec![0.0, 0.0]]]).unwrap();
        assert_eq!(m.points, vec![vec![0.0, 0.0]]);
        let m =
            merged_reference_front(&[vec![vec![1.0, 2.0], vec![2.0, 1.0]], vec![vec![1.5, 1.5]]])
                .unwrap();
        assert_eq!(m.points.len(), 3);
        assert!(merged_reference_front(&[vec![vec![1.0, 2.0]], vec![vec![1.0]]]).is_err());
        let none: [Vec<Vec<f64>>; 0] = [];
        assert!(merged_reference_front(&none).is_err());
    }

    #[test]
    fn dominated_rows_reported_by_line() {
        let pts = vec![
            vec![0.0, 1.0],
            vec![2.0, 2.0],
            vec![1.0, 0.0],
            vec![1.0, 1.0],
        ];
        let (kept, dropped) = drop_dominated_rows(pts);
        assert_eq!(kept, vec![vec![0.0, 1.0], vec![1.0, 0.0]]);
        assert_eq!(dropped, vec![3, 5]);
    }
}
