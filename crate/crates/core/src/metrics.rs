//! Quality indicators for an obtained front: generational distance (GD),
//! its inverted form (RGD), the spacing indicator and maximum spread, plus
//! mean/standard-deviation aggregation over repeated runs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent of the generational distance, `(sum d_i^p)^(1/p) / n`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum GdExponent {
    /// Arithmetic mean of the nearest distances.
    P1,
    #[default]
    P2,
}

impl GdExponent {
    pub fn from_int(p: u32) -> Option<Self> {
        match p {
            1 => Some(GdExponent::P1),
            2 => Some(GdExponent::P2),
            _ => None,
        }
    }

    pub fn as_int(self) -> u32 {
        match self {
            GdExponent::P1 => 1,
            GdExponent::P2 => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum StdDivisor {
    /// Population standard deviation (divide by N).
    #[default]
    Population,
    /// Sample standard deviation (divide by N - 1).
    Sample,
}

fn euclidean(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

fn check_pair<A: AsRef<[f64]>, B: AsRef<[f64]>>(front: &[A], reference: &[B]) -> Result<()> {
    if front.is_empty() || reference.is_empty() {
        return Err(Error::invalid_input(
            "indicator needs non-empty front and reference",
        ));
    }
    let m = front[0].as_ref().len();
    if front.iter().any(|p| p.as_ref().len() != m)
        || reference.iter().any(|p| p.as_ref().len() != m)
    {
        return Err(Error::invalid_input(
            "front and reference dimensionality differ",
        ));
    }
    Ok(())
}

/// Generational distance of `front` measured against `reference`.
pub fn gd<A: AsRef<[f64]>, B: AsRef<[f64]>>(
    front: &[A],
    reference: &[B],
    p: GdExponent,
) -> Result<f64> {
    check_pair(front, reference)?;
    let nearest = front.iter().map(|a| {
        reference
            .iter()
            .map(|r| euclidean(a.as_ref(), r.as_ref()))
            .fold(f64::INFINITY, f64::min)
    });
    let n = front.len() as f64;
    Ok(match p {
        GdExponent::P1 => nearest.sum::<f64>() / n,
        GdExponent::P2 => nearest.map(|d| d * d).sum::<f64>().sqrt() / n,
    })
}

/// Inverted generational distance: the reference measured against the front.
pub fn rgd<A: AsRef<[f64]>, B: AsRef<[f64]>>(
    front: &[A],
    reference: &[B],
    p: GdExponent,
) -> Result<f64> {
    gd(reference, front, p)
}

/// Spacing with L1 nearest-neighbour distances. Fronts with fewer
/// than two points have spacing 0.
pub fn spacing<A: AsRef<[f64]>>(front: &[A]) -> f64 {
    let n = front.len();
    if n < 2 {
        return 0.0;
    }
    let d: Vec<f64> = (0..n)
        .map(|i| {
            (0..n)
                .filter(|&j| j != i)
                .map(|j| {
                    front[i]
                        .as_ref()
                        .iter()
                        .zip(front[j].as_ref())
                        .map(|(a, b)| (a - b).abs())
                        .sum::<f64>()
                })
                .fold(f64::INFINITY, f64::min)
        })
        .collect();
    let mean = d.iter().sum::<f64>() / n as f64;
    (d.iter().map(|di| (mean - di).powi(2)).sum::<f64>() / (n - 1) as f64).sqrt()
}

/// Euclidean norm of the per-objective extents of the front.
pub fn max_spread<A: AsRef<[f64]>>(front: &[A]) -> f64 {
    let Some(first) = front.first() else {
        return 0.0;
    };
    let m = first.as_ref().len();
    (0..m)
        .map(|k| {
            let (lo, hi) = front
                .iter()
                .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), p| {
                    let v = p.as_ref()[k];
                    (lo.min(v), hi.max(v))
                });
            (hi - lo).powi(2)
        })
        .sum::<f64>()
        .sqrt()
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IndicatorReport {
    pub gd: f64,
    pub rgd: f64,
    pub spacing: f64,
    pub max_spread: f64,
}

impl IndicatorReport {
    pub fn compute<A: AsRef<[f64]>, B: AsRef<[f64]>>(
        front: &[A],
        reference: &[B],
        p: GdExponent,
    ) -> Result<Self> {
        Ok(Self {
            gd: gd(front, reference, p)?,
            rgd: rgd(front, reference, p)?,
            spacing: spacing(front),
            max_spread: max_spread(front),
        })
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct MeanStd {
    pub mean: f64,
    pub std: f64,
}

impl MeanStd {
    pub fn of(values: &[f64], divisor: StdDivisor) -> Self {
        let n = values.len();
        if n == 0 {
            return Self::default();
        }
        let mean = values.iter().sum::<f64>() / n as f64;
        let denom = match divisor {
            StdDivisor::Population => n as f64,
            StdDivisor::Sample if n > 1 => (n - 1) as f64,
            StdDivisor::Sample => return Self { mean, std: 0.0 },
        };
        let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / denom;
        Self {
            mean,
            std: var.sqrt(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnsembleStats {
    pub runs: usize,
    pub gd: MeanStd,
    pub rgd: MeanStd,
    pub spacing: MeanStd,
    pub max_spread: MeanStd,
}

pub fn aggregate(reports: &[IndicatorReport], divisor: StdDivisor) -> Result<EnsembleStats> {
    if reports.is_empty() {
        return Err(Error::invalid_input("cannot aggregate zero reports"));
    }
    let col = |f: fn(&IndicatorReport) -> f64| {
        MeanStd::of(&reports.iter().map(f).collect::<Vec<_>>(), divisor)
    };
    Ok(EnsembleStats {
        runs: reports.len(),
        gd: col(|r| r.gd),
        rgd: col(|r| r.rgd),
        spacing: col(|r| r.spacing),
        max_spread: col(|r| r.max_spread),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    const P2: GdExponent = GdExponent::P2;

    #[test]
    fn gd_examples() {
        let a = [[0.0, 1.0], [0.5, 0.5]];
        assert_eq!(gd(&a, &a, P2).unwrap(), 0.0);
        assert_eq!(gd(&[[0.0, 1.0]], &[[0.0, 0.0]], P2).unwrap(), 1.0);
        let v = gd(&[[0.0, 1.0], [1.0, 0.0]], &[[0.0, 0.0]], P2).unwrap();
        assert!((v - 2f64.sqrt() / 2.0).abs() < 1e-15);
        let v = gd(&[[0.0, 1.0], [3.0, 0.0]], &[[0.0, 0.0]], GdExponent::P1).unwrap();
        assert_eq!(v, 2.0);
    }

    #[test]
    fn rgd_examples() {
        let r = [[0.0, 1.0], [1.0, 0.0]];
        assert_eq!(rgd(&r, &r, P2).unwrap(), 0.0);
        let v = rgd(&[[0.0, 0.0]], &r, P2).unwrap();
        assert!((v - 0.707_106_781_186_547_5).abs() < 1e-12);
        let v = rgd(&[[0.0, 1.0]], &r, P2).unwrap();
        assert!((v - 0.707_106_781_186_547_5).abs() < 1e-12);
    }

    #[test]
    fn indicator_errors() {
        let empty: [[f64; 2]; 0] = [];
        assert!(gd(&empty, &[[0.0, 0.0]], P2).is_err());
        assert!(gd(&[[0.0, 0.0]], &[[0.0, 0.0, 0.0]], P2).is_err());
    }

    #[test]
    fn spacing_examples() {
        assert_eq!(spacing(&[[0.0, 1.0], [0.5, 0.5], [1.0, 0.0]]), 0.0);
        assert_eq!(spacing(&[[0.0, 1.0], [1.0, 0.0]]), 0.0);
        assert_eq!(spacing(&[[0.3, 0.3]]), 0.0);
        // nearest L1 distances (0.2, 0.2, 1.8): mean 0.7333, sqrt(1.70667 / 2)
        let s = spacing(&[[0.0, 1.0], [0.1, 0.9], [1.0, 0.0]]);
        assert!((s - 0.923_760_430_703_401_3).abs() < 1e-12, "{s}");
    }

    #[test]
    fn max_spread_examples() {
        assert_eq!(max_spread(&[[0.4, 0.2]]), 0.0);
        assert!((max_spread(&[[0.0, 1.0], [1.0, 0.0]]) - 2f64.sqrt()).abs() < 1e-15);
        // doubling objective 1 doubles its width term: sqrt(4 + 1)
        assert!((max_spread(&[[0.0, 1.0], [2.0, 0.0]]) - 5f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn aggregate_examples() {
        let r = |v: f64| IndicatorReport {
            gd: v,
            rgd: v,
            spacing: v,
            max_spread: v,
        };
        let one = aggregate(&[r(0.3)], StdDivisor::Population).unwrap();
        assert_eq!(one.gd.std, 0.0);
        let two = aggregate(&[r(1.0), r(3.0)], StdDivisor::Population).unwrap();
        assert_eq!(
            two.gd,
            MeanStd {
                mean: 2.0,
                std: 1.0
            }
        );
        let sample = aggregate(&[r(1.0), r(3.0)], StdDivisor::Sample).unwrap();
        assert!((sample.gd.std - 2f64.sqrt()).abs() < 1e-15);
        let same = aggregate(&vec![r(0.125); 30], StdDivisor::Population).unwrap();
        for ms in [same.gd, same.rgd, same.spacing, same.max_spread] {
            assert_eq!(ms.std, 0.0);
            assert_eq!(ms.mean, 0.125);
        }
        assert!(aggregate(&[], StdDivisor::Population).is_err());
    }
}
