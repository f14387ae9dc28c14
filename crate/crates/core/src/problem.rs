//! Problem representation: bounded, mixed-kind decision variables and a
//! vector-valued objective evaluator. Every objective is minimized.
//!
//! The genotype manipulated by the optimizers is always a plain real vector.
//! Integer and discrete variables are enforced by [`Problem::decode`], which
//! every algorithm applies before evaluation.

use std::fmt;
use std::sync::Arc;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Evaluator signature shared by objectives and raw constraints.
pub type VectorFn = Arc<dyn Fn(&[f64]) -> Vec<f64> + Send + Sync>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum VariableKind {
    Continuous,
    Integer {
        lo: i64,
        hi: i64,
    },
    /// Ascending, duplicate-free list of admissible values.
    Discrete(Vec<f64>),
}

#[derive(Clone, Debug, PartialEq)]
pub struct Variable {
    pub kind: VariableKind,
    pub lower: f64,
    pub upper: f64,
}

impl Variable {
    pub fn continuous(lower: f64, upper: f64) -> Self {
        Self {
            kind: VariableKind::Continuous,
            lower,
            upper,
        }
    }

    pub fn integer(lo: i64, hi: i64) -> Self {
        Self {
            kind: VariableKind::Integer { lo, hi },
            lower: lo as f64,
            upper: hi as f64,
        }
    }

    /// Bounds span the first and last allowed value. An empty list is
    /// rejected later by [`Problem::new`].
    pub fn discrete(allowed: Vec<f64>) -> Self {
        let lower = allowed.first().copied().unwrap_or(f64::NAN);
        let upper = allowed.last().copied().unwrap_or(f64::NAN);
        Self {
            kind: VariableKind::Discrete(allowed),
            lower,
            upper,
        }
    }

    fn validate(&self, j: usize) -> Result<()> {
        match &self.kind {
            VariableKind::Continuous => {
                if !(self.lower.is_finite() && self.upper.is_finite() && self.lower < self.upper) {
                    return Err(Error::invalid_input(format!(
                        "variable {j}: bounds [{}, {}] are not a finite interval with lower < upper",
                        self.lower, self.upper
                    )));
                }
            }
            VariableKind::Integer { lo, hi } => {
                if lo > hi {
                    return Err(Error::invalid_input(format!(
                        "variable {j}: integer range {lo}..={hi} is empty"
                    )));
                }
            }
            VariableKind::Discrete(allowed) => {
                if allowed.is_empty() {
                    return Err(Error::invalid_input(format!(
                        "variable {j}: empty discrete set"
                    )));
                }
                if allowed.iter().any(|v| !v.is_finite()) {
                    return Err(Error::invalid_input(format!(
                        "variable {j}: discrete set contains a non-finite value"
                    )));
                }
                if allowed.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(Error::invalid_input(format!(
                        "variable {j}: discrete set must be strictly ascending"
                    )));
                }
            }
        }
        Ok(())
    }

    fn decode(&self, raw: f64) -> f64 {
        let v = raw.clamp(self.lower, self.upper);
        match &self.kind {
            VariableKind::Continuous => v,
            // f64::round rounds half away from zero
            VariableKind::Integer { .. } => v.round().clamp(self.lower, self.upper),
            VariableKind::Discrete(allowed) => snap(allowed, v),
        }
    }
}

/// Nearest member of an ascending set; ties go to the smaller member.
fn snap(allowed: &[f64], v: f64) -> f64 {
    let idx = allowed.partition_point(|&a| a < v);
    if idx == 0 {
        return allowed[0];
    }
    if idx == allowed.len() {
        return allowed[idx - 1];
    }
    let (below, above) = (allowed[idx - 1], allowed[idx]);
    if above - v < v - below {
        above
    } else {
        below
    }
}

/// How raw constraint values `g_i(x) >= 0` fold into a violation objective.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum ViolationConvention {
    /// `sum max(-g_i, 0)`: zero exactly on the feasible set.
    #[default]
    Deficit,
    /// `sum max(g_i, 0)`, the form printed alongside the engineering
    /// problems. Kept for auditing only; it rewards infeasibility.
    Literal,
}

impl ViolationConvention {
    pub fn total(self, g: &[f64]) -> f64 {
        match self {
            ViolationConvention::Deficit => g.iter().map(|&v| (-v).max(0.0)).sum(),
            ViolationConvention::Literal => g.iter().map(|&v| v.max(0.0)).sum(),
        }
    }
}

/// A bounded multiobjective minimization problem.
///
/// When a constraint evaluator is attached, the total violation of its
/// constraints is appended as the last objective.
#[derive(Clone)]
pub struct Problem {
    name: String,
    variables: Vec<Variable>,
    n_objectives: usize,
    objectives: VectorFn,
    constraints: Option<VectorFn>,
    violation: ViolationConvention,
}

impl fmt::Debug for Problem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Problem")
            .field("name", &self.name)
            .field("n_vars", &self.n_vars())
            .field("n_objectives", &self.n_objectives)
            .field("constrained", &self.constraints.is_some())
            .field("violation", &self.violation)
            .finish()
    }
}

impl Problem {
    /// `n_objectives` counts the objectives returned by `objectives`; a
    /// violation objective added by [`Problem::with_constraints`] comes on top.
    pub fn new<F>(
        name: impl Into<String>,
        variables: Vec<Variable>,
        n_objectives: usize,
        objectives: F,
    ) -> Result<Self>
    where
        F: Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    {
        if variables.is_empty() {
            return Err(Error::invalid_input(
                "a problem needs at least one variable",
            ));
        }
        for (j, var) in variables.iter().enumerate() {
            var.validate(j)?;
        }
        if n_objectives == 0 {
            return Err(Error::invalid_input(
                "a problem needs at least one objective",
            ));
        }
        Ok(Self {
            name: name.into(),
            variables,
            n_objectives,
            objectives: Arc::new(objectives),
            constraints: None,
            violation: ViolationConvention::Deficit,
        })
    }

    /// Attaches raw constraints `g_i(x) >= 0`; their total violation
    /// becomes an additional objective.
    pub fn with_constraints<G>(mut self, constraints: G) -> Self
    where
        G: Fn(&[f64]) -> Vec<f64> + Send + Sync + 'static,
    {
        if self.constraints.is_none() {
            self.n_objectives += 1;
        }
        self.constraints = Some(Arc::new(constraints));
        self
    }

    pub fn with_violation_convention(mut self, convention: ViolationConvention) -> Self {
        self.violation = convention;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n_vars(&self) -> usize {
        self.variables.len()
    }

    /// Total number of objectives, including the violation objective.
    pub fn n_objectives(&self) -> usize {
        self.n_objectives
    }

    pub fn variables(&self) -> &[Variable] {
        &self.variables
    }

    pub fn bounds(&self) -> Vec<(f64, f64)> {
        self.variables.iter().map(|v| (v.lower, v.upper)).collect()
    }

    pub fn is_constrained(&self) -> bool {
        self.constraints.is_some()
    }

    pub fn violation_convention(&self) -> ViolationConvention {
        self.violation
    }

    /// Raw constraint values; empty for unconstrained problems.
    pub fn constraints(&self, x: &[f64]) -> Vec<f64> {
        self.constraints.as_ref().map(|g| g(x)).unwrap_or_default()
    }

    /// Full objective vector without validation. Prefer [`Problem::evaluate`].
    pub fn objectives(&self, x: &[f64]) -> Vec<f64> {
        let mut f = (self.objectives)(x);
        if let Some(g) = &self.constraints {
            f.push(self.violation.total(&g(x)));
        }
        f
    }

    /// Clamps every coordinate to its bounds, rounds integers (half away
    /// from zero) and snaps discrete coordinates to the nearest allowed
    /// value (ties to the smaller one).
    pub fn decode(&self, x_raw: &[f64]) -> Result<Vec<f64>> {
        self.check_len(x_raw)?;
        if let Some(j) = x_raw.iter().position(|v| v.is_nan()) {
            return Err(Error::invalid_input(format!("coordinate {j} is NaN")));
        }
        Ok(self
            .variables
            .iter()
            .zip(x_raw)
            .map(|(var, &v)| var.decode(v))
            .collect())
    }

    /// Evaluates an already decoded decision vector.
    pub fn evaluate(&self, x: &[f64]) -> Result<Solution> {
        self.check_len(x)?;
        let f = self.objectives(x);
        if f.len() != self.n_objectives {
            return Err(Error::invalid_state(format!(
                "problem {} returned {} objectives, expected {}",
                self.name,
                f.len(),
                self.n_objectives
            )));
        }
        if let Some((index, &value)) = f.iter().enumerate().find(|(_, v)| !v.is_finite()) {
            return Err(Error::Evaluation {
                x: x.to_vec(),
                index,
                value,
            });
        }
        Ok(Solution::new(x.to_vec(), f))
    }

    /// Decodes then evaluates.
    pub fn decode_and_evaluate(&self, x_raw: &[f64]) -> Result<Solution> {
        let x = self.decode(x_raw)?;
        self.evaluate(&x)
    }

    /// Uniform draw inside the box, decoded.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        self.variables
            .iter()
            .map(|var| var.decode(rng.gen_range(var.lower..=var.upper)))
            .collect()
    }

    fn check_len(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.n_vars() {
            return Err(Error::invalid_input(format!(
                "decision vector has length {}, problem {} has {} variables",
                x.len(),
                self.name,
                self.n_vars()
            )));
        }
        Ok(())
    }
}

/// An evaluated candidate together with its dominance bookkeeping.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Solution {
    pub x: Vec<f64>,
    pub f: Vec<f64>,
    pub rank: Option<usize>,
    pub crowding: Option<f64>,
}

impl Solution {
    pub fn new(x: Vec<f64>, f: Vec<f64>) -> Self {
        Self {
            x,
            f,
            rank: None,
            crowding: None,
        }
    }

    /// A bare objective vector, for archive and metric work where the
    /// decision vector is irrelevant.
    pub fn from_objectives(f: Vec<f64>) -> Self {
        Self::new(Vec::new(), f)
    }
}

impl AsRef<[f64]> for Solution {
    fn as_ref(&self) -> &[f64] {
        &self.f
    }
}
