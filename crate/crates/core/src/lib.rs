//! Multiobjective learner performance-based optimization (MOLPB) and an
//! NSGA-II baseline, with the ZDT and engineering design test problems and
//! the usual front quality indicators.
//!
//! ```
//! use molpb::{molpb::{run, MolpbConfig}, problems::zdt};
//!
//! let config = MolpbConfig { max_generations: 5, ..MolpbConfig::default() };
//! let result = run(&config, &zdt("ZDT1").unwrap()).unwrap();
//! assert_eq!(result.evaluations, 100 + 5 * 140);
//! ```

pub mod archive;
pub mod dominance;
pub mod engine;
pub mod error;
pub mod front_io;
pub mod metrics;
pub mod molpb;
pub mod nsga2;
pub mod problem;
pub mod problems;
pub mod variation;

pub use archive::ParetoArchive;
pub use dominance::{
    crowded_compare, crowding_distance, dominates, non_dominated_sort, FrontPartition,
};
pub use engine::{RunResult, TracePoint};
pub use error::{Error, Result};
pub use metrics::{GdExponent, IndicatorReport, StdDivisor};
pub use problem::{Problem, Solution, Variable, VariableKind, ViolationConvention};
pub use problems::{problem_by_name, ReferenceFront, ReferenceSource};
