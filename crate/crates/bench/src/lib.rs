//! Seeded experiment campaigns for the `molpb` optimizers: repeated runs,
//! reference fronts, indicator statistics and comparison tables.

pub mod campaign;
pub mod error;
pub mod reference;
pub mod table;

pub use campaign::{
    load_summary, run_campaign, run_once, Algorithm, CampaignConfig, CampaignSummary,
};
pub use error::{BenchError, Result};
pub use reference::{resolve_reference, MergedReferenceSpec};
pub use table::{tabulate, Table};
