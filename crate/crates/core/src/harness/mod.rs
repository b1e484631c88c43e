//! Experiment runner: seeded instance sets, the optimal and suboptimal
//! comparison protocols, UCS dynamics profiling and report emission.

mod config;
mod emit;
mod instances;
mod protocol;

pub use config::{CostKind, ExperimentConfig, Mode, ThresholdScope};
pub use emit::{emit_report, Cell, ReportFormat, Table};
pub use instances::{digest, instance_seed, InstanceEntry, InstanceSet};
pub use protocol::{
    dynamics_profile, dynamics_table, run_optimal, run_optimal_on, run_suboptimal, suboptimal_budgeted,
    suboptimal_thresholds, thresholds_table, DynamicsRow, RunRecord, RunSummary, SuboptimalReport, SummaryRow,
    ThresholdRow, SUBOPTIMAL_ALGORITHMS,
};
