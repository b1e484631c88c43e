//! Optimal and heuristic solvers for the U-curve optimization problem:
//! minimizing a cost function decomposable in U-shaped curves over the
//! Boolean lattice `P(S)`.

pub mod cost;
pub mod error;
pub mod harness;
pub mod lattice;
pub mod oracle;
pub mod report;
pub mod sffs;
mod solve;
pub mod ubb;
pub mod ucs;

pub use cost::{CostEvaluator, CostFunction, Instance, Stop, StopCriterion};
pub use error::{Error, Result};
pub use lattice::{ElementSet, Orientation, RestrictionSet};
pub use report::{Algorithm, SearchReport};
pub use solve::solve;
