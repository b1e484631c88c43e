//! Reference solvers: exhaustive enumeration, the original U-Curve
//! algorithm, and a search for instances on which the latter fails.

mod counterexample;
mod exhaustive;
mod legacy;

pub use counterexample::{find_counterexample, random_decomposable_instance, Counterexample};
pub use exhaustive::{exhaustive_solve, EXHAUSTIVE_MAX_DEGREE};
pub use legacy::legacy_ucurve_solve;
