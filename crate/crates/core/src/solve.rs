use crate::cost::CostEvaluator;
use crate::oracle::{exhaustive_solve, legacy_ucurve_solve};
use crate::report::{Algorithm, SearchReport};
use crate::sffs::sffs_solve;
use crate::ubb::ubb_solve;
use crate::ucs::ucs_solve;

/// Runs `algorithm` on the evaluator's cost function.
///
/// `seed` drives the randomized algorithms (UCS and the original U-Curve);
/// `p_up` is the UCS probability of starting an iteration bottom-up.
pub fn solve(algorithm: Algorithm, eval: &mut CostEvaluator<'_>, seed: u64, p_up: f64) -> SearchReport {
    match algorithm {
        Algorithm::Ucs => ucs_solve(eval, seed, p_up),
        Algorithm::Ubb => ubb_solve(eval),
        Algorithm::Sffs => sffs_solve(eval),
        Algorithm::Exhaustive => exhaustive_solve(eval),
        Algorithm::Legacy => legacy_ucurve_solve(eval, seed),
    }
}
