use std::time::Instant;

use crate::cost::{CostEvaluator, Stop};
use crate::lattice::{full_mask, ElementSet};
use crate::report::{build_report, Algorithm, BestTracker, Counters, SearchReport};

/// Largest degree [`exhaustive_solve`] accepts.
pub const EXHAUSTIVE_MAX_DEGREE: usize = 24;

/// Evaluates all `2^n` subsets and returns every minimum.
///
/// Panics when `n > 24`.
pub fn exhaustive_solve(eval: &mut CostEvaluator<'_>) -> SearchReport {
    let n = eval.degree();
    assert!(
        n <= EXHAUSTIVE_MAX_DEGREE,
        "exhaustive search supports n <= {EXHAUSTIVE_MAX_DEGREE}, got {n}"
    );
    let started = Instant::now();
    let mut best = BestTracker::new();
    let _ = enumerate(eval, &mut best, n);
    build_report(Algorithm::Exhaustive, &best, eval, started, Counters::default())
}

fn enumerate(eval: &mut CostEvaluator<'_>, best: &mut BestTracker, n: usize) -> Result<(), Stop> {
    for bits in 0..=full_mask(n) {
        let x = ElementSet::from_bits(bits, n);
        best.offer(x, eval.evaluate(x)?);
    }
    Ok(())
}
