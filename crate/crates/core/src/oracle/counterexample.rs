use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cost::{verify_decomposable, CostEvaluator, DecompositionCheck, ExplicitCost, Instance, VerifyMode};
use crate::lattice::{full_mask, ElementSet};
use crate::oracle::{exhaustive_solve, legacy_ucurve_solve};

/// An instance on which the original algorithm misses the optimum.
#[derive(Clone, Debug, PartialEq)]
pub struct Counterexample {
    /// Index of the trial that produced the instance.
    pub trial: u64,
    pub instance: Instance,
    /// Seed the original algorithm ran with.
    pub legacy_seed: u64,
    pub legacy_cost: f64,
    pub optimum: f64,
}

/// Random explicit instance decomposable in U-shaped curves.
///
/// The base cost is the maximum of one or two small-weight subset-sum
/// costs, capped at a small random level. Both the maximum and the cap keep
/// every chain U-shaped, and the cap leaves wide plateaus. Random
/// single-entry perturbations are then kept only when the table still
/// passes exhaustive verification.
pub fn random_decomposable_instance(n: usize, seed: u64) -> ExplicitCost {
    assert!((1..=VerifyMode::EXHAUSTIVE_MAX_DEGREE).contains(&n));
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let parts: Vec<(Vec<u64>, u64)> = (0..rng.gen_range(1..=2))
        .map(|_| {
            let w: Vec<u64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
            let t = rng.gen_range(0..=w.iter().sum::<u64>());
            (w, t)
        })
        .collect();
    let cap = rng.gen_range(1..=4) as f64;
    let mut costs: Vec<f64> = (0..=full_mask(n))
        .map(|bits| {
            parts
                .iter()
                .map(|(w, t)| {
                    let s: u64 = ElementSet::from_bits(bits, n).iter().map(|i| w[i]).sum();
                    t.abs_diff(s) as f64
                })
                .fold(0.0, f64::max)
                .min(cap)
        })
        .collect();
    for _ in 0..rng.gen_range(0..=n) {
        let i = rng.gen_range(0..costs.len());
        let old = costs[i];
        costs[i] = (old + rng.gen_range(-1i32..=1) as f64 * 0.5).max(0.0);
        let table = ExplicitCost::new(n, costs.clone()).expect("costs are finite");
        if verify_decomposable(&table, VerifyMode::Exhaustive).expect("n is small") != DecompositionCheck::Ok {
            costs[i] = old;
        }
    }
    ExplicitCost::new(n, costs).expect("costs are finite")
}

/// Searches `trials` random decomposable instances of degree `n` for one
/// where the original algorithm (run with `seed`) reports a cost above the
/// exhaustive optimum. The lowest failing trial index wins.
///
/// Panics unless `4 <= n <= 8`.
pub fn find_counterexample(n: usize, trials: u64, seed: u64) -> Option<Counterexample> {
    assert!(
        (4..=8).contains(&n),
        "counter-example search supports 4 <= n <= 8, got {n}"
    );
    (0..trials).into_par_iter().find_map_first(|trial| {
        let table = random_decomposable_instance(n, trial_seed(seed, trial));
        let optimum = exhaustive_solve(&mut CostEvaluator::new(&table)).best_cost?;
        let legacy_cost = legacy_ucurve_solve(&mut CostEvaluator::new(&table), seed).best_cost?;
        (legacy_cost > optimum).then_some(Counterexample {
            trial,
            instance: Instance::Explicit(table),
            legacy_seed: seed,
            legacy_cost,
            optimum,
        })
    })
}

fn trial_seed(seed: u64, trial: u64) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15) ^ trial.wrapping_add(1).wrapping_mul(0xD1B5_4A32_D192_ED03)
}
