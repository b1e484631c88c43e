use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{CostFunction, Instance};
use crate::error::{Error, Result};
use crate::lattice::{ElementSet, MAX_DEGREE};

/// `c(X) = |t - sum of w_i over X|` with non-negative integer weights.
///
/// Weight sums grow monotonically along any chain, and `|t - s|` is
/// quasiconvex in `s`, so the cost is decomposable in U-shaped curves.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetSum {
    weights: Vec<u64>,
    target: u64,
}

impl SubsetSum {
    pub fn new(weights: Vec<u64>, target: u64) -> Result<Self> {
        if weights.is_empty() || weights.len() > MAX_DEGREE {
            return Err(Error::InvalidInstance(format!(
                "subset-sum needs 1..={MAX_DEGREE} weights, got {}",
                weights.len()
            )));
        }
        // Sums are kept exactly representable as f64 costs.
        let total: u128 = weights.iter().map(|&w| w as u128).sum();
        if total.max(target as u128) >= 1 << 53 {
            return Err(Error::InvalidInstance(
                "weight sum and target must stay below 2^53".into(),
            ));
        }
        Ok(Self { weights, target })
    }

    pub fn weights(&self) -> &[u64] {
        &self.weights
    }

    pub fn target(&self) -> u64 {
        self.target
    }

    pub fn sum(&self, x: ElementSet) -> u64 {
        x.iter().map(|i| self.weights[i]).sum()
    }
}

impl CostFunction for SubsetSum {
    fn degree(&self) -> usize {
        self.weights.len()
    }

    fn cost(&self, x: ElementSet) -> f64 {
        debug_assert_eq!(x.width(), self.weights.len());
        self.target.abs_diff(self.sum(x)) as f64
    }
}

/// Seeded random subset-sum instance: weights uniform in `[1, weight_max]`,
/// target uniform in `[0, sum of weights]`.
pub fn generate_subset_sum_instance(n: usize, seed: u64, weight_max: u64) -> Instance {
    assert!((1..=MAX_DEGREE).contains(&n));
    assert!(weight_max >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights: Vec<u64> = (0..n).map(|_| rng.gen_range(1..=weight_max)).collect();
    let total: u64 = weights.iter().sum();
    let target = rng.gen_range(0..=total);
    Instance::SubsetSum(SubsetSum::new(weights, target).expect("generated weights are valid"))
}
