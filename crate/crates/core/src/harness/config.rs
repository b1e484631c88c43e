use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lattice::MAX_DEGREE;
use crate::oracle::EXHAUSTIVE_MAX_DEGREE;
use crate::report::Algorithm;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CostKind {
    SubsetSum,
    /// Penalized mean conditional entropy on planted-parity sample tables.
    Mce,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Optimal,
    Suboptimal,
    Dynamics,
}

/// How suboptimal thresholds are aggregated.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ThresholdScope {
    /// One threshold per size from means over its instances.
    Mean,
    /// One threshold per instance.
    PerInstance,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    pub sizes: Vec<usize>,
    pub instances_per_size: usize,
    pub seed: u64,
    #[serde(default = "default_algorithms")]
    pub algorithms: Vec<Algorithm>,
    #[serde(default = "default_cost_kind")]
    pub cost_kind: CostKind,
    #[serde(default = "default_mode")]
    pub mode: Mode,
    /// Largest subset-sum weight.
    #[serde(default = "default_weight_max")]
    pub weight_max: u64,
    /// Rows per generated sample table.
    #[serde(default = "default_sample_rows")]
    pub sample_rows: usize,
    #[serde(default = "default_scope")]
    pub threshold_scope: ThresholdScope,
    #[serde(default = "default_p_up")]
    pub p_up: f64,
    /// Worker threads. Timing is only reported with one worker.
    #[serde(default = "default_jobs")]
    pub jobs: usize,
}

fn default_algorithms() -> Vec<Algorithm> {
    vec![Algorithm::Ucs, Algorithm::Ubb, Algorithm::Sffs]
}

fn default_cost_kind() -> CostKind {
    CostKind::SubsetSum
}

fn default_mode() -> Mode {
    Mode::Optimal
}

fn default_weight_max() -> u64 {
    ExperimentConfig::DEFAULT_WEIGHT_MAX
}

fn default_sample_rows() -> usize {
    200
}

fn default_scope() -> ThresholdScope {
    ThresholdScope::Mean
}

fn default_p_up() -> f64 {
    0.5
}

fn default_jobs() -> usize {
    1
}

impl ExperimentConfig {
    pub const DEFAULT_WEIGHT_MAX: u64 = 1_000_000;

    /// A configuration with default settings for everything but the sizes,
    /// instance count and seed.
    pub fn new(sizes: Vec<usize>, instances_per_size: usize, seed: u64) -> Self {
        Self {
            sizes,
            instances_per_size,
            seed,
            algorithms: default_algorithms(),
            cost_kind: default_cost_kind(),
            mode: default_mode(),
            weight_max: default_weight_max(),
            sample_rows: default_sample_rows(),
            threshold_scope: default_scope(),
            p_up: default_p_up(),
            jobs: default_jobs(),
        }
    }

    pub fn load(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        let config: Self = serde_json::from_str(&text)?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.sizes.is_empty() {
            return bad("sizes must not be empty".into());
        }
        if let Some(n) = self.sizes.iter().find(|&&n| n == 0 || n > MAX_DEGREE) {
            return bad(format!("size {n} outside 1..={MAX_DEGREE}"));
        }
        if self.instances_per_size == 0 {
            return bad("instances_per_size must be at least 1".into());
        }
        if self.algorithms.is_empty() {
            return bad("algorithms must not be empty".into());
        }
        let max_n = self.sizes.iter().copied().max().unwrap_or(0);
        if self.algorithms.contains(&Algorithm::Exhaustive) && max_n > EXHAUSTIVE_MAX_DEGREE {
            return bad(format!("exhaustive search supports n <= {EXHAUSTIVE_MAX_DEGREE}"));
        }
        if self.weight_max == 0 || self.weight_max.saturating_mul(max_n as u64) >= 1 << 53 {
            return bad("weight_max must be positive and keep sums below 2^53".into());
        }
        if self.sample_rows == 0 {
            return bad("sample_rows must be at least 1".into());
        }
        if !(0.0..=1.0).contains(&self.p_up) {
            return bad("p_up must lie in [0, 1]".into());
        }
        if self.jobs == 0 {
            return bad("jobs must be at least 1".into());
        }
        Ok(())
    }

    /// Whether wall-clock columns are meaningful for this run.
    pub fn timing_enabled(&self) -> bool {
        self.jobs == 1
    }
}
