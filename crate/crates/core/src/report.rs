//! Solver output shared by every algorithm.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::cost::CostEvaluator;
use crate::error::Error;
use crate::lattice::ElementSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "ucs")]
    Ucs,
    #[serde(rename = "ubb")]
    Ubb,
    #[serde(rename = "sffs")]
    Sffs,
    #[serde(rename = "exhaustive")]
    Exhaustive,
    #[serde(rename = "ucurve-legacy")]
    Legacy,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] = [
        Algorithm::Ucs,
        Algorithm::Ubb,
        Algorithm::Sffs,
        Algorithm::Exhaustive,
        Algorithm::Legacy,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Ucs => "ucs",
            Algorithm::Ubb => "ubb",
            Algorithm::Sffs => "sffs",
            Algorithm::Exhaustive => "exhaustive",
            Algorithm::Legacy => "ucurve-legacy",
        }
    }

    /// Whether the algorithm guarantees an optimum on decomposable costs.
    pub fn is_optimal(self) -> bool {
        matches!(self, Algorithm::Ucs | Algorithm::Ubb | Algorithm::Exhaustive)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| Error::InvalidConfig(format!("unknown algorithm {s:?}")))
    }
}

/// Result and instrumentation of one solver run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SearchReport {
    pub algorithm: Algorithm,
    /// Every element found at `best_cost`, sorted by characteristic vector.
    pub minima: Vec<ElementSet>,
    pub best_cost: Option<f64>,
    pub computed_nodes: u64,
    #[serde(with = "secs")]
    pub wall_time: Duration,
    #[serde(with = "secs")]
    pub time_in_cost: Duration,
    /// Main-loop iterations (UCS and the legacy algorithm).
    pub iterations: u64,
    pub dfs_calls: u64,
    /// Minimal-element and maximal-element invocations.
    pub minmax_calls: u64,
    pub budget_exhausted: bool,
    pub target_reached: bool,
}

impl SearchReport {
    pub fn time_other(&self) -> Duration {
        self.wall_time.saturating_sub(self.time_in_cost)
    }

    /// Stopped by the evaluator before the search completed.
    pub fn stopped_early(&self) -> bool {
        self.budget_exhausted || self.target_reached
    }
}

mod secs {
    use std::time::Duration;

    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_f64(d.as_secs_f64())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Duration, D::Error> {
        let v = f64::deserialize(d)?;
        Duration::try_from_secs_f64(v).map_err(serde::de::Error::custom)
    }
}

/// Running set of the cheapest elements seen so far.
#[derive(Clone, Debug, Default)]
pub struct BestTracker {
    best: Option<f64>,
    minima: BTreeSet<ElementSet>,
}

impl BestTracker {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn offer(&mut self, x: ElementSet, cost: f64) {
        match self.best {
            Some(b) if cost > b => {}
            Some(b) if cost == b => {
                self.minima.insert(x);
            }
            _ => {
                self.best = Some(cost);
                self.minima.clear();
                self.minima.insert(x);
            }
        }
    }

    pub fn best(&self) -> Option<f64> {
        self.best
    }

    pub fn minima(&self) -> impl Iterator<Item = ElementSet> + '_ {
        self.minima.iter().copied()
    }
}

/// Counters a solver accumulates alongside the evaluator's.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Counters {
    pub iterations: u64,
    pub dfs_calls: u64,
    pub minmax_calls: u64,
}

pub(crate) fn build_report(
    algorithm: Algorithm,
    best: &BestTracker,
    eval: &CostEvaluator<'_>,
    started: Instant,
    counters: Counters,
) -> SearchReport {
    let wall_time = started.elapsed();
    SearchReport {
        algorithm,
        minima: best.minima().collect(),
        best_cost: best.best(),
        computed_nodes: eval.computed_nodes(),
        wall_time,
        time_in_cost: eval.elapsed_in_cost().min(wall_time),
        iterations: counters.iterations,
        dfs_calls: counters.dfs_calls,
        minmax_calls: counters.minmax_calls,
        budget_exhausted: eval.budget_exhausted(),
        target_reached: eval.target_reached(),
    }
}
