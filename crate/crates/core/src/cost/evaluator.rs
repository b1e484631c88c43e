use std::collections::HashMap;
use std::time::{Duration, Instant};

use super::CostFunction;
use crate::lattice::ElementSet;

/// When an evaluator refuses further cost computations.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub enum StopCriterion {
    #[default]
    None,
    /// At most this many distinct elements are ever evaluated.
    NodeBudget(u64),
    /// Stop once an evaluated element costs at most this value.
    CostTarget(f64),
}

/// Control signal returned instead of a cost once the stop criterion fires.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Stop {
    BudgetExhausted,
    TargetReached,
}

/// Memoizing, instrumented access to a cost function.
///
/// Every distinct element is computed at most once, so the computed-node
/// counter always equals the memo size.
pub struct CostEvaluator<'a> {
    cost: &'a dyn CostFunction,
    memo: HashMap<ElementSet, f64>,
    stop: StopCriterion,
    elapsed_in_cost: Duration,
    budget_exhausted: bool,
    target_reached: bool,
}

impl<'a> CostEvaluator<'a> {
    pub fn new(cost: &'a dyn CostFunction) -> Self {
        Self::with_stop(cost, StopCriterion::None)
    }

    pub fn with_stop(cost: &'a dyn CostFunction, stop: StopCriterion) -> Self {
        Self {
            cost,
            memo: HashMap::new(),
            stop,
            elapsed_in_cost: Duration::ZERO,
            budget_exhausted: false,
            target_reached: false,
        }
    }

    pub fn degree(&self) -> usize {
        self.cost.degree()
    }

    pub fn stop_criterion(&self) -> StopCriterion {
        self.stop
    }

    /// Cost of `x`, computing it on a memo miss.
    pub fn evaluate(&mut self, x: ElementSet) -> Result<f64, Stop> {
        assert_eq!(x.width(), self.degree(), "element width mismatch");
        if let Some(&c) = self.memo.get(&x) {
            return Ok(c);
        }
        if self.target_reached {
            return Err(Stop::TargetReached);
        }
        if let StopCriterion::NodeBudget(k) = self.stop {
            if self.memo.len() as u64 >= k {
                self.budget_exhausted = true;
                return Err(Stop::BudgetExhausted);
            }
        }
        let started = Instant::now();
        let c = self.cost.cost(x);
        self.elapsed_in_cost += started.elapsed();
        self.memo.insert(x, c);
        if let StopCriterion::CostTarget(target) = self.stop {
            if c <= target {
                self.target_reached = true;
            }
        }
        Ok(c)
    }

    /// Memoized cost, if `x` was already computed.
    pub fn cached(&self, x: ElementSet) -> Option<f64> {
        self.memo.get(&x).copied()
    }

    pub fn computed_nodes(&self) -> u64 {
        self.memo.len() as u64
    }

    pub fn elapsed_in_cost(&self) -> Duration {
        self.elapsed_in_cost
    }

    pub fn budget_exhausted(&self) -> bool {
        self.budget_exhausted
    }

    pub fn target_reached(&self) -> bool {
        self.target_reached
    }

    /// `true` once the stop criterion has fired; solvers poll this at loop
    /// boundaries.
    pub fn halted(&self) -> bool {
        self.budget_exhausted || self.target_reached
    }
}
