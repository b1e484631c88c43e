//! Stop criteria: a node budget and a cost target.

use ucurve::cost::generate_subset_sum_instance;
use ucurve::{solve, Algorithm, CostEvaluator, StopCriterion};

fn main() {
    let instance = generate_subset_sum_instance(18, 9, 1_000_000);
    for budget in [50, 500, 5000] {
        for algorithm in [Algorithm::Ucs, Algorithm::Ubb, Algorithm::Sffs] {
            let mut eval = CostEvaluator::with_stop(&instance, StopCriterion::NodeBudget(budget));
            let r = solve(algorithm, &mut eval, 0, 0.5);
            println!(
                "budget {budget:>5} {:<5} best {:>10} after {:>5} nodes (exhausted: {})",
                algorithm.name(),
                r.best_cost.unwrap_or(f64::NAN),
                r.computed_nodes,
                r.budget_exhausted
            );
        }
    }
    let mut eval = CostEvaluator::with_stop(&instance, StopCriterion::CostTarget(1000.0));
    let r = solve(Algorithm::Ucs, &mut eval, 0, 0.5);
    println!(
        "ucs with target 1000: {:?} after {} nodes",
        r.best_cost, r.computed_nodes
    );
}
