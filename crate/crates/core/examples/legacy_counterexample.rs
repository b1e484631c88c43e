//! Find an instance on which the original U-Curve algorithm loses the
//! global minimum, then show that UCS keeps it.

use ucurve::cost::{verify_decomposable, VerifyMode};
use ucurve::oracle::{exhaustive_solve, find_counterexample, legacy_ucurve_solve};
use ucurve::ucs::ucs_solve;
use ucurve::{CostEvaluator, Instance};

fn main() {
    let Some(found) = find_counterexample(5, 10_000, 7) else {
        println!("no counter-example in 10000 trials");
        return;
    };
    let instance = &found.instance;
    println!("trial {}: {}", found.trial, instance.to_json());
    println!(
        "decomposable: {:?}",
        verify_decomposable(instance, VerifyMode::Exhaustive).unwrap()
    );

    let oracle = exhaustive_solve(&mut CostEvaluator::new(instance));
    let legacy = legacy_ucurve_solve(&mut CostEvaluator::new(instance), found.legacy_seed);
    let ucs = ucs_solve(&mut CostEvaluator::new(instance), found.legacy_seed, 0.5);
    let show = |v: &[ucurve::ElementSet]| v.iter().map(|m| m.to_string()).collect::<Vec<_>>().join(" ");
    println!("optimum {} at {}", oracle.best_cost.unwrap(), show(&oracle.minima));
    println!("original algorithm reports {}", legacy.best_cost.unwrap());
    println!("ucs reports {} at {}", ucs.best_cost.unwrap(), show(&ucs.minima));

    if let Some(path) = std::env::args().nth(1) {
        Instance::save(instance, &path).unwrap();
        println!("written to {path}");
    }
}
