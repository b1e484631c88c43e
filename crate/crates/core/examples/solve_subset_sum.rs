//! Solve one subset-sum instance with every algorithm and compare.
//!
//! ```text
//! cargo run --release --example solve_subset_sum -- 16 42
//! ```

use ucurve::cost::generate_subset_sum_instance;
use ucurve::{solve, Algorithm, CostEvaluator, CostFunction};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().map_or(14, |a| a.parse().expect("n"));
    let seed: u64 = args.next().map_or(1, |a| a.parse().expect("seed"));

    let instance = generate_subset_sum_instance(n, seed, 1_000_000);
    println!("subset-sum instance, n = {}", instance.degree());
    println!(
        "{:<14} {:>14} {:>10} {:>10}  minima",
        "algorithm", "best cost", "nodes", "ms"
    );
    for algorithm in Algorithm::ALL {
        if algorithm == Algorithm::Exhaustive && n > 20 {
            continue;
        }
        let report = solve(algorithm, &mut CostEvaluator::new(&instance), seed, 0.5);
        let minima: Vec<String> = report.minima.iter().take(3).map(|m| m.to_string()).collect();
        println!(
            "{:<14} {:>14} {:>10} {:>10.2}  {}",
            algorithm.name(),
            report.best_cost.unwrap_or(f64::NAN),
            report.computed_nodes,
            report.wall_time.as_secs_f64() * 1e3,
            minima.join(" ")
        );
    }
}
