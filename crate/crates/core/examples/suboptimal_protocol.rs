//! The three-step suboptimal protocol: SFFS fixes a cost threshold, UCS and
//! UBB run until they reach it, and the greatest node count becomes the
//! budget all three algorithms then share.

use ucurve::harness::{run_suboptimal, thresholds_table, ExperimentConfig, ThresholdScope};

fn main() {
    let per_instance = std::env::args().any(|a| a == "--per-instance");
    let mut config = ExperimentConfig::new((7..=12).collect(), 100, 2012);
    if per_instance {
        config.threshold_scope = ThresholdScope::PerInstance;
    }
    let report = run_suboptimal(&config).unwrap();
    if !per_instance {
        print!("{}", thresholds_table(&report.thresholds).to_csv().unwrap());
        println!();
    }
    print!("{}", report.results.summary_table().to_csv().unwrap());
}
