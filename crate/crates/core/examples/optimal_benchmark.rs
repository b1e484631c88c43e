//! The optimal comparison protocol: every algorithm runs to completion on
//! 100 subset-sum instances per size.

use ucurve::harness::{run_optimal, ExperimentConfig};
use ucurve::Algorithm;

fn main() {
    let mut config = ExperimentConfig::new(vec![7, 10, 13, 16], 100, 2012);
    config.algorithms = vec![Algorithm::Ucs, Algorithm::Ubb, Algorithm::Sffs];
    let summary = run_optimal(&config).unwrap();
    print!("{}", summary.summary_table().to_csv().unwrap());
    println!();
    print!("{}", summary.timing_table().to_csv().unwrap());
}
