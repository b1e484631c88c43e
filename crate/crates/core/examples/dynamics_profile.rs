//! How often a UCS iteration finds a new element to search from, per size.

use ucurve::harness::{dynamics_profile, dynamics_table, ExperimentConfig};

fn main() {
    let config = ExperimentConfig::new(vec![5, 8, 11, 14, 17], 50, 7);
    let rows = dynamics_profile(&config).unwrap();
    print!("{}", dynamics_table(&rows).to_csv().unwrap());
}
