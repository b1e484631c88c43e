//! Decomposability checks: exhaustive for small tables, sampled chains for
//! larger ones.

use ucurve::cost::{
    generate_subset_sum_instance, planted_sample_table, verify_decomposable, DecompositionCheck, ExplicitCost,
    VerifyMode,
};
use ucurve::ElementSet;

fn main() {
    let subset_sum = generate_subset_sum_instance(10, 1, 1000);
    println!(
        "subset-sum n=10: {:?}",
        verify_decomposable(&subset_sum, VerifyMode::Exhaustive).unwrap()
    );

    let hump = ExplicitCost::new(2, vec![0.0, 5.0, 0.0, 0.0]).unwrap();
    if let DecompositionCheck::Violation(w) = verify_decomposable(&hump, VerifyMode::Exhaustive).unwrap() {
        println!("hump: {} ⊆ {} ⊆ {} with the middle most expensive", w.z, w.y, w.x);
    }

    // entropy costs are not decomposable in general
    let samples = planted_sample_table(16, 300, ElementSet::from_indices([0, 5], 16), 0.1, 4);
    let sampled = VerifyMode::Sampled { chains: 2000, seed: 1 };
    println!(
        "mce n=16 over 2000 chains: {:?}",
        verify_decomposable(&samples, sampled).unwrap()
    );
}
