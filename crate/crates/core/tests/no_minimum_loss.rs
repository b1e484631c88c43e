use ucurve::cost::{generate_subset_sum_instance, ExplicitCost};
use ucurve::lattice::{in_current_space, ElementSet};
use ucurve::oracle::{exhaustive_solve, random_decomposable_instance};
use ucurve::ucs::{ucs_solve_observed, SearchView, TraceEvent};
use ucurve::{CostEvaluator, CostFunction};

/// Runs UCS and counts restriction updates after which no global minimum is
/// left in the search space or among the visited candidates.
fn violations(c: &dyn CostFunction, seed: u64) -> (usize, usize) {
    let minima: Vec<ElementSet> = exhaustive_solve(&mut CostEvaluator::new(c)).minima;
    let (mut updates, mut bad) = (0, 0);
    let mut observer = |event: &TraceEvent, view: &SearchView<'_>| {
        if let TraceEvent::Restrict { .. } = event {
            updates += 1;
            let kept = minima
                .iter()
                .any(|&m| in_current_space(view.lower, view.upper, m) || view.candidates.contains_key(&m));
            if !kept {
                bad += 1;
            }
        }
    };
    ucs_solve_observed(&mut CostEvaluator::new(c), seed, 0.5, &mut observer);
    (updates, bad)
}

#[test]
fn random_decomposable_tables() {
    let mut total = 0;
    for i in 0..200u64 {
        let n = 3 + (i % 6) as usize;
        let c = random_decomposable_instance(n, i);
        let (updates, bad) = violations(&c, i);
        assert_eq!(bad, 0, "instance {i}");
        total += updates;
    }
    assert!(total > 0);
}

#[test]
fn subset_sum_instances() {
    for i in 0..100u64 {
        let c = generate_subset_sum_instance(8, i, 50);
        assert_eq!(violations(&c, i).1, 0, "instance {i}");
    }
}

#[test]
fn legacy_fixture_keeps_minimum() {
    let inst = ucurve::Instance::load(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/tests/fixtures/legacy_counterexample.json"
    ))
    .unwrap();
    for seed in 0..20 {
        assert_eq!(violations(&inst, seed).1, 0);
    }
    let flat = ExplicitCost::new(4, vec![2.0; 16]).unwrap();
    assert_eq!(violations(&flat, 0).1, 0);
}
