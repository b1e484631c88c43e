use proptest::prelude::*;
use ucurve::cost::generate_subset_sum_instance;
use ucurve::oracle::{exhaustive_solve, random_decomposable_instance};
use ucurve::{solve, Algorithm, CostEvaluator, StopCriterion};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn node_budget_is_never_exceeded(n in 1usize..=12, seed: u64, k in 0u64..300) {
        let inst = generate_subset_sum_instance(n, seed, 10_000);
        for a in Algorithm::ALL {
            let mut eval = CostEvaluator::with_stop(&inst, StopCriterion::NodeBudget(k));
            let r = solve(a, &mut eval, seed, 0.5);
            prop_assert!(r.computed_nodes <= k, "{} used {} > {}", a, r.computed_nodes, k);
            prop_assert!(r.time_in_cost <= r.wall_time);
            if k == 0 {
                prop_assert!(r.minima.is_empty() && r.best_cost.is_none());
            } else {
                prop_assert!(!r.minima.is_empty());
            }
        }
    }

    #[test]
    fn budget_of_full_lattice_changes_nothing(n in 1usize..=8, seed: u64) {
        let c = random_decomposable_instance(n, seed);
        for a in Algorithm::ALL {
            let free = solve(a, &mut CostEvaluator::new(&c), seed, 0.5);
            let mut eval = CostEvaluator::with_stop(&c, StopCriterion::NodeBudget(1 << n));
            let capped = solve(a, &mut eval, seed, 0.5);
            prop_assert!(!capped.budget_exhausted);
            prop_assert_eq!(&free.minima, &capped.minima);
            prop_assert_eq!(free.computed_nodes, capped.computed_nodes);
        }
    }

    #[test]
    fn optimum_as_cost_target_stops_early(n in 2usize..=11, seed: u64) {
        let inst = generate_subset_sum_instance(n, seed, 1000);
        let opt = exhaustive_solve(&mut CostEvaluator::new(&inst)).best_cost.unwrap();
        for a in [Algorithm::Ucs, Algorithm::Ubb] {
            let free = solve(a, &mut CostEvaluator::new(&inst), seed, 0.5);
            let mut eval = CostEvaluator::with_stop(&inst, StopCriterion::CostTarget(opt));
            let r = solve(a, &mut eval, seed, 0.5);
            prop_assert!(r.target_reached);
            prop_assert_eq!(r.best_cost, Some(opt));
            prop_assert!(r.computed_nodes <= free.computed_nodes);
        }
    }
}
