//! Print every UCS search event on a small instance.

use ucurve::cost::SubsetSum;
use ucurve::ucs::{ucs_solve_observed, SearchView, TraceEvent};
use ucurve::CostEvaluator;

fn main() {
    let c = SubsetSum::new(vec![2, 3, 5, 4], 9).unwrap();
    let mut observer = |event: &TraceEvent, view: &SearchView<'_>| {
        println!(
            "{:<70} |R_L|={} |R_U|={} candidates={}",
            serde_json::to_string(event).unwrap(),
            view.lower.len(),
            view.upper.len(),
            view.candidates.len()
        );
    };
    let report = ucs_solve_observed(&mut CostEvaluator::new(&c), 5, 0.5, &mut observer);
    println!("minima {:?} at cost {:?}", report.minima, report.best_cost);
}
