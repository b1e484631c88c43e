//! Sequential selection heuristics: forward (SFS), backward (SBS) and
//! sequential forward floating selection (SFFS).

use std::time::Instant;

use crate::cost::{CostEvaluator, Stop};
use crate::lattice::ElementSet;
use crate::report::{build_report, Algorithm, BestTracker, Counters, SearchReport};

/// Adds the feature whose inclusion gives the lowest cost (lowest index on
/// ties). Panics when `current` is already the whole set.
pub fn sfs_step(current: ElementSet, eval: &mut CostEvaluator<'_>) -> Result<(ElementSet, f64), Stop> {
    assert!(!current.is_full(), "forward step from the full set");
    best_move(current.complement().iter().map(|i| current.with(i)), eval)
}

/// Removes the feature whose exclusion gives the lowest cost (lowest index
/// on ties). Panics when `current` is empty.
pub fn sbs_step(current: ElementSet, eval: &mut CostEvaluator<'_>) -> Result<(ElementSet, f64), Stop> {
    assert!(!current.is_empty(), "backward step from the empty set");
    best_move(current.iter().map(|i| current.without(i)), eval)
}

fn best_move(
    candidates: impl Iterator<Item = ElementSet>,
    eval: &mut CostEvaluator<'_>,
) -> Result<(ElementSet, f64), Stop> {
    let mut best: Option<(ElementSet, f64)> = None;
    for x in candidates {
        let c = eval.evaluate(x)?;
        if best.is_none_or(|(_, b)| c < b) {
            best = Some((x, c));
        }
    }
    Ok(best.expect("at least one candidate"))
}

/// Floating search from `∅` until the forward step reaches the whole set.
///
/// After each forward step, backward steps are taken while they strictly
/// improve the best cost recorded for the resulting cardinality. The result
/// is the cheapest subset seen at any cardinality.
pub fn sffs_solve(eval: &mut CostEvaluator<'_>) -> SearchReport {
    let started = Instant::now();
    let mut best = BestTracker::new();
    let mut counters = Counters::default();
    let _ = float(eval, &mut best, &mut counters);
    build_report(Algorithm::Sffs, &best, eval, started, counters)
}

fn float(eval: &mut CostEvaluator<'_>, best: &mut BestTracker, counters: &mut Counters) -> Result<(), Stop> {
    let n = eval.degree();
    // best (subset, cost) per cardinality
    let mut by_size: Vec<Option<f64>> = vec![None; n + 1];
    let improves = |table: &[Option<f64>], k: usize, c: f64| table[k].is_none_or(|b| c < b);

    let mut current = ElementSet::empty(n);
    let c0 = eval.evaluate(current)?;
    best.offer(current, c0);
    by_size[0] = Some(c0);

    while !current.is_full() {
        if eval.halted() {
            return Ok(());
        }
        counters.iterations += 1;
        let (x, cx) = sfs_step(current, eval)?;
        best.offer(x, cx);
        current = x;
        if improves(&by_size, x.len(), cx) {
            by_size[x.len()] = Some(cx);
        }
        while current.len() >= 2 {
            let (y, cy) = sbs_step(current, eval)?;
            best.offer(y, cy);
            if !improves(&by_size, y.len(), cy) {
                break;
            }
            by_size[y.len()] = Some(cy);
            current = y;
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::{ExplicitCost, FnCost, SubsetSum};

    fn e(s: &str) -> ElementSet {
        s.parse().unwrap()
    }

    #[test]
    fn forward_step_picks_cheapest() {
        let c = SubsetSum::new(vec![2, 3, 5], 5).unwrap();
        let mut ev = CostEvaluator::new(&c);
        assert_eq!(sfs_step(e("000"), &mut ev).unwrap(), (e("001"), 0.0));
    }

    #[test]
    fn backward_step_breaks_ties_by_index() {
        let c = FnCost::new(4, |x: ElementSet| x.len() as f64);
        let mut ev = CostEvaluator::new(&c);
        assert_eq!(sbs_step(e("1111"), &mut ev).unwrap(), (e("0111"), 3.0));
    }

    #[test]
    #[should_panic(expected = "full set")]
    fn forward_step_from_full_set_panics() {
        let c = FnCost::new(3, |_| 0.0);
        let _ = sfs_step(e("111"), &mut CostEvaluator::new(&c));
    }

    #[test]
    fn decreasing_cost_returns_full_set() {
        let c = FnCost::new(6, |x: ElementSet| (6 - x.len()) as f64);
        let r = sffs_solve(&mut CostEvaluator::new(&c));
        assert_eq!(r.minima, [ElementSet::full(6)]);
    }

    #[test]
    fn small_instance() {
        let c = ExplicitCost::new(2, vec![2.0, 1.0, 3.0, 2.0]).unwrap();
        let r = sffs_solve(&mut CostEvaluator::new(&c));
        assert_eq!(r.minima, [e("10")]);
        assert_eq!(r.best_cost, Some(1.0));
    }

    #[test]
    fn subset_sum_reaches_zero() {
        let c = SubsetSum::new(vec![2, 3, 5], 5).unwrap();
        let r = sffs_solve(&mut CostEvaluator::new(&c));
        assert_eq!(r.best_cost, Some(0.0));
    }

    #[test]
    fn floating_escapes_nesting() {
        // forward greedily takes s1 first; the optimum {s2, s3} needs a backward step
        let c = SubsetSum::new(vec![6, 4, 4, 100], 8).unwrap();
        let r = sffs_solve(&mut CostEvaluator::new(&c));
        assert_eq!(r.best_cost, Some(0.0));
        assert_eq!(r.minima, [e("0110")]);
    }
}
