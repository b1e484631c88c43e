//! Branch and bound over the power-set spanning tree.
//!
//! The tree is rooted at `∅` and a node that last added feature `i` only
//! branches on features `> i`, so every subset has exactly one tree path.
//! A child `C = P ∪ {i}` with `c(C) > c(P)` is cut together with its whole
//! subtree: every `D ⊇ C` lies on a chain `P ⊆ C ⊆ D`, and a U-shaped
//! restriction forces `c(D) >= c(C) > c(P)`.

use std::time::Instant;

use crate::cost::{CostEvaluator, Stop};
use crate::lattice::ElementSet;
use crate::report::{build_report, Algorithm, BestTracker, Counters, SearchReport};

/// A node of the spanning tree.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EnumTreeNode {
    pub element: ElementSet,
    /// Next feature index this node may branch on.
    pub next_index: usize,
    pub cost: f64,
}

pub fn ubb_solve(eval: &mut CostEvaluator<'_>) -> SearchReport {
    let started = Instant::now();
    let mut best = BestTracker::new();
    let _ = explore(eval, &mut best);
    build_report(Algorithm::Ubb, &best, eval, started, Counters::default())
}

fn explore(eval: &mut CostEvaluator<'_>, best: &mut BestTracker) -> Result<(), Stop> {
    let n = eval.degree();
    let root = ElementSet::empty(n);
    let cost = eval.evaluate(root)?;
    best.offer(root, cost);
    let mut stack = vec![EnumTreeNode {
        element: root,
        next_index: 0,
        cost,
    }];
    while let Some(top) = stack.last_mut() {
        if top.next_index >= n {
            stack.pop();
            continue;
        }
        let i = top.next_index;
        top.next_index += 1;
        let parent_cost = top.cost;
        let child = top.element.with(i);
        let cost = eval.evaluate(child)?;
        best.offer(child, cost);
        if cost > parent_cost {
            continue;
        }
        stack.push(EnumTreeNode {
            element: child,
            next_index: i + 1,
            cost,
        });
    }
    Ok(())
}
