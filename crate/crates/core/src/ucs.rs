//! U-Curve-Search: an optimal solver for costs decomposable in U-shaped
//! curves.
//!
//! Each main-loop iteration draws a minimal (or maximal) element of the
//! current search space and runs a depth-first search from it. The search
//! keeps every visited element as a [`Node`] whose `lower_adjacent` and
//! `upper_adjacent` sets track which neighbours are still inside the search
//! space. An interval is removed only when one of two sufficient conditions
//! holds:
//!
//! * a neighbour strictly cheaper than a node proves that the whole interval
//!   on the far side of the node costs more (`node_pruning`);
//! * every lower (upper) neighbour of a node is already removed, so the
//!   node's lower (upper) interval holds nothing new (empty adjacency set).
//!
//! Removed elements that were visited are kept as candidates, so no global
//! minimum is ever lost.

use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cost::{CostEvaluator, Stop};
use crate::lattice::{maximal_element, minimal_element, ElementSet, Orientation, RestrictionSet};
use crate::report::{build_report, Algorithm, BestTracker, Counters, SearchReport};

/// A visited element plus its neighbourhood bookkeeping.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Node {
    pub element: ElementSet,
    /// Features whose neighbour `element ± y` has not been examined yet.
    pub unverified: ElementSet,
    /// Features `y ∈ element` whose lower neighbour `element - {y}` is not
    /// known to be covered by the lower restrictions. Empty means every
    /// lower neighbour is covered.
    pub lower_adjacent: ElementSet,
    /// Features `y ∉ element` whose upper neighbour `element ∪ {y}` is not
    /// known to be covered by the upper restrictions.
    pub upper_adjacent: ElementSet,
}

impl Node {
    /// A freshly discovered node: every neighbour unverified and uncovered.
    pub fn fresh(element: ElementSet) -> Self {
        let n = element.width();
        Self {
            element,
            unverified: ElementSet::full(n),
            lower_adjacent: element,
            upper_adjacent: element.complement(),
        }
    }
}

/// The node collection of one depth-first search and its stack.
#[derive(Clone, Debug, Default)]
pub struct NodeGraph {
    nodes: HashMap<ElementSet, Node>,
    /// Head is the last entry.
    stack: Vec<ElementSet>,
}

impl NodeGraph {
    pub fn new(start: Node) -> Self {
        let mut g = Self::default();
        g.push(start);
        g
    }

    /// Builds a graph holding `nodes` with an empty stack.
    pub fn from_nodes<I: IntoIterator<Item = Node>>(nodes: I) -> Self {
        Self {
            nodes: nodes.into_iter().map(|n| (n.element, n)).collect(),
            stack: Vec::new(),
        }
    }

    pub fn contains(&self, x: ElementSet) -> bool {
        self.nodes.contains_key(&x)
    }

    pub fn get(&self, x: ElementSet) -> Option<&Node> {
        self.nodes.get(&x)
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Stack contents, deepest node last.
    pub fn stack(&self) -> &[ElementSet] {
        &self.stack
    }

    /// Inserts `node` into the collection and makes it the stack head.
    pub fn push(&mut self, node: Node) {
        self.nodes.insert(node.element, node);
        self.stack.push(node.element);
    }

    fn node(&self, x: ElementSet) -> Node {
        self.nodes[&x]
    }

    fn set(&mut self, node: Node) {
        self.nodes.insert(node.element, node);
    }

    fn unstack(&mut self, x: ElementSet) {
        if let Some(pos) = self.stack.iter().rposition(|&e| e == x) {
            self.stack.remove(pos);
        }
    }

    /// Drops stack entries whose node has been pruned from the collection.
    fn sync_stack(&mut self) {
        let nodes = &self.nodes;
        self.stack.retain(|e| nodes.contains_key(e));
    }

    fn retain(&mut self, mut keep: impl FnMut(ElementSet) -> bool) -> usize {
        let before = self.nodes.len();
        self.nodes.retain(|&e, _| keep(e));
        before - self.nodes.len()
    }

    fn sorted_nodes(&self) -> Vec<Node> {
        let mut v: Vec<Node> = self.nodes.values().copied().collect();
        v.sort_by_key(|n| n.element);
        v
    }
}

/// Pops unverified features of `y` (lowest index first) until one leads to
/// a neighbour that lies in the current search space and has no node yet.
///
/// Returns that neighbour as a fresh node, or `None` once `y` has no
/// unverified features left. Neighbours found covered by a restriction are
/// removed from `y`'s adjacency sets along the way.
pub fn select_unvisited_adjacent(
    mut y: Node,
    graph: &NodeGraph,
    lower: &RestrictionSet,
    upper: &RestrictionSet,
) -> (Option<Node>, Node) {
    while let Some(i) = y.unverified.first() {
        y.unverified = y.unverified.without(i);
        let x = y.element.toggled(i);
        let is_lower = y.element.contains(i);
        let covered_low = lower.covers(x);
        let covered_up = upper.covers(x);
        if !covered_low && !covered_up && !graph.contains(x) {
            return (Some(Node::fresh(x)), y);
        }
        if is_lower && covered_low {
            y.lower_adjacent = y.lower_adjacent.without(i);
        }
        if !is_lower && covered_up {
            y.upper_adjacent = y.upper_adjacent.without(i);
        }
    }
    (None, y)
}

/// Adds `y` to the lower restrictions and drops every node strictly below
/// it. Returns whether the restriction set changed.
pub fn lower_pruning(y: ElementSet, graph: &mut NodeGraph, lower: &mut RestrictionSet) -> bool {
    let changed = lower.update(y);
    graph.retain(|e| !e.is_proper_subset(y));
    changed
}

/// Dual of [`lower_pruning`].
pub fn upper_pruning(y: ElementSet, graph: &mut NodeGraph, upper: &mut RestrictionSet) -> bool {
    let changed = upper.update(y);
    graph.retain(|e| !y.is_proper_subset(e));
    changed
}

/// Compares the adjacent nodes `x` and `y` and, when their costs differ,
/// removes the interval beyond the more expensive one.
///
/// Returns the restriction added, if a branch fired. Both nodes must be in
/// `graph`.
pub fn node_pruning(
    x: ElementSet,
    y: ElementSet,
    graph: &mut NodeGraph,
    lower: &mut RestrictionSet,
    upper: &mut RestrictionSet,
    eval: &mut CostEvaluator<'_>,
) -> Result<Option<(Orientation, ElementSet)>, Stop> {
    assert!(x.is_adjacent(y), "{x} and {y} are not adjacent");
    let cx = eval.evaluate(x)?;
    let cy = eval.evaluate(y)?;
    let bit = x.bits() ^ y.bits();
    let bit = bit.trailing_zeros() as usize;
    let x_above = y.is_proper_subset(x);

    let mut xn = graph.node(x);
    let mut yn = graph.node(y);
    let fired = if x_above && cx < cy {
        lower_pruning(y, graph, lower);
        xn.lower_adjacent = xn.lower_adjacent.without(bit);
        yn.lower_adjacent = ElementSet::empty(y.width());
        Some((Orientation::Lower, y))
    } else if !x_above && cx < cy {
        upper_pruning(y, graph, upper);
        xn.upper_adjacent = xn.upper_adjacent.without(bit);
        yn.upper_adjacent = ElementSet::empty(y.width());
        Some((Orientation::Upper, y))
    } else if !x_above && cx > cy {
        lower_pruning(x, graph, lower);
        yn.lower_adjacent = yn.lower_adjacent.without(bit);
        xn.lower_adjacent = ElementSet::empty(x.width());
        Some((Orientation::Lower, x))
    } else if x_above && cx > cy {
        upper_pruning(x, graph, upper);
        yn.upper_adjacent = yn.upper_adjacent.without(bit);
        xn.upper_adjacent = ElementSet::empty(x.width());
        Some((Orientation::Upper, x))
    } else {
        None
    };
    // pruning removes strict sub/supersets only, so both nodes survive
    graph.set(xn);
    graph.set(yn);
    Ok(fired)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Start from a minimal element.
    Up,
    /// Start from a maximal element.
    Down,
}

/// `Up` with probability `p_up`.
pub fn select_direction<R: Rng + ?Sized>(rng: &mut R, p_up: f64) -> Direction {
    if rng.gen_bool(p_up) {
        Direction::Up
    } else {
        Direction::Down
    }
}

/// One step of a UCS run, reported to an [`Observer`].
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "event", rename_all = "snake_case")]
pub enum TraceEvent {
    /// A main-loop iteration drew `element` (none once the space is empty).
    Iteration {
        direction: Direction,
        element: Option<ElementSet>,
    },
    DfsStart {
        element: ElementSet,
    },
    Push {
        element: ElementSet,
        cost: f64,
    },
    Pop {
        element: ElementSet,
    },
    /// A restriction update; the view passed alongside reflects it.
    Restrict {
        orientation: Orientation,
        element: ElementSet,
    },
}

/// Search state visible to observers.
pub struct SearchView<'a> {
    pub lower: &'a RestrictionSet,
    pub upper: &'a RestrictionSet,
    /// Visited elements retained as minimum candidates, with their costs.
    pub candidates: &'a HashMap<ElementSet, f64>,
}

pub trait Observer {
    fn on_event(&mut self, event: &TraceEvent, view: &SearchView<'_>);
}

/// Observer that ignores everything.
pub struct Quiet;

impl Observer for Quiet {
    fn on_event(&mut self, _: &TraceEvent, _: &SearchView<'_>) {}
}

impl<F: FnMut(&TraceEvent, &SearchView<'_>)> Observer for F {
    fn on_event(&mut self, event: &TraceEvent, view: &SearchView<'_>) {
        self(event, view)
    }
}

struct Search<'a, 'c> {
    eval: &'a mut CostEvaluator<'c>,
    observer: &'a mut dyn Observer,
    lower: RestrictionSet,
    upper: RestrictionSet,
    candidates: HashMap<ElementSet, f64>,
    counters: Counters,
}

impl Search<'_, '_> {
    fn emit(&mut self, event: TraceEvent) {
        let view = SearchView {
            lower: &self.lower,
            upper: &self.upper,
            candidates: &self.candidates,
        };
        self.observer.on_event(&event, &view);
    }

    fn restrict(&mut self, orientation: Orientation, x: ElementSet) {
        match orientation {
            Orientation::Lower => self.lower.update(x),
            Orientation::Upper => self.upper.update(x),
        };
        self.emit(TraceEvent::Restrict {
            orientation,
            element: x,
        });
    }

    fn run(&mut self, rng: &mut ChaCha8Rng, p_up: f64) -> Result<(), Stop> {
        loop {
            if self.eval.halted() {
                return Ok(());
            }
            self.counters.iterations += 1;
            self.counters.minmax_calls += 1;
            let direction = select_direction(rng, p_up);
            let drawn = match direction {
                Direction::Up => minimal_element(&self.lower),
                Direction::Down => maximal_element(&self.upper),
            };
            self.emit(TraceEvent::Iteration {
                direction,
                element: drawn,
            });
            let Some(a) = drawn else {
                return Ok(());
            };
            let (own, opposite) = match direction {
                Direction::Up => (Orientation::Lower, &self.upper),
                Direction::Down => (Orientation::Upper, &self.lower),
            };
            if opposite.covers(a) {
                self.restrict(own, a);
                continue;
            }
            let cost = self.eval.evaluate(a)?;
            // recorded before the restriction removes it from the space
            self.candidates.insert(a, cost);
            self.restrict(own, a);
            let start = match direction {
                Direction::Up => Node {
                    element: a,
                    unverified: a.complement(),
                    lower_adjacent: ElementSet::empty(a.width()),
                    upper_adjacent: a.complement(),
                },
                Direction::Down => Node {
                    element: a,
                    unverified: a,
                    lower_adjacent: a,
                    upper_adjacent: ElementSet::empty(a.width()),
                },
            };
            self.dfs(start)?;
        }
    }

    fn dfs(&mut self, start: Node) -> Result<(), Stop> {
        self.counters.dfs_calls += 1;
        self.emit(TraceEvent::DfsStart { element: start.element });
        let mut graph = NodeGraph::new(start);
        while let Some(&y) = graph.stack.last() {
            let cy = self.eval.evaluate(y)?;
            loop {
                let (next, yn) = select_unvisited_adjacent(graph.node(y), &graph, &self.lower, &self.upper);
                graph.set(yn);
                let Some(xn) = next else {
                    graph.unstack(y);
                    self.emit(TraceEvent::Pop { element: y });
                    break;
                };
                let x = xn.element;
                graph.push(xn);
                let cx = self.eval.evaluate(x)?;
                self.candidates.insert(x, cx);
                self.emit(TraceEvent::Push { element: x, cost: cx });
                let fired = node_pruning(x, y, &mut graph, &mut self.lower, &mut self.upper, self.eval)?;
                if let Some((orientation, element)) = fired {
                    self.emit(TraceEvent::Restrict { orientation, element });
                }
                if cx <= cy {
                    break;
                }
            }

            let yn = graph.node(y);
            if yn.lower_adjacent.is_empty() && !self.lower.covers(y) {
                debug_assert!(
                    y.iter().all(|i| self.lower.covers(y.without(i))),
                    "lower flag of {y} set with an uncovered lower neighbour"
                );
                lower_pruning(y, &mut graph, &mut self.lower);
                self.emit(TraceEvent::Restrict {
                    orientation: Orientation::Lower,
                    element: y,
                });
            }
            if yn.upper_adjacent.is_empty() && !self.upper.covers(y) {
                debug_assert!(
                    y.complement().iter().all(|i| self.upper.covers(y.with(i))),
                    "upper flag of {y} set with an uncovered upper neighbour"
                );
                upper_pruning(y, &mut graph, &mut self.upper);
                self.emit(TraceEvent::Restrict {
                    orientation: Orientation::Upper,
                    element: y,
                });
            }
            if yn.lower_adjacent.is_empty() && yn.upper_adjacent.is_empty() {
                graph.nodes.remove(&y);
            }
            graph.sync_stack();
        }

        for node in graph.sorted_nodes() {
            if node.lower_adjacent.is_empty() {
                self.restrict(Orientation::Lower, node.element);
            }
            if node.upper_adjacent.is_empty() {
                self.restrict(Orientation::Upper, node.element);
            }
        }
        Ok(())
    }
}

/// Runs UCS to completion (or until the evaluator stops it).
///
/// `seed` drives the up/down direction choice, `p_up` its probability.
pub fn ucs_solve(eval: &mut CostEvaluator<'_>, seed: u64, p_up: f64) -> SearchReport {
    ucs_solve_observed(eval, seed, p_up, &mut Quiet)
}

/// [`ucs_solve`] reporting every search step to `observer`.
pub fn ucs_solve_observed(
    eval: &mut CostEvaluator<'_>,
    seed: u64,
    p_up: f64,
    observer: &mut dyn Observer,
) -> SearchReport {
    assert!((0.0..=1.0).contains(&p_up), "p_up must lie in [0, 1]");
    let started = std::time::Instant::now();
    let n = eval.degree();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut search = Search {
        eval,
        observer,
        lower: RestrictionSet::lower(n),
        upper: RestrictionSet::upper(n),
        candidates: HashMap::new(),
        counters: Counters::default(),
    };
    // a stop only ends the search early; candidates found so far stand
    let _ = search.run(&mut rng, p_up);

    let mut best = BestTracker::new();
    for (&x, &c) in &search.candidates {
        best.offer(x, c);
    }
    let counters = search.counters;
    build_report(Algorithm::Ucs, &best, search.eval, started, counters)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cost::{ExplicitCost, FnCost, StopCriterion, SubsetSum};

    fn e(s: &str) -> ElementSet {
        s.parse().unwrap()
    }

    fn restr(o: Orientation, n: usize, items: &[&str]) -> RestrictionSet {
        let mut r = RestrictionSet::new(o, n);
        for s in items {
            r.update(e(s));
        }
        r
    }

    /// c(00)=2, c(10)=1, c(01)=3, c(11)=2
    fn small() -> ExplicitCost {
        ExplicitCost::new(2, vec![2.0, 1.0, 3.0, 2.0]).unwrap()
    }

    #[test]
    fn select_returns_first_unvisited_neighbour() {
        let y = Node::fresh(e("10"));
        let g = NodeGraph::from_nodes([y]);
        let (x, y2) = select_unvisited_adjacent(y, &g, &RestrictionSet::lower(2), &RestrictionSet::upper(2));
        assert_eq!(x, Some(Node::fresh(e("00"))));
        assert_eq!(y2.unverified, e("01"));
    }

    #[test]
    fn select_with_nothing_unverified() {
        let mut y = Node::fresh(e("10"));
        y.unverified = ElementSet::empty(2);
        let g = NodeGraph::from_nodes([y]);
        let (x, y2) = select_unvisited_adjacent(y, &g, &RestrictionSet::lower(2), &RestrictionSet::upper(2));
        assert_eq!(x, None);
        assert_eq!(y2, y);
    }

    #[test]
    fn visited_neighbours_do_not_clear_flags() {
        let y = Node::fresh(e("10"));
        let g = NodeGraph::from_nodes([y, Node::fresh(e("00"))]);
        let upper = restr(Orientation::Upper, 2, &["11"]);
        let (x, y2) = select_unvisited_adjacent(y, &g, &RestrictionSet::lower(2), &upper);
        assert_eq!(x, None);
        assert_eq!(y2.upper_adjacent, ElementSet::empty(2));
        assert_eq!(y2.lower_adjacent, e("10"));
    }

    #[test]
    fn lower_pruning_examples() {
        let y = Node::fresh(e("0110"));
        let mut g = NodeGraph::from_nodes([y]);
        let mut l = RestrictionSet::lower(4);
        assert!(lower_pruning(y.element, &mut g, &mut l));
        assert_eq!(g.len(), 1);
        assert!(l.covers(e("0110")));

        let mut g = NodeGraph::from_nodes([y, Node::fresh(e("0100"))]);
        let mut l = RestrictionSet::lower(4);
        lower_pruning(y.element, &mut g, &mut l);
        assert!(!g.contains(e("0100")) && g.contains(e("0110")));

        let snapshot = (g.len(), l.clone());
        assert!(!lower_pruning(y.element, &mut g, &mut l));
        assert_eq!((g.len(), l), snapshot);
    }

    #[test]
    fn upper_pruning_drops_supersets() {
        let mut g = NodeGraph::from_nodes([Node::fresh(e("010")), Node::fresh(e("011")), Node::fresh(e("100"))]);
        let mut u = RestrictionSet::upper(3);
        upper_pruning(e("010"), &mut g, &mut u);
        assert!(g.contains(e("010")) && !g.contains(e("011")) && g.contains(e("100")));
    }

    #[test]
    fn node_pruning_cheaper_upper_neighbour() {
        // c(11)=1 < c(10)=2
        let c = FnCost::new(2, |x: ElementSet| match x.to_string().as_str() {
            "11" => 1.0,
            "10" => 2.0,
            _ => 5.0,
        });
        let mut ev = CostEvaluator::new(&c);
        let mut g = NodeGraph::from_nodes([Node::fresh(e("11")), Node::fresh(e("10"))]);
        let (mut l, mut u) = (RestrictionSet::lower(2), RestrictionSet::upper(2));
        let fired = node_pruning(e("11"), e("10"), &mut g, &mut l, &mut u, &mut ev).unwrap();
        assert_eq!(fired, Some((Orientation::Lower, e("10"))));
        assert!(l.covers(e("10")));
        assert_eq!(g.get(e("11")).unwrap().lower_adjacent, e("10"));
        assert!(g.get(e("10")).unwrap().lower_adjacent.is_empty());
    }

    #[test]
    fn node_pruning_cheaper_lower_neighbour() {
        // c(01)=0 < c(11)=3
        let c = FnCost::new(2, |x: ElementSet| match x.to_string().as_str() {
            "01" => 0.0,
            "11" => 3.0,
            _ => 5.0,
        });
        let mut ev = CostEvaluator::new(&c);
        let mut g = NodeGraph::from_nodes([Node::fresh(e("01")), Node::fresh(e("11"))]);
        let (mut l, mut u) = (RestrictionSet::lower(2), RestrictionSet::upper(2));
        let fired = node_pruning(e("01"), e("11"), &mut g, &mut l, &mut u, &mut ev).unwrap();
        assert_eq!(fired, Some((Orientation::Upper, e("11"))));
        assert!(u.covers(e("11")) && l.is_empty());
        assert_eq!(g.get(e("01")).unwrap().upper_adjacent, e("00"));
    }

    #[test]
    fn node_pruning_ignores_ties() {
        let c = FnCost::new(2, |_| 4.0);
        let mut ev = CostEvaluator::new(&c);
        let nodes = [Node::fresh(e("11")), Node::fresh(e("10"))];
        let mut g = NodeGraph::from_nodes(nodes);
        let (mut l, mut u) = (RestrictionSet::lower(2), RestrictionSet::upper(2));
        assert_eq!(
            node_pruning(e("11"), e("10"), &mut g, &mut l, &mut u, &mut ev).unwrap(),
            None
        );
        assert!(l.is_empty() && u.is_empty());
        assert_eq!(g.get(e("11")), Some(&nodes[0]));
        assert_eq!(g.get(e("10")), Some(&nodes[1]));
    }

    #[test]
    fn direction_extremes_and_determinism() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        assert!((0..100).all(|_| select_direction(&mut rng, 1.0) == Direction::Up));
        assert!((0..100).all(|_| select_direction(&mut rng, 0.0) == Direction::Down));
        let draw = |seed| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            (0..64).map(|_| select_direction(&mut rng, 0.5)).collect::<Vec<_>>()
        };
        assert_eq!(draw(7), draw(7));
    }

    #[test]
    fn dfs_on_constant_cost_clears_lattice() {
        let c = FnCost::new(1, |_| 0.0);
        let mut ev = CostEvaluator::new(&c);
        let mut search = Search {
            eval: &mut ev,
            observer: &mut Quiet,
            lower: RestrictionSet::lower(1),
            upper: RestrictionSet::upper(1),
            candidates: HashMap::new(),
            counters: Counters::default(),
        };
        search.candidates.insert(e("0"), 0.0);
        search.dfs(Node::fresh(e("0"))).unwrap();
        assert!(search.candidates.contains_key(&e("0")) && search.candidates.contains_key(&e("1")));
        assert_eq!(minimal_element(&search.lower), None);
    }

    #[test]
    fn dfs_reaches_optimum_from_empty_set() {
        let c = small();
        let mut ev = CostEvaluator::new(&c);
        let mut search = Search {
            eval: &mut ev,
            observer: &mut Quiet,
            lower: RestrictionSet::lower(2),
            upper: RestrictionSet::upper(2),
            candidates: HashMap::new(),
            counters: Counters::default(),
        };
        search.dfs(Node::fresh(e("00"))).unwrap();
        assert_eq!(search.candidates.get(&e("10")), Some(&1.0));
    }

    #[test]
    fn solve_small_instance() {
        let c = small();
        for seed in 0..10 {
            let r = ucs_solve(&mut CostEvaluator::new(&c), seed, 0.5);
            assert_eq!(r.minima, [e("10")]);
            assert_eq!(r.best_cost, Some(1.0));
        }
    }

    #[test]
    fn constant_cost_returns_every_subset() {
        let c = FnCost::new(3, |_| 7.0);
        let r = ucs_solve(&mut CostEvaluator::new(&c), 3, 0.5);
        assert_eq!(r.minima.len(), 8);
    }

    #[test]
    fn subset_sum_returns_both_minima() {
        let c = SubsetSum::new(vec![2, 3, 5], 5).unwrap();
        for p_up in [0.0, 0.5, 1.0] {
            let r = ucs_solve(&mut CostEvaluator::new(&c), 11, p_up);
            assert_eq!(r.minima, [e("001"), e("110")], "p_up={p_up}");
            assert_eq!(r.best_cost, Some(0.0));
        }
    }

    #[test]
    fn budget_stop_is_graceful() {
        let c = SubsetSum::new(vec![4, 9, 1, 7, 3, 8], 13).unwrap();
        let mut ev = CostEvaluator::with_stop(&c, StopCriterion::NodeBudget(5));
        let r = ucs_solve(&mut ev, 0, 0.5);
        assert!(r.budget_exhausted);
        assert!(r.computed_nodes <= 5);
        assert!(!r.minima.is_empty());
    }
}
