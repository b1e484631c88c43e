//! The original U-Curve algorithm, kept to demonstrate its flaw.
//!
//! Each iteration draws a minimal (or maximal) element of the current space,
//! walks up (or down) a chain by steepest strict descent to a chain minimum,
//! then runs Minimum-Exhausting from it. A popped element is added to both
//! restriction collections, which can remove an unvisited global minimum
//! lying in the interval it covers.

use std::collections::HashSet;
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::cost::{CostEvaluator, Stop};
use crate::lattice::{
    adjacent_elements, in_current_space, maximal_element, minimal_element, ElementSet, RestrictionSet,
};
use crate::report::{build_report, Algorithm, BestTracker, Counters, SearchReport};
use crate::ucs::{select_direction, Direction};

/// Runs the original algorithm. `seed` drives the up/down choice.
///
/// The reported cost may exceed the optimum.
pub fn legacy_ucurve_solve(eval: &mut CostEvaluator<'_>, seed: u64) -> SearchReport {
    let started = Instant::now();
    let n = eval.degree();
    let mut legacy = Legacy {
        eval,
        lower: RestrictionSet::lower(n),
        upper: RestrictionSet::upper(n),
        best: BestTracker::new(),
        counters: Counters::default(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let _ = legacy.run(&mut rng);
    build_report(Algorithm::Legacy, &legacy.best, legacy.eval, started, legacy.counters)
}

struct Legacy<'a, 'c> {
    eval: &'a mut CostEvaluator<'c>,
    lower: RestrictionSet,
    upper: RestrictionSet,
    best: BestTracker,
    counters: Counters,
}

impl Legacy<'_, '_> {
    fn visit(&mut self, x: ElementSet) -> Result<f64, Stop> {
        let c = self.eval.evaluate(x)?;
        self.best.offer(x, c);
        Ok(c)
    }

    fn run(&mut self, rng: &mut ChaCha8Rng) -> Result<(), Stop> {
        loop {
            if self.eval.halted() {
                return Ok(());
            }
            self.counters.iterations += 1;
            self.counters.minmax_calls += 1;
            let direction = select_direction(rng, 0.5);
            let drawn = match direction {
                Direction::Up => minimal_element(&self.lower),
                Direction::Down => maximal_element(&self.upper),
            };
            let Some(a) = drawn else {
                return Ok(());
            };
            if !in_current_space(&self.lower, &self.upper, a) {
                match direction {
                    Direction::Up => self.lower.update(a),
                    Direction::Down => self.upper.update(a),
                };
                continue;
            }
            let m = self.walk(a, direction)?;
            self.counters.dfs_calls += 1;
            self.exhaust(m)?;
        }
    }

    /// Steepest strict descent from `a` along a chain in `direction`.
    fn walk(&mut self, a: ElementSet, direction: Direction) -> Result<ElementSet, Stop> {
        let mut t = a;
        let mut ct = self.visit(a)?;
        loop {
            let features = match direction {
                Direction::Up => t.complement(),
                Direction::Down => t,
            };
            let mut next: Option<(ElementSet, f64)> = None;
            for i in features.iter() {
                let y = t.toggled(i);
                if !in_current_space(&self.lower, &self.upper, y) {
                    continue;
                }
                let cy = self.eval.evaluate(y)?;
                if next.is_none_or(|(_, b)| cy < b) {
                    next = Some((y, cy));
                }
            }
            match next {
                Some((y, cy)) if cy < ct => {
                    self.best.offer(y, cy);
                    t = y;
                    ct = cy;
                }
                _ => return Ok(t),
            }
        }
    }

    /// Minimum-Exhausting from the chain minimum `m`.
    fn exhaust(&mut self, m: ElementSet) -> Result<(), Stop> {
        let mut stack = vec![m];
        let mut stacked: HashSet<ElementSet> = HashSet::from([m]);
        while let Some(&t) = stack.last() {
            let ct = self.visit(t)?;
            let mut pushed = false;
            for y in adjacent_elements(t) {
                if stacked.contains(&y) || !in_current_space(&self.lower, &self.upper, y) {
                    continue;
                }
                let cy = self.eval.evaluate(y)?;
                if cy <= ct {
                    self.best.offer(y, cy);
                    stack.push(y);
                    stacked.insert(y);
                    pushed = true;
                }
            }
            if !pushed {
                stack.pop();
                stacked.remove(&t);
                self.lower.update(t);
                self.upper.update(t);
            }
        }
        Ok(())
    }
}
