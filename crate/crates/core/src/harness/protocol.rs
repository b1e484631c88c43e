use rayon::prelude::*;

use super::config::{ExperimentConfig, ThresholdScope};
use super::emit::{Cell, Table};
use super::instances::{InstanceEntry, InstanceSet};
use crate::cost::{CostEvaluator, StopCriterion};
use crate::error::{Error, Result};
use crate::report::{Algorithm, SearchReport};
use crate::solve::solve;

/// Algorithms compared by the suboptimal protocol.
pub const SUBOPTIMAL_ALGORITHMS: [Algorithm; 3] = [Algorithm::Ucs, Algorithm::Ubb, Algorithm::Sffs];

/// One solver run on one instance.
#[derive(Clone, Debug)]
pub struct RunRecord {
    pub n: usize,
    pub index: usize,
    pub report: SearchReport,
    /// Whether the run matched the cheapest cost any compared algorithm
    /// found on this instance.
    pub hit: bool,
}

/// Per (size, algorithm) aggregate.
#[derive(Clone, Debug, PartialEq)]
pub struct SummaryRow {
    pub n: usize,
    pub algorithm: Algorithm,
    pub instances: usize,
    pub mean_computed_nodes: f64,
    pub best_solution_count: usize,
    pub mean_dfs_calls: f64,
    pub mean_minmax_calls: f64,
    pub mean_wall_time: f64,
    pub mean_time_in_cost: f64,
}

/// Aggregates and raw runs of a protocol.
#[derive(Clone, Debug)]
pub struct RunSummary {
    pub rows: Vec<SummaryRow>,
    pub runs: Vec<RunRecord>,
}

impl RunSummary {
    pub fn row(&self, n: usize, algorithm: Algorithm) -> Option<&SummaryRow> {
        self.rows.iter().find(|r| r.n == n && r.algorithm == algorithm)
    }

    /// Node counts and best-solution counts; no timing.
    pub fn summary_table(&self) -> Table {
        let mut t = Table::new(&[
            "n",
            "algorithm",
            "instances",
            "mean_computed_nodes",
            "best_solution_count",
            "mean_dfs_calls",
            "mean_minmax_calls",
        ]);
        for r in &self.rows {
            t.push(vec![
                Cell::Int(r.n as u64),
                Cell::Text(r.algorithm.to_string()),
                Cell::Int(r.instances as u64),
                Cell::two(r.mean_computed_nodes),
                Cell::Int(r.best_solution_count as u64),
                Cell::two(r.mean_dfs_calls),
                Cell::two(r.mean_minmax_calls),
            ]);
        }
        t
    }

    pub fn runs_table(&self) -> Table {
        let mut t = Table::new(&[
            "n",
            "instance",
            "algorithm",
            "best_cost",
            "computed_nodes",
            "hit",
            "stopped_early",
        ]);
        for r in &self.runs {
            t.push(vec![
                Cell::Int(r.n as u64),
                Cell::Int(r.index as u64),
                Cell::Text(r.report.algorithm.to_string()),
                r.report.best_cost.map_or(Cell::Empty, |c| Cell::Fixed(c, 6)),
                Cell::Int(r.report.computed_nodes),
                Cell::Bool(r.hit),
                Cell::Bool(r.report.stopped_early()),
            ]);
        }
        t
    }

    /// Mean seconds per cell, plus base-2 logarithms for plotting.
    pub fn timing_table(&self) -> Table {
        let mut t = Table::new(&[
            "n",
            "algorithm",
            "mean_time_s",
            "mean_time_in_cost_s",
            "mean_time_other_s",
            "log2_mean_time_s",
            "log2_mean_time_in_cost_s",
            "log2_mean_time_other_s",
        ]);
        let log2 = |s: f64| if s > 0.0 { Cell::two(s.log2()) } else { Cell::Empty };
        for r in &self.rows {
            let other = (r.mean_wall_time - r.mean_time_in_cost).max(0.0);
            t.push(vec![
                Cell::Int(r.n as u64),
                Cell::Text(r.algorithm.to_string()),
                Cell::Fixed(r.mean_wall_time, 6),
                Cell::Fixed(r.mean_time_in_cost, 6),
                Cell::Fixed(other, 6),
                log2(r.mean_wall_time),
                log2(r.mean_time_in_cost),
                log2(other),
            ]);
        }
        t
    }
}

/// Maps `f` over `entries` on `config.jobs` workers, keeping entry order.
fn map_entries<I, T, F>(config: &ExperimentConfig, entries: &[I], f: F) -> Result<Vec<T>>
where
    I: Sync,
    T: Send,
    F: Fn(&I) -> T + Sync,
{
    if config.jobs == 1 {
        return Ok(entries.iter().map(f).collect());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::InvalidConfig(format!("cannot start {} workers: {e}", config.jobs)))?;
    Ok(pool.install(|| entries.par_iter().map(&f).collect()))
}

fn run_one(entry: &InstanceEntry, algorithm: Algorithm, stop: StopCriterion, p_up: f64) -> SearchReport {
    let mut eval = CostEvaluator::with_stop(&entry.instance, stop);
    solve(algorithm, &mut eval, entry.seed, p_up)
}

/// Flags the runs on one instance that reached the cheapest reported cost.
fn mark_hits(reports: Vec<SearchReport>, entry: &InstanceEntry) -> Vec<RunRecord> {
    let best = reports.iter().filter_map(|r| r.best_cost).fold(f64::INFINITY, f64::min);
    reports
        .into_iter()
        .map(|report| RunRecord {
            n: entry.n,
            index: entry.index,
            hit: report.best_cost == Some(best),
            report,
        })
        .collect()
}

fn summarize(config: &ExperimentConfig, algorithms: &[Algorithm], runs: Vec<RunRecord>) -> RunSummary {
    let mut rows = Vec::new();
    for &n in &config.sizes {
        for &algorithm in algorithms {
            let cell: Vec<&RunRecord> = runs
                .iter()
                .filter(|r| r.n == n && r.report.algorithm == algorithm)
                .collect();
            let count = cell.len();
            let mean = |f: &dyn Fn(&SearchReport) -> f64| cell.iter().map(|r| f(&r.report)).sum::<f64>() / count as f64;
            rows.push(SummaryRow {
                n,
                algorithm,
                instances: count,
                mean_computed_nodes: mean(&|r| r.computed_nodes as f64),
                best_solution_count: cell.iter().filter(|r| r.hit).count(),
                mean_dfs_calls: mean(&|r| r.dfs_calls as f64),
                mean_minmax_calls: mean(&|r| r.minmax_calls as f64),
                mean_wall_time: mean(&|r| r.wall_time.as_secs_f64()),
                mean_time_in_cost: mean(&|r| r.time_in_cost.as_secs_f64()),
            });
        }
    }
    RunSummary { rows, runs }
}

/// Runs every configured algorithm to completion on every instance.
pub fn run_optimal(config: &ExperimentConfig) -> Result<RunSummary> {
    config.validate()?;
    let set = InstanceSet::generate(config);
    run_optimal_on(config, &set)
}

pub fn run_optimal_on(config: &ExperimentConfig, set: &InstanceSet) -> Result<RunSummary> {
    set.verify()?;
    let algorithms = &config.algorithms;
    let per_instance = map_entries(config, set.entries(), |entry| {
        let reports = algorithms
            .iter()
            .map(|&a| run_one(entry, a, StopCriterion::None, config.p_up))
            .collect();
        mark_hits(reports, entry)
    })?;
    Ok(summarize(
        config,
        algorithms,
        per_instance.into_iter().flatten().collect(),
    ))
}

/// Thresholds derived by steps 1 and 2 of the suboptimal protocol.
#[derive(Clone, Debug, PartialEq)]
pub struct ThresholdRow {
    pub n: usize,
    /// Instance index under per-instance scope.
    pub instance: Option<usize>,
    pub ucs_nodes: f64,
    pub ubb_nodes: f64,
    pub sffs_nodes: f64,
    /// Node budget for step 3: the greatest of the three counts, rounded up.
    pub node_threshold: u64,
    /// Cost target used in step 2: the SFFS cost.
    pub cost_threshold: f64,
}

pub fn thresholds_table(rows: &[ThresholdRow]) -> Table {
    let mut t = Table::new(&[
        "n",
        "instance",
        "ucs_nodes",
        "ubb_nodes",
        "sffs_nodes",
        "node_threshold",
        "cost_threshold",
    ]);
    for r in rows {
        t.push(vec![
            Cell::Int(r.n as u64),
            r.instance.map_or(Cell::Empty, |i| Cell::Int(i as u64)),
            Cell::two(r.ucs_nodes),
            Cell::two(r.ubb_nodes),
            Cell::two(r.sffs_nodes),
            Cell::Int(r.node_threshold),
            Cell::Fixed(r.cost_threshold, 6),
        ]);
    }
    t
}

/// Outputs of the three-step suboptimal protocol.
#[derive(Clone, Debug)]
pub struct SuboptimalReport {
    pub thresholds: Vec<ThresholdRow>,
    /// Step 3 runs under the node budget.
    pub results: RunSummary,
}

/// Steps 1 and 2: SFFS sets the cost threshold, UCS and UBB run with that
/// cost target, and the node threshold keeps the greatest node count.
pub fn suboptimal_thresholds(config: &ExperimentConfig, set: &InstanceSet) -> Result<Vec<ThresholdRow>> {
    set.verify()?;
    let sffs = map_entries(config, set.entries(), |e| {
        run_one(e, Algorithm::Sffs, StopCriterion::None, config.p_up)
    })?;
    let sffs_cost = |r: &SearchReport| r.best_cost.expect("unbudgeted SFFS evaluates at least one subset");

    let targets: Vec<f64> = match config.threshold_scope {
        ThresholdScope::PerInstance => sffs.iter().map(sffs_cost).collect(),
        ThresholdScope::Mean => set
            .entries()
            .iter()
            .map(|e| {
                let same: Vec<f64> = set
                    .entries()
                    .iter()
                    .zip(&sffs)
                    .filter(|(o, _)| o.n == e.n)
                    .map(|(_, r)| sffs_cost(r))
                    .collect();
                same.iter().sum::<f64>() / same.len() as f64
            })
            .collect(),
    };

    set.verify()?;
    let jobs: Vec<(&InstanceEntry, f64)> = set.entries().iter().zip(targets.iter().copied()).collect();
    let targeted = map_entries(config, &jobs, |&(e, target)| {
        let stop = StopCriterion::CostTarget(target);
        (
            run_one(e, Algorithm::Ucs, stop, config.p_up).computed_nodes,
            run_one(e, Algorithm::Ubb, stop, config.p_up).computed_nodes,
        )
    })?;

    let mut rows = Vec::new();
    for &n in &config.sizes {
        let members: Vec<usize> = (0..set.entries().len()).filter(|&i| set.entries()[i].n == n).collect();
        match config.threshold_scope {
            ThresholdScope::PerInstance => {
                for &i in &members {
                    let (u, b) = targeted[i];
                    let s = sffs[i].computed_nodes;
                    rows.push(ThresholdRow {
                        n,
                        instance: Some(set.entries()[i].index),
                        ucs_nodes: u as f64,
                        ubb_nodes: b as f64,
                        sffs_nodes: s as f64,
                        node_threshold: u.max(b).max(s),
                        cost_threshold: targets[i],
                    });
                }
            }
            ThresholdScope::Mean => {
                let k = members.len() as f64;
                let mean = |f: &dyn Fn(usize) -> u64| members.iter().map(|&i| f(i) as f64).sum::<f64>() / k;
                let ucs_nodes = mean(&|i| targeted[i].0);
                let ubb_nodes = mean(&|i| targeted[i].1);
                let sffs_nodes = mean(&|i| sffs[i].computed_nodes);
                rows.push(ThresholdRow {
                    n,
                    instance: None,
                    ucs_nodes,
                    ubb_nodes,
                    sffs_nodes,
                    node_threshold: ucs_nodes.max(ubb_nodes).max(sffs_nodes).ceil() as u64,
                    cost_threshold: targets[members[0]],
                });
            }
        }
    }
    Ok(rows)
}

/// Step 3: UCS, UBB and SFFS under the node thresholds.
pub fn suboptimal_budgeted(
    config: &ExperimentConfig,
    set: &InstanceSet,
    thresholds: &[ThresholdRow],
) -> Result<RunSummary> {
    set.verify()?;
    let budget_of = |e: &InstanceEntry| {
        thresholds
            .iter()
            .find(|t| t.n == e.n && t.instance.is_none_or(|i| i == e.index))
            .map(|t| t.node_threshold)
    };
    let per_instance = map_entries(config, set.entries(), |entry| {
        let budget = budget_of(entry).expect("a threshold for every instance");
        let reports = SUBOPTIMAL_ALGORITHMS
            .iter()
            .map(|&a| run_one(entry, a, StopCriterion::NodeBudget(budget), config.p_up))
            .collect();
        mark_hits(reports, entry)
    })?;
    Ok(summarize(
        config,
        &SUBOPTIMAL_ALGORITHMS,
        per_instance.into_iter().flatten().collect(),
    ))
}

/// Runs the three protocol steps on one instance set. The configured
/// algorithm list is ignored: the protocol always compares UCS, UBB and
/// SFFS.
pub fn run_suboptimal(config: &ExperimentConfig) -> Result<SuboptimalReport> {
    config.validate()?;
    let set = InstanceSet::generate(config);
    let thresholds = suboptimal_thresholds(config, &set)?;
    let results = suboptimal_budgeted(config, &set, &thresholds)?;
    Ok(SuboptimalReport { thresholds, results })
}

/// Mean DFS and minimal/maximal-element calls of UCS per size.
#[derive(Clone, Debug, PartialEq)]
pub struct DynamicsRow {
    pub n: usize,
    pub mean_dfs_calls: f64,
    pub mean_minmax_calls: f64,
    /// `mean_dfs_calls / mean_minmax_calls`: the fraction of iterations
    /// that found a new element to search from.
    pub ratio: f64,
}

pub fn dynamics_table(rows: &[DynamicsRow]) -> Table {
    let mut t = Table::new(&["n", "mean_dfs_calls", "mean_minmax_calls", "ratio"]);
    for r in rows {
        t.push(vec![
            Cell::Int(r.n as u64),
            Cell::two(r.mean_dfs_calls),
            Cell::two(r.mean_minmax_calls),
            Cell::Fixed(r.ratio, 4),
        ]);
    }
    t
}

pub fn dynamics_profile(config: &ExperimentConfig) -> Result<Vec<DynamicsRow>> {
    config.validate()?;
    let set = InstanceSet::generate(config);
    let reports = map_entries(config, set.entries(), |e| {
        run_one(e, Algorithm::Ucs, StopCriterion::None, config.p_up)
    })?;
    Ok(config
        .sizes
        .iter()
        .map(|&n| {
            let cell: Vec<&SearchReport> = set
                .entries()
                .iter()
                .zip(&reports)
                .filter(|(e, _)| e.n == n)
                .map(|(_, r)| r)
                .collect();
            let k = cell.len() as f64;
            let mean_dfs_calls = cell.iter().map(|r| r.dfs_calls as f64).sum::<f64>() / k;
            let mean_minmax_calls = cell.iter().map(|r| r.minmax_calls as f64).sum::<f64>() / k;
            DynamicsRow {
                n,
                mean_dfs_calls,
                mean_minmax_calls,
                ratio: if mean_minmax_calls > 0.0 {
                    mean_dfs_calls / mean_minmax_calls
                } else {
                    0.0
                },
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_instance_single_algorithm() {
        let mut c = ExperimentConfig::new(vec![6], 1, 3);
        c.algorithms = vec![Algorithm::Ubb];
        let s = run_optimal(&c).unwrap();
        assert_eq!(s.rows.len(), 1);
        let r = &s.runs[0].report;
        assert_eq!(s.rows[0].mean_computed_nodes, r.computed_nodes as f64);
        assert_eq!(s.rows[0].best_solution_count, 1);
    }

    #[test]
    fn optimal_algorithms_always_hit() {
        let mut c = ExperimentConfig::new(vec![7], 30, 5);
        c.algorithms = vec![Algorithm::Ucs, Algorithm::Ubb, Algorithm::Exhaustive];
        let s = run_optimal(&c).unwrap();
        for a in &c.algorithms {
            assert_eq!(s.row(7, *a).unwrap().best_solution_count, 30);
        }
    }

    #[test]
    fn parallel_runs_match_sequential_counts() {
        let mut c = ExperimentConfig::new(vec![6, 8], 10, 2);
        let seq = run_optimal(&c).unwrap().summary_table();
        c.jobs = 3;
        assert_eq!(run_optimal(&c).unwrap().summary_table(), seq);
    }

    #[test]
    fn suboptimal_budget_is_respected() {
        for scope in [ThresholdScope::Mean, ThresholdScope::PerInstance] {
            let mut c = ExperimentConfig::new(vec![7, 8], 10, 4);
            c.threshold_scope = scope;
            let r = run_suboptimal(&c).unwrap();
            for run in &r.results.runs {
                let t = r
                    .thresholds
                    .iter()
                    .find(|t| t.n == run.n && t.instance.is_none_or(|i| i == run.index))
                    .unwrap();
                assert!(run.report.computed_nodes <= t.node_threshold);
            }
        }
    }

    #[test]
    fn exhaustive_budget_slack_changes_nothing() {
        let mut c = ExperimentConfig::new(vec![6], 5, 8);
        c.algorithms = vec![Algorithm::Exhaustive];
        let set = InstanceSet::generate(&c);
        for e in set.entries() {
            let free = run_one(e, Algorithm::Exhaustive, StopCriterion::None, 0.5);
            let tight = run_one(e, Algorithm::Exhaustive, StopCriterion::NodeBudget(1 << 6), 0.5);
            assert_eq!((free.minima, free.computed_nodes), (tight.minima, tight.computed_nodes));
            assert!(!tight.budget_exhausted);
        }
    }

    #[test]
    fn dynamics_ratio_at_most_one() {
        let rows = dynamics_profile(&ExperimentConfig::new(vec![5, 9], 10, 1)).unwrap();
        for r in rows {
            assert!(r.ratio > 0.0 && r.ratio <= 1.0, "{r:?}");
        }
    }
}
