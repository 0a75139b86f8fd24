//! Pairwise-matching benchmark harness.
//!
//! For every unordered pair of dataset graphs and every solver
//! configuration, one clique search runs with the requested recursion
//! budgets as snapshot points — a single anytime search per
//! (pair, config), not one search per budget. Each snapshot becomes a
//! record; per-(config, budget) aggregate rows carry the mean
//! similarity and mean wall time over pairs.

use std::io::Write;

use rayon::prelude::*;
use thiserror::Error;

use crate::graph::AttributedGraph;
use crate::matching::{build_association, AttributeKernel, CsEstimate, MatchError};
use crate::solver::{solve, solve_with_estimator, EstimateKind, PivotStrategy, SolverConfig};

#[derive(Debug, Error)]
pub enum BenchError {
    #[error("benchmark dataset is empty")]
    EmptyDataset,
    #[error("budgets must be a nonempty ascending list of positive recursion counts")]
    BadBudgets,
    #[error(transparent)]
    Match(#[from] MatchError),
    #[error("csv write failed: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Clone, Debug)]
pub struct BenchOptions {
    pub kernel: AttributeKernel,
    /// Solver variants; the per-run seed, budget, and trace points
    /// fields are overridden per pair.
    pub configs: Vec<SolverConfig>,
    /// Ascending recursion budgets (the snapshot points).
    pub budgets: Vec<u64>,
    pub seed: u64,
    /// Also match every graph against itself.
    pub include_self: bool,
}

impl Default for BenchOptions {
    fn default() -> Self {
        BenchOptions {
            kernel: AttributeKernel::Dot,
            configs: default_bench_configs(),
            budgets: vec![2, 5, 10, 50, 100, 500, 1000, 5000, 10000, 50000],
            seed: 0,
            include_self: false,
        }
    }
}

/// The four standard variants: no pivoting, random, max weighted
/// degree, and max weight clique selection, all with the Cauchy-Schwarz
/// estimate.
pub fn default_bench_configs() -> Vec<SolverConfig> {
    [
        PivotStrategy::None,
        PivotStrategy::Random,
        PivotStrategy::MaxWeightedDegree,
        PivotStrategy::MaxWeightClique,
    ]
    .into_iter()
    .map(|pivot| SolverConfig {
        pivot,
        estimate: EstimateKind::CauchySchwarz,
        ..Default::default()
    })
    .collect()
}

/// One (pair, config, budget) snapshot.
#[derive(Clone, Debug)]
pub struct BenchRecord {
    pub graph_x: String,
    pub graph_y: String,
    pub pivot: PivotStrategy,
    pub estimate: EstimateKind,
    pub budget: u64,
    pub recursions_used: u64,
    pub best_weight: f64,
    pub similarity: f64,
    pub completed: bool,
    pub wall_time_ms: f64,
}

/// Mean similarity and wall time over all pairs for one
/// (config, budget) cell.
#[derive(Clone, Debug)]
pub struct BenchAggregate {
    pub pivot: PivotStrategy,
    pub estimate: EstimateKind,
    pub budget: u64,
    pub pairs: usize,
    pub mean_similarity: f64,
    pub mean_wall_time_ms: f64,
}

#[derive(Clone, Debug)]
pub struct BenchOutput {
    pub records: Vec<BenchRecord>,
    pub aggregates: Vec<BenchAggregate>,
}

/// Run the benchmark over `(name, graph)` dataset entries.
///
/// Pairs are matched independently (in parallel); record order is the
/// deterministic pair-major, config-major, budget-minor order
/// regardless of scheduling. The solver seed for a pair is
/// `seed XOR pair_index`.
pub fn run_benchmark(
    dataset: &[(String, AttributedGraph)],
    opts: &BenchOptions,
) -> Result<BenchOutput, BenchError> {
    if dataset.is_empty() {
        return Err(BenchError::EmptyDataset);
    }
    if opts.budgets.is_empty()
        || opts.budgets.windows(2).any(|w| w[0] >= w[1])
        || opts.budgets[0] == 0
    {
        return Err(BenchError::BadBudgets);
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for a in 0..dataset.len() {
        for b in a..dataset.len() {
            if a != b || opts.include_self {
                pairs.push((a, b));
            }
        }
    }
    let max_budget = *opts.budgets.last().unwrap();
    let per_pair: Vec<Result<Vec<BenchRecord>, BenchError>> = pairs
        .par_iter()
        .enumerate()
        .map(|(pair_index, &(a, b))| {
            let (name_x, x) = &dataset[a];
            let (name_y, y) = &dataset[b];
            let assoc = build_association(x, y, &opts.kernel)?;
            let lx = assoc.length_x();
            let ly = assoc.length_y();
            let mut records = Vec::with_capacity(opts.configs.len() * opts.budgets.len());
            for config in &opts.configs {
                let run_config = SolverConfig {
                    budget: Some(max_budget),
                    rng_seed: opts.seed ^ pair_index as u64,
                    trace_points: opts.budgets.clone(),
                    initial_incumbent: None,
                    ..config.clone()
                };
                let report = match run_config.estimate {
                    EstimateKind::CauchySchwarz => {
                        let mut est = CsEstimate::new(&assoc);
                        solve_with_estimator(assoc.weighted(), &run_config, &mut est)
                            .map_err(MatchError::from)?
                    }
                    _ => solve(assoc.weighted(), &run_config).map_err(MatchError::from)?,
                };
                for point in &report.trace {
                    let similarity = if lx > 0.0 && ly > 0.0 {
                        point.best_weight / (lx * ly)
                    } else {
                        f64::NAN
                    };
                    records.push(BenchRecord {
                        graph_x: name_x.clone(),
                        graph_y: name_y.clone(),
                        pivot: run_config.pivot,
                        estimate: run_config.estimate,
                        budget: point.requested,
                        recursions_used: point.recursions,
                        best_weight: point.best_weight,
                        similarity,
                        completed: report.completed && report.recursions <= point.requested,
                        wall_time_ms: point.elapsed.as_secs_f64() * 1000.0,
                    });
                }
            }
            Ok(records)
        })
        .collect();
    let mut records = Vec::new();
    for r in per_pair {
        records.extend(r?);
    }
    Ok(BenchOutput {
        aggregates: aggregate_records(&records),
        records,
    })
}

/// Recompute the per-(config, budget) aggregate rows from records, in
/// record order.
pub fn aggregate_records(records: &[BenchRecord]) -> Vec<BenchAggregate> {
    let mut cells: Vec<(PivotStrategy, EstimateKind, u64)> = Vec::new();
    for r in records {
        let key = (r.pivot, r.estimate, r.budget);
        if !cells.contains(&key) {
            cells.push(key);
        }
    }
    cells
        .into_iter()
        .map(|(pivot, estimate, budget)| {
            let mut count = 0usize;
            let mut sim_sum = 0.0;
            let mut time_sum = 0.0;
            for r in records {
                if r.pivot == pivot && r.estimate == estimate && r.budget == budget {
                    count += 1;
                    sim_sum += r.similarity;
                    time_sum += r.wall_time_ms;
                }
            }
            BenchAggregate {
                pivot,
                estimate,
                budget,
                pairs: count,
                mean_similarity: sim_sum / count as f64,
                mean_wall_time_ms: time_sum / count as f64,
            }
        })
        .collect()
}

/// CSV column order matches the record fields; aggregate rows follow
/// the data rows with `(mean)` in the graph columns and empty cells
/// where a mean is meaningless.
pub fn write_csv<W: Write>(out: W, output: &BenchOutput) -> Result<(), BenchError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "graph_x",
        "graph_y",
        "pivot",
        "estimate",
        "budget",
        "recursions_used",
        "best_weight",
        "similarity",
        "completed",
        "wall_time_ms",
    ])?;
    for r in &output.records {
        w.write_record([
            r.graph_x.clone(),
            r.graph_y.clone(),
            r.pivot.to_string(),
            r.estimate.to_string(),
            r.budget.to_string(),
            r.recursions_used.to_string(),
            r.best_weight.to_string(),
            r.similarity.to_string(),
            r.completed.to_string(),
            r.wall_time_ms.to_string(),
        ])?;
    }
    for a in &output.aggregates {
        w.write_record([
            "(mean)".to_string(),
            "(mean)".to_string(),
            a.pivot.to_string(),
            a.estimate.to_string(),
            a.budget.to_string(),
            String::new(),
            String::new(),
            a.mean_similarity.to_string(),
            String::new(),
            a.mean_wall_time_ms.to_string(),
        ])?;
    }
    w.flush()?;
    Ok(())
}
