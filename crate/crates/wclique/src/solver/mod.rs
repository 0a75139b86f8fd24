//! Maximal-clique enumeration and maximum weight clique search.
//!
//! Three search variants over a [`WeightedGraph`]:
//!
//! * [`enumerate_basic`] — plain recursive enumeration of all maximal
//!   weight cliques over the (C, P, S) state triple.
//! * [`enumerate_pivot`] — the same clique set, but each level expands
//!   only the pivot vertex and the candidates not adjacent to it.
//! * [`solve`] — branch-and-bound search for a single maximum weight
//!   clique: keeps an incumbent, prunes with an upper-bound estimate,
//!   and supports a recursion budget for anytime use.
//!
//! All variants count every recursive invocation; with a fixed seed and
//! configuration, runs are bit-reproducible.

mod estimate;
mod oracle;

pub use estimate::{
    estimate_deg, estimate_deg_global, estimate_sum, DegBound, Estimator, InfiniteBound, SumBound,
};
pub use oracle::{
    brute_force_enumerate, brute_force_mwcp, ENUMERATE_VERTEX_LIMIT, MWCP_VERTEX_LIMIT,
};

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{GraphError, VertexSet, WeightedGraph};

#[derive(Debug, Error)]
pub enum SolverError {
    #[error("graph has {n} vertices; the exhaustive oracle is capped at {max}")]
    GraphTooLarge { n: usize, max: usize },
    #[error("cannot select a pivot from an empty candidate set")]
    EmptyCandidates,
    #[error("pivot selection requested with strategy `none`")]
    PivotingDisabled,
    #[error("recursion budget must be at least 1")]
    InvalidBudget,
    #[error(
        "the cs estimate needs association-graph context; use an estimator-carrying entry point"
    )]
    EstimateNeedsContext,
    #[error("initial incumbent is not a clique")]
    InitialIncumbentNotClique(#[source] GraphError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// How the pivot vertex is chosen from P. `None` disables pivoting
/// entirely (every candidate is expanded, the basic scheme).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PivotStrategy {
    None,
    First,
    Random,
    MaxWeightedDegree,
    MaxWeightClique,
}

impl PivotStrategy {
    pub const ALL: [PivotStrategy; 5] = [
        PivotStrategy::None,
        PivotStrategy::First,
        PivotStrategy::Random,
        PivotStrategy::MaxWeightedDegree,
        PivotStrategy::MaxWeightClique,
    ];
}

impl fmt::Display for PivotStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            PivotStrategy::None => "none",
            PivotStrategy::First => "first",
            PivotStrategy::Random => "random",
            PivotStrategy::MaxWeightedDegree => "wdeg",
            PivotStrategy::MaxWeightClique => "clique",
        };
        f.write_str(s)
    }
}

impl FromStr for PivotStrategy {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "none" => Ok(PivotStrategy::None),
            "first" => Ok(PivotStrategy::First),
            "random" => Ok(PivotStrategy::Random),
            "wdeg" => Ok(PivotStrategy::MaxWeightedDegree),
            "clique" => Ok(PivotStrategy::MaxWeightClique),
            _ => Err(format!(
                "unknown pivot strategy `{s}` (expected none|first|random|wdeg|clique)"
            )),
        }
    }
}

/// Which upper-bound estimate gates the branch-and-bound descent.
///
/// `Infinite` disables pruning. `WeightedDegree` is the max weighted
/// degree over P (single-step admissible only; it can underestimate
/// multi-vertex completions). `Sum` adds the clamped weighted degrees
/// over P and is admissible for positive weights. `CauchySchwarz` is
/// only available through association-graph matching.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EstimateKind {
    Infinite,
    WeightedDegree,
    Sum,
    CauchySchwarz,
}

impl fmt::Display for EstimateKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            EstimateKind::Infinite => "inf",
            EstimateKind::WeightedDegree => "deg",
            EstimateKind::Sum => "sum",
            EstimateKind::CauchySchwarz => "cs",
        };
        f.write_str(s)
    }
}

impl FromStr for EstimateKind {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "inf" => Ok(EstimateKind::Infinite),
            "deg" => Ok(EstimateKind::WeightedDegree),
            "sum" => Ok(EstimateKind::Sum),
            "cs" => Ok(EstimateKind::CauchySchwarz),
            _ => Err(format!("unknown estimate `{s}` (expected inf|deg|sum|cs)")),
        }
    }
}

/// One node of the search: the current clique C, the prospective
/// vertices P (each adjacent to all of C), the excluded vertices S, and
/// the cached weight of C.
#[derive(Clone, Debug)]
pub struct SearchState {
    pub clique: VertexSet,
    pub candidates: VertexSet,
    pub excluded: VertexSet,
    pub weight: f64,
}

impl SearchState {
    /// The root state (empty clique, all vertices prospective).
    pub fn root(z: &WeightedGraph) -> Self {
        let n = z.vertex_count();
        SearchState {
            clique: VertexSet::empty(n),
            candidates: VertexSet::full(n),
            excluded: VertexSet::empty(n),
            weight: 0.0,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolverConfig {
    pub pivot: PivotStrategy,
    pub estimate: EstimateKind,
    /// Maximum number of recursive calls; `None` is unlimited.
    pub budget: Option<u64>,
    pub rng_seed: u64,
    /// Optional warm start; must be a clique.
    pub initial_incumbent: Option<VertexSet>,
    /// Recursion counts at which to snapshot the incumbent.
    pub trace_points: Vec<u64>,
    /// Evaluate the deg estimate with whole-graph weighted degrees
    /// instead of degrees within Z[C ∪ P].
    pub global_wdeg_estimate: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            pivot: PivotStrategy::MaxWeightClique,
            estimate: EstimateKind::WeightedDegree,
            budget: None,
            rng_seed: 0,
            initial_incumbent: None,
            trace_points: Vec::new(),
            global_wdeg_estimate: false,
        }
    }
}

/// Incumbent snapshot taken the first time the recursion counter
/// reaches `requested` (or at search end if it never does).
#[derive(Clone, Debug)]
pub struct TracePoint {
    pub requested: u64,
    pub recursions: u64,
    pub best_weight: f64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug)]
pub struct SolverReport {
    pub best_clique: VertexSet,
    pub best_weight: f64,
    /// Number of recursive invocations performed.
    pub recursions: u64,
    /// True when the search space was exhausted; false when the budget
    /// stopped it first.
    pub completed: bool,
    pub trace: Vec<TracePoint>,
}

/// Select the pivot vertex from `state.candidates`.
///
/// `First` takes the least index; `Random` draws uniformly from P;
/// `MaxWeightedDegree` maximizes the weighted degree within Z[C ∪ P];
/// `MaxWeightClique` maximizes the weight of C ∪ {i}. Ties always break
/// toward the least vertex index.
pub fn select_pivot(
    z: &WeightedGraph,
    state: &SearchState,
    strategy: PivotStrategy,
    rng: &mut ChaCha8Rng,
) -> Result<usize, SolverError> {
    let p = &state.candidates;
    if p.is_empty() {
        return Err(SolverError::EmptyCandidates);
    }
    match strategy {
        PivotStrategy::None => Err(SolverError::PivotingDisabled),
        PivotStrategy::First => Ok(p.first().unwrap()),
        PivotStrategy::Random => {
            let k = rng.random_range(0..p.len());
            Ok(p.nth(k).unwrap())
        }
        PivotStrategy::MaxWeightedDegree => {
            let cup = state.clique.union(p);
            let mut best = usize::MAX;
            let mut best_score = f64::NEG_INFINITY;
            for i in p.iter() {
                let score = z.weighted_degree_in(i, &cup)?;
                if score > best_score {
                    best_score = score;
                    best = i;
                }
            }
            Ok(best)
        }
        PivotStrategy::MaxWeightClique => {
            let mut best = usize::MAX;
            let mut best_score = f64::NEG_INFINITY;
            for i in p.iter() {
                let score = z.extension_weight(&state.clique, i);
                if score > best_score {
                    best_score = score;
                    best = i;
                }
            }
            Ok(best)
        }
    }
}

struct Enumerator<'a, F> {
    z: &'a WeightedGraph,
    pivot: PivotStrategy,
    rng: ChaCha8Rng,
    visitor: F,
    count: u64,
}

impl<F: FnMut(&VertexSet)> Enumerator<'_, F> {
    fn go(&mut self, state: SearchState) {
        self.count += 1;
        if state.candidates.is_empty() && state.excluded.is_empty() {
            (self.visitor)(&state.clique);
        }
        let expansion: Vec<usize> = match self.pivot {
            PivotStrategy::None => state.candidates.indices(),
            _ if state.candidates.is_empty() => Vec::new(),
            _ => {
                let ip = select_pivot(self.z, &state, self.pivot, &mut self.rng)
                    .expect("candidates checked nonempty");
                state.candidates.difference(self.z.adj(ip)).indices()
            }
        };
        let mut p = state.candidates;
        let mut s = state.excluded;
        for i in expansion {
            let ni = self.z.adj(i);
            let mut clique = state.clique.clone();
            clique.insert(i);
            let child = SearchState {
                weight: state.weight + self.z.extension_weight(&state.clique, i),
                clique,
                candidates: p.intersection(ni),
                excluded: s.intersection(ni),
            };
            self.go(child);
            p.remove(i);
            s.insert(i);
        }
    }
}

/// Enumerate every maximal weight clique of `z`, invoking `visitor`
/// once per clique. Candidates are expanded in ascending vertex-index
/// order. Returns the number of recursive calls.
pub fn enumerate_basic<F: FnMut(&VertexSet)>(z: &WeightedGraph, visitor: F) -> u64 {
    let mut e = Enumerator {
        z,
        pivot: PivotStrategy::None,
        rng: ChaCha8Rng::seed_from_u64(0),
        visitor,
        count: 0,
    };
    e.go(SearchState::root(z));
    e.count
}

/// Enumerate every maximal weight clique with pivoting: per recursion
/// only the pivot and the candidates not adjacent to it are expanded.
/// Visits exactly the same clique set as [`enumerate_basic`].
pub fn enumerate_pivot<F: FnMut(&VertexSet)>(
    z: &WeightedGraph,
    strategy: PivotStrategy,
    rng_seed: u64,
    visitor: F,
) -> Result<u64, SolverError> {
    if strategy == PivotStrategy::None {
        return Err(SolverError::PivotingDisabled);
    }
    let mut e = Enumerator {
        z,
        pivot: strategy,
        rng: ChaCha8Rng::seed_from_u64(rng_seed),
        visitor,
        count: 0,
    };
    e.go(SearchState::root(z));
    Ok(e.count)
}

struct Engine<'a> {
    z: &'a WeightedGraph,
    pivot: PivotStrategy,
    rng: ChaCha8Rng,
    est: &'a mut dyn Estimator,
    budget: Option<u64>,
    trace_points: Vec<u64>,
    next_trace: usize,
    count: u64,
    exhausted: bool,
    best: VertexSet,
    best_weight: f64,
    trace: Vec<TracePoint>,
    start: Instant,
}

impl Engine<'_> {
    fn bk(&mut self, state: SearchState) {
        self.count += 1;
        debug_assert!(
            (self.z.clique_weight(&state.clique).unwrap() - state.weight).abs() <= 1e-12,
            "cached clique weight drifted"
        );
        if state.candidates.is_empty()
            && state.excluded.is_empty()
            && state.weight > self.best_weight
        {
            self.best_weight = state.weight;
            self.best = state.clique.clone();
        }
        while self.next_trace < self.trace_points.len()
            && self.count >= self.trace_points[self.next_trace]
        {
            self.snapshot(self.trace_points[self.next_trace]);
            self.next_trace += 1;
        }
        if let Some(b) = self.budget {
            if self.count >= b {
                self.exhausted = true;
                return;
            }
        }
        // descend only while the bound strictly exceeds the incumbent
        let bound = self.est.bound(self.z, &state);
        if state.weight + bound <= self.best_weight {
            return;
        }
        let expansion: Vec<usize> = match self.pivot {
            PivotStrategy::None => state.candidates.indices(),
            _ if state.candidates.is_empty() => Vec::new(),
            _ => {
                let ip = select_pivot(self.z, &state, self.pivot, &mut self.rng)
                    .expect("candidates checked nonempty");
                state.candidates.difference(self.z.adj(ip)).indices()
            }
        };
        let mut p = state.candidates;
        let mut s = state.excluded;
        for i in expansion {
            if self.exhausted {
                return;
            }
            let ni = self.z.adj(i);
            let mut clique = state.clique.clone();
            clique.insert(i);
            let child = SearchState {
                weight: state.weight + self.z.extension_weight(&state.clique, i),
                clique,
                candidates: p.intersection(ni),
                excluded: s.intersection(ni),
            };
            self.est.push(self.z, i);
            self.bk(child);
            self.est.pop(self.z, i);
            p.remove(i);
            s.insert(i);
        }
    }

    fn snapshot(&mut self, requested: u64) {
        self.trace.push(TracePoint {
            requested,
            recursions: self.count,
            best_weight: self.best_weight,
            elapsed: self.start.elapsed(),
        });
    }
}

/// Branch-and-bound search for a maximum weight clique using one of the
/// built-in estimates. Requesting the cs estimate here is an error; it
/// needs association-graph context (see [`solve_with_estimator`]).
pub fn solve(z: &WeightedGraph, config: &SolverConfig) -> Result<SolverReport, SolverError> {
    match config.estimate {
        EstimateKind::Infinite => solve_with_estimator(z, config, &mut InfiniteBound),
        EstimateKind::WeightedDegree => solve_with_estimator(
            z,
            config,
            &mut DegBound {
                global: config.global_wdeg_estimate,
            },
        ),
        EstimateKind::Sum => solve_with_estimator(z, config, &mut SumBound),
        EstimateKind::CauchySchwarz => Err(SolverError::EstimateNeedsContext),
    }
}

/// [`solve`] with a caller-supplied bound. The estimator's `push`/`pop`
/// hooks are invoked as vertices enter and leave the current clique, so
/// it can maintain incremental state.
pub fn solve_with_estimator(
    z: &WeightedGraph,
    config: &SolverConfig,
    est: &mut dyn Estimator,
) -> Result<SolverReport, SolverError> {
    if config.budget == Some(0) {
        return Err(SolverError::InvalidBudget);
    }
    let n = z.vertex_count();
    let (best, best_weight) = match &config.initial_incumbent {
        Some(c) => {
            let w = z
                .clique_weight(c)
                .map_err(SolverError::InitialIncumbentNotClique)?;
            (c.clone(), w)
        }
        None => (VertexSet::empty(n), 0.0),
    };
    let mut trace_points: Vec<u64> = config
        .trace_points
        .iter()
        .copied()
        .filter(|&t| t > 0)
        .collect();
    trace_points.sort_unstable();
    trace_points.dedup();
    let mut engine = Engine {
        z,
        pivot: config.pivot,
        rng: ChaCha8Rng::seed_from_u64(config.rng_seed),
        est,
        budget: config.budget,
        trace_points,
        next_trace: 0,
        count: 0,
        exhausted: false,
        best,
        best_weight,
        trace: Vec::new(),
        start: Instant::now(),
    };
    engine.bk(SearchState::root(z));
    // Points the search never reached snapshot its final values.
    while engine.next_trace < engine.trace_points.len() {
        engine.snapshot(engine.trace_points[engine.next_trace]);
        engine.next_trace += 1;
    }
    Ok(SolverReport {
        best_clique: engine.best,
        best_weight: engine.best_weight,
        recursions: engine.count,
        completed: !engine.exhausted,
        trace: engine.trace,
    })
}
