//! Upper-bound estimates for branch-and-bound pruning.
//!
//! An estimate h maps a search state to an upper bound on the weight
//! still attainable by extending the current clique; the solver
//! descends only while omega(C) + h(C) exceeds the incumbent. An
//! estimate is admissible when the bound holds for every clique
//! containing C. `sum` is admissible for positive weights; `deg` is
//! only single-step admissible and can prune a multi-vertex optimum.
//! Negative weighted degrees contribute zero to either estimate.

use super::SearchState;
use crate::graph::WeightedGraph;

/// A pruning bound consulted at every search node. `push`/`pop` are
/// notified as vertices enter and leave the current clique so that
/// implementations can keep incremental state.
pub trait Estimator {
    fn bound(&self, z: &WeightedGraph, state: &SearchState) -> f64;
    fn push(&mut self, _z: &WeightedGraph, _vertex: usize) {}
    fn pop(&mut self, _z: &WeightedGraph, _vertex: usize) {}
}

/// No pruning: the descent test always passes.
pub struct InfiniteBound;

impl Estimator for InfiniteBound {
    fn bound(&self, _z: &WeightedGraph, _state: &SearchState) -> f64 {
        f64::INFINITY
    }
}

/// Max weighted degree over the prospective set.
pub struct DegBound {
    /// Use whole-graph weighted degrees instead of degrees within
    /// Z[C ∪ P].
    pub global: bool,
}

impl Estimator for DegBound {
    fn bound(&self, z: &WeightedGraph, state: &SearchState) -> f64 {
        if self.global {
            estimate_deg_global(z, state)
        } else {
            estimate_deg(z, state)
        }
    }
}

/// Sum of clamped weighted degrees over the prospective set.
pub struct SumBound;

impl Estimator for SumBound {
    fn bound(&self, z: &WeightedGraph, state: &SearchState) -> f64 {
        estimate_sum(z, state)
    }
}

/// max over i in P of wdeg(i) within Z[C ∪ P]; 0 when P is empty.
pub fn estimate_deg(z: &WeightedGraph, state: &SearchState) -> f64 {
    if state.candidates.is_empty() {
        return 0.0;
    }
    let cup = state.clique.union(&state.candidates);
    state
        .candidates
        .iter()
        .map(|i| z.weighted_degree_in(i, &cup).expect("candidate in range"))
        .fold(0.0, f64::max)
}

/// max over i in P of the whole-graph wdeg(i); 0 when P is empty.
pub fn estimate_deg_global(z: &WeightedGraph, state: &SearchState) -> f64 {
    state
        .candidates
        .iter()
        .map(|i| z.weighted_degree(i).expect("candidate in range"))
        .fold(0.0, f64::max)
}

/// Sum over i in P of max(0, wdeg(i) within Z[C ∪ P]); 0 when P is
/// empty. Admissible for positive weights: each vertex a clique
/// extension adds contributes at most its restricted weighted degree.
pub fn estimate_sum(z: &WeightedGraph, state: &SearchState) -> f64 {
    if state.candidates.is_empty() {
        return 0.0;
    }
    let cup = state.clique.union(&state.candidates);
    state
        .candidates
        .iter()
        .map(|i| {
            z.weighted_degree_in(i, &cup)
                .expect("candidate in range")
                .max(0.0)
        })
        .sum()
}
