//! Graph matching as maximum weight clique search.
//!
//! The similarity of two attributed graphs is computed by building
//! their association graph, finding a maximum weight clique there, and
//! decoding it back into a partial injective vertex mapping. The clique
//! weight is the kernel value; lengths come from a closed form over the
//! graph's own attribute pairs, so no second clique search is needed.

mod association;
mod kernel;

pub use association::{
    build_association, clique_to_morphism, estimate_cs, morphism_to_clique, AssociationGraph,
    CsEstimate,
};
pub use kernel::{kernel_eval, AttributeKernel};

use thiserror::Error;

use crate::graph::{AttributedGraph, GraphError};
use crate::solver::{
    solve, solve_with_estimator, EstimateKind, SolverConfig, SolverError, SolverReport,
};

#[derive(Debug, Error)]
pub enum MatchError {
    #[error("attribute dimensions differ ({left} vs {right})")]
    DimensionMismatch { left: usize, right: usize },
    #[error("rbf kernel width must be a positive real, got {0}")]
    InvalidSigma(f64),
    #[error("association graphs need nonempty factor graphs")]
    EmptyFactor,
    #[error("vertex set is not a clique of the association graph")]
    NotAClique,
    #[error("mapping is not injective")]
    NotInjective,
    #[error("pair ({i}, {j}) does not name a pair-vertex")]
    UnknownPairVertex { i: usize, j: usize },
    #[error("graph length is zero; similarity is undefined")]
    ZeroLength,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solver(#[from] SolverError),
}

/// A partial injective vertex mapping from one graph into another,
/// stored as (domain, image) index pairs sorted by domain vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartialMorphism {
    pairs: Vec<(usize, usize)>,
}

impl PartialMorphism {
    /// Build from pairs; rejects repeated domain or image vertices.
    pub fn new(mut pairs: Vec<(usize, usize)>) -> Result<Self, MatchError> {
        pairs.sort_unstable();
        for w in pairs.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(MatchError::NotInjective);
            }
        }
        let mut images: Vec<usize> = pairs.iter().map(|&(_, j)| j).collect();
        images.sort_unstable();
        if images.windows(2).any(|w| w[0] == w[1]) {
            return Err(MatchError::NotInjective);
        }
        Ok(PartialMorphism { pairs })
    }

    pub fn empty() -> Self {
        PartialMorphism { pairs: Vec::new() }
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Image of domain vertex `i`, if mapped.
    pub fn apply(&self, i: usize) -> Option<usize> {
        self.pairs
            .binary_search_by_key(&i, |&(d, _)| d)
            .ok()
            .map(|k| self.pairs[k].1)
    }

    /// Domain vertices, ascending.
    pub fn domain(&self) -> Vec<usize> {
        self.pairs.iter().map(|&(i, _)| i).collect()
    }
}

/// The outcome of matching two graphs.
#[derive(Clone, Debug)]
pub struct MatchResult {
    /// Maximum kernel sum over the morphisms explored (exact when the
    /// solve completed).
    pub kernel_value: f64,
    pub length_x: f64,
    pub length_y: f64,
    /// kernel_value / (length_x * length_y); NaN when a length is 0.
    pub similarity: f64,
    pub morphism: PartialMorphism,
    pub report: SolverReport,
}

/// l(X): the closed-form graph length, the square root of the summed
/// self-kernel values over all unordered vertex pairs (diagonal
/// included). Equals sqrt of the self-match kernel value for positive
/// definite kernels, without running a clique search.
pub fn graph_length(x: &AttributedGraph, kernel: &AttributeKernel) -> Result<f64, MatchError> {
    let n = x.vertex_count();
    let mut total = 0.0;
    for i in 0..n {
        for j in i..n {
            total += kernel.eval(x.attr(i, j), x.attr(i, j))?;
        }
    }
    Ok(total.max(0.0).sqrt())
}

/// Match `x` against `y`: build the association graph, run the clique
/// solver per `config`, and decode the best clique into a morphism.
/// The Cauchy-Schwarz estimate is wired up here when requested.
pub fn graph_kernel(
    x: &AttributedGraph,
    y: &AttributedGraph,
    kernel: &AttributeKernel,
    config: &SolverConfig,
) -> Result<MatchResult, MatchError> {
    let assoc = build_association(x, y, kernel)?;
    let report = match config.estimate {
        EstimateKind::CauchySchwarz => {
            let mut est = CsEstimate::new(&assoc);
            solve_with_estimator(assoc.weighted(), config, &mut est)?
        }
        _ => solve(assoc.weighted(), config)?,
    };
    let morphism = clique_to_morphism(&assoc, &report.best_clique)?;
    let length_x = assoc.length_x();
    let length_y = assoc.length_y();
    let kernel_value = report.best_weight;
    let similarity = if length_x > 0.0 && length_y > 0.0 {
        kernel_value / (length_x * length_y)
    } else {
        f64::NAN
    };
    Ok(MatchResult {
        kernel_value,
        length_x,
        length_y,
        similarity,
        morphism,
        report,
    })
}

/// s(X, Y) = k(X, Y) / (l(X) l(Y)). Errors when either length is zero.
/// A budgeted solve yields a lower bound of the true similarity for
/// non-negative kernels.
pub fn similarity(
    x: &AttributedGraph,
    y: &AttributedGraph,
    kernel: &AttributeKernel,
    config: &SolverConfig,
) -> Result<f64, MatchError> {
    let result = graph_kernel(x, y, kernel, config)?;
    if result.length_x > 0.0 && result.length_y > 0.0 {
        Ok(result.similarity)
    } else {
        Err(MatchError::ZeroLength)
    }
}
