//! Maximum weight clique search and graph matching for attributed
//! graphs.
//!
//! The solver works on undirected graphs with real-valued weights on
//! both vertices and edges. Three Bron-Kerbosch-style variants are
//! provided: plain enumeration of all maximal weight cliques,
//! enumeration with pivoting, and a branch-and-bound search for a
//! single maximum weight clique with pluggable upper-bound estimates
//! and an optional recursion budget for anytime use.
//!
//! On top of the solver sits a graph-matching layer: two attributed
//! graphs are combined into an association graph whose cliques encode
//! partial injective vertex mappings, so a maximum weight clique yields
//! the kernel value, the best mapping, and a normalized similarity.
//!
//! ```
//! use wclique::graph::WeightedGraph;
//! use wclique::solver::{solve, SolverConfig};
//!
//! let z = WeightedGraph::with_numeric_ids(
//!     vec![1.0, 1.0, 1.0, 2.0],
//!     vec![(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0), (0, 3, 5.0)],
//! )
//! .unwrap();
//! let report = solve(&z, &SolverConfig::default()).unwrap();
//! assert_eq!(report.best_weight, 8.0);
//! assert_eq!(report.best_clique.indices(), vec![0, 3]);
//! ```

pub mod bench;
pub mod gen;
pub mod graph;
pub mod io;
pub mod matching;
pub mod solver;
pub mod stats;

#[cfg(test)]
pub(crate) mod test_fixtures;

pub use graph::{Attribute, AttributedGraph, GraphError, VertexSet, WeightedGraph};
pub use matching::{AttributeKernel, MatchError, MatchResult, PartialMorphism};
pub use solver::{
    EstimateKind, PivotStrategy, SearchState, SolverConfig, SolverError, SolverReport,
};
