//! Shared fixtures for unit tests.

use crate::graph::{Attribute, AttributedGraph, WeightedGraph};

/// Reference weighted graph: vertices 1..4, vertex weights (1,1,1,2),
/// edges (1,2)=1, (1,3)=1, (2,3)=1, (1,4)=5. Its maximal cliques are
/// {1,2,3} (weight 6) and {1,4} (weight 8); the maximum weight clique
/// is {1,4}.
pub fn g1() -> WeightedGraph {
    WeightedGraph::new(
        vec!["1".into(), "2".into(), "3".into(), "4".into()],
        vec![1.0, 1.0, 1.0, 2.0],
        vec![(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0), (0, 3, 5.0)],
    )
    .unwrap()
}

/// Unweighted triangle in the scalar encoding: vertex weight 0, edge
/// weight 1.
pub fn unit_triangle() -> WeightedGraph {
    WeightedGraph::with_numeric_ids(vec![0.0; 3], vec![(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0)])
        .unwrap()
}

/// Two-vertex attributed graph with vertex attributes [1.0] and edge
/// attribute [2.0].
pub fn x2() -> AttributedGraph {
    AttributedGraph::new(
        vec!["1".into(), "2".into()],
        vec![Attribute::scalar(1.0), Attribute::scalar(1.0)],
        vec![(0, 1, Attribute::scalar(2.0))],
    )
    .unwrap()
}

/// Like [`x2`] but with edge attribute [3.0].
pub fn y2() -> AttributedGraph {
    AttributedGraph::new(
        vec!["1'".into(), "2'".into()],
        vec![Attribute::scalar(1.0), Attribute::scalar(1.0)],
        vec![(0, 1, Attribute::scalar(3.0))],
    )
    .unwrap()
}
