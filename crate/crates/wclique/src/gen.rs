//! Seeded random instance generators.
//!
//! Both generators draw in a fixed order — vertex values first, then
//! the unordered pairs (i, j) with i < j row by row — so a seed pins
//! the instance exactly.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{numeric_ids, Attribute, AttributedGraph, WeightedGraph};

#[derive(Debug, Error)]
pub enum GenError {
    #[error("vertex count must be at least 1")]
    NoVertices,
    #[error("edge probability must be in [0, 1], got {0}")]
    BadProbability(f64),
    #[error("weight range must satisfy lo <= hi with finite bounds, got [{0}, {1}]")]
    BadRange(f64, f64),
    #[error("attribute dimension must be at least 1")]
    BadDimension,
}

/// Random weighted graph: each unordered pair is independently an edge
/// with probability `p`; vertex and edge weights are uniform on
/// [lo, hi].
pub fn generate_random_weighted(
    n: usize,
    p: f64,
    lo: f64,
    hi: f64,
    seed: u64,
) -> Result<WeightedGraph, GenError> {
    if n == 0 {
        return Err(GenError::NoVertices);
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::BadProbability(p));
    }
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(GenError::BadRange(lo, hi));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| {
        if lo == hi {
            lo
        } else {
            rng.random_range(lo..hi)
        }
    };
    let vertex_weights: Vec<f64> = (0..n).map(|_| draw(&mut rng)).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random::<f64>() < p {
                let w = draw(&mut rng);
                edges.push((i, j, w));
            }
        }
    }
    Ok(WeightedGraph::new(numeric_ids(n), vertex_weights, edges)
        .expect("generated graphs are structurally valid"))
}

/// Random attributed graph with `attr_dim`-dimensional attributes
/// uniform on [0.01, 1.01): the positive shift keeps dot-kernel weights
/// strictly positive.
pub fn generate_random_attributed(
    n: usize,
    p: f64,
    attr_dim: usize,
    seed: u64,
) -> Result<AttributedGraph, GenError> {
    if n == 0 {
        return Err(GenError::NoVertices);
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GenError::BadProbability(p));
    }
    if attr_dim == 0 {
        return Err(GenError::BadDimension);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw_attr = |rng: &mut ChaCha8Rng| {
        Attribute::Value((0..attr_dim).map(|_| rng.random::<f64>() + 0.01).collect())
    };
    let vertex_attrs: Vec<Attribute> = (0..n).map(|_| draw_attr(&mut rng)).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in (i + 1)..n {
            if rng.random::<f64>() < p {
                edges.push((i, j, draw_attr(&mut rng)));
            }
        }
    }
    Ok(AttributedGraph::new(numeric_ids(n), vertex_attrs, edges)
        .expect("generated graphs are structurally valid"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn probability_extremes() {
        let edgeless = generate_random_weighted(6, 0.0, 0.0, 1.0, 1).unwrap();
        assert_eq!(edgeless.edge_count(), 0);
        let complete = generate_random_weighted(6, 1.0, 0.0, 1.0, 1).unwrap();
        assert_eq!(complete.edge_count(), 6 * 5 / 2);
    }

    #[test]
    fn seeded_runs_are_identical() {
        let a = generate_random_weighted(10, 0.5, 0.0, 1.0, 42).unwrap();
        let b = generate_random_weighted(10, 0.5, 0.0, 1.0, 42).unwrap();
        assert_eq!(a, b);
        let c = generate_random_weighted(10, 0.5, 0.0, 1.0, 43).unwrap();
        assert_ne!(a, c);

        let x = generate_random_attributed(8, 0.4, 3, 42).unwrap();
        let y = generate_random_attributed(8, 0.4, 3, 42).unwrap();
        assert_eq!(x, y);
    }

    #[test]
    fn degenerate_range() {
        let g = generate_random_weighted(4, 1.0, 2.5, 2.5, 0).unwrap();
        assert_eq!(g.vertex_weight(0), Some(2.5));
        assert_eq!(g.edge_weight(0, 1), Some(2.5));
    }

    #[test]
    fn invalid_params() {
        assert!(matches!(
            generate_random_weighted(0, 0.5, 0.0, 1.0, 0),
            Err(GenError::NoVertices)
        ));
        assert!(matches!(
            generate_random_weighted(3, 1.5, 0.0, 1.0, 0),
            Err(GenError::BadProbability(_))
        ));
        assert!(matches!(
            generate_random_weighted(3, 0.5, 1.0, 0.0, 0),
            Err(GenError::BadRange(..))
        ));
        assert!(matches!(
            generate_random_attributed(3, 0.5, 0, 0),
            Err(GenError::BadDimension)
        ));
    }

    #[test]
    fn attributed_values_are_positively_shifted() {
        let g = generate_random_attributed(5, 1.0, 2, 7).unwrap();
        for i in 0..5 {
            match g.attr(i, i) {
                Attribute::Value(v) => assert!(v.iter().all(|&x| x >= 0.01)),
                _ => panic!("vertex attribute missing"),
            }
        }
    }
}
