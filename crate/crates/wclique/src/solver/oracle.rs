//! Exhaustive reference oracles.
//!
//! Both oracles enumerate every vertex subset as a bitmask and are
//! deliberately independent of the search machinery: they share no code
//! with the enumerators or the branch-and-bound engine beyond the graph
//! accessors.

use super::SolverError;
use crate::graph::{VertexSet, WeightedGraph};

/// Largest graph `brute_force_mwcp` accepts.
pub const MWCP_VERTEX_LIMIT: usize = 20;
/// Largest graph `brute_force_enumerate` accepts.
pub const ENUMERATE_VERTEX_LIMIT: usize = 16;

fn adjacency_masks(z: &WeightedGraph) -> Vec<u32> {
    let n = z.vertex_count();
    let mut masks = vec![0u32; n];
    for (i, mask) in masks.iter_mut().enumerate() {
        for j in z.adj(i).iter() {
            *mask |= 1 << j;
        }
    }
    masks
}

fn mask_is_clique(mask: u32, adj: &[u32]) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        if mask & !adj[i] & !(1 << i) != 0 {
            return false;
        }
    }
    true
}

fn mask_weight(mask: u32, z: &WeightedGraph) -> f64 {
    let mut total = 0.0;
    let mut rest = mask;
    while rest != 0 {
        let i = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        total += z.vertex_weight(i).unwrap_or(0.0);
        let mut others = rest;
        while others != 0 {
            let j = others.trailing_zeros() as usize;
            others &= others - 1;
            total += z.edge_weight(i, j).unwrap();
        }
    }
    total
}

/// True when `a` precedes `b` lexicographically as sorted index lists.
fn lex_less(mut a: u32, mut b: u32) -> bool {
    while a != 0 && b != 0 {
        let ta = a.trailing_zeros();
        let tb = b.trailing_zeros();
        if ta != tb {
            return ta < tb;
        }
        a &= a - 1;
        b &= b - 1;
    }
    a == 0 && b != 0
}

fn mask_to_set(mask: u32, n: usize) -> VertexSet {
    VertexSet::from_indices(n, (0..n).filter(|&i| mask & (1 << i) != 0))
}

/// Exhaustively find a maximum weight clique by checking every vertex
/// subset. Weight ties break lexicographically by sorted vertex
/// indices. The empty clique (weight 0) is a candidate, so graphs whose
/// cliques all weigh less than zero report the empty set.
pub fn brute_force_mwcp(z: &WeightedGraph) -> Result<(VertexSet, f64), SolverError> {
    let n = z.vertex_count();
    if n > MWCP_VERTEX_LIMIT {
        return Err(SolverError::GraphTooLarge {
            n,
            max: MWCP_VERTEX_LIMIT,
        });
    }
    let adj = adjacency_masks(z);
    let mut best_mask = 0u32;
    let mut best_weight = 0.0;
    for mask in 1u32..(1u32 << n) {
        if !mask_is_clique(mask, &adj) {
            continue;
        }
        let w = mask_weight(mask, z);
        if w > best_weight || (w == best_weight && lex_less(mask, best_mask)) {
            best_weight = w;
            best_mask = mask;
        }
    }
    Ok((mask_to_set(best_mask, n), best_weight))
}

/// Exhaustively enumerate all maximal cliques (inclusion-maximal
/// complete subsets). For the empty graph this is the empty clique.
pub fn brute_force_enumerate(z: &WeightedGraph) -> Result<Vec<VertexSet>, SolverError> {
    let n = z.vertex_count();
    if n > ENUMERATE_VERTEX_LIMIT {
        return Err(SolverError::GraphTooLarge {
            n,
            max: ENUMERATE_VERTEX_LIMIT,
        });
    }
    let adj = adjacency_masks(z);
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << n) {
        if !mask_is_clique(mask, &adj) {
            continue;
        }
        let extensible = (0..n).any(|v| mask & (1 << v) == 0 && mask & !adj[v] == 0);
        if !extensible {
            out.push(mask_to_set(mask, n));
        }
    }
    Ok(out)
}
