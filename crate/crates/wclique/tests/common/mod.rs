//! Shared helpers for integration tests: reference fixtures, an
//! independent brute-force oracle for the matching objective, and small
//! utilities over the public API.

#![allow(dead_code)] // not every test target uses every helper

use wclique::graph::{Attribute, AttributedGraph, VertexSet, WeightedGraph};
use wclique::matching::{kernel_eval, AttributeKernel};

/// Reference weighted graph: vertices 1..4, weights (1,1,1,2), edges
/// (1,2)=1, (1,3)=1, (2,3)=1, (1,4)=5.
pub fn g1() -> WeightedGraph {
    WeightedGraph::new(
        vec!["1".into(), "2".into(), "3".into(), "4".into()],
        vec![1.0, 1.0, 1.0, 2.0],
        vec![(0, 1, 1.0), (0, 2, 1.0), (1, 2, 1.0), (0, 3, 5.0)],
    )
    .unwrap()
}

pub fn x2() -> AttributedGraph {
    AttributedGraph::new(
        vec!["1".into(), "2".into()],
        vec![Attribute::scalar(1.0), Attribute::scalar(1.0)],
        vec![(0, 1, Attribute::scalar(2.0))],
    )
    .unwrap()
}

pub fn y2() -> AttributedGraph {
    AttributedGraph::new(
        vec!["1'".into(), "2'".into()],
        vec![Attribute::scalar(1.0), Attribute::scalar(1.0)],
        vec![(0, 1, Attribute::scalar(3.0))],
    )
    .unwrap()
}

/// Normalize a clique collection for set comparison.
pub fn normalize(cliques: &[VertexSet]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = cliques.iter().map(|c| c.indices()).collect();
    out.sort();
    out
}

/// Rebuild a graph with the unweighted encoding: vertex weight 0, edge
/// weight 1.
pub fn unit_weighted(z: &WeightedGraph) -> WeightedGraph {
    let n = z.vertex_count();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in z.neighbors(i).unwrap().iter() {
            if j > i {
                edges.push((i, j, 1.0));
            }
        }
    }
    WeightedGraph::new(z.ids().to_vec(), vec![0.0; n], edges).unwrap()
}

/// The value of one partial injective mapping under the matching
/// objective: the kernel summed over all unordered pairs (diagonal
/// included) within the mapping's domain.
pub fn mapping_value(
    x: &AttributedGraph,
    y: &AttributedGraph,
    kernel: &AttributeKernel,
    pairs: &[(usize, usize)],
) -> f64 {
    let mut total = 0.0;
    for (a, &(i, fi)) in pairs.iter().enumerate() {
        total += kernel_eval(kernel, x.attr(i, i), y.attr(fi, fi)).unwrap();
        for &(j, fj) in &pairs[a + 1..] {
            total += kernel_eval(kernel, x.attr(i, j), y.attr(fi, fj)).unwrap();
        }
    }
    total
}

/// Maximize the matching objective by enumerating every partial
/// injective mapping from `x` into `y`. Exponential; keep the factors
/// tiny. Entirely independent of the association-graph machinery.
pub fn brute_force_kernel(
    x: &AttributedGraph,
    y: &AttributedGraph,
    kernel: &AttributeKernel,
) -> (f64, Vec<(usize, usize)>) {
    let nx = x.vertex_count();
    let ny = y.vertex_count();
    let mut best = 0.0;
    let mut best_pairs = Vec::new();
    let mut pairs: Vec<(usize, usize)> = Vec::new();

    #[allow(clippy::too_many_arguments)]
    fn rec(
        i: usize,
        nx: usize,
        ny: usize,
        used: &mut Vec<bool>,
        pairs: &mut Vec<(usize, usize)>,
        x: &AttributedGraph,
        y: &AttributedGraph,
        kernel: &AttributeKernel,
        best: &mut f64,
        best_pairs: &mut Vec<(usize, usize)>,
    ) {
        if i == nx {
            let v = mapping_value(x, y, kernel, pairs);
            if v > *best {
                *best = v;
                *best_pairs = pairs.clone();
            }
            return;
        }
        rec(i + 1, nx, ny, used, pairs, x, y, kernel, best, best_pairs);
        for j in 0..ny {
            if !used[j] {
                used[j] = true;
                pairs.push((i, j));
                rec(i + 1, nx, ny, used, pairs, x, y, kernel, best, best_pairs);
                pairs.pop();
                used[j] = false;
            }
        }
    }

    let mut used = vec![false; ny];
    rec(
        0,
        nx,
        ny,
        &mut used,
        &mut pairs,
        x,
        y,
        kernel,
        &mut best,
        &mut best_pairs,
    );
    (best, best_pairs)
}

/// The prospective set a search would carry at clique `c`: every vertex
/// outside `c` adjacent to all of `c`.
pub fn candidates_at(z: &WeightedGraph, c: &VertexSet) -> VertexSet {
    let n = z.vertex_count();
    let mut p = VertexSet::full(n);
    for v in c.iter() {
        p = p.intersection(z.neighbors(v).unwrap());
    }
    p.difference(c)
}

/// Every subset of `base`, as vertex sets over capacity `n`.
pub fn subsets_of(base: &VertexSet, n: usize) -> Vec<VertexSet> {
    let members = base.indices();
    let mut out = Vec::with_capacity(1 << members.len());
    for mask in 0u32..(1u32 << members.len()) {
        let chosen = members
            .iter()
            .enumerate()
            .filter(|(k, _)| mask & (1 << k) != 0)
            .map(|(_, &v)| v);
        out.push(VertexSet::from_indices(n, chosen));
    }
    out
}
