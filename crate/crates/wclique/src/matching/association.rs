//! Association graphs and the Cauchy-Schwarz pruning bound.

use super::{AttributeKernel, MatchError, PartialMorphism};
use crate::graph::{AttributedGraph, VertexSet, WeightedGraph};
use crate::solver::{Estimator, SearchState};

/// Index into a packed upper triangle (diagonal included) of an n-vertex
/// pair table; requires i <= j.
#[inline]
fn tri_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i <= j && j < n);
    i * n - (i * i - i) / 2 + (j - i)
}

fn self_kernel_table(
    g: &AttributedGraph,
    k: &AttributeKernel,
) -> Result<(Vec<f64>, f64), MatchError> {
    let n = g.vertex_count();
    let mut table = vec![0.0; n * (n + 1) / 2];
    let mut total = 0.0;
    for i in 0..n {
        for j in i..n {
            let v = k.eval(g.attr(i, j), g.attr(i, j))?;
            table[tri_index(n, i, j)] = v;
            total += v;
        }
    }
    Ok((table, total))
}

/// The weighted graph over vertex pairs of two factor graphs. Pair
/// vertices (i, j) and (r, s) are adjacent iff i != r and j != s, so
/// cliques are exactly the partial injective vertex mappings from the
/// first factor into the second, and the weight of a clique equals the
/// kernel sum of the mapping it encodes. Adjacency is independent of
/// weight: an edge may carry weight 0 without ceasing to exist.
#[derive(Clone, Debug)]
pub struct AssociationGraph {
    weighted: WeightedGraph,
    pairs: Vec<(usize, usize)>,
    x: AttributedGraph,
    y: AttributedGraph,
    kernel: AttributeKernel,
    // k(attr, attr) per unordered vertex pair of each factor, and their
    // totals (the squared graph lengths); these drive the cs bound.
    self_x: Vec<f64>,
    self_y: Vec<f64>,
    length2_x: f64,
    length2_y: f64,
}

impl AssociationGraph {
    pub fn weighted(&self) -> &WeightedGraph {
        &self.weighted
    }

    pub fn vertex_count(&self) -> usize {
        self.pairs.len()
    }

    /// The factor-graph vertex pair a pair-vertex stands for.
    pub fn pair_of(&self, v: usize) -> (usize, usize) {
        self.pairs[v]
    }

    /// The pair-vertex index of (i, j); ordering is i-major.
    pub fn vertex_of(&self, i: usize, j: usize) -> usize {
        i * self.y.vertex_count() + j
    }

    pub fn factor_x(&self) -> &AttributedGraph {
        &self.x
    }

    pub fn factor_y(&self) -> &AttributedGraph {
        &self.y
    }

    pub fn kernel(&self) -> &AttributeKernel {
        &self.kernel
    }

    pub fn length_x(&self) -> f64 {
        self.length2_x.max(0.0).sqrt()
    }

    pub fn length_y(&self) -> f64 {
        self.length2_y.max(0.0).sqrt()
    }

    fn self_x_pair(&self, i: usize, r: usize) -> f64 {
        self.self_x[tri_index(self.x.vertex_count(), i.min(r), i.max(r))]
    }

    fn self_y_pair(&self, j: usize, s: usize) -> f64 {
        self.self_y[tri_index(self.y.vertex_count(), j.min(s), j.max(s))]
    }
}

/// Build the association graph of two nonempty attributed graphs.
/// Pair-vertex (i, j) weighs k(attr_X(i,i), attr_Y(j,j)); the edge
/// between compatible pairs weighs k(attr_X(i,r), attr_Y(j,s)).
pub fn build_association(
    x: &AttributedGraph,
    y: &AttributedGraph,
    kernel: &AttributeKernel,
) -> Result<AssociationGraph, MatchError> {
    if x.is_empty() || y.is_empty() {
        return Err(MatchError::EmptyFactor);
    }
    let nx = x.vertex_count();
    let ny = y.vertex_count();
    let n = nx * ny;
    let mut pairs = Vec::with_capacity(n);
    let mut ids = Vec::with_capacity(n);
    for i in 0..nx {
        for j in 0..ny {
            pairs.push((i, j));
            ids.push(format!("({},{})", x.id(i), y.id(j)));
        }
    }
    let mut table = vec![None; n * n];
    for p in 0..n {
        let (i, j) = pairs[p];
        table[p * n + p] = Some(kernel.eval(x.attr(i, i), y.attr(j, j))?);
        for q in (p + 1)..n {
            let (r, s) = pairs[q];
            if i != r && j != s {
                let w = kernel.eval(x.attr(i, r), y.attr(j, s))?;
                table[p * n + q] = Some(w);
                table[q * n + p] = Some(w);
            }
        }
    }
    let weighted = WeightedGraph::from_table(ids, n, table);
    let (self_x, length2_x) = self_kernel_table(x, kernel)?;
    let (self_y, length2_y) = self_kernel_table(y, kernel)?;
    Ok(AssociationGraph {
        weighted,
        pairs,
        x: x.clone(),
        y: y.clone(),
        kernel: *kernel,
        self_x,
        self_y,
        length2_x,
        length2_y,
    })
}

/// Decode a clique of the association graph into the partial injective
/// mapping it encodes.
pub fn clique_to_morphism(
    assoc: &AssociationGraph,
    clique: &VertexSet,
) -> Result<PartialMorphism, MatchError> {
    if !assoc.weighted.is_clique(clique)? {
        return Err(MatchError::NotAClique);
    }
    // ascending pair-vertex order is i-major, so pairs come out sorted
    // by domain vertex
    PartialMorphism::new(clique.iter().map(|v| assoc.pairs[v]).collect())
}

/// Encode a partial injective mapping as the corresponding clique of
/// the association graph.
pub fn morphism_to_clique(
    assoc: &AssociationGraph,
    morphism: &PartialMorphism,
) -> Result<VertexSet, MatchError> {
    let nx = assoc.x.vertex_count();
    let ny = assoc.y.vertex_count();
    let mut set = VertexSet::empty(assoc.vertex_count());
    for &(i, j) in morphism.pairs() {
        if i >= nx || j >= ny {
            return Err(MatchError::UnknownPairVertex { i, j });
        }
        set.insert(assoc.vertex_of(i, j));
    }
    Ok(set)
}

/// The Cauchy-Schwarz bound at a search state, computed from scratch:
/// project the clique onto the factors, delete the projections, and
/// multiply the closed-form lengths of what survives.
pub fn estimate_cs(assoc: &AssociationGraph, state: &SearchState) -> Result<f64, MatchError> {
    let nx = assoc.x.vertex_count();
    let ny = assoc.y.vertex_count();
    let mut in_x = vec![false; nx];
    let mut in_y = vec![false; ny];
    for v in state.clique.iter() {
        if v >= assoc.vertex_count() {
            return Err(MatchError::UnknownPairVertex { i: v, j: 0 });
        }
        let (i, j) = assoc.pairs[v];
        in_x[i] = true;
        in_y[j] = true;
    }
    let mut rem_x = 0.0;
    for i in 0..nx {
        for r in i..nx {
            if !(in_x[i] && in_x[r]) {
                rem_x += assoc.self_x[tri_index(nx, i, r)];
            }
        }
    }
    let mut rem_y = 0.0;
    for j in 0..ny {
        for s in j..ny {
            if !(in_y[j] && in_y[s]) {
                rem_y += assoc.self_y[tri_index(ny, j, s)];
            }
        }
    }
    Ok(rem_x.max(0.0).sqrt() * rem_y.max(0.0).sqrt())
}

/// Incremental Cauchy-Schwarz bound for use inside a solver run.
///
/// Maintains the squared lengths of the deleted factor graphs as
/// running sums: pushing pair (i, j) removes from the X sum every
/// self-kernel entry pairing i with the projection so far (and its
/// diagonal entry), in O(|C|). Pops restore the exact saved sum, so
/// only the current push path contributes rounding. A fully covered
/// factor has no surviving pairs; that case is detected structurally
/// and reported as exactly zero rather than as cancellation residue.
pub struct CsEstimate<'a> {
    assoc: &'a AssociationGraph,
    remaining_x: f64,
    remaining_y: f64,
    // (projected vertex, sum before its push)
    stack_x: Vec<(usize, f64)>,
    stack_y: Vec<(usize, f64)>,
}

impl<'a> CsEstimate<'a> {
    pub fn new(assoc: &'a AssociationGraph) -> Self {
        CsEstimate {
            assoc,
            remaining_x: assoc.length2_x,
            remaining_y: assoc.length2_y,
            stack_x: Vec::new(),
            stack_y: Vec::new(),
        }
    }
}

impl Estimator for CsEstimate<'_> {
    fn bound(&self, _z: &WeightedGraph, _state: &SearchState) -> f64 {
        let rx = if self.stack_x.len() == self.assoc.x.vertex_count() {
            0.0
        } else {
            self.remaining_x.max(0.0)
        };
        let ry = if self.stack_y.len() == self.assoc.y.vertex_count() {
            0.0
        } else {
            self.remaining_y.max(0.0)
        };
        rx.sqrt() * ry.sqrt()
    }

    fn push(&mut self, _z: &WeightedGraph, vertex: usize) {
        let (i, j) = self.assoc.pairs[vertex];
        let saved_x = self.remaining_x;
        self.remaining_x -= self.assoc.self_x_pair(i, i);
        for &(r, _) in &self.stack_x {
            self.remaining_x -= self.assoc.self_x_pair(i, r);
        }
        self.stack_x.push((i, saved_x));
        let saved_y = self.remaining_y;
        self.remaining_y -= self.assoc.self_y_pair(j, j);
        for &(s, _) in &self.stack_y {
            self.remaining_y -= self.assoc.self_y_pair(j, s);
        }
        self.stack_y.push((j, saved_y));
    }

    fn pop(&mut self, _z: &WeightedGraph, vertex: usize) {
        let (i, j) = self.assoc.pairs[vertex];
        let (top, saved_x) = self.stack_x.pop().expect("pop without matching push");
        debug_assert_eq!(top, i);
        self.remaining_x = saved_x;
        let (top, saved_y) = self.stack_y.pop().expect("pop without matching push");
        debug_assert_eq!(top, j);
        self.remaining_y = saved_y;
    }
}
