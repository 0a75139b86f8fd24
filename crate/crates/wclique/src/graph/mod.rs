//! Attributed and weighted graph types.
//!
//! Both graph kinds store a total symmetric attribute table over vertex
//! pairs: the diagonal entry is the vertex attribute, an off-diagonal
//! non-null entry is an edge. The null marker is the *absence* of an
//! attribute and is distinct from a zero weight. Per-vertex neighbor
//! bitsets are derived from the table at construction time, giving O(1)
//! edge tests and fast neighborhood intersections.
//!
//! Graphs are immutable after construction; operations that "modify"
//! (induced subgraph, deletion) return new graphs.

mod vertex_set;

pub use vertex_set::VertexSet;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("unknown vertex id `{0}`")]
    UnknownId(String),
    #[error("vertex index {index} out of range for graph with {len} vertices")]
    VertexOutOfRange { index: usize, len: usize },
    #[error("duplicate vertex id `{0}`")]
    DuplicateId(String),
    #[error("mismatched vertex id and attribute counts ({ids} ids, {attrs} attributes)")]
    CountMismatch { ids: usize, attrs: usize },
    #[error("self-loop on vertex `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge between `{0}` and `{1}`")]
    DuplicateEdge(String, String),
    #[error("attribute for ({0}, {1}) is empty or non-finite")]
    InvalidAttribute(String, String),
    #[error("edge ({0}, {1}) carries the null attribute")]
    NullEdge(String, String),
    #[error("attribute for ({0}, {1}) is not a scalar")]
    NotScalar(String, String),
    #[error("vertex set is not a clique: ({0}, {1}) is not an edge")]
    NotAClique(String, String),
}

/// A vertex or edge attribute: either the null marker (no attribute,
/// hence no edge off-diagonal) or a non-empty vector of finite reals.
/// `Null` is distinct from `Value([0.0])`: a zero weight is an
/// attribute, the null marker is the absence of one.
#[derive(Clone, Debug, PartialEq)]
pub enum Attribute {
    Null,
    Value(Vec<f64>),
}

impl Attribute {
    pub fn scalar(w: f64) -> Self {
        Attribute::Value(vec![w])
    }

    pub fn is_null(&self) -> bool {
        matches!(self, Attribute::Null)
    }

    /// The value when this is a 1-dimensional attribute.
    pub fn as_scalar(&self) -> Option<f64> {
        match self {
            Attribute::Value(v) if v.len() == 1 => Some(v[0]),
            _ => None,
        }
    }

    pub fn dim(&self) -> Option<usize> {
        match self {
            Attribute::Null => None,
            Attribute::Value(v) => Some(v.len()),
        }
    }

    fn is_valid(&self) -> bool {
        match self {
            Attribute::Null => true,
            Attribute::Value(v) => !v.is_empty() && v.iter().all(|x| x.is_finite()),
        }
    }
}

fn check_ids(ids: &[String]) -> Result<(), GraphError> {
    for (i, id) in ids.iter().enumerate() {
        if ids[..i].contains(id) {
            return Err(GraphError::DuplicateId(id.clone()));
        }
    }
    Ok(())
}

fn build_adj(n: usize, present: impl Fn(usize, usize) -> bool) -> Vec<VertexSet> {
    let mut adj = vec![VertexSet::empty(n); n];
    for i in 0..n {
        for j in (i + 1)..n {
            if present(i, j) {
                adj[i].insert(j);
                adj[j].insert(i);
            }
        }
    }
    adj
}

pub(crate) fn numeric_ids(n: usize) -> Vec<String> {
    (0..n).map(|i| i.to_string()).collect()
}

macro_rules! common_graph_api {
    ($ty:ty) => {
        impl $ty {
            pub fn vertex_count(&self) -> usize {
                self.n
            }

            pub fn is_empty(&self) -> bool {
                self.n == 0
            }

            /// Number of (undirected) edges.
            pub fn edge_count(&self) -> usize {
                self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
            }

            pub fn ids(&self) -> &[String] {
                &self.ids
            }

            /// External id of an internal vertex index.
            pub fn id(&self, i: usize) -> &str {
                &self.ids[i]
            }

            /// Internal index of an external id.
            pub fn index_of(&self, id: &str) -> Option<usize> {
                self.ids.iter().position(|x| x == id)
            }

            /// External ids of a vertex set, in index order.
            pub fn external_ids(&self, set: &VertexSet) -> Vec<String> {
                set.iter().map(|i| self.ids[i].clone()).collect()
            }

            fn check_vertex(&self, i: usize) -> Result<(), GraphError> {
                if i >= self.n {
                    Err(GraphError::VertexOutOfRange {
                        index: i,
                        len: self.n,
                    })
                } else {
                    Ok(())
                }
            }

            fn check_set(&self, set: &VertexSet) -> Result<(), GraphError> {
                match set.max_member() {
                    Some(m) if m >= self.n => Err(GraphError::VertexOutOfRange {
                        index: m,
                        len: self.n,
                    }),
                    _ => Ok(()),
                }
            }

            /// N(i): all vertices adjacent to `i`; never contains `i` itself.
            pub fn neighbors(&self, i: usize) -> Result<&VertexSet, GraphError> {
                self.check_vertex(i)?;
                Ok(&self.adj[i])
            }

            /// Unchecked neighbor set, for callers that already validated `i`.
            #[allow(dead_code)] // used on the weighted kind only
            pub(crate) fn adj(&self, i: usize) -> &VertexSet {
                &self.adj[i]
            }

            /// True iff every pair of distinct vertices in `c` is an edge.
            pub fn is_clique(&self, c: &VertexSet) -> Result<bool, GraphError> {
                self.check_set(c)?;
                for i in c.iter() {
                    let mut rest = c.clone();
                    rest.remove(i);
                    if !rest.is_subset(&self.adj[i]) {
                        return Ok(false);
                    }
                }
                Ok(true)
            }

            #[allow(dead_code)] // used on the weighted kind only
            fn first_non_edge(&self, c: &VertexSet) -> Option<(usize, usize)> {
                let members = c.indices();
                for (a, &i) in members.iter().enumerate() {
                    for &j in &members[a + 1..] {
                        if !self.adj[i].contains(j) {
                            return Some((i, j));
                        }
                    }
                }
                None
            }
        }
    };
}

/// A graph whose vertex pairs carry vector attributes (or the null
/// marker). Matching inputs are of this kind.
#[derive(Clone, Debug, PartialEq)]
pub struct AttributedGraph {
    ids: Vec<String>,
    n: usize,
    attrs: Vec<Attribute>, // row-major n*n, symmetric
    adj: Vec<VertexSet>,
}

common_graph_api!(AttributedGraph);

impl AttributedGraph {
    /// Build a graph from per-vertex attributes and an undirected edge
    /// list. Vertex attributes may be `Null`; edge attributes may not.
    pub fn new(
        ids: Vec<String>,
        vertex_attrs: Vec<Attribute>,
        edges: Vec<(usize, usize, Attribute)>,
    ) -> Result<Self, GraphError> {
        if ids.len() != vertex_attrs.len() {
            return Err(GraphError::CountMismatch {
                ids: ids.len(),
                attrs: vertex_attrs.len(),
            });
        }
        check_ids(&ids)?;
        let n = ids.len();
        let mut attrs = vec![Attribute::Null; n * n];
        for (i, a) in vertex_attrs.into_iter().enumerate() {
            if !a.is_valid() {
                return Err(GraphError::InvalidAttribute(ids[i].clone(), ids[i].clone()));
            }
            attrs[i * n + i] = a;
        }
        for (u, v, a) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { index: u, len: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { index: v, len: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(ids[u].clone()));
            }
            if a.is_null() {
                return Err(GraphError::NullEdge(ids[u].clone(), ids[v].clone()));
            }
            if !a.is_valid() {
                return Err(GraphError::InvalidAttribute(ids[u].clone(), ids[v].clone()));
            }
            if !attrs[u * n + v].is_null() {
                return Err(GraphError::DuplicateEdge(ids[u].clone(), ids[v].clone()));
            }
            attrs[u * n + v] = a.clone();
            attrs[v * n + u] = a;
        }
        let adj = build_adj(n, |i, j| !attrs[i * n + j].is_null());
        Ok(AttributedGraph { ids, n, attrs, adj })
    }

    /// The attribute of the pair (i, j); (i, i) is the vertex attribute.
    pub fn attr(&self, i: usize, j: usize) -> &Attribute {
        &self.attrs[i * self.n + j]
    }

    /// Z[S]: the subgraph induced by `s`, with attributes restricted.
    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<AttributedGraph, GraphError> {
        self.check_set(s)?;
        let keep = s.indices();
        let k = keep.len();
        let ids = keep.iter().map(|&i| self.ids[i].clone()).collect();
        let mut attrs = vec![Attribute::Null; k * k];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                attrs[a * k + b] = self.attrs[i * self.n + j].clone();
            }
        }
        let adj = build_adj(k, |a, b| !attrs[a * k + b].is_null());
        Ok(AttributedGraph {
            ids,
            n: k,
            attrs,
            adj,
        })
    }

    /// X - X[S]: the vertex set is kept intact, every attribute whose
    /// endpoints both lie in `s` (including vertex attributes of `s`)
    /// becomes null. Attributes crossing the boundary survive.
    pub fn delete_subgraph(&self, s: &VertexSet) -> Result<AttributedGraph, GraphError> {
        self.check_set(s)?;
        let mut attrs = self.attrs.clone();
        for i in s.iter() {
            for j in s.iter() {
                attrs[i * self.n + j] = Attribute::Null;
            }
        }
        let n = self.n;
        let adj = build_adj(n, |i, j| !attrs[i * n + j].is_null());
        Ok(AttributedGraph {
            ids: self.ids.clone(),
            n,
            attrs,
            adj,
        })
    }

    /// Reinterpret as a weighted graph; every attribute must be scalar.
    pub fn try_to_weighted(&self) -> Result<WeightedGraph, GraphError> {
        let n = self.n;
        let mut w = vec![None; n * n];
        for i in 0..n {
            for j in 0..n {
                w[i * n + j] = match &self.attrs[i * n + j] {
                    Attribute::Null => None,
                    a => Some(a.as_scalar().ok_or_else(|| {
                        GraphError::NotScalar(self.ids[i].clone(), self.ids[j].clone())
                    })?),
                };
            }
        }
        Ok(WeightedGraph::from_table(self.ids.clone(), n, w))
    }
}

/// An attributed graph whose attributes are scalar weights. This is the
/// solver's input type.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightedGraph {
    ids: Vec<String>,
    n: usize,
    w: Vec<Option<f64>>, // row-major n*n, symmetric; None is the null marker
    adj: Vec<VertexSet>,
    all_positive: bool,
}

common_graph_api!(WeightedGraph);

impl WeightedGraph {
    /// Build from vertex weights and an undirected weighted edge list.
    pub fn new(
        ids: Vec<String>,
        vertex_weights: Vec<f64>,
        edges: Vec<(usize, usize, f64)>,
    ) -> Result<Self, GraphError> {
        if ids.len() != vertex_weights.len() {
            return Err(GraphError::CountMismatch {
                ids: ids.len(),
                attrs: vertex_weights.len(),
            });
        }
        check_ids(&ids)?;
        let n = ids.len();
        let mut w = vec![None; n * n];
        for (i, x) in vertex_weights.into_iter().enumerate() {
            if !x.is_finite() {
                return Err(GraphError::InvalidAttribute(ids[i].clone(), ids[i].clone()));
            }
            w[i * n + i] = Some(x);
        }
        for (u, v, x) in edges {
            if u >= n {
                return Err(GraphError::VertexOutOfRange { index: u, len: n });
            }
            if v >= n {
                return Err(GraphError::VertexOutOfRange { index: v, len: n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(ids[u].clone()));
            }
            if !x.is_finite() {
                return Err(GraphError::InvalidAttribute(ids[u].clone(), ids[v].clone()));
            }
            if w[u * n + v].is_some() {
                return Err(GraphError::DuplicateEdge(ids[u].clone(), ids[v].clone()));
            }
            w[u * n + v] = Some(x);
            w[v * n + u] = Some(x);
        }
        Ok(Self::from_table(ids, n, w))
    }

    /// Convenience constructor with ids "0".."n-1".
    pub fn with_numeric_ids(
        vertex_weights: Vec<f64>,
        edges: Vec<(usize, usize, f64)>,
    ) -> Result<Self, GraphError> {
        Self::new(numeric_ids(vertex_weights.len()), vertex_weights, edges)
    }

    pub(crate) fn from_table(ids: Vec<String>, n: usize, w: Vec<Option<f64>>) -> Self {
        let adj = build_adj(n, |i, j| w[i * n + j].is_some());
        let all_positive = w.iter().flatten().all(|&x| x > 0.0);
        WeightedGraph {
            ids,
            n,
            w,
            adj,
            all_positive,
        }
    }

    /// Whether every stored weight is strictly positive. Only then does
    /// "maximal clique" coincide with "maximal weight clique".
    pub fn all_positive(&self) -> bool {
        self.all_positive
    }

    /// Weight of the pair (i, j); `None` is the null marker.
    pub fn attr(&self, i: usize, j: usize) -> Option<f64> {
        self.w[i * self.n + j]
    }

    pub fn vertex_weight(&self, i: usize) -> Option<f64> {
        self.w[i * self.n + i]
    }

    pub fn edge_weight(&self, i: usize, j: usize) -> Option<f64> {
        if i == j {
            None
        } else {
            self.w[i * self.n + j]
        }
    }

    /// wdeg(i): the vertex weight plus the sum of incident edge
    /// weights, each incident edge counted once. A null vertex weight
    /// (possible after deletion) contributes zero.
    pub fn weighted_degree(&self, i: usize) -> Result<f64, GraphError> {
        self.check_vertex(i)?;
        let mut s = self.vertex_weight(i).unwrap_or(0.0);
        for j in self.adj[i].iter() {
            s += self.w[i * self.n + j].unwrap();
        }
        Ok(s)
    }

    /// wdeg of `i` taken with respect to the induced subgraph on
    /// `within`: only neighbors inside `within` are summed.
    pub fn weighted_degree_in(&self, i: usize, within: &VertexSet) -> Result<f64, GraphError> {
        self.check_vertex(i)?;
        let mut s = self.vertex_weight(i).unwrap_or(0.0);
        for j in self.adj[i].iter_and(within) {
            s += self.w[i * self.n + j].unwrap();
        }
        Ok(s)
    }

    /// The weight added by extending clique `c` with vertex `i`:
    /// the vertex weight of `i` plus its edges into `c`. Callers must
    /// ensure `i` is adjacent to all of `c`.
    pub(crate) fn extension_weight(&self, c: &VertexSet, i: usize) -> f64 {
        let mut s = self.vertex_weight(i).unwrap_or(0.0);
        for j in c.iter() {
            debug_assert!(self.adj[i].contains(j));
            s += self.w[i * self.n + j].unwrap();
        }
        s
    }

    /// omega(C): total sum of vertex and edge weights of the induced
    /// subgraph, each unordered edge counted once. Errors when `c` is
    /// not a clique.
    pub fn clique_weight(&self, c: &VertexSet) -> Result<f64, GraphError> {
        self.check_set(c)?;
        if let Some((i, j)) = self.first_non_edge(c) {
            return Err(GraphError::NotAClique(
                self.ids[i].clone(),
                self.ids[j].clone(),
            ));
        }
        let members = c.indices();
        let mut s = 0.0;
        for (a, &i) in members.iter().enumerate() {
            s += self.vertex_weight(i).unwrap_or(0.0);
            for &j in &members[a + 1..] {
                s += self.w[i * self.n + j].unwrap();
            }
        }
        Ok(s)
    }

    pub fn induced_subgraph(&self, s: &VertexSet) -> Result<WeightedGraph, GraphError> {
        self.check_set(s)?;
        let keep = s.indices();
        let k = keep.len();
        let ids = keep.iter().map(|&i| self.ids[i].clone()).collect();
        let mut w = vec![None; k * k];
        for (a, &i) in keep.iter().enumerate() {
            for (b, &j) in keep.iter().enumerate() {
                w[a * k + b] = self.w[i * self.n + j];
            }
        }
        Ok(Self::from_table(ids, k, w))
    }

    pub fn delete_subgraph(&self, s: &VertexSet) -> Result<WeightedGraph, GraphError> {
        self.check_set(s)?;
        let mut w = self.w.clone();
        for i in s.iter() {
            for j in s.iter() {
                w[i * self.n + j] = None;
            }
        }
        Ok(Self::from_table(self.ids.clone(), self.n, w))
    }

    pub fn to_attributed(&self) -> AttributedGraph {
        let n = self.n;
        let attrs: Vec<Attribute> = self
            .w
            .iter()
            .map(|x| match x {
                None => Attribute::Null,
                Some(v) => Attribute::scalar(*v),
            })
            .collect();
        let adj = build_adj(n, |i, j| !attrs[i * n + j].is_null());
        AttributedGraph {
            ids: self.ids.clone(),
            n,
            attrs,
            adj,
        }
    }
}
