//! The native JSON graph document.
//!
//! ```json
//! {
//!   "directed": false,
//!   "vertices": [{"id": "1", "attr": [1.0]}],
//!   "edges": [{"u": "1", "v": "2", "attr": [5.0]}]
//! }
//! ```
//!
//! Ids are unique strings, edges are undirected and listed once, and
//! attribute lists are nonempty finite reals. Saving is canonical
//! (vertices in index order, edges sorted by endpoint indices), so
//! load-save round-trips are byte-stable.

use serde::{Deserialize, Serialize};

use super::IoError;
use crate::graph::{Attribute, AttributedGraph, WeightedGraph};

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GraphDocument {
    pub directed: bool,
    pub vertices: Vec<VertexEntry>,
    pub edges: Vec<EdgeEntry>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VertexEntry {
    pub id: String,
    pub attr: Vec<f64>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EdgeEntry {
    pub u: String,
    pub v: String,
    pub attr: Vec<f64>,
}

fn check_attr(owner: &str, attr: &[f64]) -> Result<(), IoError> {
    if attr.is_empty() {
        return Err(IoError::Document(format!(
            "attribute list for {owner} is empty"
        )));
    }
    if let Some(bad) = attr.iter().find(|x| !x.is_finite()) {
        return Err(IoError::Document(format!(
            "attribute list for {owner} contains non-finite value {bad}"
        )));
    }
    Ok(())
}

impl GraphDocument {
    pub fn to_graph(&self) -> Result<AttributedGraph, IoError> {
        if self.directed {
            return Err(IoError::Document("`directed` must be false".into()));
        }
        if self.vertices.is_empty() {
            return Err(IoError::Document("vertex list is empty".into()));
        }
        let mut ids = Vec::with_capacity(self.vertices.len());
        let mut attrs = Vec::with_capacity(self.vertices.len());
        for v in &self.vertices {
            if ids.contains(&v.id) {
                return Err(IoError::Document(format!("duplicate vertex id `{}`", v.id)));
            }
            check_attr(&format!("vertex `{}`", v.id), &v.attr)?;
            ids.push(v.id.clone());
            attrs.push(Attribute::Value(v.attr.clone()));
        }
        let index_of = |id: &str| -> Result<usize, IoError> {
            ids.iter()
                .position(|x| x == id)
                .ok_or_else(|| IoError::Document(format!("edge references unknown vertex `{id}`")))
        };
        let mut edges = Vec::with_capacity(self.edges.len());
        let mut seen: Vec<(usize, usize)> = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let u = index_of(&e.u)?;
            let v = index_of(&e.v)?;
            if u == v {
                return Err(IoError::Document(format!("self-loop edge on `{}`", e.u)));
            }
            let key = (u.min(v), u.max(v));
            if seen.contains(&key) {
                return Err(IoError::Document(format!(
                    "duplicate edge between `{}` and `{}`",
                    e.u, e.v
                )));
            }
            seen.push(key);
            check_attr(&format!("edge (`{}`, `{}`)", e.u, e.v), &e.attr)?;
            edges.push((u, v, Attribute::Value(e.attr.clone())));
        }
        Ok(AttributedGraph::new(ids, attrs, edges)?)
    }

    pub fn from_graph(g: &AttributedGraph) -> Result<GraphDocument, IoError> {
        let n = g.vertex_count();
        let mut vertices = Vec::with_capacity(n);
        for i in 0..n {
            let attr = match g.attr(i, i) {
                Attribute::Value(v) => v.clone(),
                Attribute::Null => {
                    return Err(IoError::Document(format!(
                        "vertex `{}` has no attribute and cannot be serialized",
                        g.id(i)
                    )))
                }
            };
            vertices.push(VertexEntry {
                id: g.id(i).to_string(),
                attr,
            });
        }
        let mut edges = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                if let Attribute::Value(v) = g.attr(i, j) {
                    edges.push(EdgeEntry {
                        u: g.id(i).to_string(),
                        v: g.id(j).to_string(),
                        attr: v.clone(),
                    });
                }
            }
        }
        Ok(GraphDocument {
            directed: false,
            vertices,
            edges,
        })
    }
}

fn json_error(e: serde_json::Error) -> IoError {
    IoError::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

/// Parse a graph document.
pub fn load_graph(data: &[u8]) -> Result<AttributedGraph, IoError> {
    let doc: GraphDocument = serde_json::from_slice(data).map_err(json_error)?;
    doc.to_graph()
}

/// Parse a graph document whose attributes must all be scalar weights.
pub fn load_weighted(data: &[u8]) -> Result<WeightedGraph, IoError> {
    let g = load_graph(data)?;
    Ok(g.try_to_weighted()?)
}

/// Serialize in canonical form: vertices in index order, edges sorted
/// by (min, max) endpoint index. Saving the result of a load is
/// byte-identical to saving twice.
pub fn save_graph(g: &AttributedGraph) -> Result<String, IoError> {
    let doc = GraphDocument::from_graph(g)?;
    let mut s = serde_json::to_string_pretty(&doc).map_err(json_error)?;
    s.push('\n');
    Ok(s)
}
