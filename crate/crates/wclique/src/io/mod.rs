//! Graph serialization: the native JSON document format and a GXL
//! subset loader.

mod gxl;
mod json;

pub use gxl::load_gxl;
pub use json::{load_graph, load_weighted, save_graph, EdgeEntry, GraphDocument, VertexEntry};

use std::path::Path;

use thiserror::Error;

use crate::graph::{AttributedGraph, GraphError};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("json parse error at line {line}, column {column}: {message}")]
    Json {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid graph document: {0}")]
    Document(String),
    #[error("gxl error: {0}")]
    Gxl(String),
    #[error("unsupported gxl construct: {0}")]
    UnsupportedGxl(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Load a graph from a `.graph.json` or `.gxl` file, picking the
/// parser by extension.
pub fn load_graph_path(path: &Path) -> Result<AttributedGraph, IoError> {
    let data = std::fs::read(path)?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("gxl") => load_gxl(&data, None),
        _ => load_graph(&data),
    }
}
