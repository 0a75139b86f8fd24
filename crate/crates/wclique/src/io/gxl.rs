//! Loader for the GXL subset used by common graph benchmark
//! repositories: a single undirected `<graph>` whose nodes and edges
//! carry typed `<attr>` children.
//!
//! Numeric attribute values (`<float>`, `<int>`) are collected in
//! declaration order into the attribute vector. String values are
//! translated through a caller-supplied code table when one is given
//! and are an error otherwise. Edges without any attribute get the
//! conventional weight [1.0]. `<type>` metadata elements are ignored;
//! any other construct is rejected by name.

use std::collections::HashMap;

use super::IoError;
use crate::graph::{Attribute, AttributedGraph};

fn attr_values(
    owner: &str,
    node: roxmltree::Node,
    string_codes: Option<&HashMap<String, f64>>,
) -> Result<Vec<f64>, IoError> {
    let mut values = Vec::new();
    for attr in node.children().filter(|c| c.is_element()) {
        match attr.tag_name().name() {
            "attr" => {
                let value = attr
                    .children()
                    .find(|c| c.is_element())
                    .ok_or_else(|| IoError::Gxl(format!("attr on {owner} has no value element")))?;
                let text = value.text().unwrap_or("").trim();
                match value.tag_name().name() {
                    "float" | "int" => {
                        let x: f64 = text.parse().map_err(|_| {
                            IoError::Gxl(format!("bad numeric value `{text}` on {owner}"))
                        })?;
                        values.push(x);
                    }
                    "string" => match string_codes {
                        Some(codes) => match codes.get(text) {
                            Some(&code) => values.push(code),
                            None => {
                                return Err(IoError::Gxl(format!(
                                    "string value `{text}` on {owner} missing from the code table"
                                )))
                            }
                        },
                        None => {
                            return Err(IoError::Gxl(format!(
                                "string attribute on {owner} but no string code table supplied"
                            )))
                        }
                    },
                    other => {
                        return Err(IoError::UnsupportedGxl(format!(
                            "<{other}> attribute value"
                        )))
                    }
                }
            }
            "type" => {} // xlink metadata, not an attribute
            other => return Err(IoError::UnsupportedGxl(format!("<{other}> inside {owner}"))),
        }
    }
    Ok(values)
}

/// Parse one GXL document into an attributed graph. `string_codes`
/// maps string attribute values to numeric codes.
pub fn load_gxl(
    data: &[u8],
    string_codes: Option<&HashMap<String, f64>>,
) -> Result<AttributedGraph, IoError> {
    let text =
        std::str::from_utf8(data).map_err(|e| IoError::Gxl(format!("not valid utf-8: {e}")))?;
    let doc = roxmltree::Document::parse(text).map_err(|e| IoError::Gxl(e.to_string()))?;
    let root = doc.root_element();
    let graph = match root.tag_name().name() {
        "graph" => root,
        "gxl" => {
            let mut graphs = root
                .children()
                .filter(|c| c.is_element() && c.tag_name().name() == "graph");
            let first = graphs
                .next()
                .ok_or_else(|| IoError::Gxl("no <graph> element".into()))?;
            if graphs.next().is_some() {
                return Err(IoError::UnsupportedGxl("multiple <graph> elements".into()));
            }
            first
        }
        other => return Err(IoError::UnsupportedGxl(format!("root element <{other}>"))),
    };
    if let Some(mode) = graph.attribute("edgemode") {
        if mode != "undirected" && mode != "defaultundirected" {
            return Err(IoError::UnsupportedGxl(format!("edgemode `{mode}`")));
        }
    }

    let mut ids: Vec<String> = Vec::new();
    let mut vertex_attrs = Vec::new();
    let mut edges = Vec::new();
    for child in graph.children().filter(|c| c.is_element()) {
        match child.tag_name().name() {
            "node" => {
                let id = child
                    .attribute("id")
                    .ok_or_else(|| IoError::Gxl("node without id".into()))?
                    .to_string();
                let values = attr_values(&format!("node `{id}`"), child, string_codes)?;
                if values.is_empty() {
                    return Err(IoError::Gxl(format!(
                        "node `{id}` has no numeric attributes"
                    )));
                }
                ids.push(id);
                vertex_attrs.push(Attribute::Value(values));
            }
            "edge" => {
                let from = child
                    .attribute("from")
                    .ok_or_else(|| IoError::Gxl("edge without `from`".into()))?;
                let to = child
                    .attribute("to")
                    .ok_or_else(|| IoError::Gxl("edge without `to`".into()))?;
                let u = ids.iter().position(|x| x == from).ok_or_else(|| {
                    IoError::Gxl(format!("edge references unknown node `{from}`"))
                })?;
                let v = ids
                    .iter()
                    .position(|x| x == to)
                    .ok_or_else(|| IoError::Gxl(format!("edge references unknown node `{to}`")))?;
                let mut values =
                    attr_values(&format!("edge (`{from}`, `{to}`)"), child, string_codes)?;
                if values.is_empty() {
                    // unlabeled edge: existence only
                    values.push(1.0);
                }
                edges.push((u, v, Attribute::Value(values)));
            }
            "type" => {}
            other => return Err(IoError::UnsupportedGxl(format!("<{other}>"))),
        }
    }
    if ids.is_empty() {
        return Err(IoError::Gxl("graph has no nodes".into()));
    }
    Ok(AttributedGraph::new(ids, vertex_attrs, edges)?)
}
