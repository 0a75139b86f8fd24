//! Dataset summary statistics.

use std::fmt;

use thiserror::Error;

use crate::graph::AttributedGraph;

#[derive(Debug, Error)]
pub enum StatsError {
    #[error("cannot summarize an empty graph list")]
    EmptyDataset,
    #[error("{labels} class labels for {graphs} graphs")]
    LabelCountMismatch { labels: usize, graphs: usize },
}

/// Node/edge count summary over a set of graphs. Averages are exact;
/// display rounds them to one decimal.
#[derive(Clone, Debug, PartialEq)]
pub struct DatasetStats {
    pub graphs: usize,
    /// Number of distinct class labels, when labels were supplied.
    pub class_count: Option<usize>,
    pub avg_nodes: f64,
    pub max_nodes: usize,
    pub avg_edges: f64,
    pub max_edges: usize,
}

pub fn dataset_stats(
    graphs: &[AttributedGraph],
    class_labels: Option<&[String]>,
) -> Result<DatasetStats, StatsError> {
    if graphs.is_empty() {
        return Err(StatsError::EmptyDataset);
    }
    let class_count = match class_labels {
        None => None,
        Some(labels) => {
            if labels.len() != graphs.len() {
                return Err(StatsError::LabelCountMismatch {
                    labels: labels.len(),
                    graphs: graphs.len(),
                });
            }
            let mut distinct: Vec<&String> = labels.iter().collect();
            distinct.sort();
            distinct.dedup();
            Some(distinct.len())
        }
    };
    let n = graphs.len() as f64;
    let nodes: Vec<usize> = graphs.iter().map(|g| g.vertex_count()).collect();
    let edges: Vec<usize> = graphs.iter().map(|g| g.edge_count()).collect();
    Ok(DatasetStats {
        graphs: graphs.len(),
        class_count,
        avg_nodes: nodes.iter().sum::<usize>() as f64 / n,
        max_nodes: nodes.iter().copied().max().unwrap(),
        avg_edges: edges.iter().sum::<usize>() as f64 / n,
        max_edges: edges.iter().copied().max().unwrap(),
    })
}

impl fmt::Display for DatasetStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let classes = match self.class_count {
            Some(c) => c.to_string(),
            None => "-".to_string(),
        };
        writeln!(
            f,
            "{:>8} {:>9} {:>12} {:>12} {:>12} {:>12}",
            "#graphs", "#classes", "avg(nodes)", "max(nodes)", "avg(edges)", "max(edges)"
        )?;
        write!(
            f,
            "{:>8} {:>9} {:>12.1} {:>12} {:>12.1} {:>12}",
            self.graphs, classes, self.avg_nodes, self.max_nodes, self.avg_edges, self.max_edges
        )
    }
}
