//! Python bindings: graph construction and IO, the clique solver, and
//! graph matching, exposed as the `wclique_py` module.
//!
//! Cliques and morphisms cross the boundary as external-id lists so
//! Python code never sees internal vertex indices.

use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use wclique::gen;
use wclique::graph::{AttributedGraph, VertexSet, WeightedGraph as CoreWeighted};
use wclique::io;
use wclique::matching::{self, AttributeKernel};
use wclique::solver::{
    self, brute_force_mwcp, enumerate_basic, enumerate_pivot, EstimateKind, PivotStrategy,
    SolverConfig, SolverReport,
};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_pivot(s: &str) -> PyResult<PivotStrategy> {
    s.parse().map_err(value_err)
}

fn parse_estimate(s: &str) -> PyResult<EstimateKind> {
    s.parse().map_err(value_err)
}

fn parse_kernel(name: &str, sigma: f64) -> PyResult<AttributeKernel> {
    match name {
        "dot" => Ok(AttributeKernel::Dot),
        "rbf" => AttributeKernel::rbf(sigma).map_err(value_err),
        "discrete" => Ok(AttributeKernel::Discrete),
        _ => Err(value_err(format!("unknown kernel `{name}`"))),
    }
}

fn build_config(
    pivot: &str,
    estimate: &str,
    budget: Option<u64>,
    seed: u64,
) -> PyResult<SolverConfig> {
    Ok(SolverConfig {
        pivot: parse_pivot(pivot)?,
        estimate: parse_estimate(estimate)?,
        budget,
        rng_seed: seed,
        ..Default::default()
    })
}

fn clique_ids(z: &CoreWeighted, set: &VertexSet) -> Vec<String> {
    z.external_ids(set)
}

fn report_dict<'py>(
    py: Python<'py>,
    z: &CoreWeighted,
    report: &SolverReport,
) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("clique", clique_ids(z, &report.best_clique))?;
    d.set_item("weight", report.best_weight)?;
    d.set_item("recursions", report.recursions)?;
    d.set_item("completed", report.completed)?;
    let trace: Vec<(u64, f64)> = report
        .trace
        .iter()
        .map(|t| (t.recursions, t.best_weight))
        .collect();
    d.set_item("trace", trace)?;
    Ok(d)
}

/// A scalar-weighted undirected graph.
#[pyclass(name = "WeightedGraph")]
struct PyWeightedGraph {
    inner: CoreWeighted,
}

#[pymethods]
impl PyWeightedGraph {
    /// Build from vertex ids, vertex weights, and (u, v, weight) edges
    /// given by id.
    #[new]
    fn new(
        ids: Vec<String>,
        vertex_weights: Vec<f64>,
        edges: Vec<(String, String, f64)>,
    ) -> PyResult<Self> {
        let index_of = |id: &str| -> PyResult<usize> {
            ids.iter()
                .position(|x| x == id)
                .ok_or_else(|| value_err(format!("unknown vertex id `{id}`")))
        };
        let edges = edges
            .iter()
            .map(|(u, v, w)| Ok((index_of(u)?, index_of(v)?, *w)))
            .collect::<PyResult<Vec<_>>>()?;
        let inner = CoreWeighted::new(ids, vertex_weights, edges).map_err(value_err)?;
        Ok(PyWeightedGraph { inner })
    }

    /// Parse a graph document (JSON text) with scalar attributes.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = io::load_weighted(text.as_bytes()).map_err(value_err)?;
        Ok(PyWeightedGraph { inner })
    }

    fn to_json(&self) -> PyResult<String> {
        io::save_graph(&self.inner.to_attributed()).map_err(value_err)
    }

    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn ids(&self) -> Vec<String> {
        self.inner.ids().to_vec()
    }

    fn all_positive(&self) -> bool {
        self.inner.all_positive()
    }

    fn neighbors(&self, id: &str) -> PyResult<Vec<String>> {
        let i = self.index(id)?;
        let n = self.inner.neighbors(i).map_err(value_err)?;
        Ok(self.inner.external_ids(n))
    }

    fn weighted_degree(&self, id: &str) -> PyResult<f64> {
        let i = self.index(id)?;
        self.inner.weighted_degree(i).map_err(value_err)
    }

    fn clique_weight(&self, clique: Vec<String>) -> PyResult<f64> {
        let set = self.vertex_set(&clique)?;
        self.inner.clique_weight(&set).map_err(value_err)
    }

    fn is_clique(&self, clique: Vec<String>) -> PyResult<bool> {
        let set = self.vertex_set(&clique)?;
        self.inner.is_clique(&set).map_err(value_err)
    }

    fn __repr__(&self) -> String {
        format!(
            "WeightedGraph(vertices={}, edges={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

impl PyWeightedGraph {
    fn index(&self, id: &str) -> PyResult<usize> {
        self.inner
            .index_of(id)
            .ok_or_else(|| value_err(format!("unknown vertex id `{id}`")))
    }

    fn vertex_set(&self, ids: &[String]) -> PyResult<VertexSet> {
        let mut set = VertexSet::empty(self.inner.vertex_count());
        for id in ids {
            set.insert(self.index(id)?);
        }
        Ok(set)
    }
}

/// An undirected graph with vector attributes, the matching input.
#[pyclass(name = "AttributedGraph")]
struct PyAttributedGraph {
    inner: AttributedGraph,
}

#[pymethods]
impl PyAttributedGraph {
    /// Parse a graph document (JSON text).
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = io::load_graph(text.as_bytes()).map_err(value_err)?;
        Ok(PyAttributedGraph { inner })
    }

    /// Load a `.graph.json` or `.gxl` file.
    #[staticmethod]
    fn from_file(path: &str) -> PyResult<Self> {
        let inner = io::load_graph_path(std::path::Path::new(path))
            .map_err(|e| PyIOError::new_err(e.to_string()))?;
        Ok(PyAttributedGraph { inner })
    }

    fn to_json(&self) -> PyResult<String> {
        io::save_graph(&self.inner).map_err(value_err)
    }

    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn ids(&self) -> Vec<String> {
        self.inner.ids().to_vec()
    }

    fn __repr__(&self) -> String {
        format!(
            "AttributedGraph(vertices={}, edges={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// Find a maximum weight clique; returns a dict with the clique (as
/// ids), weight, recursion count, completion flag, and trace.
#[pyfunction]
#[pyo3(signature = (graph, pivot="clique", estimate="deg", budget=None, seed=0))]
fn solve<'py>(
    py: Python<'py>,
    graph: &PyWeightedGraph,
    pivot: &str,
    estimate: &str,
    budget: Option<u64>,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let config = build_config(pivot, estimate, budget, seed)?;
    let report = solver::solve(&graph.inner, &config).map_err(value_err)?;
    report_dict(py, &graph.inner, &report)
}

/// Enumerate all maximal weight cliques as (ids, weight) pairs.
#[pyfunction]
#[pyo3(signature = (graph, pivot="none", seed=0))]
fn enumerate_cliques<'py>(
    py: Python<'py>,
    graph: &PyWeightedGraph,
    pivot: &str,
    seed: u64,
) -> PyResult<Bound<'py, PyList>> {
    let strategy = parse_pivot(pivot)?;
    let z = &graph.inner;
    let mut cliques: Vec<(Vec<String>, f64)> = Vec::new();
    let visit = |c: &VertexSet| {
        let w = z.clique_weight(c).expect("enumerated sets are cliques");
        (clique_ids(z, c), w)
    };
    match strategy {
        PivotStrategy::None => {
            enumerate_basic(z, |c| cliques.push(visit(c)));
        }
        _ => {
            enumerate_pivot(z, strategy, seed, |c| cliques.push(visit(c))).map_err(value_err)?;
        }
    }
    PyList::new(py, cliques)
}

/// Exhaustive reference optimum (small graphs only).
#[pyfunction]
fn brute_force(graph: &PyWeightedGraph) -> PyResult<(Vec<String>, f64)> {
    let (set, weight) = brute_force_mwcp(&graph.inner).map_err(value_err)?;
    Ok((clique_ids(&graph.inner, &set), weight))
}

/// Match two attributed graphs; returns a dict with the kernel value,
/// lengths, similarity, morphism (id pairs), and solver report fields.
#[pyfunction]
#[pyo3(signature = (x, y, kernel="dot", sigma=1.0, pivot="clique", estimate="cs", budget=None, seed=0))]
#[allow(clippy::too_many_arguments)]
fn match_graphs<'py>(
    py: Python<'py>,
    x: &PyAttributedGraph,
    y: &PyAttributedGraph,
    kernel: &str,
    sigma: f64,
    pivot: &str,
    estimate: &str,
    budget: Option<u64>,
    seed: u64,
) -> PyResult<Bound<'py, PyDict>> {
    let kernel = parse_kernel(kernel, sigma)?;
    let config = build_config(pivot, estimate, budget, seed)?;
    let result = matching::graph_kernel(&x.inner, &y.inner, &kernel, &config).map_err(value_err)?;
    let d = PyDict::new(py);
    d.set_item("kernel", result.kernel_value)?;
    d.set_item("length_x", result.length_x)?;
    d.set_item("length_y", result.length_y)?;
    d.set_item("similarity", result.similarity)?;
    let morphism: Vec<(String, String)> = result
        .morphism
        .pairs()
        .iter()
        .map(|&(i, j)| (x.inner.id(i).to_string(), y.inner.id(j).to_string()))
        .collect();
    d.set_item("morphism", morphism)?;
    d.set_item("recursions", result.report.recursions)?;
    d.set_item("completed", result.report.completed)?;
    Ok(d)
}

/// Closed-form graph length l(X).
#[pyfunction]
#[pyo3(signature = (x, kernel="dot", sigma=1.0))]
fn graph_length(x: &PyAttributedGraph, kernel: &str, sigma: f64) -> PyResult<f64> {
    let kernel = parse_kernel(kernel, sigma)?;
    matching::graph_length(&x.inner, &kernel).map_err(value_err)
}

/// Normalized similarity s(X, Y); errors when a graph has zero length.
#[pyfunction]
#[pyo3(signature = (x, y, kernel="dot", sigma=1.0, pivot="clique", estimate="cs", budget=None, seed=0))]
#[allow(clippy::too_many_arguments)]
fn similarity(
    x: &PyAttributedGraph,
    y: &PyAttributedGraph,
    kernel: &str,
    sigma: f64,
    pivot: &str,
    estimate: &str,
    budget: Option<u64>,
    seed: u64,
) -> PyResult<f64> {
    let kernel = parse_kernel(kernel, sigma)?;
    let config = build_config(pivot, estimate, budget, seed)?;
    matching::similarity(&x.inner, &y.inner, &kernel, &config).map_err(value_err)
}

/// Seeded random weighted graph.
#[pyfunction]
#[pyo3(signature = (n, p, lo=0.0, hi=1.0, seed=0))]
fn generate_weighted(n: usize, p: f64, lo: f64, hi: f64, seed: u64) -> PyResult<PyWeightedGraph> {
    let inner = gen::generate_random_weighted(n, p, lo, hi, seed).map_err(value_err)?;
    Ok(PyWeightedGraph { inner })
}

/// Seeded random attributed graph.
#[pyfunction]
#[pyo3(signature = (n, p, attr_dim=1, seed=0))]
fn generate_attributed(
    n: usize,
    p: f64,
    attr_dim: usize,
    seed: u64,
) -> PyResult<PyAttributedGraph> {
    let inner = gen::generate_random_attributed(n, p, attr_dim, seed).map_err(value_err)?;
    Ok(PyAttributedGraph { inner })
}

#[pymodule]
fn wclique_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<PyWeightedGraph>()?;
    m.add_class::<PyAttributedGraph>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_cliques, m)?)?;
    m.add_function(wrap_pyfunction!(brute_force, m)?)?;
    m.add_function(wrap_pyfunction!(match_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(graph_length, m)?)?;
    m.add_function(wrap_pyfunction!(similarity, m)?)?;
    m.add_function(wrap_pyfunction!(generate_weighted, m)?)?;
    m.add_function(wrap_pyfunction!(generate_attributed, m)?)?;
    Ok(())
}
