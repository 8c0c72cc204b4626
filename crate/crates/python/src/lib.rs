//! Python bindings: `import cisenum`.

use pyo3::create_exception;
use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use cis_core::{self as core, Algorithm, DictionaryKind, EnumOptions, VertexId, VertexSet};

create_exception!(
    cisenum,
    CisError,
    PyValueError,
    "Enumeration or input error."
);
create_exception!(
    cisenum,
    DictionaryFullError,
    CisError,
    "The solution dictionary reached its cap."
);

fn to_py(err: core::Error) -> PyErr {
    match err {
        core::Error::DictionaryFull { .. } => DictionaryFullError::new_err(err.to_string()),
        other => CisError::new_err(other.to_string()),
    }
}

/// Immutable undirected simple graph.
#[pyclass(frozen, module = "cisenum", name = "Graph")]
struct PyGraph {
    inner: core::Graph,
}

impl PyGraph {
    fn vertex_set(&self, members: Vec<VertexId>) -> PyResult<VertexSet> {
        let n = self.inner.vertex_count();
        if let Some(&bad) = members.iter().find(|&&v| v as usize >= n) {
            return Err(PyIndexError::new_err(format!(
                "vertex {bad} out of range for n = {n}"
            )));
        }
        Ok(VertexSet::new(members))
    }

    fn connected_set(&self, members: Vec<VertexId>) -> PyResult<VertexSet> {
        let s = self.vertex_set(members)?;
        if s.is_empty() || !core::is_connected_induced(&self.inner, &s) {
            return Err(CisError::new_err(
                "vertex set must be non-empty and induce a connected subgraph",
            ));
        }
        Ok(s)
    }
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(VertexId, VertexId)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: core::Graph::from_edges(n, edges).map_err(to_py)?,
        })
    }

    /// Parses edge-list text; `relabel` remaps arbitrary integer labels.
    #[staticmethod]
    #[pyo3(signature = (text, relabel = false))]
    fn parse(text: &str, relabel: bool) -> PyResult<Self> {
        let inner = if relabel {
            core::parse_edge_list_relabeled(text)
        } else {
            core::parse_edge_list(text)
        };
        Ok(PyGraph {
            inner: inner.map_err(to_py)?,
        })
    }

    /// Generates `family:n` or `gnp:n:p[:seed]`.
    #[staticmethod]
    fn from_recipe(recipe: &str) -> PyResult<Self> {
        let recipe: core::GraphRecipe = recipe.parse().map_err(to_py)?;
        Ok(PyGraph {
            inner: recipe.generate().map_err(to_py)?,
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn neighbors(&self, v: VertexId) -> PyResult<Vec<VertexId>> {
        self.vertex_set(vec![v])?;
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn edges(&self) -> Vec<(VertexId, VertexId)> {
        self.inner.edges().collect()
    }

    fn label(&self, v: VertexId) -> PyResult<u64> {
        self.vertex_set(vec![v])?;
        Ok(self.inner.label(v))
    }

    fn connected_components(&self) -> Vec<Vec<VertexId>> {
        self.inner
            .connected_components()
            .into_iter()
            .map(VertexSet::into_vec)
            .collect()
    }

    fn to_edge_list(&self) -> String {
        self.inner.to_edge_list()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, m={}, max_degree={})",
            self.inner.vertex_count(),
            self.inner.edge_count(),
            self.inner.max_degree()
        )
    }
}

fn options(
    dictionary: &str,
    max_dict: Option<usize>,
    max_solutions: Option<u64>,
) -> PyResult<EnumOptions> {
    let dictionary: DictionaryKind = dictionary.parse().map_err(to_py)?;
    Ok(EnumOptions {
        dictionary,
        max_entries: max_dict,
        max_solutions,
        ..EnumOptions::default()
    })
}

/// All connected induced subgraphs of order `k`, in traversal order.
#[pyfunction]
#[pyo3(signature = (graph, k, algorithm = "irwd", max_dict = None, dictionary = "hash"))]
fn enumerate(
    py: Python<'_>,
    graph: &PyGraph,
    k: usize,
    algorithm: &str,
    max_dict: Option<usize>,
    dictionary: &str,
) -> PyResult<Vec<Vec<VertexId>>> {
    let algorithm: Algorithm = algorithm.parse().map_err(to_py)?;
    let opts = options(dictionary, max_dict, None)?;
    py.detach(|| {
        let mut out = Vec::new();
        core::enumerate(&graph.inner, k, algorithm, &opts, |s| out.push(s.to_vec()))?;
        Ok(out)
    })
    .map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (graph, k, algorithm = "irwd", max_dict = None))]
fn count(
    py: Python<'_>,
    graph: &PyGraph,
    k: usize,
    algorithm: &str,
    max_dict: Option<usize>,
) -> PyResult<u64> {
    let algorithm: Algorithm = algorithm.parse().map_err(to_py)?;
    let opts = options("hash", max_dict, None)?;
    py.detach(|| core::enumerate(&graph.inner, k, algorithm, &opts, |_| {}))
        .map(|s| s.solutions)
        .map_err(to_py)
}

#[pyfunction]
fn oracle_bruteforce(graph: &PyGraph, k: usize) -> PyResult<Vec<Vec<VertexId>>> {
    Ok(core::oracle_bruteforce(&graph.inner, k)
        .map_err(to_py)?
        .into_iter()
        .map(VertexSet::into_vec)
        .collect())
}

#[pyfunction]
fn is_connected_induced(graph: &PyGraph, s: Vec<VertexId>) -> PyResult<bool> {
    let s = graph.vertex_set(s)?;
    if s.is_empty() {
        return Err(CisError::new_err("vertex set must be non-empty"));
    }
    Ok(core::is_connected_induced(&graph.inner, &s))
}

#[pyfunction]
fn articulation_points(graph: &PyGraph, s: Vec<VertexId>) -> PyResult<Vec<VertexId>> {
    let s = graph.connected_set(s)?;
    Ok(core::articulation_points(&graph.inner, &s).into_vec())
}

#[pyfunction]
fn set_neighborhood(graph: &PyGraph, s: Vec<VertexId>) -> PyResult<Vec<VertexId>> {
    let s = graph.vertex_set(s)?;
    Ok(core::set_neighborhood(&graph.inner, &s).into_vec())
}

#[pyfunction]
fn common_component_neighborhood(graph: &PyGraph, s: Vec<VertexId>) -> PyResult<Vec<VertexId>> {
    let s = graph.vertex_set(s)?;
    Ok(core::common_component_neighborhood(&graph.inner, &s).into_vec())
}

/// Neighbors of `s` in the supergraph, deduplicated and sorted.
#[pyfunction]
fn neighbors_in_supergraph(graph: &PyGraph, s: Vec<VertexId>) -> PyResult<Vec<Vec<VertexId>>> {
    let s = graph.connected_set(s)?;
    if s.len() < 2 {
        return Err(CisError::new_err(
            "neighbors in the supergraph need |s| >= 2",
        ));
    }
    let mut out = core::neighbors_in_supergraph(&graph.inner, &s);
    out.sort();
    out.dedup();
    Ok(out.into_iter().map(VertexSet::into_vec).collect())
}

#[pyfunction]
fn count_upper_bound(n: usize, delta: usize, k: usize) -> PyResult<f64> {
    core::count_upper_bound(n, delta, k).map_err(to_py)
}

#[pyfunction]
#[pyo3(signature = (graph, k, max_n = core::DEFAULT_ORACLE_CAP))]
fn verify_lemma1<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    k: usize,
    max_n: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let r = core::verify_lemma1(&graph.inner, k, max_n).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("n", r.n)?;
    d.set_item("k", r.k)?;
    d.set_item("nodes", r.nodes)?;
    d.set_item("edges", r.edges)?;
    d.set_item("connected", r.connected)?;
    d.set_item("symmetric", r.symmetric)?;
    d.set_item("diameter", r.diameter)?;
    d.set_item("bound", r.bound)?;
    d.set_item("pass", r.pass)?;
    Ok(d)
}

/// Timed enumeration; durations are in nanoseconds.
#[pyfunction]
#[pyo3(signature = (graph, k, algorithm = "irwd", graph_id = "", max_solutions = None, dictionary = "hash"))]
fn run_benchmark<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    k: usize,
    algorithm: &str,
    graph_id: &str,
    max_solutions: Option<u64>,
    dictionary: &str,
) -> PyResult<Bound<'py, PyDict>> {
    let algorithm: Algorithm = algorithm.parse().map_err(to_py)?;
    let opts = options(dictionary, None, max_solutions)?;
    let r = py
        .detach(|| core::run_benchmark(&graph.inner, k, algorithm, graph_id, &opts))
        .map_err(to_py)?;
    let d = PyDict::new(py);
    let ns = |t: std::time::Duration| t.as_nanos() as u64;
    d.set_item("algorithm", r.algorithm.as_str())?;
    d.set_item("graph_id", &r.graph_id)?;
    d.set_item("n", r.n)?;
    d.set_item("m", r.m)?;
    d.set_item("k", r.k)?;
    d.set_item("delta", r.delta)?;
    d.set_item("dictionary", r.dictionary)?;
    d.set_item("total_solutions", r.total_solutions)?;
    d.set_item("truncated", r.truncated)?;
    d.set_item("total_time_ns", ns(r.total_time))?;
    d.set_item("max_delay_ns", ns(r.max_delay))?;
    d.set_item("p50_delay_ns", ns(r.p50_delay))?;
    d.set_item("p99_delay_ns", ns(r.p99_delay))?;
    d.set_item("dict_lookups", r.dict_lookups)?;
    d.set_item("articulation_time_ns", ns(r.articulation_time))?;
    d.set_item("neighborhood_time_ns", ns(r.neighborhood_time))?;
    d.set_item(
        "common_neighborhood_time_ns",
        ns(r.common_neighborhood_time),
    )?;
    Ok(d)
}

#[pymodule]
fn cisenum(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add("CisError", m.py().get_type::<CisError>())?;
    m.add(
        "DictionaryFullError",
        m.py().get_type::<DictionaryFullError>(),
    )?;
    m.add_function(wrap_pyfunction!(enumerate, m)?)?;
    m.add_function(wrap_pyfunction!(count, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(is_connected_induced, m)?)?;
    m.add_function(wrap_pyfunction!(articulation_points, m)?)?;
    m.add_function(wrap_pyfunction!(set_neighborhood, m)?)?;
    m.add_function(wrap_pyfunction!(common_component_neighborhood, m)?)?;
    m.add_function(wrap_pyfunction!(neighbors_in_supergraph, m)?)?;
    m.add_function(wrap_pyfunction!(count_upper_bound, m)?)?;
    m.add_function(wrap_pyfunction!(verify_lemma1, m)?)?;
    m.add_function(wrap_pyfunction!(run_benchmark, m)?)?;
    Ok(())
}
