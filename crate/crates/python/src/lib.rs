//! Python bindings: graphs, orientations, recognition and product deciders.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use orientkit_core::characterize::{self, DecideOptions};
use orientkit_core::format::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use orientkit_core::structure::{classify_ttf_co_chain, CoChainTTFClass};
use orientkit_core::{families, recognize_2sat, recognize_bruteforce, ProductKind};

fn value_err(e: orientkit_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Graph", module = "orientkit", eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyGraph {
    inner: orientkit_core::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = orientkit_core::Graph::from_edges(n, &edges).map_err(value_err)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: parse_graph6(text).map_err(value_err)?,
        })
    }

    #[staticmethod]
    fn from_edge_list(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: parse_edge_list(text).map_err(value_err)?,
        })
    }

    /// Built-in fixture such as `"domino"`, `"raft:3"` or `"K2,3"`.
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        families::named(name)
            .map(|inner| PyGraph { inner })
            .ok_or_else(|| PyValueError::new_err(format!("unknown fixture {name:?}")))
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges()
    }

    fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.inner.n() && v < self.inner.n() && self.inner.has_edge(u, v)
    }

    fn complement(&self) -> Self {
        PyGraph {
            inner: self.inner.complement(),
        }
    }

    fn to_graph6(&self) -> String {
        to_graph6(&self.inner)
    }

    fn to_edge_list(&self) -> String {
        to_edge_list(&self.inner)
    }

    fn __len__(&self) -> usize {
        self.inner.n()
    }

    fn __repr__(&self) -> String {
        format!("Graph(n={}, m={})", self.inner.n(), self.inner.edge_count())
    }
}

#[pyclass(name = "Orientation", module = "orientkit", skip_from_py_object)]
#[derive(Clone)]
struct PyOrientation {
    inner: orientkit_core::Orientation,
}

#[pymethods]
impl PyOrientation {
    #[staticmethod]
    fn from_arcs(graph: &PyGraph, arcs: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = orientkit_core::Orientation::from_arcs(graph.inner.clone(), &arcs).map_err(value_err)?;
        Ok(PyOrientation { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn graph(&self) -> PyGraph {
        PyGraph {
            inner: self.inner.base().clone(),
        }
    }

    fn arcs(&self) -> Vec<(usize, usize)> {
        self.inner.arcs()
    }

    fn out_neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.n() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.out_neighbors(v))
    }

    fn is_one_perfect(&self) -> bool {
        self.inner.is_one_perfect()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("orientation serializes")
    }

    fn __repr__(&self) -> String {
        format!("Orientation(n={}, arcs={})", self.inner.n(), self.inner.arcs().len())
    }
}

#[pyclass(name = "Verdict", module = "orientkit", skip_from_py_object)]
struct PyVerdict {
    inner: characterize::Verdict,
}

#[pymethods]
impl PyVerdict {
    #[getter]
    fn kind(&self) -> String {
        self.inner.kind.to_string()
    }

    #[getter]
    fn is_1po(&self) -> bool {
        self.inner.is_1po
    }

    #[getter]
    fn condition(&self) -> &str {
        &self.inner.condition
    }

    #[getter]
    fn certificate(&self) -> Option<PyOrientation> {
        self.inner
            .certificate
            .clone()
            .map(|inner| PyOrientation { inner })
    }

    /// Name of the forbidden pattern found in a no-instance, if any.
    #[getter]
    fn witness_pattern(&self) -> Option<String> {
        self.inner.witness.as_ref().map(|w| w.pattern().to_string())
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("verdict serializes")
    }

    fn __repr__(&self) -> String {
        format!("Verdict(kind={:?}, is_1po={}, condition={:?})", self.kind(), self.inner.is_1po, self.inner.condition)
    }
}

/// A 1-perfect orientation of `graph`, or `None`.
#[pyfunction]
#[pyo3(signature = (graph, brute = false))]
fn recognize(graph: &PyGraph, brute: bool) -> PyResult<Option<PyOrientation>> {
    let r = if brute {
        recognize_bruteforce(&graph.inner).map_err(value_err)?
    } else {
        recognize_2sat(&graph.inner)
    };
    Ok(r.into_certificate().map(|inner| PyOrientation { inner }))
}

#[pyfunction]
fn is_1po(graph: &PyGraph) -> bool {
    recognize_2sat(&graph.inner).is_yes()
}

fn product_kind(kind: &str) -> PyResult<ProductKind> {
    kind.parse().map_err(value_err)
}

#[pyfunction]
fn product(kind: &str, g: &PyGraph, h: &PyGraph) -> PyResult<PyGraph> {
    Ok(PyGraph {
        inner: product_kind(kind)?.apply(&g.inner, &h.inner),
    })
}

/// Decides the product (or `"join"`) of `g` and `h` through its factors.
#[pyfunction]
#[pyo3(signature = (kind, g, h, witness = true))]
fn decide(kind: &str, g: &PyGraph, h: &PyGraph, witness: bool) -> PyResult<PyVerdict> {
    let opts = DecideOptions {
        witness,
        ..DecideOptions::default()
    };
    let inner = if kind == "join" {
        characterize::decide_join_with(&g.inner, &h.inner, &opts)
    } else {
        characterize::decide_with(product_kind(kind)?, &g.inner, &h.inner, &opts)
    }
    .map_err(value_err)?;
    Ok(PyVerdict { inner })
}

#[pyfunction]
fn orient_p3_strong_raft(n: usize) -> PyResult<PyOrientation> {
    characterize::orient_p3_strong_raft(n)
        .map(|inner| PyOrientation { inner })
        .map_err(value_err)
}

/// `"K1"`, `"raft:n"`, `"raft:n*K1"`, or `None` for graphs outside the
/// connected true-twin-free co-chain class.
#[pyfunction]
fn classify_co_chain(graph: &PyGraph) -> PyResult<Option<String>> {
    Ok(match classify_ttf_co_chain(&graph.inner).map_err(value_err)? {
        CoChainTTFClass::IsK1 => Some("K1".to_string()),
        CoChainTTFClass::IsRaft(n) => Some(format!("raft:{n}")),
        CoChainTTFClass::IsRaftJoinK1(n) => Some(format!("raft:{n}*K1")),
        CoChainTTFClass::NotCoChainTTF => None,
    })
}

#[pymodule]
fn orientkit(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyOrientation>()?;
    m.add_class::<PyVerdict>()?;
    m.add_function(wrap_pyfunction!(recognize, m)?)?;
    m.add_function(wrap_pyfunction!(is_1po, m)?)?;
    m.add_function(wrap_pyfunction!(product, m)?)?;
    m.add_function(wrap_pyfunction!(decide, m)?)?;
    m.add_function(wrap_pyfunction!(orient_p3_strong_raft, m)?)?;
    m.add_function(wrap_pyfunction!(classify_co_chain, m)?)?;
    Ok(())
}
