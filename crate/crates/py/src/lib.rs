//! Python module `gridreach`.

use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ::gridreach as core;
use core::{EngineConfig, Vertex};

fn value_err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn vertex((x, y): (usize, usize)) -> Vertex {
    Vertex::new(x, y)
}

/// A layered grid graph on the (n+1) x (n+1) lattice.
#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: core::LayeredGridGraph,
}

#[pymethods]
impl PyGraph {
    /// Builds a graph from lists of (x, y) tails of north and east edges.
    #[new]
    #[pyo3(signature = (n, north=Vec::new(), east=Vec::new()))]
    fn new(n: usize, north: Vec<(usize, usize)>, east: Vec<(usize, usize)>) -> PyResult<Self> {
        if n == 0 {
            return Err(PyValueError::new_err("n must be at least 1"));
        }
        let mut b = core::GraphBuilder::new(n);
        for (x, y) in north {
            b.set_north(x, y, true).map_err(value_err)?;
        }
        for (x, y) in east {
            b.set_east(x, y, true).map_err(value_err)?;
        }
        Ok(PyGraph { inner: b.build() })
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        core::parse_lgg(text)
            .map(|inner| PyGraph { inner })
            .map_err(value_err)
    }

    #[staticmethod]
    fn load(path: &str) -> PyResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| PyIOError::new_err(e.to_string()))?;
        Self::parse(&text)
    }

    #[staticmethod]
    #[pyo3(signature = (n, p_north=0.5, p_east=0.5, seed=0))]
    fn random(n: usize, p_north: f64, p_east: f64, seed: u64) -> PyResult<Self> {
        if n == 0 || !(0.0..=1.0).contains(&p_north) || !(0.0..=1.0).contains(&p_east) {
            return Err(PyValueError::new_err(
                "need n >= 1 and probabilities in [0, 1]",
            ));
        }
        Ok(PyGraph {
            inner: core::gen_random(n, p_north, p_east, seed),
        })
    }

    /// One of "full", "empty", "staircase", "single-path".
    #[staticmethod]
    fn family(name: &str, n: usize) -> PyResult<Self> {
        if n == 0 {
            return Err(PyValueError::new_err("n must be at least 1"));
        }
        let f: core::Family = name.parse().map_err(value_err)?;
        Ok(PyGraph {
            inner: core::gen_family(f, n),
        })
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    fn has_north(&self, x: usize, y: usize) -> bool {
        self.inner.has_north(x, y)
    }

    fn has_east(&self, x: usize, y: usize) -> bool {
        self.inner.has_east(x, y)
    }

    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<((usize, usize), (usize, usize))> {
        self.inner
            .edges()
            .into_iter()
            .map(|(a, b)| ((a.x, a.y), (b.x, b.y)))
            .collect()
    }

    fn to_lgg(&self) -> String {
        core::emit_lgg(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(n={}, edges={})",
            self.inner.n(),
            self.inner.edge_count()
        )
    }
}

/// Decides whether `t` is reachable from `s`. Returns `(reachable, metrics)`.
#[pyfunction]
#[allow(clippy::too_many_arguments)]
#[pyo3(signature = (graph, s, t, epsilon=1.0, k=None, memo=false, audit=false))]
fn reach<'py>(
    py: Python<'py>,
    graph: &PyGraph,
    s: (usize, usize),
    t: (usize, usize),
    epsilon: f64,
    k: Option<usize>,
    memo: bool,
    audit: bool,
) -> PyResult<(bool, Bound<'py, PyDict>)> {
    let cfg = match k {
        Some(k) => EngineConfig::explicit_k(k),
        None => EngineConfig::epsilon(epsilon),
    }
    .with_memo(memo)
    .with_audit(audit);
    let ans = core::reach(&graph.inner, vertex(s), vertex(t), &cfg).map_err(value_err)?;
    let m = &ans.metrics;
    let d = PyDict::new(py);
    d.set_item("n", m.n)?;
    d.set_item("k_top", m.k_top)?;
    d.set_item("pushes", m.pushes)?;
    d.set_item("pops", m.pops)?;
    d.set_item("edge_queries", m.edge_queries)?;
    d.set_item("base_case_calls", m.base_case_calls)?;
    d.set_item("recursive_calls", m.total_recursive_calls())?;
    d.set_item("work", m.work())?;
    d.set_item("peak_stack", m.peak_stack())?;
    d.set_item("peak_tracked_words", m.peak_tracked_words)?;
    d.set_item("stack_bound_violations", m.stack_bound_violations)?;
    d.set_item("visit_once_violations", m.visit_once_violations)?;
    Ok((ans.reachable, d))
}

/// Breadth-first reference answer.
#[pyfunction]
fn oracle_reach(graph: &PyGraph, s: (usize, usize), t: (usize, usize)) -> PyResult<bool> {
    core::oracle_reach(&graph.inner.view(), vertex(s), vertex(t)).map_err(value_err)
}

#[pyfunction]
fn choose_k(n: usize, epsilon: f64) -> PyResult<usize> {
    if n < 2 || !(epsilon > 0.0 && epsilon <= 1.0) {
        return Err(PyValueError::new_err("need n >= 2 and epsilon in (0, 1]"));
    }
    Ok(core::choose_k(n, epsilon))
}

fn check_k(k: usize) -> PyResult<()> {
    if k < 2 {
        return Err(PyValueError::new_err("k must be at least 2"));
    }
    Ok(())
}

#[pyfunction]
#[pyo3(signature = (n, k, c_t=core::Bounds::CALIBRATED.c_t))]
fn predicted_calls(n: usize, k: usize, c_t: u64) -> PyResult<u128> {
    check_k(k)?;
    Ok(core::metrics::predicted_calls(n, k, c_t))
}

#[pyfunction]
#[pyo3(signature = (n, k, c_s=core::Bounds::CALIBRATED.c_s))]
fn predicted_words(n: usize, k: usize, c_s: u64) -> PyResult<u128> {
    check_k(k)?;
    Ok(core::metrics::predicted_words(n, k, c_s))
}

#[pymodule]
#[pyo3(name = "gridreach")]
fn gridreach_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(reach, m)?)?;
    m.add_function(wrap_pyfunction!(oracle_reach, m)?)?;
    m.add_function(wrap_pyfunction!(choose_k, m)?)?;
    m.add_function(wrap_pyfunction!(predicted_calls, m)?)?;
    m.add_function(wrap_pyfunction!(predicted_words, m)?)?;
    Ok(())
}
