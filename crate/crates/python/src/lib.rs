//! Python bindings: cusp types, graphs, catalogs, classification and the
//! quintic check. Rationals cross as `fractions.Fraction`, records as
//! dicts.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use cuspidal::catalog::{self as cat, CatalogQuery};
use cuspidal::classifier::{self, AuditCase, ClassifyOptions, Configuration};
use cuspidal::hn::{self, HnSeq};
use cuspidal::lattice::{self, DualGraph, InductanceMode};
use cuspidal::Rational;

fn err(e: cuspidal::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn fraction<'py>(py: Python<'py>, r: &Rational) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?.getattr("Fraction")?.call1((r.to_string(),))
}

fn to_py<'py>(py: Python<'py>, v: &serde_json::Value) -> PyResult<Bound<'py, PyAny>> {
    use serde_json::Value;
    Ok(match v {
        Value::Null => py.None().into_bound(py),
        Value::Bool(b) => b.into_pyobject(py)?.to_owned().into_any(),
        Value::Number(n) => match n.as_i64() {
            Some(i) => i.into_pyobject(py)?.into_any(),
            None => n.as_u64().unwrap_or_default().into_pyobject(py)?.into_any(),
        },
        Value::String(s) => s.into_pyobject(py)?.into_any(),
        Value::Array(a) => {
            let l = PyList::empty(py);
            for x in a {
                l.append(to_py(py, x)?)?;
            }
            l.into_any()
        }
        Value::Object(o) => {
            let d = PyDict::new(py);
            for (k, x) in o {
                d.set_item(k, to_py(py, x)?)?;
            }
            d.into_any()
        }
    })
}

fn record<'py, T: serde::Serialize>(py: Python<'py>, x: &T) -> PyResult<Bound<'py, PyAny>> {
    let v = serde_json::to_value(x).map_err(|e| PyValueError::new_err(e.to_string()))?;
    to_py(py, &v)
}

/// A standard Hamburger-Noether pair sequence with its invariants.
#[pyclass(name = "CuspType", frozen)]
struct PyCuspType(hn::CuspType);

#[pymethods]
impl PyCuspType {
    #[new]
    fn new(pairs: &str) -> PyResult<Self> {
        hn::CuspType::parse(pairs).map(PyCuspType).map_err(err)
    }

    #[getter]
    fn pairs(&self) -> String {
        self.0.seq().to_string()
    }
    #[getter]
    fn lambda_(&self) -> u64 {
        self.0.lambda()
    }
    #[getter]
    fn ind<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        fraction(py, self.0.ind())
    }
    #[getter(M)]
    fn m(&self) -> u64 {
        self.0.m()
    }
    #[getter(I)]
    fn i(&self) -> u64 {
        self.0.i()
    }
    #[getter]
    fn r(&self) -> u64 {
        self.0.r()
    }
    #[getter]
    fn s(&self) -> u64 {
        self.0.s()
    }
    #[getter]
    fn tau(&self) -> u64 {
        self.0.tau()
    }
    #[getter]
    fn multiplicities(&self) -> Vec<u64> {
        self.0.multiplicities().to_vec()
    }
    #[getter]
    fn components(&self) -> u64 {
        self.0.components()
    }

    fn expansion(&self) -> String {
        cat::expansion_text(&self.0)
    }

    fn graph(&self) -> PyResult<PyGraph> {
        hn::expand(self.0.seq()).map(|e| PyGraph(e.graph)).map_err(err)
    }

    fn record<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyAny>> {
        record(py, &self.0.record())
    }

    fn __repr__(&self) -> String {
        format!("CuspType('{}')", self.0.seq())
    }
}

/// Weighted dual graph; weights are minus self-intersections.
#[pyclass(name = "Graph", frozen)]
struct PyGraph(DualGraph);

#[pymethods]
impl PyGraph {
    /// Chain `[2,1,3]`, fork `B(3){...}` or adjacency lines.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        lattice::parse_graph(text).map(PyGraph).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn discriminant(&self) -> String {
        self.0.discriminant().to_string()
    }

    fn is_negative_definite(&self) -> bool {
        self.0.is_negative_definite()
    }

    fn contracts_to_smooth_point(&self) -> bool {
        self.0.contracts_to_smooth_point()
    }

    /// Sum over maximal admissible twigs, or both-ends chains.
    #[pyo3(signature = (both_ends = false))]
    fn inductance<'py>(&self, py: Python<'py>, both_ends: bool) -> PyResult<Bound<'py, PyAny>> {
        let mode = if both_ends { InductanceMode::BothEnds } else { InductanceMode::Twigs };
        fraction(py, &lattice::inductance_forest(&self.0, mode).map_err(err)?)
    }

    fn pairs(&self) -> PyResult<String> {
        hn::pairs_from_tree(&self.0).map(|s| s.to_string()).map_err(err)
    }

    fn compact(&self) -> String {
        lattice::render_compact(&self.0)
    }

    fn adjacency(&self) -> String {
        lattice::render_adjacency(&self.0)
    }
}

#[pyfunction]
fn expand(pairs: &str) -> PyResult<String> {
    let s: HnSeq = pairs.parse().map_err(err)?;
    hn::expand(&s).map(|e| lattice::render_compact(&e.graph)).map_err(err)
}

#[pyfunction]
fn nu<'py>(py: Python<'py>, lambda_: u64) -> PyResult<Bound<'py, PyAny>> {
    fraction(py, &hn::nu(lambda_).map_err(err)?)
}

#[pyfunction]
#[pyo3(signature = (lambda_, max_ind = None, no_delta_minus = false, jobs = None))]
fn catalog(lambda_: u64, max_ind: Option<&str>, no_delta_minus: bool, jobs: Option<usize>) -> PyResult<Vec<String>> {
    let mut q = CatalogQuery::new(lambda_);
    if let Some(b) = max_ind {
        q = q.max_ind(b.parse().map_err(err)?);
    }
    if no_delta_minus {
        q = q.delta_minus_zero();
    }
    let v = cat::sequences_with_lambda(&q, jobs).map_err(err)?;
    Ok(v.iter().map(|t| t.seq().to_string()).collect())
}

#[pyfunction]
fn minimizer<'py>(py: Python<'py>, lambda_: u64) -> PyResult<Bound<'py, PyAny>> {
    record(py, &cat::minimizer(lambda_).map_err(err)?)
}

/// Degree and `p2` of a configuration, or `None` when the degree is not
/// an integer.
#[pyfunction]
fn degree_and_p2(cusps: Vec<String>) -> PyResult<Option<(u64, i64)>> {
    let items: Vec<&str> = cusps.iter().map(String::as_str).collect();
    let cfg = Configuration::parse(&items).map_err(err)?;
    Ok(classifier::degree_of(&cfg).map(|d| (d, classifier::p2_of(&cfg, d))))
}

#[pyfunction]
#[pyo3(signature = (cusps = 4, strict = false, jobs = None))]
fn classify<'py>(py: Python<'py>, cusps: usize, strict: bool, jobs: Option<usize>) -> PyResult<Bound<'py, PyAny>> {
    let cl = classifier::run_classification(cusps, ClassifyOptions { strict, jobs }).map_err(err)?;
    record(py, &cl.cases)
}

#[pyfunction]
fn audit<'py>(py: Python<'py>, case: &str) -> PyResult<Bound<'py, PyAny>> {
    let c: AuditCase = case.parse().map_err(err)?;
    let g = c.fixture_graph().map_err(err)?;
    record(py, &classifier::audit_case(c, &g).map_err(err)?)
}

#[pyfunction]
fn verify_quintic() -> bool {
    classifier::verify_quintic()
}

#[pymodule]
#[pyo3(name = "cuspidal")]
fn cuspidal_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyCuspType>()?;
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(expand, m)?)?;
    m.add_function(wrap_pyfunction!(nu, m)?)?;
    m.add_function(wrap_pyfunction!(catalog, m)?)?;
    m.add_function(wrap_pyfunction!(minimizer, m)?)?;
    m.add_function(wrap_pyfunction!(degree_and_p2, m)?)?;
    m.add_function(wrap_pyfunction!(classify, m)?)?;
    m.add_function(wrap_pyfunction!(audit, m)?)?;
    m.add_function(wrap_pyfunction!(verify_quintic, m)?)?;
    Ok(())
}
