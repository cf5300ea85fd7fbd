//! Python bindings: `import ubgraph`.

use pyo3::exceptions::{PyIOError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use ubgraph::survey::{self, MinSurvey, SurveyRow};
use ubgraph::{FamilyDescriptor, Graph, GraphStream};

fn py_err(e: ubgraph::Error) -> PyErr {
    match e {
        ubgraph::Error::Io(io) => PyIOError::new_err(io.to_string()),
        other => PyValueError::new_err(other.to_string()),
    }
}

trait OrPy<T> {
    fn py(self) -> PyResult<T>;
}

impl<T> OrPy<T> for ubgraph::Result<T> {
    fn py(self) -> PyResult<T> {
        self.map_err(py_err)
    }
}

/// A finite simple graph on vertices `0..order`.
#[pyclass(
    name = "Graph",
    module = "ubgraph",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyGraph {
    inner: Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (order, edges = Vec::new()))]
    fn new(order: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        Ok(PyGraph {
            inner: Graph::from_edges(order, edges).py()?,
        })
    }

    #[staticmethod]
    fn from_graph6(text: &str) -> PyResult<Self> {
        Ok(PyGraph {
            inner: ubgraph::graph6::decode(text.as_bytes()).py()?,
        })
    }

    fn graph6(&self) -> String {
        ubgraph::graph6::encode(&self.inner)
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    #[getter]
    fn size(&self) -> usize {
        self.inner.size()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().collect()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.order() {
            return Err(py_err(ubgraph::Error::VertexOutOfRange {
                vertex: v,
                order: self.inner.order(),
            }));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    fn degrees(&self) -> Vec<usize> {
        self.inner.degrees()
    }

    fn is_connected(&self) -> bool {
        self.inner.is_connected()
    }

    fn diameter(&self) -> PyResult<usize> {
        self.inner.diameter().py()
    }

    /// `(closer_to_u, closer_to_v, equidistant)` vertex counts.
    fn pair_balance(&self, u: usize, v: usize) -> PyResult<(u64, u64, u64)> {
        let b = self.inner.pair_balance(u, v).py()?;
        Ok((b.closer_to_u, b.closer_to_v, b.equidistant))
    }

    fn relabel(&self, perm: Vec<usize>) -> PyResult<Self> {
        let mut seen = vec![false; self.inner.order()];
        let valid = perm.len() == seen.len()
            && perm
                .iter()
                .all(|&p| p < seen.len() && !std::mem::replace(&mut seen[p], true));
        if !valid {
            return Err(PyValueError::new_err("not a permutation of the vertices"));
        }
        Ok(PyGraph {
            inner: self.inner.relabel(&perm),
        })
    }

    fn __len__(&self) -> usize {
        self.inner.order()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(order={}, size={}, graph6={:?})",
            self.inner.order(),
            self.inner.size(),
            self.graph6()
        )
    }
}

impl From<Graph> for PyGraph {
    fn from(inner: Graph) -> Self {
        PyGraph { inner }
    }
}

fn fraction<'py>(py: Python<'py>, numer: u64, denom: u64) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((numer, denom))
}

/// Builds a family member from a descriptor such as `"kite:4"` or `"tube:5x4"`.
#[pyfunction]
fn family(spec: &str) -> PyResult<PyGraph> {
    let descriptor: FamilyDescriptor = spec.parse().py()?;
    Ok(descriptor.build().py()?.into())
}

/// Closed-form `uB` of a family descriptor, or `None` when there is none.
#[pyfunction]
fn closed_form(spec: &str) -> PyResult<Option<u64>> {
    let descriptor: FamilyDescriptor = spec.parse().py()?;
    Ok(ubgraph::families::formulas::closed_form(&descriptor))
}

#[pyfunction]
fn distance_unbalancedness(g: &PyGraph) -> PyResult<u64> {
    ubgraph::distance_unbalancedness(&g.inner).py()
}

#[pyfunction]
fn mostar(g: &PyGraph) -> PyResult<u64> {
    ubgraph::mostar(&g.inner).py()
}

#[pyfunction]
fn mostar_ell(g: &PyGraph, ell: usize) -> PyResult<u64> {
    ubgraph::mostar_ell(&g.inner, ell).py()
}

#[pyfunction]
fn average_unbalancedness<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyAny>> {
    let r = ubgraph::average_unbalancedness(&g.inner).py()?;
    fraction(py, *r.numer(), *r.denom())
}

#[pyfunction]
fn is_ell_distance_balanced(g: &PyGraph, ell: usize) -> PyResult<bool> {
    ubgraph::is_ell_distance_balanced(&g.inner, ell).py()
}

#[pyfunction]
fn is_highly_distance_balanced(g: &PyGraph) -> PyResult<bool> {
    ubgraph::is_highly_distance_balanced(&g.inner).py()
}

#[pyfunction]
fn profile<'py>(py: Python<'py>, g: &PyGraph) -> PyResult<Bound<'py, PyDict>> {
    let p = ubgraph::profile(&g.inner).py()?;
    let d = PyDict::new(py);
    d.set_item("order", p.order)?;
    d.set_item("size", p.size)?;
    d.set_item("diameter", p.diameter)?;
    d.set_item("unbalancedness", p.unbalancedness)?;
    d.set_item("mostar", p.mostar())?;
    d.set_item("mostar_by_ell", p.mostar_by_ell.clone())?;
    let avg = match p.average_unbalancedness {
        Some(r) => Some(fraction(py, *r.numer(), *r.denom())?),
        None => None,
    };
    d.set_item("average_unbalancedness", avg)?;
    d.set_item("balanced_pattern", p.balanced_pattern())?;
    Ok(d)
}

#[pyfunction]
fn canonical_form(g: &PyGraph) -> PyResult<String> {
    Ok(ubgraph::canonical_form(&g.inner).py()?.into_string())
}

#[pyfunction]
fn is_isomorphic(g: &PyGraph, h: &PyGraph) -> PyResult<bool> {
    ubgraph::is_isomorphic(&g.inner, &h.inner).py()
}

/// All trees of order `n`, one per isomorphism class.
#[pyfunction]
fn trees(n: usize) -> PyResult<Vec<PyGraph>> {
    Ok(ubgraph::enumerate_trees(n)
        .py()?
        .map(PyGraph::from)
        .collect())
}

/// Connected graphs of order `n` (built in up to order 7), or read from a
/// graph6 file.
#[pyfunction]
#[pyo3(signature = (n = None, path = None))]
fn connected_graphs(
    py: Python<'_>,
    n: Option<usize>,
    path: Option<String>,
) -> PyResult<Vec<PyGraph>> {
    py.detach(|| {
        open(n, path.as_deref())?
            .map(|g| g.map(PyGraph::from))
            .collect::<ubgraph::Result<_>>()
    })
    .py()
}

fn open(n: Option<usize>, path: Option<&str>) -> ubgraph::Result<GraphStream> {
    match (n, path) {
        (_, Some(path)) => GraphStream::open(path),
        (Some(n), None) => GraphStream::builtin(n),
        (None, None) => Err(ubgraph::Error::BadParams("pass an order or a path".into())),
    }
}

fn forms(list: &[ubgraph::CanonicalForm]) -> Vec<&str> {
    list.iter().map(|f| f.as_str()).collect()
}

fn row_dict<'py>(py: Python<'py>, row: &SurveyRow) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("order", row.order)?;
    d.set_item("min", row.min)?;
    d.set_item("min_second", row.min_second)?;
    d.set_item("max_second", row.max_second)?;
    d.set_item("max", row.max)?;
    d.set_item("total", row.total)?;
    d.set_item("min_attainers", forms(&row.min_attainers))?;
    d.set_item("min_second_attainers", forms(&row.min_second_attainers))?;
    d.set_item("max_second_attainers", forms(&row.max_second_attainers))?;
    d.set_item("max_attainers", forms(&row.max_attainers))?;
    Ok(d)
}

/// Extremal `uB` statistics over all trees of order `n`.
#[pyfunction]
fn tree_survey<'py>(py: Python<'py>, n: usize) -> PyResult<Bound<'py, PyDict>> {
    let row = py.detach(|| survey::tree_survey(n)).py()?;
    let d = row_dict(py, &row)?;
    if n >= 5 {
        d.set_item(
            "star_is_unique_min",
            survey::min_star_verdict(&row).py()?.holds(),
        )?;
        d.set_item(
            "merged_star_is_unique_second_min",
            survey::second_min_verdict(&row).py()?.holds(),
        )?;
    }
    let legs: Vec<Option<Vec<usize>>> = survey::max_classification(&row)
        .into_iter()
        .map(|t| t.spider_legs)
        .collect();
    d.set_item("max_spider_legs", legs)?;
    Ok(d)
}

/// Smallest nonzero `uB` over connected graphs of one order.
#[pyfunction]
#[pyo3(signature = (n = None, path = None, regular_only = false))]
fn graph_min_survey<'py>(
    py: Python<'py>,
    n: Option<usize>,
    path: Option<String>,
    regular_only: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let result = py
        .detach(|| {
            let stream = open(n, path.as_deref())?;
            if regular_only {
                survey::regular_min_survey(stream)
            } else {
                survey::graph_min_survey(stream)
            }
        })
        .py()?;
    let d = PyDict::new(py);
    d.set_item("order", result.order())?;
    match &result {
        MinSurvey::MinNonzero(row) => {
            d.set_item("total", row.total)?;
            d.set_item("balanced", row.balanced)?;
            d.set_item("min_nonzero", row.min_nonzero)?;
            d.set_item("attainers", forms(&row.attainers))?;
        }
        MinSurvey::AllBalanced { total, .. } => {
            d.set_item("total", total)?;
            d.set_item("balanced", total)?;
            d.set_item("min_nonzero", None::<u64>)?;
            d.set_item("attainers", Vec::<String>::new())?;
        }
    }
    Ok(d)
}

/// Runs the formula grids; returns `(checks, mismatches)`.
#[pyfunction]
#[pyo3(signature = (grid = None))]
fn verify(py: Python<'_>, grid: Option<String>) -> PyResult<(usize, usize)> {
    let checks = py
        .detach(|| match grid.as_deref() {
            Some(grid) => ubgraph::verify::run_grid(grid, false),
            None => ubgraph::verify::run_all(false),
        })
        .py()?;
    Ok((checks.len(), checks.iter().filter(|c| !c.passed()).count()))
}

#[pymodule]
#[pyo3(name = "ubgraph")]
pub fn ubgraph_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(family, m)?)?;
    m.add_function(wrap_pyfunction!(closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(distance_unbalancedness, m)?)?;
    m.add_function(wrap_pyfunction!(mostar, m)?)?;
    m.add_function(wrap_pyfunction!(mostar_ell, m)?)?;
    m.add_function(wrap_pyfunction!(average_unbalancedness, m)?)?;
    m.add_function(wrap_pyfunction!(is_ell_distance_balanced, m)?)?;
    m.add_function(wrap_pyfunction!(is_highly_distance_balanced, m)?)?;
    m.add_function(wrap_pyfunction!(profile, m)?)?;
    m.add_function(wrap_pyfunction!(canonical_form, m)?)?;
    m.add_function(wrap_pyfunction!(is_isomorphic, m)?)?;
    m.add_function(wrap_pyfunction!(trees, m)?)?;
    m.add_function(wrap_pyfunction!(connected_graphs, m)?)?;
    m.add_function(wrap_pyfunction!(tree_survey, m)?)?;
    m.add_function(wrap_pyfunction!(graph_min_survey, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
