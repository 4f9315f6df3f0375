//! Python bindings: `pyckcenter.Graph` plus element helpers.

use ckcenter::analysis::{
    annihilator, arrival_paths, double_annihilator, finitary_lattice, ArrivalSet,
    DEFAULT_MAX_VERTICES,
};
use ckcenter::center::compute_center;
use ckcenter::{Error, LeavittAlgebra, SimplicityWitness};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

type Names = Vec<String>;

fn py_err(e: Error) -> PyErr {
    match e {
        Error::LimitExceeded { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

#[pyclass(name = "Graph", frozen)]
struct PyGraph {
    inner: ckcenter::Graph,
}

impl PyGraph {
    fn set(&self, names: Vec<String>) -> PyResult<ckcenter::VertexSet> {
        self.inner.vertex_set(&names).map_err(py_err)
    }
}

#[pymethods]
impl PyGraph {
    /// `Graph(vertices, edges)` with edges given as `(id, src, dst)` tuples.
    #[new]
    fn new(vertices: Vec<String>, edges: Vec<(String, String, String)>) -> PyResult<Self> {
        let inner = ckcenter::Graph::new(vertices, edges).map_err(py_err)?;
        Ok(PyGraph { inner })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let inner = ckcenter::Graph::from_json(text).map_err(py_err)?;
        Ok(PyGraph { inner })
    }

    fn to_json(&self) -> String {
        self.inner.to_json()
    }

    #[getter]
    fn vertices(&self) -> Vec<String> {
        self.inner.vertex_names().to_vec()
    }

    #[getter]
    fn edges(&self) -> Vec<(String, String, String)> {
        let g = &self.inner;
        g.edges()
            .iter()
            .map(|e| {
                (
                    e.id.clone(),
                    g.vertex_name(e.src).to_string(),
                    g.vertex_name(e.dst).to_string(),
                )
            })
            .collect()
    }

    fn descendants(&self, vertex: &str) -> PyResult<Vec<String>> {
        let d = self.inner.descendants_of(vertex).map_err(py_err)?;
        Ok(self.inner.set_names(&d))
    }

    fn sinks(&self) -> Vec<String> {
        self.inner.set_names(&self.inner.sinks())
    }

    fn is_hereditary(&self, set: Vec<String>) -> PyResult<bool> {
        Ok(self.inner.is_hereditary(&self.set(set)?))
    }

    fn saturation(&self, set: Vec<String>) -> PyResult<Vec<String>> {
        let s = self.inner.saturation(&self.set(set)?).map_err(py_err)?;
        Ok(self.inner.set_names(&s))
    }

    fn cycles(&self) -> Vec<Vec<String>> {
        self.inner
            .cycles()
            .iter()
            .map(|c| c.names(&self.inner))
            .collect()
    }

    fn ne_cycles(&self) -> Vec<Vec<String>> {
        self.inner
            .ne_cycles()
            .iter()
            .map(|c| c.names(&self.inner))
            .collect()
    }

    fn is_simple(&self) -> bool {
        self.inner.is_simple()
    }

    /// `None` when simple, else a `(kind, names)` witness where kind is
    /// `"hereditary_saturated"` or `"exitless_cycle"`.
    fn simplicity_witness(&self) -> Option<(String, Vec<String>)> {
        match self.inner.simplicity() {
            Ok(()) => None,
            Err(SimplicityWitness::HereditarySaturated(s)) => {
                Some(("hereditary_saturated".into(), self.inner.set_names(&s)))
            }
            Err(SimplicityWitness::ExitlessCycle(c)) => {
                Some(("exitless_cycle".into(), c.names(&self.inner)))
            }
        }
    }

    /// `(True, paths)` for a finite arrival set, `(False, cycle)` otherwise.
    fn arrival_paths(&self, set: Vec<String>) -> PyResult<(bool, Vec<String>)> {
        let g = &self.inner;
        Ok(match arrival_paths(g, &self.set(set)?).map_err(py_err)? {
            ArrivalSet::Finite(paths) => (true, paths.iter().map(|p| g.path_string(p)).collect()),
            ArrivalSet::Infinite(c) => (false, c.names(g)),
        })
    }

    fn annihilator(&self, set: Vec<String>) -> PyResult<Vec<String>> {
        Ok(self
            .inner
            .set_names(&annihilator(&self.inner, &self.set(set)?)))
    }

    fn double_annihilator(&self, set: Vec<String>) -> PyResult<Vec<String>> {
        Ok(self
            .inner
            .set_names(&double_annihilator(&self.inner, &self.set(set)?)))
    }

    /// `(elements, atoms)` of the finitary annihilator lattice.
    #[pyo3(signature = (max_vertices = DEFAULT_MAX_VERTICES))]
    fn lattice(&self, max_vertices: usize) -> PyResult<(Vec<Names>, Vec<Names>)> {
        let g = &self.inner;
        let l = finitary_lattice(g, max_vertices).map_err(py_err)?;
        Ok((
            l.elements.iter().map(|s| g.set_names(s)).collect(),
            l.atoms.iter().map(|s| g.set_names(s)).collect(),
        ))
    }

    /// The center report as a JSON string.
    #[pyo3(signature = (max_vertices = DEFAULT_MAX_VERTICES))]
    fn center_json(&self, max_vertices: usize) -> PyResult<String> {
        let report = compute_center(&self.inner, max_vertices).map_err(py_err)?;
        Ok(report.to_json(&self.inner))
    }

    fn normal_form(&self, element: &str) -> PyResult<String> {
        let alg = LeavittAlgebra::new(&self.inner);
        let x = alg.parse(element).map_err(py_err)?;
        Ok(alg.format(&alg.normal_form(&x)))
    }

    fn multiply(&self, a: &str, b: &str) -> PyResult<String> {
        let alg = LeavittAlgebra::new(&self.inner);
        let a = alg.parse(a).map_err(py_err)?;
        let b = alg.parse(b).map_err(py_err)?;
        Ok(alg.format(&alg.multiply(&a, &b)))
    }

    fn is_central(&self, element: &str) -> PyResult<bool> {
        let alg = LeavittAlgebra::new(&self.inner);
        let x = alg.parse(element).map_err(py_err)?;
        Ok(alg.is_central(&alg.normal_form(&x)))
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph({} vertices, {} edges)",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

#[pymodule]
fn pyckcenter(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    Ok(())
}
