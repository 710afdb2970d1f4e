//! Python bindings. The extension module is named `magogkit`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use pyo3::create_exception;
use pyo3::exceptions::PyException;
use pyo3::prelude::*;

use magogkit::enumerate as en;
use magogkit::io;
use magogkit::{Error, Family, FamilyMatrix, Object, ObjectClass, Representation};

create_exception!(magogkit, MagogError, PyException, "Base class for magogkit errors.");
create_exception!(magogkit, InvalidObject, MagogError, "Input violates the conditions of its class.");
create_exception!(magogkit, MalformedInput, MagogError, "Input does not match any schema.");
create_exception!(magogkit, ResourceLimit, MagogError, "Requested order exceeds an enumeration guard.");

fn to_py(e: Error) -> PyErr {
    let msg = e.to_string();
    match e {
        Error::Invalid { .. } => InvalidObject::new_err(msg),
        Error::Malformed(_) | Error::OutOfRange { .. } | Error::Range(_) => MalformedInput::new_err(msg),
        Error::ResourceLimit(_) => ResourceLimit::new_err(msg),
        Error::Internal(_) => MagogError::new_err(msg),
    }
}

fn class_of(s: &str) -> PyResult<ObjectClass> {
    s.parse().map_err(to_py)
}

/// A validated object of one of the ten classes.
#[pyclass(frozen, eq, skip_from_py_object, name = "MagogObject", module = "magogkit")]
#[derive(Clone, PartialEq)]
struct PyObject_ {
    inner: Object,
}

type Pair = ((usize, usize), (usize, usize));

#[pymethods]
impl PyObject_ {
    /// e.g. `magog-fpl`.
    #[getter]
    fn class_name(&self) -> String {
        self.inner.class().to_string()
    }

    #[getter]
    fn representation(&self) -> &'static str {
        self.inner.representation().as_str()
    }

    #[getter]
    fn family(&self) -> &'static str {
        self.inner.family().as_str()
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    /// Matrix entries, or the `(n+1) x (n+1)` cells of a corner-sum or
    /// height-function matrix; `None` for FPLs and vertex models.
    fn rows(&self) -> Option<Vec<Vec<i64>>> {
        match &self.inner {
            Object::Matrix(m) => Some(m.matrix().rows()),
            Object::CornerSum(c) => Some(c.cells()),
            Object::Height(h) => Some(h.cells()),
            _ => None,
        }
    }

    /// FPL edges or vertex-model arrows `((i, j), (i2, j2))`, sorted.
    fn pairs(&self) -> Option<Vec<Pair>> {
        let v = |v: magogkit::Vertex| (v.row, v.col);
        match &self.inner {
            Object::Fpl(f) => Some(f.edges().into_iter().map(|e| (v(e.first()), v(e.second()))).collect()),
            Object::Vertex(m) => Some(m.arrows().into_iter().map(|(t, h)| (v(t), v(h))).collect()),
            _ => None,
        }
    }

    /// Converts to `target`, a representation name such as `fpl`.
    fn convert(&self, target: &str) -> PyResult<Self> {
        let r: Representation = target.parse().map_err(to_py)?;
        Ok(PyObject_ { inner: magogkit::convert(&self.inner, r).map_err(to_py)? })
    }

    fn to_json(&self) -> String {
        io::render_json(&self.inner)
    }

    fn ascii(&self) -> String {
        io::render_ascii(&self.inner)
    }

    fn svg(&self) -> String {
        io::render_svg(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("MagogObject({})", io::render_json(&self.inner))
    }
}

/// Parses and validates a JSON document.
#[pyfunction]
fn parse(text: &str) -> PyResult<PyObject_> {
    Ok(PyObject_ { inner: io::parse(text).map_err(to_py)? })
}

/// Builds a sign matrix of the given family (`magog` or `asm`).
#[pyfunction]
#[pyo3(signature = (rows, family = "magog"))]
fn matrix(rows: Vec<Vec<i64>>, family: &str) -> PyResult<PyObject_> {
    let family: Family = family.parse().map_err(to_py)?;
    let m = FamilyMatrix::from_rows(&rows, family).map_err(to_py)?;
    Ok(PyObject_ { inner: Object::Matrix(m) })
}

/// Violations of a document against `family`, as `(kind, location,
/// detail)` triples; empty if valid.
#[pyfunction]
#[pyo3(signature = (text, family = "magog"))]
fn violations(text: &str, family: &str) -> PyResult<Vec<(String, String, String)>> {
    let family: Family = family.parse().map_err(to_py)?;
    let doc = io::parse_document(text).map_err(to_py)?;
    let v = doc.verdict(family).map_err(to_py)?;
    Ok(v.violations()
        .iter()
        .map(|x| (x.kind.as_str().to_string(), x.at.to_string(), x.detail.clone()))
        .collect())
}

/// Every object of a class such as `magog-matrix` or `asm-fpl`.
#[pyfunction]
fn enumerate(py: Python<'_>, n: usize, class_name: &str) -> PyResult<Vec<PyObject_>> {
    let class = class_of(class_name)?;
    let xs = py.detach(|| en::enumerate_class(n, class)).map_err(to_py)?;
    Ok(xs.into_iter().map(|inner| PyObject_ { inner }).collect())
}

#[pyfunction]
fn count(py: Python<'_>, n: usize, class_name: &str) -> PyResult<BigUint> {
    let class = class_of(class_name)?;
    py.detach(|| en::count_class(n, class)).map_err(to_py)
}

/// `prod_{j<n} (3j+1)! / (n+j)!`.
#[pyfunction]
fn count_formula(n: usize) -> BigUint {
    en::count_formula(n)
}

#[pyfunction]
fn max_minus_ones(n: usize) -> usize {
    en::max_minus_ones(n)
}

#[pyfunction]
fn refined_stats(py: Python<'_>, n: usize) -> PyResult<BTreeMap<String, BTreeMap<usize, u64>>> {
    py.detach(|| en::refined_stats(n)).map_err(to_py)
}

/// The invariant suite as `(name, n, passed, detail)` rows.
#[pyfunction]
fn verify(py: Python<'_>, max_n: usize) -> PyResult<Vec<(String, usize, bool, String)>> {
    let checks = py.detach(|| magogkit::verify::verify(max_n)).map_err(to_py)?;
    Ok(checks.into_iter().map(|c| (c.name.to_string(), c.n, c.passed, c.detail)).collect())
}

#[pymodule(name = "magogkit")]
fn magogkit_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyObject_>()?;
    for f in [
        wrap_pyfunction!(parse, m)?,
        wrap_pyfunction!(matrix, m)?,
        wrap_pyfunction!(violations, m)?,
        wrap_pyfunction!(enumerate, m)?,
        wrap_pyfunction!(count, m)?,
        wrap_pyfunction!(count_formula, m)?,
        wrap_pyfunction!(max_minus_ones, m)?,
        wrap_pyfunction!(refined_stats, m)?,
        wrap_pyfunction!(verify, m)?,
    ] {
        m.add_function(f)?;
    }
    let py = m.py();
    m.add("MagogError", py.get_type::<MagogError>())?;
    m.add("InvalidObject", py.get_type::<InvalidObject>())?;
    m.add("MalformedInput", py.get_type::<MalformedInput>())?;
    m.add("ResourceLimit", py.get_type::<ResourceLimit>())?;
    Ok(())
}
