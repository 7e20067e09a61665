//! Python bindings: `import pdo_py`.

use pdo_core::identities::{self, forms};
use pdo_core::partitions;
use pdo_core::{IdentityReport, PdoPair, PdoPartition, RunConfig};
use pyo3::exceptions::{PyKeyError, PyValueError};
use pyo3::prelude::*;

fn value_err(e: pdo_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// A partition into odd parts with one designated occurrence per size.
#[pyclass(name = "Partition", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPartition(PdoPartition);

#[pymethods]
impl PyPartition {
    /// Parses text such as `3+3'+1'+1`; `∅` or `""` is the empty partition.
    #[new]
    #[pyo3(signature = (text = ""))]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyPartition).map_err(value_err)
    }

    /// `(size, multiplicity, designated)` runs, largest size first.
    fn runs(&self) -> Vec<(u32, u32, u32)> {
        self.0
            .runs()
            .rev()
            .map(|(s, r)| (s, r.multiplicity, r.designated))
            .collect()
    }

    #[getter]
    fn weight(&self) -> u64 {
        self.0.weight()
    }

    #[getter]
    fn ell_d(&self) -> u32 {
        self.0.stats().ell_d
    }

    #[getter]
    fn ell_d_odd(&self) -> u32 {
        self.0.stats().ell_d_odd
    }

    /// The `y = 0` bijection; needs every multiplicity even.
    fn to_pair(&self) -> PyResult<PyPair> {
        partitions::bijection_forward(&self.0)
            .map(PyPair)
            .map_err(value_err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition('{}')", self.0)
    }
}

/// An ordered pair `(mu | nu)` of PDO partitions.
#[pyclass(name = "Pair", frozen, eq, hash, skip_from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPair(PdoPair);

#[pymethods]
impl PyPair {
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(PyPair).map_err(value_err)
    }

    #[staticmethod]
    fn of(mu: &PyPartition, nu: &PyPartition) -> Self {
        PyPair(PdoPair::new(mu.0.clone(), nu.0.clone()))
    }

    #[getter]
    fn mu(&self) -> PyPartition {
        PyPartition(self.0.mu.clone())
    }

    #[getter]
    fn nu(&self) -> PyPartition {
        PyPartition(self.0.nu.clone())
    }

    #[getter]
    fn weight(&self) -> u64 {
        self.0.stats().weight
    }

    #[getter]
    fn ell_d_sum(&self) -> u32 {
        self.0.stats().ell_d_sum
    }

    #[getter]
    fn ell_r(&self) -> u32 {
        self.0.stats().ell_r
    }

    /// Inverse of `Partition.to_pair`; rejects pairs with a shared size.
    fn to_partition(&self) -> PyResult<PyPartition> {
        partitions::bijection_inverse(&self.0)
            .map(PyPartition)
            .map_err(value_err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Pair('{}')", self.0)
    }
}

/// Outcome of one identity check.
#[pyclass(name = "Report", frozen)]
struct PyReport(IdentityReport);

#[pymethods]
impl PyReport {
    #[getter]
    fn id(&self) -> &str {
        &self.0.id
    }

    #[getter]
    fn truncation(&self) -> usize {
        self.0.truncation
    }

    #[getter]
    fn passed(&self) -> bool {
        self.0.pass
    }

    /// `(power, expected, actual)` of the first differing coefficient.
    #[getter]
    fn first_mismatch(&self) -> Option<(usize, String, String)> {
        self.0
            .first_mismatch
            .as_ref()
            .map(|m| (m.power, m.expected.clone(), m.actual.clone()))
    }

    #[getter]
    fn note(&self) -> Option<String> {
        self.0.note.clone()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("reports serialize")
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("<Report {}>", self.0)
    }
}

fn config(truncation: Option<usize>, seed: Option<u64>, corrupt_power: Option<usize>) -> RunConfig {
    let default = RunConfig::default();
    RunConfig {
        truncation,
        corrupt_power,
        seed: seed.unwrap_or(default.seed),
    }
}

/// Registered identity ids, in run order.
#[pyfunction]
fn identity_ids() -> Vec<&'static str> {
    identities::registry().iter().map(|c| c.id).collect()
}

#[pyfunction]
#[pyo3(signature = (id, truncation = None, seed = None, corrupt_power = None))]
fn verify(
    py: Python<'_>,
    id: &str,
    truncation: Option<usize>,
    seed: Option<u64>,
    corrupt_power: Option<usize>,
) -> PyResult<PyReport> {
    let cfg = config(truncation, seed, corrupt_power);
    py.detach(|| identities::run_check(id, &cfg))
        .map(PyReport)
        .map_err(|e| PyKeyError::new_err(e.to_string()))
}

#[pyfunction]
#[pyo3(signature = (truncation = None, seed = None))]
fn verify_all(py: Python<'_>, truncation: Option<usize>, seed: Option<u64>) -> Vec<PyReport> {
    let cfg = config(truncation, seed, None);
    py.detach(|| identities::run_all(&cfg))
        .into_iter()
        .map(PyReport)
        .collect()
}

/// Every PDO partition of weight `n`.
#[pyfunction]
fn enumerate_pdo(n: u32) -> Vec<PyPartition> {
    partitions::enumerate_pdo(n)
        .into_iter()
        .map(PyPartition)
        .collect()
}

/// `PDO(0), ..., PDO(max)` from the eta quotient, as Python ints.
#[pyfunction]
fn pdo_table(py: Python<'_>, max: usize) -> PyResult<Vec<Py<PyAny>>> {
    let series = forms::pdo_series(max + 1).map_err(value_err)?;
    let int = py.import("builtins")?.getattr("int")?;
    series
        .coeffs()
        .iter()
        .map(|c| Ok(int.call1((c.to_string(),))?.unbind()))
        .collect()
}

#[pymodule]
fn pdo_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyPair>()?;
    m.add_class::<PyReport>()?;
    m.add_function(wrap_pyfunction!(identity_ids, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(verify_all, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_pdo, m)?)?;
    m.add_function(wrap_pyfunction!(pdo_table, m)?)?;
    Ok(())
}
