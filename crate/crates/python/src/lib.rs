//! Python bindings. Numbers cross the boundary as decimal or `p/q`
//! strings so nothing is rounded.

use bfre::oracle::{grid_solutions as grid_scan, plant_instance, GridSpec};
use bfre::report::{ResultDocument, Selection};
use bfre::system::DEFAULT_ENUMERATION_CAP;
use bfre::{
    is_solution, parse_system, solvable_system, summarize, system_to_json, Assignment,
    BipolarEquation, BipolarSystem, Error, Scalar, SolverOptions,
};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::ResourceLimit { .. } => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn tuple(values: &[String]) -> PyResult<Assignment> {
    let refs: Vec<&str> = values.iter().map(String::as_str).collect();
    Assignment::parse(&refs).map_err(to_py)
}

fn options(cap: usize, threads: usize) -> SolverOptions {
    SolverOptions {
        cap,
        threads: threads.max(1),
    }
}

/// A system of bipolar max-product equations.
#[pyclass(name = "System", module = "pybfre", frozen)]
struct PySystem {
    inner: BipolarSystem,
}

#[pymethods]
impl PySystem {
    #[new]
    fn new(a_plus: Vec<Vec<String>>, a_minus: Vec<Vec<String>>, b: Vec<String>) -> PyResult<Self> {
        if a_plus.len() != b.len() || a_minus.len() != b.len() {
            return Err(PyValueError::new_err(format!(
                "a_plus has {} rows, a_minus {}, b {}",
                a_plus.len(),
                a_minus.len(),
                b.len()
            )));
        }
        let rows = a_plus
            .iter()
            .zip(&a_minus)
            .zip(&b)
            .map(|((ap, am), bi)| {
                let ap: Vec<&str> = ap.iter().map(String::as_str).collect();
                let am: Vec<&str> = am.iter().map(String::as_str).collect();
                BipolarEquation::parse(&ap, &am, bi)
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(to_py)?;
        Ok(PySystem {
            inner: BipolarSystem::new(rows).map_err(to_py)?,
        })
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        Ok(PySystem {
            inner: parse_system(text).map_err(to_py)?,
        })
    }

    fn to_json(&self) -> String {
        system_to_json(&self.inner)
    }

    #[getter]
    fn n(&self) -> usize {
        self.inner.n()
    }

    #[getter]
    fn m(&self) -> usize {
        self.inner.m()
    }

    fn is_solution(&self, x: Vec<String>) -> PyResult<bool> {
        is_solution(&self.inner, &tuple(&x)?).map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("System(n={}, m={})", self.inner.n(), self.inner.m())
    }
}

/// Everything the solver found for one system.
#[pyclass(name = "Summary", module = "pybfre", frozen, get_all)]
struct PySummary {
    solvable: bool,
    greatest: Option<Vec<String>>,
    maximal: Vec<Vec<String>>,
    /// "least", "finite_minimals" or "no_minimal_elements"; None when unsolvable.
    lower_kind: Option<String>,
    lower: Vec<Vec<String>>,
    /// `(j_plus, j_minus)`, 1-based.
    feasible_pairs: Vec<(Vec<usize>, Vec<usize>)>,
    diagnostics: Vec<String>,
    json: String,
}

#[pymethods]
impl PySummary {
    fn __repr__(&self) -> String {
        format!(
            "Summary(solvable={}, pairs={}, lower_kind={:?})",
            self.solvable,
            self.feasible_pairs.len(),
            self.lower_kind
        )
    }
}

#[pyfunction]
#[pyo3(signature = (system, cap = DEFAULT_ENUMERATION_CAP, threads = 1))]
fn solve(system: &PySystem, cap: usize, threads: usize) -> PyResult<PySummary> {
    let summary = summarize(&system.inner, &options(cap, threads)).map_err(to_py)?;
    let strings = |xs: &[Assignment]| xs.iter().map(Assignment::to_strings).collect::<Vec<_>>();
    Ok(PySummary {
        solvable: summary.solvable,
        greatest: summary.greatest.as_ref().map(Assignment::to_strings),
        maximal: strings(&summary.maximal),
        lower_kind: summary.lower.as_ref().map(|l| l.kind().to_string()),
        lower: summary
            .lower
            .as_ref()
            .map(|l| strings(l.tuples()))
            .unwrap_or_default(),
        feasible_pairs: summary
            .pairs
            .pairs()
            .map(|p| (p.j_plus.to_one_based(), p.j_minus.to_one_based()))
            .collect(),
        diagnostics: summary.diagnostics.clone(),
        json: ResultDocument::from_summary(&summary, Selection::all()).to_json(),
    })
}

#[pyfunction]
#[pyo3(signature = (system, cap = DEFAULT_ENUMERATION_CAP, threads = 1))]
fn solvable(system: &PySystem, cap: usize, threads: usize) -> PyResult<bool> {
    solvable_system(&system.inner, &options(cap, threads)).map_err(to_py)
}

/// A seeded solvable instance and the tuple it was built around.
#[pyfunction]
#[pyo3(signature = (seed, m, n, q = 10))]
fn plant(seed: u64, m: usize, n: usize, q: u32) -> PyResult<(PySystem, Vec<String>)> {
    let inst = plant_instance(seed, m, n, GridSpec::new(q).map_err(to_py)?).map_err(to_py)?;
    Ok((PySystem { inner: inst.system }, inst.planted.to_strings()))
}

/// Every solution on the grid `{0, 1/q, ..., 1}^m`.
#[pyfunction]
fn grid_solutions(system: &PySystem, q: u32) -> PyResult<Vec<Vec<String>>> {
    let found = grid_scan(&system.inner, GridSpec::new(q).map_err(to_py)?).map_err(to_py)?;
    Ok(found.iter().map(Assignment::to_strings).collect())
}

fn scalar(text: &str) -> PyResult<Scalar> {
    text.parse().map_err(to_py)
}

#[pyfunction]
fn residuum(z: &str, x: &str) -> PyResult<String> {
    Ok(bfre::residuum(&scalar(z)?, &scalar(x)?).to_string())
}

#[pyfunction]
fn tnorm(x: &str, y: &str) -> PyResult<String> {
    Ok(bfre::tnorm_product(&scalar(x)?, &scalar(y)?).to_string())
}

#[pymodule]
fn pybfre(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PySystem>()?;
    m.add_class::<PySummary>()?;
    m.add_function(wrap_pyfunction!(solve, m)?)?;
    m.add_function(wrap_pyfunction!(solvable, m)?)?;
    m.add_function(wrap_pyfunction!(plant, m)?)?;
    m.add_function(wrap_pyfunction!(grid_solutions, m)?)?;
    m.add_function(wrap_pyfunction!(residuum, m)?)?;
    m.add_function(wrap_pyfunction!(tnorm, m)?)?;
    Ok(())
}
