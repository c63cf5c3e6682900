//! Python bindings: polynomial types, inclusion regions, the zero finder and
//! the verification report. Reports come back as plain dicts and lists with
//! the same field names as the CLI's JSON output.

use harmonic_zeros::report::{self, Instance, CONTAINMENT_TOL};
use harmonic_zeros::{bounds, real_roots, solver, AnalyticPoly, Complex64, Error, SolverConfig};
use pyo3::exceptions::{PyRuntimeError, PyTypeError, PyValueError};
use pyo3::prelude::*;
use pythonize::pythonize;

fn to_py_err(e: Error) -> PyErr {
    let message = format!("{}: {e}", e.name());
    if e.is_solver_error() {
        PyRuntimeError::new_err(message)
    } else {
        PyValueError::new_err(message)
    }
}

/// Harmonic polynomial `h(z) + conj(g(z))`, coefficients highest power first.
#[pyclass(name = "HarmonicPoly", module = "harmonic_zeros_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyHarmonicPoly(harmonic_zeros::HarmonicPoly);

#[pymethods]
impl PyHarmonicPoly {
    #[new]
    #[pyo3(signature = (h, g = None))]
    fn new(h: Vec<Complex64>, g: Option<Vec<Complex64>>) -> PyResult<Self> {
        let h = AnalyticPoly::from_descending(&h).map_err(to_py_err)?;
        let g = match g {
            Some(g) => AnalyticPoly::from_descending(&g).map_err(to_py_err)?,
            None => AnalyticPoly::zero(),
        };
        harmonic_zeros::HarmonicPoly::new(h, g)
            .map(Self)
            .map_err(to_py_err)
    }

    /// Degree of `h`.
    #[getter]
    fn n(&self) -> usize {
        self.0.n()
    }

    /// Degree of `g`.
    #[getter]
    fn m(&self) -> usize {
        self.0.m()
    }

    /// `1 + Σ|a_j| + Σ|b_j|`.
    fn scale(&self) -> f64 {
        self.0.scale()
    }

    fn eval(&self, z: Complex64) -> Complex64 {
        self.0.eval(z)
    }

    /// `|h'(z)|² - |g'(z)|²`.
    fn jacobian_det(&self, z: Complex64) -> f64 {
        self.0.jacobian_det(z)
    }

    fn __repr__(&self) -> String {
        format!("HarmonicPoly(n={}, m={})", self.0.n(), self.0.m())
    }
}

/// `z^n + c·conj(z)^k - 1`.
#[pyclass(name = "HarmonicTrinomial", module = "harmonic_zeros_py", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyHarmonicTrinomial(harmonic_zeros::HarmonicTrinomial);

#[pymethods]
impl PyHarmonicTrinomial {
    #[new]
    fn new(n: u32, k: u32, c: Complex64) -> PyResult<Self> {
        harmonic_zeros::HarmonicTrinomial::new(n, k, c)
            .map(Self)
            .map_err(to_py_err)
    }

    #[getter]
    fn n(&self) -> u32 {
        self.0.n()
    }

    #[getter]
    fn k(&self) -> u32 {
        self.0.k()
    }

    #[getter]
    fn c(&self) -> Complex64 {
        self.0.c()
    }

    fn eval(&self, z: Complex64) -> Complex64 {
        self.0.eval(z)
    }

    fn to_harmonic(&self) -> PyHarmonicPoly {
        PyHarmonicPoly(self.0.to_harmonic())
    }

    fn __repr__(&self) -> String {
        let c = self.0.c();
        format!("HarmonicTrinomial(n={}, k={}, c={}{:+}j)", self.0.n(), self.0.k(), c.re, c.im)
    }
}

fn instance(obj: &Bound<'_, PyAny>) -> PyResult<Instance> {
    if let Ok(t) = obj.cast::<PyHarmonicTrinomial>() {
        return Ok(Instance::Trinomial(t.get().0));
    }
    if let Ok(p) = obj.cast::<PyHarmonicPoly>() {
        return Ok(Instance::Harmonic(p.get().0.clone()));
    }
    Err(PyTypeError::new_err("expected HarmonicPoly or HarmonicTrinomial"))
}

fn harmonic(obj: &Bound<'_, PyAny>) -> PyResult<harmonic_zeros::HarmonicPoly> {
    instance(obj)?.harmonic().map_err(to_py_err)
}

#[allow(clippy::too_many_arguments)]
fn config(
    grid_density: Option<f64>,
    newton_tol: Option<f64>,
    max_newton_iters: Option<usize>,
    dedup_radius: Option<f64>,
    search_radius_factor: Option<f64>,
    singular_threshold: Option<f64>,
) -> SolverConfig {
    let d = SolverConfig::default();
    SolverConfig {
        grid_density: grid_density.unwrap_or(d.grid_density),
        newton_tol: newton_tol.unwrap_or(d.newton_tol),
        max_newton_iters: max_newton_iters.unwrap_or(d.max_newton_iters),
        dedup_radius: dedup_radius.unwrap_or(d.dedup_radius),
        search_radius_factor: search_radius_factor.unwrap_or(d.search_radius_factor),
        singular_threshold: singular_threshold.unwrap_or(d.singular_threshold),
    }
}

/// Positive root `r ≠ 1` of `x^{n+1} - (1+M)x^n + M`.
#[pyfunction]
fn dehmer_radius(m: f64, n: usize) -> PyResult<f64> {
    real_roots::dehmer_radius(m, n).map_err(to_py_err)
}

/// Sign changes in a coefficient sequence, zeros skipped.
#[pyfunction]
fn sign_variations(coeffs: Vec<f64>) -> usize {
    real_roots::sign_variations(&coeffs)
}

/// Closed disk containing every zero of a harmonic polynomial or trinomial.
#[pyfunction]
fn harmonic_disk<'py>(py: Python<'py>, p: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    let report = bounds::harmonic_disk(&harmonic(p)?).map_err(to_py_err)?;
    Ok(pythonize(py, &report)?)
}

#[pyfunction]
fn trinomial_inclusion_region<'py>(
    py: Python<'py>,
    t: PyRef<'py, PyHarmonicTrinomial>,
) -> PyResult<Bound<'py, PyAny>> {
    let report = bounds::trinomial_inclusion_region(&t.0).map_err(to_py_err)?;
    Ok(pythonize(py, &report)?)
}

/// Every applicable inclusion region, as the CLI's `bounds` command.
#[pyfunction]
fn all_bounds<'py>(py: Python<'py>, p: &Bound<'py, PyAny>) -> PyResult<Bound<'py, PyAny>> {
    let out = report::bounds(&instance(p)?).map_err(to_py_err)?;
    Ok(pythonize(py, &out)?)
}

/// All zeros found from the seed grid, sorted by real then imaginary part.
#[pyfunction]
#[pyo3(signature = (
    p, *, grid_density = None, newton_tol = None, max_newton_iters = None,
    dedup_radius = None, search_radius_factor = None, singular_threshold = None,
))]
#[allow(clippy::too_many_arguments)]
fn find_all_zeros<'py>(
    py: Python<'py>,
    p: &Bound<'py, PyAny>,
    grid_density: Option<f64>,
    newton_tol: Option<f64>,
    max_newton_iters: Option<usize>,
    dedup_radius: Option<f64>,
    search_radius_factor: Option<f64>,
    singular_threshold: Option<f64>,
) -> PyResult<Bound<'py, PyAny>> {
    let p = harmonic(p)?;
    let cfg = config(
        grid_density,
        newton_tol,
        max_newton_iters,
        dedup_radius,
        search_radius_factor,
        singular_threshold,
    );
    let zeros = py
        .detach(|| solver::find_all_zeros(&p, &cfg))
        .map_err(to_py_err)?;
    Ok(pythonize(py, &zeros)?)
}

/// Winding number of the image of the circle `|z| = radius`.
#[pyfunction]
fn winding_number(py: Python<'_>, p: &Bound<'_, PyAny>, radius: f64) -> PyResult<i64> {
    let p = harmonic(p)?;
    let w = py
        .detach(|| solver::winding_number(&p, radius, &SolverConfig::default()))
        .map_err(to_py_err)?;
    Ok(w.winding)
}

/// Full verification report, as the CLI's `verify --json`.
#[pyfunction]
#[pyo3(signature = (p, tol = CONTAINMENT_TOL))]
fn verify<'py>(py: Python<'py>, p: &Bound<'py, PyAny>, tol: f64) -> PyResult<Bound<'py, PyAny>> {
    let instance = instance(p)?;
    let rep = py
        .detach(|| report::verify(&instance, &SolverConfig::default(), tol))
        .map_err(to_py_err)?;
    Ok(pythonize(py, &rep)?)
}

#[pymodule]
fn harmonic_zeros_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyHarmonicPoly>()?;
    m.add_class::<PyHarmonicTrinomial>()?;
    m.add_function(wrap_pyfunction!(dehmer_radius, m)?)?;
    m.add_function(wrap_pyfunction!(sign_variations, m)?)?;
    m.add_function(wrap_pyfunction!(harmonic_disk, m)?)?;
    m.add_function(wrap_pyfunction!(trinomial_inclusion_region, m)?)?;
    m.add_function(wrap_pyfunction!(all_bounds, m)?)?;
    m.add_function(wrap_pyfunction!(find_all_zeros, m)?)?;
    m.add_function(wrap_pyfunction!(winding_number, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
