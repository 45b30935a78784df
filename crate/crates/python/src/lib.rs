//! Python bindings: `import tinvariant_py`.

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use tinvariant::closed_form::{classify as classify_pres, t_closed_with};
use tinvariant::{self as core, UnitConvention};

fn py_err(e: core::Error) -> PyErr {
    match e {
        core::Error::Orbit(_) | core::Error::Reconcile(_) => PyRuntimeError::new_err(e.to_string()),
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Element `(a + b·ε) + (c + d·ε)·√ε` of the golden ring.
#[pyclass(name = "GoldenNum", module = "tinvariant_py", frozen, eq, hash, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PyGoldenNum(core::GoldenNum);

#[pymethods]
impl PyGoldenNum {
    #[new]
    #[pyo3(signature = (a, b = 0, c = 0, d = 0))]
    fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        PyGoldenNum(core::GoldenNum::new(a, b, c, d))
    }

    /// `ε^{k/2}`.
    #[staticmethod]
    fn eps_pow(half_steps: i32) -> Self {
        PyGoldenNum(core::GoldenNum::eps_pow(half_steps))
    }

    #[getter]
    fn a(&self) -> i64 {
        self.0.a
    }
    #[getter]
    fn b(&self) -> i64 {
        self.0.b
    }
    #[getter]
    fn c(&self) -> i64 {
        self.0.c
    }
    #[getter]
    fn d(&self) -> i64 {
        self.0.d
    }

    fn quad(&self) -> (i64, i64, i64, i64) {
        let [a, b, c, d] = self.0.quad();
        (a, b, c, d)
    }

    fn in_zeps(&self) -> bool {
        self.0.in_zeps()
    }

    fn __float__(&self) -> f64 {
        self.0.to_real()
    }

    fn __add__(&self, other: PyGoldenNum) -> PyResult<Self> {
        self.0.checked_add(other.0).map(PyGoldenNum).map_err(py_err)
    }

    fn __sub__(&self, other: PyGoldenNum) -> PyResult<Self> {
        self.0.checked_sub(other.0).map(PyGoldenNum).map_err(py_err)
    }

    fn __mul__(&self, other: PyGoldenNum) -> PyResult<Self> {
        self.0.checked_mul(other.0).map(PyGoldenNum).map_err(py_err)
    }

    fn __neg__(&self) -> PyResult<Self> {
        self.0.checked_neg().map(PyGoldenNum).map_err(py_err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        let [a, b, c, d] = self.0.quad();
        format!("GoldenNum({a}, {b}, {c}, {d})")
    }
}

/// Fiber class `±(λ, μ)` mod 5.
#[pyclass(name = "FiberClass", module = "tinvariant_py", frozen, eq, hash, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct PyFiberClass(core::FiberClass);

#[pymethods]
impl PyFiberClass {
    #[new]
    fn new(lambda: i64, mu: i64) -> PyResult<Self> {
        core::FiberClass::new(lambda, mu).map(PyFiberClass).map_err(py_err)
    }

    #[staticmethod]
    fn all() -> Vec<PyFiberClass> {
        core::FiberClass::all().into_iter().map(PyFiberClass).collect()
    }

    #[getter]
    fn pair(&self) -> (u8, u8) {
        (self.0.lambda(), self.0.mu())
    }

    fn doubled(&self) -> PyFiberClass {
        PyFiberClass(self.0.doubled())
    }

    fn vector(&self) -> Vec<PyGoldenNum> {
        vec5(core::class_vector(self.0))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("FiberClass({}, {})", self.0.lambda(), self.0.mu())
    }
}

/// `(b; (α1,β1) (α2,β2) (α3,β3))`.
#[pyclass(name = "SeifertPresentation", module = "tinvariant_py", frozen, eq, from_py_object)]
#[derive(Clone, Copy, PartialEq, Eq)]
pub struct PySeifert(core::SeifertPresentation);

fn convention(name: Option<&str>) -> PyResult<UnitConvention> {
    name.map_or(Ok(UnitConvention::FROZEN), |s| s.parse().map_err(py_err))
}

#[pymethods]
impl PySeifert {
    #[new]
    fn new(b: i64, fibers: [(i64, i64); 3]) -> PyResult<Self> {
        core::SeifertPresentation::from_pairs(b, fibers).map(PySeifert).map_err(py_err)
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        core::parse_presentation(text).map(PySeifert).map_err(py_err)
    }

    #[getter]
    fn b(&self) -> i64 {
        self.0.b
    }

    #[getter]
    fn fibers(&self) -> Vec<(i64, i64)> {
        self.0.fibers.iter().map(|f| (f.alpha, f.beta)).collect()
    }

    fn normalize(&self) -> PyResult<Self> {
        self.0.normalize().map(PySeifert).map_err(py_err)
    }

    fn classes(&self) -> PyResult<Vec<PyFiberClass>> {
        Ok(self.0.classes().map_err(py_err)?.into_iter().map(PyFiberClass).collect())
    }

    /// Euler number `b + Σ β/α` as `(numerator, denominator)`, or `None`
    /// if some `α` is zero.
    fn euler_number(&self) -> Option<(i64, i64)> {
        self.0.euler_number().map(|r| (*r.numer(), *r.denom()))
    }

    /// Tensor route.
    fn t_invariant(&self) -> PyResult<PyGoldenNum> {
        self.0.t_invariant().map(PyGoldenNum).map_err(py_err)
    }

    /// Closed form under a unit-fiber convention (default: the frozen one).
    #[pyo3(signature = (convention = None))]
    fn t_closed(&self, convention: Option<&str>) -> PyResult<PyGoldenNum> {
        t_closed_with(&self.0, self::convention(convention)?).map(PyGoldenNum).map_err(py_err)
    }

    fn classify(&self) -> PyResult<String> {
        classify_pres(&self.0).map(|c| c.to_string()).map_err(py_err)
    }

    /// `H_1` as `(torsion coefficients, free rank)`.
    fn h1(&self) -> PyResult<(Vec<i64>, usize)> {
        let g = self.0.h1().map_err(py_err)?;
        Ok((g.torsion, g.free_rank))
    }

    fn h1_str(&self) -> PyResult<String> {
        Ok(self.0.h1().map_err(py_err)?.to_string())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("SeifertPresentation('{}')", self.0)
    }
}

fn vec5(v: core::Vec5) -> Vec<PyGoldenNum> {
    v.0.iter().copied().map(PyGoldenNum).collect()
}

/// Tensor-route t of a presentation string.
#[pyfunction]
fn t_invariant(text: &str) -> PyResult<PyGoldenNum> {
    let p = core::parse_presentation(text).map_err(py_err)?;
    p.t_invariant().map(PyGoldenNum).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (text, convention = None))]
fn t_closed(text: &str, convention: Option<&str>) -> PyResult<PyGoldenNum> {
    let p = core::parse_presentation(text).map_err(py_err)?;
    t_closed_with(&p, self::convention(convention)?).map(PyGoldenNum).map_err(py_err)
}

#[pyfunction]
fn fiber_word(alpha: i64, beta: i64) -> PyResult<String> {
    core::fiber_word(alpha, beta).map(|w| w.to_string()).map_err(py_err)
}

#[pyfunction]
fn fiber_vector(alpha: i64, beta: i64) -> PyResult<Vec<PyGoldenNum>> {
    core::fiber_vector(alpha, beta).map(vec5).map_err(py_err)
}

#[pyfunction]
fn class_of(alpha: i64, beta: i64) -> PyResult<PyFiberClass> {
    core::class_of(alpha, beta).map(PyFiberClass).map_err(py_err)
}

#[pyfunction]
fn lens_t(p: i64, q: i64) -> PyResult<PyGoldenNum> {
    core::lens_t(p, q).map(PyGoldenNum).map_err(py_err)
}

/// The twelve fiber vectors.
#[pyfunction]
fn orbit() -> PyResult<Vec<Vec<PyGoldenNum>>> {
    Ok(core::orbit().map_err(py_err)?.into_iter().map(vec5).collect())
}

/// `Φ_E`, `Φ_J`, `Φ_T`, `Φ23`, `Φ13` as nested lists.
#[pyfunction]
fn constants(py: Python<'_>) -> PyResult<Bound<'_, PyDict>> {
    let c = core::constants();
    let mat = |m: core::Mat5| -> Vec<Vec<PyGoldenNum>> {
        m.0.iter().map(|row| row.iter().copied().map(PyGoldenNum).collect()).collect()
    };
    let cubic: Vec<Vec<Vec<PyGoldenNum>>> = c
        .phi_t
        .0
        .iter()
        .map(|s| s.iter().map(|row| row.iter().copied().map(PyGoldenNum).collect()).collect())
        .collect();
    let d = PyDict::new(py);
    d.set_item("phi_e", vec5(c.phi_e))?;
    d.set_item("phi_j", mat(c.phi_j))?;
    d.set_item("phi_t", cubic)?;
    d.set_item("phi_23", mat(c.phi_23))?;
    d.set_item("phi_13", mat(c.phi_13))?;
    Ok(d)
}

/// All 364 class triples as `(classes, presentation, t)`.
#[pyfunction]
fn sweep() -> PyResult<Vec<(Vec<PyFiberClass>, PySeifert, PyGoldenNum)>> {
    let table = core::sweep_all_classes().map_err(py_err)?;
    Ok(table
        .entries
        .iter()
        .map(|e| {
            (
                e.classes.iter().copied().map(PyFiberClass).collect(),
                PySeifert(e.presentation),
                PyGoldenNum(e.t),
            )
        })
        .collect())
}

#[pyfunction]
fn distinct_values() -> PyResult<Vec<PyGoldenNum>> {
    let table = core::sweep_all_classes().map_err(py_err)?;
    Ok(table.distinct_values().into_iter().map(PyGoldenNum).collect())
}

/// Text report comparing the closed form with the tensor route.
#[pyfunction]
fn reconcile() -> PyResult<String> {
    let table = core::sweep_all_classes().map_err(py_err)?;
    core::reconcile(&table).map(|r| r.to_string()).map_err(py_err)
}

/// `(id, name, passed, detail)` for every acceptance check.
#[pyfunction]
#[pyo3(signature = (seed = 1))]
fn selfcheck(seed: u64) -> Vec<(u8, String, bool, String)> {
    core::selfcheck::run_selfcheck(seed)
        .into_iter()
        .map(|c| (c.id, c.name.to_string(), c.passed, c.detail))
        .collect()
}

#[pymodule]
fn tinvariant_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGoldenNum>()?;
    m.add_class::<PyFiberClass>()?;
    m.add_class::<PySeifert>()?;
    m.add_function(wrap_pyfunction!(t_invariant, m)?)?;
    m.add_function(wrap_pyfunction!(t_closed, m)?)?;
    m.add_function(wrap_pyfunction!(fiber_word, m)?)?;
    m.add_function(wrap_pyfunction!(fiber_vector, m)?)?;
    m.add_function(wrap_pyfunction!(class_of, m)?)?;
    m.add_function(wrap_pyfunction!(lens_t, m)?)?;
    m.add_function(wrap_pyfunction!(orbit, m)?)?;
    m.add_function(wrap_pyfunction!(constants, m)?)?;
    m.add_function(wrap_pyfunction!(sweep, m)?)?;
    m.add_function(wrap_pyfunction!(distinct_values, m)?)?;
    m.add_function(wrap_pyfunction!(reconcile, m)?)?;
    m.add_function(wrap_pyfunction!(selfcheck, m)?)?;
    Ok(())
}
