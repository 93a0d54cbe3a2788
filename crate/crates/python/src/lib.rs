//! Python bindings. Rationals cross the boundary as `fractions.Fraction`;
//! inputs may be ints, Fractions or strings such as `"3/4"`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyModule;

use ::hyperdet_schur as core;
use ::hyperdet_schur::rational::{self, Rational};
use ::hyperdet_schur::suites::{self, SuiteConfig};

fn err(e: core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn to_rational(obj: &Bound<'_, PyAny>) -> PyResult<Rational> {
    if obj.is_instance_of::<pyo3::types::PyFloat>() {
        return Err(PyValueError::new_err(
            "floats are not exact; pass an int, Fraction or string",
        ));
    }
    rational::parse(&obj.str()?.to_cow()?).map_err(err)
}

fn to_fraction<'py>(py: Python<'py>, q: &Rational) -> PyResult<Bound<'py, PyAny>> {
    PyModule::import(py, "fractions")?
        .getattr("Fraction")?
        .call1((rational::format(q),))
}

fn to_rationals(items: &[Bound<'_, PyAny>]) -> PyResult<Vec<Rational>> {
    items.iter().map(to_rational).collect()
}

fn to_vector(items: Vec<Bound<'_, PyAny>>) -> PyResult<core::Vector> {
    Ok(core::Vector::new(to_rationals(&items)?))
}

fn json_to_py<'py>(py: Python<'py>, text: &str) -> PyResult<Bound<'py, PyAny>> {
    PyModule::import(py, "json")?
        .getattr("loads")?
        .call1((text,))
}

fn json_of<T: serde::Serialize>(value: &T) -> PyResult<String> {
    serde_json::to_string(value).map_err(|e| PyValueError::new_err(e.to_string()))
}

#[pyclass(
    name = "Partition",
    module = "hyperdet_schur",
    skip_from_py_object,
    frozen,
    eq,
    hash,
    ord
)]
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct PyPartition(core::Partition);

#[pymethods]
impl PyPartition {
    #[new]
    fn new(parts: Vec<usize>) -> PyResult<Self> {
        core::Partition::new(parts).map(Self).map_err(err)
    }

    /// Parses a literal such as `"3,1"` or `"(3,1)"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(err)
    }

    #[getter]
    fn parts(&self) -> Vec<usize> {
        self.0.parts().to_vec()
    }

    #[getter]
    fn weight(&self) -> usize {
        self.0.weight()
    }

    fn conjugate(&self) -> Self {
        Self(self.0.conjugate())
    }

    /// True when `self` is dominated by `other`.
    fn dominated_by(&self, other: &PyPartition) -> bool {
        core::dominance_leq(&self.0, &other.0)
    }

    fn is_exceptional(&self) -> bool {
        core::is_exceptional(&self.0)
    }

    fn critical_set(&self) -> PyResult<Vec<PyPartition>> {
        Ok(core::critical_set(&self.0)
            .map_err(err)?
            .into_iter()
            .map(Self)
            .collect())
    }

    fn syt_count(&self) -> PyResult<u64> {
        core::syt_count(&self.0).map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Partition({:?})", self.0.parts())
    }
}

#[pyclass(
    name = "Permutation",
    module = "hyperdet_schur",
    skip_from_py_object,
    frozen,
    eq,
    hash
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPermutation(core::Permutation);

#[pymethods]
impl PyPermutation {
    /// Builds a permutation from its 1-based images, e.g. `[2, 3, 1]`.
    #[new]
    fn new(images: Vec<usize>) -> PyResult<Self> {
        core::Permutation::from_one_based(&images)
            .map(Self)
            .map_err(err)
    }

    #[staticmethod]
    fn identity(p: usize) -> Self {
        Self(core::Permutation::identity(p))
    }

    #[getter]
    fn images(&self) -> Vec<usize> {
        self.0.one_based()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    /// `(self ∘ other)(i) = self(other(i))`.
    fn compose(&self, other: &PyPermutation) -> PyResult<Self> {
        self.0.compose(&other.0).map(Self).map_err(err)
    }

    fn __mul__(&self, other: &PyPermutation) -> PyResult<Self> {
        self.compose(other)
    }

    fn inverse(&self) -> Self {
        Self(self.0.inverse())
    }

    fn sign(&self) -> i32 {
        self.0.sign()
    }

    fn __call__(&self, i: usize) -> PyResult<usize> {
        if i == 0 || i > self.0.degree() {
            return Err(PyValueError::new_err(format!(
                "point {i} outside 1..={}",
                self.0.degree()
            )));
        }
        Ok(self.0.apply(i - 1) + 1)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.0.one_based())
    }
}

#[pyclass(
    name = "AlgebraElement",
    module = "hyperdet_schur",
    skip_from_py_object,
    frozen,
    eq
)]
#[derive(Clone, PartialEq)]
struct PyAlgebraElement(core::AlgebraElement);

#[pymethods]
impl PyAlgebraElement {
    /// Builds `Σ coeff·σ` from `(images, coeff)` pairs over `S_p`.
    #[new]
    fn new(p: usize, terms: Vec<(Vec<usize>, Bound<'_, PyAny>)>) -> PyResult<Self> {
        let terms = terms
            .iter()
            .map(|(images, c)| {
                Ok((
                    core::Permutation::from_one_based(images).map_err(err)?,
                    to_rational(c)?,
                ))
            })
            .collect::<PyResult<Vec<_>>>()?;
        core::AlgebraElement::from_terms(p, terms)
            .map(Self)
            .map_err(err)
    }

    #[getter]
    fn degree(&self) -> usize {
        self.0.degree()
    }

    fn terms<'py>(&self, py: Python<'py>) -> PyResult<Vec<(Vec<usize>, Bound<'py, PyAny>)>> {
        self.0
            .terms()
            .map(|(s, c)| Ok((s.one_based(), to_fraction(py, c)?)))
            .collect()
    }

    fn coefficient<'py>(
        &self,
        py: Python<'py>,
        sigma: &PyPermutation,
    ) -> PyResult<Bound<'py, PyAny>> {
        to_fraction(py, &self.0.coefficient(&sigma.0))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn __len__(&self) -> usize {
        self.0.support_len()
    }

    fn __add__(&self, other: &PyAlgebraElement) -> PyResult<Self> {
        self.0.add(&other.0).map(Self).map_err(err)
    }

    fn __sub__(&self, other: &PyAlgebraElement) -> PyResult<Self> {
        self.0.sub(&other.0).map(Self).map_err(err)
    }

    fn __mul__(&self, other: &PyAlgebraElement) -> PyResult<Self> {
        self.0.multiply(&other.0).map(Self).map_err(err)
    }

    fn scale(&self, k: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok(Self(self.0.scale(&to_rational(k)?)))
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[staticmethod]
    fn from_json(json: &str, p: usize) -> PyResult<Self> {
        core::AlgebraElement::from_json(json, p)
            .map(Self)
            .map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "AlgebraElement(degree={}, terms={})",
            self.0.degree(),
            self.0.support_len()
        )
    }
}

#[pyclass(
    name = "Tensor",
    module = "hyperdet_schur",
    skip_from_py_object,
    frozen,
    eq
)]
#[derive(Clone, PartialEq)]
struct PyTensor(core::Tensor);

#[pymethods]
impl PyTensor {
    /// Row-major entries; the last index varies fastest.
    #[new]
    fn new(order: usize, dim: usize, entries: Vec<Bound<'_, PyAny>>) -> PyResult<Self> {
        core::Tensor::from_entries(order, dim, to_rationals(&entries)?)
            .map(Self)
            .map_err(err)
    }

    #[staticmethod]
    fn random(p: usize, n: usize, seed: u64) -> PyResult<Self> {
        core::random_tensor(p, n, seed).map(Self).map_err(err)
    }

    #[staticmethod]
    fn rank_one(factors: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<Self> {
        let factors = factors
            .into_iter()
            .map(to_vector)
            .collect::<PyResult<Vec<_>>>()?;
        core::rank_one(&factors).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_json(json: &str) -> PyResult<Self> {
        core::Tensor::from_json(json).map(Self).map_err(err)
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn order(&self) -> usize {
        self.0.order()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn entries<'py>(&self, py: Python<'py>) -> PyResult<Vec<Bound<'py, PyAny>>> {
        self.0
            .entries()
            .iter()
            .map(|q| to_fraction(py, q))
            .collect()
    }

    /// Entry at a 0-based multi-index.
    fn __getitem__<'py>(&self, py: Python<'py>, index: Vec<usize>) -> PyResult<Bound<'py, PyAny>> {
        if index.len() != self.0.order() || index.iter().any(|&i| i >= self.0.dim()) {
            return Err(PyValueError::new_err(format!("bad index {index:?}")));
        }
        to_fraction(py, self.0.get(&index))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn permute(&self, sigma: &PyPermutation) -> PyResult<Self> {
        core::permute_action(&sigma.0, &self.0)
            .map(Self)
            .map_err(err)
    }

    fn act(&self, u: &PyAlgebraElement) -> PyResult<Self> {
        core::algebra_action(&u.0, &self.0).map(Self).map_err(err)
    }

    fn evaluate<'py>(
        &self,
        py: Python<'py>,
        vectors: Vec<Vec<Bound<'py, PyAny>>>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let xs = vectors
            .into_iter()
            .map(to_vector)
            .collect::<PyResult<Vec<_>>>()?;
        to_fraction(py, &core::evaluate(&self.0, &xs).map_err(err)?)
    }

    fn __repr__(&self) -> String {
        format!("Tensor(order={}, dim={})", self.0.order(), self.0.dim())
    }
}

#[pyfunction]
fn all_partitions(p: usize) -> PyResult<Vec<PyPartition>> {
    Ok(core::all_partitions(p)
        .map_err(err)?
        .into_iter()
        .map(PyPartition)
        .collect())
}

#[pyfunction]
fn critical_set(lambda: &PyPartition) -> PyResult<Vec<PyPartition>> {
    lambda.critical_set()
}

#[pyfunction]
fn young_symmetrizer(lambda: &PyPartition) -> PyResult<PyAlgebraElement> {
    core::young_symmetrizer(&lambda.0)
        .map(PyAlgebraElement)
        .map_err(err)
}

#[pyfunction]
fn project_isotypic(lambda: &PyPartition, a: &PyTensor) -> PyResult<PyTensor> {
    core::project_isotypic(&lambda.0, &a.0)
        .map(PyTensor)
        .map_err(err)
}

#[pyfunction]
fn projector_rank(lambda: &PyPartition, n: usize) -> PyResult<usize> {
    core::projector_rank(&lambda.0, n).map_err(err)
}

#[pyfunction]
fn antisymmetrize(a: &PyTensor) -> PyResult<PyTensor> {
    core::antisymmetrize(&a.0).map(PyTensor).map_err(err)
}

#[pyfunction]
fn diagonal_kernel_check(a: &PyTensor, x: Vec<Bound<'_, PyAny>>) -> PyResult<bool> {
    core::diagonal_kernel_check(&a.0, &to_vector(x)?).map_err(err)
}

#[pyfunction]
fn theorem_t2_check(lambda: &PyPartition, a: &PyTensor) -> PyResult<bool> {
    core::theorem_t2_check(&lambda.0, &a.0).map_err(err)
}

#[pyfunction]
fn lemma1_det<'py>(py: Python<'py>, mu: usize) -> PyResult<Bound<'py, PyAny>> {
    to_fraction(py, &core::lemma1_det(mu).map_err(err)?)
}

#[pyfunction]
fn lemma1_eigencheck(mu: usize) -> PyResult<bool> {
    core::lemma1_eigencheck(mu).map_err(err)
}

#[pyfunction]
fn hyperdet_222<'py>(py: Python<'py>, a: &PyTensor) -> PyResult<Bound<'py, PyAny>> {
    to_fraction(py, &core::hyperdet_222(&a.0).map_err(err)?)
}

fn to_matrix(rows: Vec<Vec<Bound<'_, PyAny>>>) -> PyResult<core::Matrix> {
    let rows = rows
        .iter()
        .map(|r| to_rationals(r))
        .collect::<PyResult<Vec<_>>>()?;
    core::Matrix::from_rows(rows).map_err(err)
}

#[pyfunction]
fn pfaffian<'py>(
    py: Python<'py>,
    rows: Vec<Vec<Bound<'py, PyAny>>>,
) -> PyResult<Bound<'py, PyAny>> {
    to_fraction(py, &core::pfaffian(&to_matrix(rows)?).map_err(err)?)
}

#[pyfunction]
fn determinant<'py>(
    py: Python<'py>,
    rows: Vec<Vec<Bound<'py, PyAny>>>,
) -> PyResult<Bound<'py, PyAny>> {
    to_fraction(py, &to_matrix(rows)?.determinant().map_err(err)?)
}

/// Runs the degeneracy suite and returns its per-shape reports as dicts.
#[pyfunction]
#[pyo3(signature = (p, n, trials = 20, seed = 0))]
fn main_theorem_suite(
    py: Python<'_>,
    p: usize,
    n: usize,
    trials: usize,
    seed: u64,
) -> PyResult<Bound<'_, PyAny>> {
    let reports = core::main_theorem_suite(p, n, trials, seed).map_err(err)?;
    json_to_py(py, &json_of(&reports)?)
}

/// Runs every suite applicable at `(p, n)` and returns the aggregate report.
#[pyfunction]
#[pyo3(signature = (p = 3, n = 3, trials = 5, seed = 0, max_mu = 10))]
fn report(
    py: Python<'_>,
    p: usize,
    n: usize,
    trials: usize,
    seed: u64,
    max_mu: usize,
) -> PyResult<Bound<'_, PyAny>> {
    let config = SuiteConfig {
        p,
        n,
        trials,
        seed,
        max_mu,
    };
    let report = suites::full_report(&config).map_err(err)?;
    json_to_py(py, &json_of(&report)?)
}

#[pymodule(name = "hyperdet_schur")]
fn python_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPartition>()?;
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyAlgebraElement>()?;
    m.add_class::<PyTensor>()?;
    m.add_function(wrap_pyfunction!(all_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(critical_set, m)?)?;
    m.add_function(wrap_pyfunction!(young_symmetrizer, m)?)?;
    m.add_function(wrap_pyfunction!(project_isotypic, m)?)?;
    m.add_function(wrap_pyfunction!(projector_rank, m)?)?;
    m.add_function(wrap_pyfunction!(antisymmetrize, m)?)?;
    m.add_function(wrap_pyfunction!(diagonal_kernel_check, m)?)?;
    m.add_function(wrap_pyfunction!(theorem_t2_check, m)?)?;
    m.add_function(wrap_pyfunction!(lemma1_det, m)?)?;
    m.add_function(wrap_pyfunction!(lemma1_eigencheck, m)?)?;
    m.add_function(wrap_pyfunction!(hyperdet_222, m)?)?;
    m.add_function(wrap_pyfunction!(pfaffian, m)?)?;
    m.add_function(wrap_pyfunction!(determinant, m)?)?;
    m.add_function(wrap_pyfunction!(main_theorem_suite, m)?)?;
    m.add_function(wrap_pyfunction!(report, m)?)?;
    Ok(())
}
