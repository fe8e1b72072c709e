//! Python bindings for the `lcsq` engine.
//!
//! Tables over Z hold [`Group`] cells, tables over F_p hold plain integers.
//! Degrees are passed as sequences of per-generator exponents, e.g. `(3, 4)`.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

use lcsq::closed_forms::{self, DiffReport, PredictedTable};
use lcsq::engine::{BigradedTable, Cell, Engine, DEFAULT_MAX_DIM};
use lcsq::free_algebra::{self, AlgebraPresentation, Element, MultiDegree, Ring};
use lcsq::linalg::GroupInvariants;
use lcsq::store;
use lcsq::weyl;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn parse_ring(ring: &str) -> PyResult<Ring> {
    ring.parse().map_err(value_error)
}

fn degree_tuple(d: &MultiDegree) -> Vec<u32> {
    d.degrees().to_vec()
}

fn cell_to_py(py: Python<'_>, c: &Cell) -> PyResult<Option<Py<PyAny>>> {
    Ok(match c {
        Cell::Group(g) => Some(Py::new(py, Group(g.clone()))?.into_any()),
        Cell::Dimension(d) => Some(d.into_pyobject(py)?.into_any().unbind()),
        Cell::Blank => None,
    })
}

/// A finitely presented graded algebra over Z or F_p.
#[pyclass(name = "Presentation", frozen, from_py_object)]
#[derive(Clone)]
struct Presentation(AlgebraPresentation);

#[pymethods]
impl Presentation {
    #[new]
    #[pyo3(signature = (gens, relations = "", ring = "Z"))]
    fn new(gens: usize, relations: &str, ring: &str) -> PyResult<Self> {
        let ring = parse_ring(ring)?;
        AlgebraPresentation::parse(gens, ring, relations)
            .map(Presentation)
            .map_err(value_error)
    }

    #[getter]
    fn gens(&self) -> usize {
        self.0.gens()
    }

    #[getter]
    fn ring(&self) -> String {
        self.0.ring().to_string()
    }

    /// Relations in canonical form, sorted.
    #[getter]
    fn relations(&self) -> Vec<String> {
        self.0.canonical_relations()
    }

    fn with_ring(&self, ring: &str) -> PyResult<Self> {
        Ok(Presentation(self.0.with_ring(parse_ring(ring)?)))
    }

    fn __repr__(&self) -> String {
        format!(
            "Presentation(gens={}, relations={:?}, ring={:?})",
            self.0.gens(),
            self.0.canonical_relations().join(","),
            self.0.ring().to_string()
        )
    }
}

/// A homogeneous element of the free algebra with integer coefficients.
#[pyclass(name = "Element", frozen, from_py_object)]
#[derive(Clone)]
struct PyElement(Element);

#[pymethods]
impl PyElement {
    #[staticmethod]
    fn parse(src: &str, gens: usize) -> PyResult<Self> {
        free_algebra::parse_element(src, gens)
            .map(PyElement)
            .map_err(value_error)
    }

    #[staticmethod]
    fn generator(gens: usize, index: usize) -> PyResult<Self> {
        if index == 0 || index > gens {
            return Err(value_error(format!("generator x{index} out of range 1..={gens}")));
        }
        Ok(PyElement(Element::generator(gens, index)))
    }

    #[getter]
    fn degree(&self) -> Vec<u32> {
        degree_tuple(self.0.degree())
    }

    /// `(word, coefficient)` pairs, words as lists of 1-based generator indices.
    #[getter]
    fn terms(&self) -> Vec<(Vec<u8>, BigInt)> {
        self.0
            .terms()
            .iter()
            .map(|(w, c)| (w.letters().to_vec(), c.clone()))
            .collect()
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn bracket(&self, other: &PyElement) -> PyElement {
        PyElement(free_algebra::bracket(&self.0, &other.0))
    }

    fn __add__(&self, other: &PyElement) -> PyResult<PyElement> {
        self.0.try_add(&other.0).map(PyElement).map_err(value_error)
    }

    fn __sub__(&self, other: &PyElement) -> PyResult<PyElement> {
        self.0.try_sub(&other.0).map(PyElement).map_err(value_error)
    }

    fn __mul__(&self, other: &PyElement) -> PyElement {
        PyElement(free_algebra::multiply(&self.0, &other.0))
    }

    fn __neg__(&self) -> PyElement {
        PyElement(self.0.neg())
    }

    fn __eq__(&self, other: &PyElement) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Element({:?})", self.0.to_string())
    }
}

/// A finitely generated abelian group: free rank plus torsion.
#[pyclass(name = "Group", frozen, from_py_object)]
#[derive(Clone)]
struct Group(GroupInvariants);

#[pymethods]
impl Group {
    #[new]
    #[pyo3(signature = (rank, torsion = Vec::new()))]
    fn new(rank: usize, torsion: Vec<BigInt>) -> PyResult<Self> {
        if torsion.iter().any(|t| t.sign() != num_bigint::Sign::Plus) {
            return Err(value_error("torsion orders must be positive"));
        }
        Ok(Group(GroupInvariants::from_torsion(rank, torsion)))
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank
    }

    /// Invariant factors `d_1 | d_2 | ...`, all greater than one.
    #[getter]
    fn invariant_factors(&self) -> Vec<BigInt> {
        self.0.factors.clone()
    }

    /// Prime-power torsion orders.
    #[getter]
    fn elementary_divisors(&self) -> Vec<BigInt> {
        self.0.elementary_divisors()
    }

    #[getter]
    fn torsion_order(&self) -> BigInt {
        self.0.torsion_order()
    }

    fn is_trivial(&self) -> bool {
        self.0.is_trivial()
    }

    fn __eq__(&self, other: &Group) -> bool {
        self.0.is_isomorphic(&other.0)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Group({:?})", self.0.to_string())
    }
}

/// Components of `N_i` for every degree up to a total-degree bound.
#[pyclass(name = "Table", frozen, from_py_object)]
#[derive(Clone)]
struct Table(BigradedTable);

#[pymethods]
impl Table {
    #[getter]
    fn ring(&self) -> String {
        self.0.meta.ring.to_string()
    }

    #[getter]
    fn i(&self) -> usize {
        self.0.meta.i
    }

    #[getter]
    fn bound(&self) -> u32 {
        self.0.meta.bound
    }

    #[getter]
    fn gens(&self) -> usize {
        self.0.meta.gens
    }

    #[getter]
    fn relations(&self) -> Vec<String> {
        self.0.meta.relations.clone()
    }

    /// The component at `degree`: a `Group` over Z, an `int` over F_p, or
    /// `None` when it was not computed.
    fn cell(&self, py: Python<'_>, degree: Vec<u32>) -> PyResult<Option<Py<PyAny>>> {
        match self.0.get(&MultiDegree::new(degree)) {
            Some(c) => cell_to_py(py, c),
            None => Ok(None),
        }
    }

    fn is_blank(&self, degree: Vec<u32>) -> bool {
        self.0.get(&MultiDegree::new(degree)).is_some_and(Cell::is_blank)
    }

    /// Computed cells keyed by degree tuple; blank cells are left out.
    fn cells<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let out = PyDict::new(py);
        for (d, c) in &self.0.cells {
            if let Some(v) = cell_to_py(py, c)? {
                out.set_item(pyo3::types::PyTuple::new(py, d.degrees())?, v)?;
            }
        }
        Ok(out)
    }

    #[getter]
    fn blank_count(&self) -> usize {
        self.0.blank_count()
    }

    #[getter]
    fn total_dimension(&self) -> Option<u64> {
        self.0.total_dimension()
    }

    fn transpose(&self) -> Table {
        Table(self.0.transpose())
    }

    fn to_text(&self) -> String {
        store::to_text(&self.0)
    }

    fn to_csv(&self) -> String {
        store::to_csv(&self.0)
    }

    fn to_latex(&self) -> String {
        store::to_latex(&self.0)
    }

    #[staticmethod]
    fn from_csv(src: &str) -> PyResult<Table> {
        store::parse_csv(src).map(Table).map_err(value_error)
    }

    fn __eq__(&self, other: &Table) -> bool {
        self.0 == other.0
    }

    fn __len__(&self) -> usize {
        self.0.cells.len()
    }

    fn __str__(&self) -> String {
        store::to_text(&self.0)
    }
}

/// A closed-form or F_p prediction, diffable against a computed table.
#[pyclass(name = "Prediction", frozen, from_py_object)]
#[derive(Clone)]
struct Prediction(PredictedTable);

#[pymethods]
impl Prediction {
    #[getter]
    fn label(&self) -> String {
        self.0.label.clone()
    }

    /// The predicted cell, or `None` outside the prediction's region.
    fn cell(&self, py: Python<'_>, degree: Vec<u32>) -> PyResult<Option<Py<PyAny>>> {
        match self.0.predicted(&MultiDegree::new(degree)) {
            Some(c) => cell_to_py(py, &c),
            None => Ok(None),
        }
    }

    fn transpose(&self) -> Prediction {
        Prediction(self.0.transpose())
    }
}

#[pyclass(name = "DiffReport", frozen)]
struct Diff(DiffReport);

#[pymethods]
impl Diff {
    #[getter]
    fn matches(&self) -> usize {
        self.0.matches
    }

    #[getter]
    fn mismatches(&self) -> usize {
        self.0.mismatches
    }

    #[getter]
    fn not_computed(&self) -> usize {
        self.0.not_computed
    }

    fn all_match(&self) -> bool {
        self.0.all_match()
    }

    fn mismatched_degrees(&self) -> Vec<Vec<u32>> {
        self.0.mismatched_degrees().iter().map(degree_tuple).collect()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }
}

#[pyclass(name = "CheckReport", frozen, get_all)]
struct Check {
    name: String,
    passed: bool,
    detail: String,
}

#[pymethods]
impl Check {
    fn __repr__(&self) -> String {
        let status = if self.passed { "pass" } else { "FAIL" };
        format!("CheckReport({status}: {})", self.name)
    }
}

#[pyclass(name = "DivisibilityReport", frozen, get_all)]
struct Divisibility {
    p: u64,
    exps: Vec<u32>,
    total: u64,
    modulus: u64,
    passed: bool,
}

#[pyclass(name = "HilbertReport", frozen, get_all)]
struct Hilbert {
    variable: usize,
    series: Vec<u64>,
    quotient: Vec<i128>,
    truncated: bool,
    coefficients_divisible: bool,
    passed: bool,
}

/// `N_i` at one multidegree.
#[pyfunction]
fn n_component(py: Python<'_>, pres: &Presentation, i: usize, degree: Vec<u32>) -> PyResult<Option<Py<PyAny>>> {
    let p = pres.0.clone();
    let d = MultiDegree::new(degree);
    let c = py
        .detach(move || lcsq::engine::n_component(&p, i, &d))
        .map_err(value_error)?;
    cell_to_py(py, &c)
}

/// `N_i` for every degree of total degree at most `bound`.
#[pyfunction]
#[pyo3(signature = (pres, i, bound, max_dim = DEFAULT_MAX_DIM))]
fn n_table(py: Python<'_>, pres: &Presentation, i: usize, bound: u32, max_dim: usize) -> PyResult<Table> {
    let p = pres.0.clone();
    py.detach(move || Engine::new(p).and_then(|e| e.with_max_dim(max_dim).table(i, bound)))
        .map(Table)
        .map_err(value_error)
}

#[pyfunction]
fn predict_n2(m: u32, n: u32) -> PyResult<Prediction> {
    closed_forms::predict_n2(m, n).map(Prediction).map_err(value_error)
}

#[pyfunction]
fn predict_n3(m: u32, n: u32) -> PyResult<Prediction> {
    closed_forms::predict_n3(m, n).map(Prediction).map_err(value_error)
}

/// F_p dimensions predicted from a table over Z.
#[pyfunction]
fn predict_fp_from_z(table: &Table, p: u64) -> PyResult<Prediction> {
    closed_forms::predict_fp_from_z(&table.0, p)
        .map(Prediction)
        .map_err(value_error)
}

#[pyfunction]
fn diff(table: &Table, prediction: &Prediction) -> Diff {
    Diff(closed_forms::diff_tables(&table.0, &prediction.0))
}

#[pyfunction]
fn lucas_binomial(m: u64, r: u64, p: u64) -> u64 {
    weyl::lucas_binomial(m, r, p)
}

/// Every divided-power operator identity on `k[x]/(x^{p^n})`.
#[pyfunction]
fn weyl_suite(p: u64, n: u32) -> PyResult<Vec<Check>> {
    let reports = weyl::weyl_suite(p, n).map_err(value_error)?;
    Ok(reports
        .into_iter()
        .map(|r| Check {
            name: r.name,
            passed: r.passed,
            detail: r.detail,
        })
        .collect())
}

#[pyfunction]
fn check_dim_divisibility(table: &Table, exps: Vec<u32>) -> PyResult<Divisibility> {
    let r = weyl::check_dim_divisibility(&table.0, &exps).map_err(value_error)?;
    Ok(Divisibility {
        p: r.p,
        exps: r.exps,
        total: r.total,
        modulus: r.modulus,
        passed: r.passed,
    })
}

#[pyfunction]
fn check_hilbert(table: &Table, variable: usize, exps: Vec<u32>) -> PyResult<Hilbert> {
    let r = weyl::check_hilbert(&table.0, variable, &exps).map_err(value_error)?;
    Ok(Hilbert {
        variable: r.variable,
        passed: r.passed(),
        series: r.series,
        quotient: r.division.quotient,
        truncated: r.division.truncated,
        coefficients_divisible: r.coefficients_divisible,
    })
}

#[pymodule]
#[pyo3(name = "lcsq")]
fn lcsq_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Presentation>()?;
    m.add_class::<PyElement>()?;
    m.add_class::<Group>()?;
    m.add_class::<Table>()?;
    m.add_class::<Prediction>()?;
    m.add_class::<Diff>()?;
    m.add_class::<Check>()?;
    m.add_class::<Divisibility>()?;
    m.add_class::<Hilbert>()?;
    m.add_function(wrap_pyfunction!(n_component, m)?)?;
    m.add_function(wrap_pyfunction!(n_table, m)?)?;
    m.add_function(wrap_pyfunction!(predict_n2, m)?)?;
    m.add_function(wrap_pyfunction!(predict_n3, m)?)?;
    m.add_function(wrap_pyfunction!(predict_fp_from_z, m)?)?;
    m.add_function(wrap_pyfunction!(diff, m)?)?;
    m.add_function(wrap_pyfunction!(lucas_binomial, m)?)?;
    m.add_function(wrap_pyfunction!(weyl_suite, m)?)?;
    m.add_function(wrap_pyfunction!(check_dim_divisibility, m)?)?;
    m.add_function(wrap_pyfunction!(check_hilbert, m)?)?;
    m.add("ENGINE_VERSION", lcsq::engine::ENGINE_VERSION)?;
    Ok(())
}
