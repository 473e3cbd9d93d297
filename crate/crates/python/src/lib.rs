//! Python bindings. The extension module is named `braidalex`.

use braidalex::{
    alexander, membership, satellite, ConwayParity, Error, HalfLaurent, PCertificate, PlaneTree,
    PositiveBraidWord, SatellitePattern, VerificationReport,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

fn err(e: Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// Laurent polynomial in `t^(1/2)` with integer coefficients.
#[pyclass(
    name = "Laurent",
    module = "braidalex",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyLaurent(HalfLaurent);

#[pymethods]
impl PyLaurent {
    /// Parses `"t - 1 + t^-1"` style text or a JSON list of
    /// `[doubled_exponent, coefficient]` pairs.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        HalfLaurent::parse_any(text).map(Self).map_err(err)
    }

    #[staticmethod]
    fn from_pairs(pairs: Vec<(i64, i64)>) -> Self {
        Self(HalfLaurent::from_terms(pairs))
    }

    /// `t^(1/2) - t^(-1/2)`.
    #[staticmethod]
    fn skein_factor() -> Self {
        Self(HalfLaurent::skein_factor())
    }

    /// `(doubled_exponent, coefficient)` pairs, highest exponent first.
    fn pairs(&self) -> Vec<(i64, i64)> {
        self.0.terms().collect()
    }

    fn coeff(&self, doubled_exp: i64) -> i64 {
        self.0.coeff(doubled_exp)
    }

    #[getter]
    fn degree_doubled(&self) -> i64 {
        self.0.summarize().degree_doubled
    }

    #[getter]
    fn alpha(&self) -> i64 {
        self.0.summarize().alpha
    }

    #[getter]
    fn beta(&self) -> i64 {
        self.0.summarize().beta
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn conway_parity(&self) -> &'static str {
        match self.0.conway_parity() {
            ConwayParity::SymmetricIntegral => "symmetric-integral",
            ConwayParity::AntisymmetricHalf => "antisymmetric-half",
            ConwayParity::Zero => "zero",
            ConwayParity::Violation => "violation",
        }
    }

    /// `t -> t^w`.
    fn substitute_power(&self, w: i64) -> Self {
        Self(self.0.substitute_power(w))
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __neg__(&self) -> Self {
        Self(-&self.0)
    }

    fn __pow__(&self, exp: u32, _modulo: Option<i64>) -> Self {
        Self(self.0.pow(exp))
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Laurent('{}')", self.0)
    }
}

#[pyclass(name = "BraidWord", module = "braidalex", frozen, eq, from_py_object)]
#[derive(Clone, PartialEq)]
pub struct PyBraidWord(PositiveBraidWord);

#[pymethods]
impl PyBraidWord {
    #[new]
    fn new(strands: usize, letters: Vec<usize>) -> PyResult<Self> {
        PositiveBraidWord::new(strands, letters)
            .map(Self)
            .map_err(err)
    }

    /// Parses `"3: 1 2 1 2"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(err)
    }

    #[staticmethod]
    fn torus(p: usize, q: usize) -> PyResult<Self> {
        PositiveBraidWord::torus(p, q).map(Self).map_err(err)
    }

    #[getter]
    fn strands(&self) -> usize {
        self.0.strands()
    }

    #[getter]
    fn letters(&self) -> Vec<usize> {
        self.0.letters().to_vec()
    }

    fn components(&self) -> usize {
        self.0.closure_components()
    }

    fn has_full_support(&self) -> bool {
        self.0.has_full_support()
    }

    /// `method` is one of `seifert`, `skein`, `burau`.
    #[pyo3(signature = (method = "seifert"))]
    fn poly(&self, method: &str) -> PyResult<PyLaurent> {
        let delta = match method {
            "seifert" => alexander::braid_poly(&self.0),
            "skein" => alexander::skein_oracle(&self.0).map_err(err)?,
            "burau" => alexander::burau_poly(&self.0).map_err(err)?,
            other => return Err(PyValueError::new_err(format!("unknown method '{other}'"))),
        };
        Ok(PyLaurent(delta))
    }

    fn seifert_matrix(&self) -> Vec<Vec<i64>> {
        braidalex::seifert_from_braid(&self.0).entries().to_vec()
    }

    /// `(column, top, bottom)` for each brick.
    fn bricks(&self) -> Vec<(usize, usize, usize)> {
        braidalex::bricks(&self.0)
            .into_iter()
            .map(|b| (b.column, b.top, b.bottom))
            .collect()
    }

    fn connected_sum(&self, other: &Self) -> Self {
        Self(self.0.connected_sum(&other.0))
    }

    fn certify(&self) -> PyResult<PyCertificate> {
        membership::certify_braid(&self.0)
            .map(PyCertificate)
            .map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("BraidWord.parse('{}')", self.0)
    }
}

#[pyclass(
    name = "PlaneTree",
    module = "braidalex",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyPlaneTree(PlaneTree);

#[pymethods]
impl PyPlaneTree {
    /// Parses nested parentheses such as `"v(v(v))(v)"`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        text.parse().map(Self).map_err(err)
    }

    #[staticmethod]
    fn path(m: usize) -> Self {
        Self(PlaneTree::path(m))
    }

    #[staticmethod]
    fn star(m: usize) -> Self {
        Self(PlaneTree::star(m))
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn poly(&self) -> PyLaurent {
        PyLaurent(alexander::tree_poly(&self.0))
    }

    fn unrooted_key(&self) -> String {
        self.0.unrooted_key()
    }

    fn certify(&self) -> PyResult<PyCertificate> {
        membership::certify_tree(&self.0)
            .map(PyCertificate)
            .map_err(err)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("PlaneTree('{}')", self.0)
    }
}

#[pyclass(
    name = "Certificate",
    module = "braidalex",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq)]
pub struct PyCertificate(PCertificate);

#[pymethods]
impl PyCertificate {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        PCertificate::from_json(text)
            .map(Self)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn to_json(&self) -> String {
        self.0.to_json()
    }

    #[getter]
    fn kind(&self) -> &'static str {
        self.0.kind()
    }

    fn size(&self) -> usize {
        self.0.size()
    }

    fn verify(&self) -> PyVerification {
        PyVerification(membership::verify(&self.0))
    }

    /// Joins two certificates as a connected sum.
    fn sum(&self, other: &Self) -> Self {
        Self(membership::certify_sum(self.0.clone(), other.0.clone()))
    }
}

#[pyclass(name = "Verification", module = "braidalex", frozen)]
pub struct PyVerification(VerificationReport);

#[pymethods]
impl PyVerification {
    #[getter]
    fn valid(&self) -> bool {
        self.0.valid
    }

    #[getter]
    fn polynomial(&self) -> PyLaurent {
        PyLaurent(self.0.polynomial.clone())
    }

    #[getter]
    fn alpha(&self) -> i64 {
        self.0.alpha
    }

    #[getter]
    fn beta(&self) -> i64 {
        self.0.beta
    }

    /// `(node_path, check_name)` of the first failed check, if any.
    #[getter]
    fn failure(&self) -> Option<(String, String)> {
        self.0
            .failure
            .as_ref()
            .map(|f| (f.path.clone(), f.check.clone()))
    }

    fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.0).expect("reports serialize")
    }

    fn __bool__(&self) -> bool {
        self.0.valid
    }
}

/// `Δ_K(t^w) · Δ_{P(U)}(t)`.
#[pyfunction]
fn satellite_poly(
    winding: i64,
    pattern_poly: &PyLaurent,
    companion: &PyLaurent,
) -> PyResult<PyLaurent> {
    let pattern = SatellitePattern::new(winding, pattern_poly.0.clone()).map_err(err)?;
    Ok(PyLaurent(satellite::satellite_poly(&pattern, &companion.0)))
}

/// Whether the sign obstruction fires for a pattern with this winding
/// number and `P(U)` polynomial.
#[pyfunction]
fn obstruction_fires(winding: i64, pattern_poly: &PyLaurent) -> PyResult<bool> {
    let pattern = SatellitePattern::new(winding, pattern_poly.0.clone()).map_err(err)?;
    Ok(satellite::obstruction(&pattern).fires)
}

/// `(cable polynomial, not_in_p)` for the `(n, 1)`-cable of `companion`.
#[pyfunction]
fn cable_check(n: i64, companion: &PyBraidWord) -> PyResult<(PyLaurent, bool)> {
    let r = satellite::krishna_check(n, &companion.0).map_err(err)?;
    Ok((PyLaurent(r.cable_poly), r.not_in_p))
}

/// `(β, holds)` for the connected sum of the given prime knots.
#[pyfunction]
fn summand_check(summands: Vec<PyBraidWord>) -> PyResult<(i64, bool)> {
    let words: Vec<PositiveBraidWord> = summands.into_iter().map(|w| w.0).collect();
    let r = membership::ito_summand_check(&words).map_err(err)?;
    Ok((r.beta, r.holds))
}

#[pymodule]
#[pyo3(name = "braidalex")]
fn braidalex_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyLaurent>()?;
    m.add_class::<PyBraidWord>()?;
    m.add_class::<PyPlaneTree>()?;
    m.add_class::<PyCertificate>()?;
    m.add_class::<PyVerification>()?;
    m.add_function(wrap_pyfunction!(satellite_poly, m)?)?;
    m.add_function(wrap_pyfunction!(obstruction_fires, m)?)?;
    m.add_function(wrap_pyfunction!(cable_check, m)?)?;
    m.add_function(wrap_pyfunction!(summand_check, m)?)?;
    Ok(())
}
