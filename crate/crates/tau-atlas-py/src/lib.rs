//! Python bindings. Structured results (records, reports, posets) arrive in
//! Python as plain lists and dicts.

use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde_json::{json, Value};

use tau_atlas::gamma::gamma_records;
use tau_atlas::ideal::{ideal_of_gen_word, ideal_summands};
use tau_atlas::rep::{hom_dim, in_fac, is_isomorphic, is_tau_rigid, tau};
use tau_atlas::stt::describe_pair;
use tau_atlas::symgroup::{canonical_reduced_word, evaluate_word, inversion_length, parse_permutation};
use tau_atlas::verify::{verify_all, Atlas as CoreAtlas, VerifyOptions};
use tau_atlas::{build_auslander, AssocAlgebra, AtlasError, GenWord, Permutation, QuiverRep};

fn err(e: AtlasError) -> PyErr {
    match e {
        AtlasError::InvalidPermutation(_)
        | AtlasError::LetterOutOfRange { .. }
        | AtlasError::DegreeMismatch(..)
        | AtlasError::Parse(_)
        | AtlasError::InvalidSize(_)
        | AtlasError::NotPrime(_)
        | AtlasError::IndexOutOfRange(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn to_py(py: Python<'_>, v: &Value) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(v).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn perm(images: Vec<usize>) -> PyResult<Permutation> {
    Permutation::new(images).map_err(err)
}

/// A finite-dimensional right module, given by its quiver representation.
#[pyclass(name = "Module", frozen)]
struct PyModule_ {
    inner: QuiverRep,
}

#[pymethods]
impl PyModule_ {
    #[getter]
    fn dims(&self) -> Vec<usize> {
        self.inner.dims().to_vec()
    }

    /// Radical layers, e.g. "2.13.2.3".
    #[getter]
    fn loewy(&self) -> String {
        self.inner.fingerprint().loewy_string()
    }

    fn descriptor(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &json!(self.inner.descriptor()))
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Auslander-Reiten translate.
    fn tau(&self) -> PyModule_ {
        PyModule_ { inner: tau(&self.inner) }
    }

    fn is_tau_rigid(&self) -> bool {
        is_tau_rigid(&self.inner)
    }

    fn hom_dim(&self, other: &PyModule_) -> PyResult<usize> {
        same_algebra(&self.inner, &other.inner)?;
        Ok(hom_dim(&self.inner, &other.inner))
    }

    fn is_isomorphic(&self, other: &PyModule_) -> PyResult<bool> {
        same_algebra(&self.inner, &other.inner)?;
        Ok(is_isomorphic(&self.inner, &other.inner))
    }

    /// Whether this module is a quotient of a sum of copies of `generator`.
    fn in_fac(&self, generator: &PyModule_) -> PyResult<bool> {
        same_algebra(&self.inner, &generator.inner)?;
        Ok(in_fac(&self.inner, &generator.inner))
    }

    fn __repr__(&self) -> String {
        format!("Module({})", self.loewy())
    }
}

fn same_algebra(a: &QuiverRep, b: &QuiverRep) -> PyResult<()> {
    if Arc::ptr_eq(a.algebra(), b.algebra()) || **a.algebra() == **b.algebra() {
        Ok(())
    } else {
        Err(PyValueError::new_err("modules over different algebras"))
    }
}

/// Tilting modules, support τ-tilting pairs and their images over Λ/L for
/// one (n, p).
#[pyclass(name = "Atlas", frozen)]
struct PyAtlas {
    inner: CoreAtlas,
}

impl PyAtlas {
    fn alg(&self) -> &Arc<AssocAlgebra> {
        &self.inner.alg
    }

    fn vertex(&self, i: usize) -> PyResult<usize> {
        if i == 0 || i > self.alg().n() {
            return Err(PyValueError::new_err(format!("vertex {i} outside 1..={}", self.alg().n())));
        }
        Ok(i - 1)
    }
}

#[pymethods]
impl PyAtlas {
    #[new]
    #[pyo3(signature = (n, p=2, threads=1, seed=0))]
    fn new(py: Python<'_>, n: usize, p: u32, threads: usize, seed: u64) -> PyResult<Self> {
        let inner = py.detach(|| CoreAtlas::build(n, p, threads.max(1), seed)).map_err(err)?;
        Ok(PyAtlas { inner })
    }

    #[getter]
    fn n(&self) -> usize {
        self.alg().n()
    }

    #[getter]
    fn p(&self) -> u32 {
        self.alg().p()
    }

    #[getter]
    fn algebra_dim(&self) -> usize {
        self.alg().dim()
    }

    fn tilt_count(&self) -> usize {
        self.inner.tilt().len()
    }

    fn stt_count(&self) -> usize {
        self.inner.graph.len()
    }

    fn tilt_records(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &json!(self.inner.tilt().records()))
    }

    fn stt_records(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_py(py, &json!(self.inner.stt.records(&self.inner.structural.catalog)))
    }

    fn gamma_records(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let recs = gamma_records(&self.inner.gamma_image, &self.inner.structural, &self.inner.stt);
        to_py(py, &json!(recs))
    }

    /// DOT text of the Hasse quiver of `which` in {"tilt", "stt"}.
    #[pyo3(signature = (which="stt"))]
    fn hasse_dot(&self, which: &str) -> PyResult<String> {
        match which {
            "tilt" => Ok(self.inner.tilt().hasse().map_err(err)?.to_dot("tilt")),
            "stt" => {
                let cat = &self.inner.structural.catalog;
                let labels: Vec<String> = self.inner.stt.pairs.iter().map(|p| describe_pair(cat, p)).collect();
                Ok(self.inner.stt.hasse.to_dot_with("stt", |k| Some(labels[k].clone())))
            }
            other => Err(PyValueError::new_err(format!("unknown poset {other:?}"))),
        }
    }

    /// Indecomposable projective P_i (1-based).
    fn projective(&self, i: usize) -> PyResult<PyModule_> {
        Ok(PyModule_ { inner: QuiverRep::projective(self.alg(), self.vertex(i)?) })
    }

    fn simple(&self, i: usize) -> PyResult<PyModule_> {
        Ok(PyModule_ { inner: QuiverRep::simple(self.alg(), self.vertex(i)?) })
    }

    /// Summands e_1T, …, e_nT of T = I_{i_1}⋯I_{i_l}.
    fn ideal(&self, word: Vec<usize>) -> PyResult<Vec<PyModule_>> {
        let t = ideal_of_gen_word(self.alg(), &GenWord::new(word)).map_err(err)?;
        Ok(ideal_summands(&t).into_iter().map(|inner| PyModule_ { inner }).collect())
    }

    /// The pair I(w) for w in S_{n+1}, as its record.
    fn stt_of(&self, py: Python<'_>, w: Vec<usize>) -> PyResult<Py<PyAny>> {
        let w = perm(w)?;
        let s = &self.inner.structural;
        let pair = s.stt_of_word(&w).map_err(err)?;
        let k = self.inner.stt.find(&pair).ok_or_else(|| PyRuntimeError::new_err("pair missing from the atlas"))?;
        let record = self.inner.stt.records(&s.catalog).swap_remove(k);
        to_py(py, &json!({ "record": record, "description": describe_pair(&s.catalog, &pair) }))
    }

    /// Summands of the pair I(w) in slot order; shifted projectives are omitted.
    fn stt_modules(&self, w: Vec<usize>) -> PyResult<Vec<PyModule_>> {
        let s = &self.inner.structural;
        let pair = s.stt_of_word(&perm(w)?).map_err(err)?;
        Ok(pair.slot_modules().iter().map(|&id| PyModule_ { inner: s.catalog.module(id).clone() }).collect())
    }

    fn __repr__(&self) -> String {
        format!("Atlas(n={}, p={})", self.n(), self.p())
    }
}

/// Runs every invariant suite; returns {"passed": bool, "checks": [...]}.
#[pyfunction]
#[pyo3(signature = (n, p=2, p2p3=false, threads=1, seed=0))]
fn verify(py: Python<'_>, n: usize, p: u32, p2p3: bool, threads: usize, seed: u64) -> PyResult<Py<PyAny>> {
    let opts = VerifyOptions { threads: threads.max(1), seed, p2p3, gamma_bfs: true };
    let report = py.detach(|| verify_all(n, p, &opts)).map_err(err)?;
    to_py(py, &json!({ "passed": report.passed(), "checks": report.checks }))
}

/// Lexicographically smallest reduced word of a permutation in one-line notation.
#[pyfunction]
fn reduced_word(w: Vec<usize>) -> PyResult<Vec<usize>> {
    Ok(canonical_reduced_word(&perm(w)?).letters)
}

/// The permutation s_{i_1}⋯s_{i_l} of degree m.
#[pyfunction]
fn word_to_perm(word: Vec<usize>, m: usize) -> PyResult<Vec<usize>> {
    Ok(evaluate_word(&GenWord::new(word), m).map_err(err)?.images().to_vec())
}

#[pyfunction]
fn length(w: Vec<usize>) -> PyResult<usize> {
    Ok(inversion_length(&perm(w)?))
}

#[pyfunction]
fn parse_perm(text: &str) -> PyResult<Vec<usize>> {
    Ok(parse_permutation(text).map_err(err)?.images().to_vec())
}

#[pyfunction]
#[pyo3(signature = (n, p=2))]
fn algebra_dim(n: usize, p: u32) -> PyResult<usize> {
    Ok(build_auslander(n, p).map_err(err)?.dim())
}

#[pymodule]
fn tau_atlas_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAtlas>()?;
    m.add_class::<PyModule_>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(reduced_word, m)?)?;
    m.add_function(wrap_pyfunction!(word_to_perm, m)?)?;
    m.add_function(wrap_pyfunction!(length, m)?)?;
    m.add_function(wrap_pyfunction!(parse_perm, m)?)?;
    m.add_function(wrap_pyfunction!(algebra_dim, m)?)?;
    Ok(())
}
