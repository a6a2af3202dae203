//! Python module `cactus`. Arguments are plain Python values (strings,
//! lists, dicts) in the same JSON encodings as the command line; results come
//! back the same way. Errors raise `ValueError`.

pub mod api;

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde_json::Value;

use cactus_core::growth::DEFAULT_BOUND;

fn to_json(obj: &Bound<'_, PyAny>) -> PyResult<Value> {
    let text: String = obj.py().import("json")?.call_method1("dumps", (obj,))?.extract()?;
    serde_json::from_str(&text).map_err(|e| PyValueError::new_err(e.to_string()))
}

fn to_py(py: Python<'_>, v: cactus_core::Result<Value>) -> PyResult<Py<PyAny>> {
    let v = v.map_err(|e| PyValueError::new_err(e.to_string()))?;
    let text = serde_json::to_string(&v).map_err(|e| PyValueError::new_err(e.to_string()))?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn err(e: cactus_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// P- and Q-symbols of a word, given as a digit string or a list of letters.
#[pyfunction]
#[pyo3(signature = (word, r=None))]
fn rsk(word: &Bound<'_, PyAny>, r: Option<usize>) -> PyResult<Py<PyAny>> {
    to_py(word.py(), api::rsk(&to_json(word)?, r))
}

#[pyfunction]
fn rsk_inverse(p: &Bound<'_, PyAny>, q: &Bound<'_, PyAny>, r: usize) -> PyResult<Py<PyAny>> {
    to_py(p.py(), api::rsk_inverse(&to_json(p)?, &to_json(q)?, r))
}

#[pyfunction]
#[pyo3(signature = (word, i, r=None))]
fn crystal_e(word: &Bound<'_, PyAny>, i: usize, r: Option<usize>) -> PyResult<Py<PyAny>> {
    to_py(word.py(), api::crystal_e(&to_json(word)?, i, r))
}

#[pyfunction]
#[pyo3(signature = (word, i, r=None))]
fn crystal_f(word: &Bound<'_, PyAny>, i: usize, r: Option<usize>) -> PyResult<Py<PyAny>> {
    to_py(word.py(), api::crystal_f(&to_json(word)?, i, r))
}

#[pyfunction]
fn singular_words(py: Python<'_>, n: usize, r: usize, mu: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
    to_py(py, api::singular_words(n, r, &to_json(mu)?))
}

#[pyfunction]
fn lr_coefficient(target: &Bound<'_, PyAny>, parts: &Bound<'_, PyAny>) -> PyResult<u64> {
    api::lr_coefficient(&to_json(target)?, &to_json(parts)?).map_err(err)
}

#[pyfunction]
fn rectify(t: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
    to_py(t.py(), api::rectify(&to_json(t)?))
}

#[pyfunction]
fn evacuation(t: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
    to_py(t.py(), api::evacuation(&to_json(t)?))
}

#[pyfunction]
fn partial_evacuation(t: &Bound<'_, PyAny>, q: usize) -> PyResult<Py<PyAny>> {
    to_py(t.py(), api::partial_evacuation(&to_json(t)?, q))
}

#[pyfunction]
fn dual_equivalent(s: &Bound<'_, PyAny>, t: &Bound<'_, PyAny>) -> PyResult<bool> {
    api::dual_equivalent(&to_json(s)?, &to_json(t)?).map_err(err)
}

/// Applies generators `[(p, q), ...]` in order, reversing blocks of letters.
#[pyfunction]
#[pyo3(signature = (word, generators, r=None))]
fn act_on_word(word: &Bound<'_, PyAny>, generators: &Bound<'_, PyAny>, r: Option<usize>) -> PyResult<Py<PyAny>> {
    to_py(word.py(), api::act_on_word(&to_json(word)?, &to_json(generators)?, r))
}

#[pyfunction]
fn act_on_syt(t: &Bound<'_, PyAny>, generators: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
    to_py(t.py(), api::act_on_syt(&to_json(t)?, &to_json(generators)?))
}

#[pyfunction]
#[pyo3(signature = (r, d, bound=DEFAULT_BOUND))]
fn enumerate_cgds(py: Python<'_>, r: usize, d: usize, bound: usize) -> PyResult<Py<PyAny>> {
    to_py(py, api::enumerate_cgds(r, d, bound))
}

#[pyfunction]
#[pyo3(signature = (r, d, shape, bound=DEFAULT_BOUND))]
fn enumerate_decgds(py: Python<'_>, r: usize, d: usize, shape: &Bound<'_, PyAny>, bound: usize) -> PyResult<Py<PyAny>> {
    to_py(py, api::enumerate_decgds(r, d, &to_json(shape)?, bound))
}

#[pyfunction]
fn orbits_syt(shape: &Bound<'_, PyAny>) -> PyResult<Py<PyAny>> {
    to_py(shape.py(), api::orbits_syt(&to_json(shape)?))
}

#[pyfunction]
#[pyo3(signature = (shape, mu, r=None, d=None))]
fn check_equivariance(
    shape: &Bound<'_, PyAny>,
    mu: &Bound<'_, PyAny>,
    r: Option<usize>,
    d: Option<usize>,
) -> PyResult<Py<PyAny>> {
    to_py(shape.py(), api::check_equivariance(&to_json(shape)?, &to_json(mu)?, r, d))
}

/// Joint spectrum of the Gaudin Hamiltonians on the singular vectors of
/// weight `mu`; `z` entries may be ints, floats or strings like `"1/3"`.
#[pyfunction]
#[pyo3(signature = (z, mu, r=None))]
fn joint_spectrum(z: &Bound<'_, PyAny>, mu: &Bound<'_, PyAny>, r: Option<usize>) -> PyResult<Py<PyAny>> {
    to_py(z.py(), api::joint_spectrum(&to_json(z)?, &to_json(mu)?, r))
}

#[pymodule]
#[pyo3(name = "cactus")]
fn cactus_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(rsk, m)?)?;
    m.add_function(wrap_pyfunction!(rsk_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(crystal_e, m)?)?;
    m.add_function(wrap_pyfunction!(crystal_f, m)?)?;
    m.add_function(wrap_pyfunction!(singular_words, m)?)?;
    m.add_function(wrap_pyfunction!(lr_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(rectify, m)?)?;
    m.add_function(wrap_pyfunction!(evacuation, m)?)?;
    m.add_function(wrap_pyfunction!(partial_evacuation, m)?)?;
    m.add_function(wrap_pyfunction!(dual_equivalent, m)?)?;
    m.add_function(wrap_pyfunction!(act_on_word, m)?)?;
    m.add_function(wrap_pyfunction!(act_on_syt, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_cgds, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_decgds, m)?)?;
    m.add_function(wrap_pyfunction!(orbits_syt, m)?)?;
    m.add_function(wrap_pyfunction!(check_equivariance, m)?)?;
    m.add_function(wrap_pyfunction!(joint_spectrum, m)?)?;
    m.add("DEFAULT_BOUND", DEFAULT_BOUND)?;
    Ok(())
}
