//! Python bindings for `inveuler-core`.
//!
//! Exact values cross the boundary as Python `int`. Enumeration caps come
//! from the same `INVEULER_CAP_*` environment variables as the CLI.

use inveuler_core::closed;
use inveuler_core::geninv::{self, GeneralizedInvolution, SymMatrix};
use inveuler_core::perm::{self, Permutation, TableKind};
use inveuler_core::series;
use inveuler_core::verify::{self, Identity, RangeArgs};
use inveuler_core::{Caps, Error};
use num_bigint::BigInt;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyTuple};

fn to_py(err: Error) -> PyErr {
    match err {
        Error::RouteMismatch { .. } | Error::NegativeSplit { .. } => {
            PyRuntimeError::new_err(err.to_string())
        }
        _ => PyValueError::new_err(err.to_string()),
    }
}

#[pyclass(
    name = "Permutation",
    module = "inveuler",
    frozen,
    eq,
    hash,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq, Hash)]
struct PyPermutation(Permutation);

#[pymethods]
impl PyPermutation {
    #[new]
    fn new(word: Vec<u32>) -> PyResult<Self> {
        Permutation::new(word).map(PyPermutation).map_err(to_py)
    }

    #[getter]
    fn word(&self) -> Vec<u32> {
        self.0.word().to_vec()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn rises(&self) -> usize {
        self.0.rises()
    }

    fn descents(&self) -> usize {
        self.0.descents()
    }

    fn fixed_points(&self) -> usize {
        self.0.fixed_points()
    }

    fn is_involution(&self) -> bool {
        self.0.is_involution()
    }

    fn sign(&self) -> i32 {
        self.0.sign()
    }

    fn sign_involution(&self) -> PyResult<i32> {
        self.0.sign_involution().map_err(to_py)
    }

    fn __repr__(&self) -> String {
        format!("Permutation({:?})", self.0.word())
    }
}

#[pyclass(
    name = "GeneralizedInvolution",
    module = "inveuler",
    frozen,
    eq,
    skip_from_py_object
)]
#[derive(Clone, PartialEq, Eq)]
struct PyGeneralizedInvolution(GeneralizedInvolution);

#[pymethods]
impl PyGeneralizedInvolution {
    #[new]
    fn new(top: Vec<u32>, bottom: Vec<u32>, alphabet_size: usize) -> PyResult<Self> {
        GeneralizedInvolution::from_biword(&top, &bottom, alphabet_size)
            .map(PyGeneralizedInvolution)
            .map_err(to_py)
    }

    #[staticmethod]
    fn from_matrix(rows: Vec<Vec<i64>>) -> PyResult<Self> {
        let m = SymMatrix::from_rows(&rows).map_err(to_py)?;
        Ok(PyGeneralizedInvolution(GeneralizedInvolution::from_matrix(
            m,
        )))
    }

    fn to_matrix(&self) -> Vec<Vec<u32>> {
        self.0.to_matrix().rows()
    }

    #[getter]
    fn top(&self) -> Vec<u32> {
        self.0.top()
    }

    #[getter]
    fn bottom(&self) -> Vec<u32> {
        self.0.bottom()
    }

    #[getter]
    fn alphabet_size(&self) -> usize {
        self.0.alphabet_size()
    }

    fn __len__(&self) -> usize {
        self.0.len()
    }

    fn gfix(&self) -> usize {
        self.0.gfix()
    }

    fn sign(&self) -> i32 {
        self.0.sign()
    }

    fn polarize(&self) -> PyPermutation {
        PyPermutation(self.0.polarize())
    }

    fn __repr__(&self) -> String {
        let (top, bottom) = self.0.biword();
        format!(
            "GeneralizedInvolution(top={top:?}, bottom={bottom:?}, alphabet_size={})",
            self.0.alphabet_size()
        )
    }
}

/// Binomial coefficient with the falling-factorial convention.
#[pyfunction]
fn binomial(a: i64, b: i64) -> BigInt {
    inveuler_core::binomial(a, b)
}

#[pyfunction]
fn factorial(n: i64) -> PyResult<BigInt> {
    inveuler_core::factorial(n).map_err(to_py)
}

/// Signed number of involutions of S_n with k rises.
#[pyfunction]
fn f_signed(n: usize, k: i64) -> BigInt {
    closed::f_signed(n, k)
}

/// (even, odd) involutions of S_n with k rises.
#[pyfunction]
fn f_split(n: usize, k: i64) -> PyResult<(BigInt, BigInt)> {
    closed::f_split(n, k).map_err(to_py)
}

/// Rows f(n, 0..n) for n = 0..=n_max.
#[pyfunction]
fn f_rows(n_max: usize) -> Vec<Vec<BigInt>> {
    let t = closed::SignedEulerTable::new(n_max);
    (0..=n_max).map(|n| t.row(n).to_vec()).collect()
}

#[pyfunction]
fn a_total(n: usize, m: usize) -> BigInt {
    closed::a_total(n, m)
}

#[pyfunction]
fn a_plus(n: usize, m: usize) -> BigInt {
    closed::a_plus(n, m)
}

#[pyfunction]
fn a_minus(n: usize, m: usize) -> BigInt {
    closed::a_minus(n, m)
}

#[pyfunction]
fn a_hat(n: usize, m: usize) -> PyResult<BigInt> {
    closed::a_hat(n, m).map_err(to_py)
}

#[pyfunction]
fn worpitzky_residual(n: usize, s: usize) -> BigInt {
    closed::worpitzky_residual(n, s)
}

#[pyfunction]
fn zeilberger_residual(n: i64, k: i64) -> BigInt {
    closed::zeilberger_residual(n, k)
}

#[pyfunction]
fn f1_closed(n: usize) -> BigInt {
    closed::f1_closed(n)
}

#[pyfunction]
fn f1_recurrence(n_max: usize) -> Vec<BigInt> {
    closed::f1_recurrence(n_max)
}

#[pyfunction]
fn egf_scaled(n_max: usize) -> Vec<BigInt> {
    closed::egf_scaled(n_max)
}

#[pyfunction]
fn i_plus(n: usize) -> BigInt {
    closed::i_plus(n)
}

#[pyfunction]
fn involutions_count(n: usize) -> BigInt {
    closed::involutions_count(n)
}

#[pyfunction]
fn enumerate_involutions(n: usize) -> PyResult<Vec<PyPermutation>> {
    let all = perm::enumerate_involutions(n, &Caps::from_env()).map_err(to_py)?;
    Ok(all.into_iter().map(PyPermutation).collect())
}

/// Coefficients of a table computed by enumeration. `kind` is one of
/// "f", "f-plus", "f-minus", "a-eulerian", "b-signed".
#[pyfunction]
fn brute_table(n: usize, kind: &str) -> PyResult<Vec<BigInt>> {
    let kind = match kind {
        "f" => TableKind::InvolutionSigned,
        "f-plus" => TableKind::InvolutionEven,
        "f-minus" => TableKind::InvolutionOdd,
        "a-eulerian" => TableKind::Eulerian,
        "b-signed" => TableKind::SignedEulerian,
        other => {
            return Err(PyValueError::new_err(format!(
                "unknown table kind `{other}`"
            )))
        }
    };
    perm::brute_table(n, kind, &Caps::from_env())
        .map(|t| t.entries)
        .map_err(to_py)
}

#[pyfunction]
fn enumerate_generalized(n: usize, m: usize) -> PyResult<Vec<PyGeneralizedInvolution>> {
    let all = geninv::enumerate(n, m, &Caps::from_env()).map_err(to_py)?;
    Ok(all.into_iter().map(PyGeneralizedInvolution).collect())
}

#[pyfunction]
fn a_hat_bruteforce(n: usize, m: usize) -> PyResult<BigInt> {
    geninv::a_hat_bruteforce(n, m, &Caps::from_env()).map_err(to_py)
}

/// Polarization fiber sizes keyed by the involution's one-line word.
#[pyfunction]
fn fibers(py: Python<'_>, n: usize, m: usize) -> PyResult<Bound<'_, PyDict>> {
    let f = geninv::fibers(n, m, &Caps::from_env()).map_err(to_py)?;
    let d = PyDict::new(py);
    for (sigma, size) in f {
        d.set_item(PyTuple::new(py, sigma.word())?, size)?;
    }
    Ok(d)
}

/// Coefficients of u^0..u^U in (1+u)^m (1+u^2)^(-C(m+1,2)).
#[pyfunction]
fn column_gf(m: usize, u_order: usize) -> Vec<BigInt> {
    series::column_gf(m, u_order).univariate_coeffs()
}

/// Mismatching (t_degree, u_degree) pairs of the bivariate identity.
#[pyfunction]
fn verify_gf_identity(u_order: usize, t_order: usize) -> Vec<(usize, usize)> {
    series::verify_gf_identity(u_order, t_order)
        .into_iter()
        .map(|c| (c.t_degree, c.u_degree))
        .collect()
}

/// Runs one named identity check and returns its report as a dict.
#[pyfunction]
#[pyo3(signature = (identity, n_max=None, m_max=None, s_max=None, u_max=None, t_max=None, sum_n_max=None))]
#[allow(clippy::too_many_arguments)]
fn verify_identity<'py>(
    py: Python<'py>,
    identity: &str,
    n_max: Option<usize>,
    m_max: Option<usize>,
    s_max: Option<usize>,
    u_max: Option<usize>,
    t_max: Option<usize>,
    sum_n_max: Option<usize>,
) -> PyResult<Bound<'py, PyDict>> {
    let id: Identity = identity.parse().map_err(PyValueError::new_err)?;
    let range = RangeArgs {
        n_max,
        m_max,
        s_max,
        u_max,
        t_max,
        sum_n_max,
    };
    let report = verify::run(id, &range, &Caps::from_env()).map_err(to_py)?;
    let d = PyDict::new(py);
    d.set_item("identity", id.name())?;
    d.set_item("range", report.range.clone())?;
    d.set_item("status", if report.is_ok() { "ok" } else { "fail" })?;
    d.set_item("checked", report.checked)?;
    let counterexamples: Vec<(String, Vec<i64>, String, String)> = report
        .counterexamples
        .iter()
        .map(|c| {
            (
                c.check.to_string(),
                c.point.clone(),
                c.left.clone(),
                c.right.clone(),
            )
        })
        .collect();
    d.set_item("counterexamples", counterexamples)?;
    d.set_item("n0", report.n0)?;
    d.set_item("elapsed_ms", report.elapsed_ms)?;
    Ok(d)
}

#[pymodule]
fn inveuler(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPermutation>()?;
    m.add_class::<PyGeneralizedInvolution>()?;
    m.add_function(wrap_pyfunction!(binomial, m)?)?;
    m.add_function(wrap_pyfunction!(factorial, m)?)?;
    m.add_function(wrap_pyfunction!(f_signed, m)?)?;
    m.add_function(wrap_pyfunction!(f_split, m)?)?;
    m.add_function(wrap_pyfunction!(f_rows, m)?)?;
    m.add_function(wrap_pyfunction!(a_total, m)?)?;
    m.add_function(wrap_pyfunction!(a_plus, m)?)?;
    m.add_function(wrap_pyfunction!(a_minus, m)?)?;
    m.add_function(wrap_pyfunction!(a_hat, m)?)?;
    m.add_function(wrap_pyfunction!(worpitzky_residual, m)?)?;
    m.add_function(wrap_pyfunction!(zeilberger_residual, m)?)?;
    m.add_function(wrap_pyfunction!(f1_closed, m)?)?;
    m.add_function(wrap_pyfunction!(f1_recurrence, m)?)?;
    m.add_function(wrap_pyfunction!(egf_scaled, m)?)?;
    m.add_function(wrap_pyfunction!(i_plus, m)?)?;
    m.add_function(wrap_pyfunction!(involutions_count, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_involutions, m)?)?;
    m.add_function(wrap_pyfunction!(brute_table, m)?)?;
    m.add_function(wrap_pyfunction!(enumerate_generalized, m)?)?;
    m.add_function(wrap_pyfunction!(a_hat_bruteforce, m)?)?;
    m.add_function(wrap_pyfunction!(fibers, m)?)?;
    m.add_function(wrap_pyfunction!(column_gf, m)?)?;
    m.add_function(wrap_pyfunction!(verify_gf_identity, m)?)?;
    m.add_function(wrap_pyfunction!(verify_identity, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use std::ffi::CString;

    use super::*;

    #[test]
    fn module_runs_under_an_embedded_interpreter() {
        Python::attach(|py| {
            let m = PyModule::new(py, "inveuler").unwrap();
            inveuler(&m).unwrap();
            let globals = PyDict::new(py);
            globals.set_item("inveuler", m).unwrap();
            let code = CString::new(
                "assert inveuler.f_rows(4)[4] == [1, -2, -2, 1]\n\
                 assert inveuler.f_split(3, 1) == (0, 2)\n\
                 assert inveuler.f1_closed(100) == inveuler.egf_scaled(100)[100]\n\
                 assert inveuler.Permutation([2, 1]).sign_involution() == -1\n\
                 assert inveuler.verify_identity('ahat-routes', n_max=10, m_max=10)['status'] == 'ok'\n",
            )
            .unwrap();
            py.run(&code, Some(&globals), None).unwrap();
        });
    }

    #[test]
    fn errors_map_to_python_exceptions() {
        Python::attach(|py| {
            let err = PyPermutation::new(vec![2, 2]).err().unwrap();
            assert!(err.is_instance_of::<PyValueError>(py));
            assert!(brute_table(3, "nope").is_err());
            assert!(verify_identity(py, "nope", None, None, None, None, None, None).is_err());
        });
    }
}
