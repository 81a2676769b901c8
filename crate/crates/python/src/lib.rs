//! Python bindings. Scalars cross the boundary as strings in the scalar
//! grammar; reports cross as JSON text.

use std::collections::BTreeMap;

use pyo3::exceptions::{PyIndexError, PyValueError};
use pyo3::prelude::*;
use ybx_core::io;
use ybx_core::verify::{
    verify_colored_family, verify_constant, verify_constant_sampled, verify_inverse_pair, verify_wxz,
    verify_wxz_sampled, ConstantEquation, Sampling, VerificationReport, VerifyMode,
};
use ybx_core::{classify_dn_generic, Invertibility, ParamScalar};

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn scalar(s: &str) -> PyResult<ParamScalar> {
    s.parse().map_err(value_err)
}

fn vector(v: &[String]) -> PyResult<Vec<ParamScalar>> {
    v.iter().map(|s| scalar(s)).collect()
}

fn strings(v: &[ParamScalar]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn bindings(b: BTreeMap<String, String>) -> PyResult<BTreeMap<String, ParamScalar>> {
    b.into_iter().map(|(k, v)| Ok((k, scalar(&v)?))).collect()
}

fn mode(samples: Option<usize>, seed: u64) -> VerifyMode {
    match samples {
        Some(samples) => VerifyMode::Sampled(Sampling { samples, seed }),
        None => VerifyMode::Symbolic,
    }
}

fn report_json(r: &VerificationReport) -> String {
    r.to_json()
}

/// Canonical form of a scalar expression.
#[pyfunction]
fn simplify(expr: &str) -> PyResult<String> {
    Ok(scalar(expr)?.to_string())
}

/// Substitutes expressions for indeterminates.
#[pyfunction]
fn substitute(expr: &str, values: BTreeMap<String, String>) -> PyResult<String> {
    let out = scalar(expr)?.compose(&bindings(values)?).map_err(value_err)?;
    Ok(out.to_string())
}

/// Unital associative algebra given by structure constants.
#[pyclass(name = "Algebra", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyAlgebra(ybx_core::Algebra);

#[pymethods]
impl PyAlgebra {
    /// `k[X]/(X² − mX − n)` with basis `1, x`.
    #[staticmethod]
    #[pyo3(signature = (m = "m", n = "n"))]
    fn quadratic(m: &str, n: &str) -> PyResult<Self> {
        Ok(PyAlgebra(ybx_core::Algebra::quadratic_quotient(scalar(m)?, scalar(n)?)))
    }

    #[staticmethod]
    fn upper_triangular() -> Self {
        PyAlgebra(ybx_core::Algebra::upper_triangular())
    }

    /// Parses and validates an algebra document.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::algebra_from_json(text).map(PyAlgebra).map_err(value_err)
    }

    fn to_json(&self) -> String {
        io::algebra_to_json(&self.0)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.0.labels().to_vec()
    }

    fn mul(&self, a: Vec<String>, b: Vec<String>) -> PyResult<Vec<String>> {
        let out = self.0.mul(&vector(&a)?, &vector(&b)?).map_err(value_err)?;
        Ok(strings(&out))
    }

    fn bind(&self, values: BTreeMap<String, String>) -> PyResult<Self> {
        self.0.bind(&bindings(values)?).map(PyAlgebra).map_err(value_err)
    }
}

/// Lie superalgebra given by bracket constants and parities.
#[pyclass(name = "Superalgebra", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySuperalgebra(ybx_core::LieSuperalgebra);

#[pymethods]
impl PySuperalgebra {
    #[staticmethod]
    fn gl11() -> Self {
        PySuperalgebra(ybx_core::LieSuperalgebra::gl11())
    }

    #[staticmethod]
    fn heisenberg() -> Self {
        PySuperalgebra(ybx_core::LieSuperalgebra::heisenberg())
    }

    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::superalgebra_from_json(text).map(PySuperalgebra).map_err(value_err)
    }

    fn to_json(&self) -> String {
        io::superalgebra_to_json(&self.0)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn labels(&self) -> Vec<String> {
        self.0.labels().to_vec()
    }

    #[getter]
    fn degrees(&self) -> Vec<u8> {
        self.0.degrees().to_vec()
    }

    fn bracket(&self, x: Vec<String>, y: Vec<String>) -> PyResult<Vec<String>> {
        let out = self.0.bracket(&vector(&x)?, &vector(&y)?).map_err(value_err)?;
        Ok(strings(&out))
    }

    /// A basis of the even part of the center.
    fn even_center(&self) -> Vec<Vec<String>> {
        self.0.even_center().iter().map(|z| strings(z)).collect()
    }
}

/// Linear operator on `V⊗V`; column `i·n + j` is the image of `e_i⊗e_j`.
#[pyclass(name = "Operator", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PyOperator(ybx_core::Operator2);

#[pymethods]
impl PyOperator {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        io::operator_from_json(text).map(PyOperator).map_err(value_err)
    }

    #[staticmethod]
    fn from_rows(rows: Vec<Vec<String>>) -> PyResult<Self> {
        let rows = rows.iter().map(|r| vector(r)).collect::<PyResult<Vec<_>>>()?;
        let side = rows.len();
        let dim = (0..=side)
            .find(|d| d * d == side)
            .ok_or_else(|| PyValueError::new_err("matrix side is not a perfect square"))?;
        let m = ybx_core::Matrix::from_rows(rows).ok_or_else(|| PyValueError::new_err("ragged matrix"))?;
        ybx_core::Operator2::new(dim, m).map(PyOperator).map_err(value_err)
    }

    #[staticmethod]
    fn twist(n: usize) -> Self {
        PyOperator(ybx_core::twist(n))
    }

    fn to_json(&self) -> String {
        io::operator_to_json(&self.0)
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn rows(&self) -> Vec<Vec<String>> {
        self.0.matrix().to_rows().iter().map(|r| strings(r)).collect()
    }

    fn determinant(&self) -> String {
        self.0.determinant().to_string()
    }

    /// The inverse, or `None` when the determinant vanishes identically.
    fn inverse(&self) -> Option<Self> {
        match self.0.inverse() {
            Invertibility::Invertible { inverse, .. } => Some(PyOperator(inverse)),
            Invertibility::NotInvertible { .. } => None,
        }
    }

    /// `self ∘ other`.
    fn compose(&self, other: &Self) -> PyResult<Self> {
        self.0.compose(&other.0).map(PyOperator).map_err(value_err)
    }

    fn __eq__(&self, other: &Self) -> bool {
        self.0 == other.0
    }

    fn __str__(&self) -> String {
        self.0.matrix().to_string()
    }
}

#[pyfunction]
fn dn_operator(alg: &PyAlgebra, alpha: &str, beta: &str, gamma: &str) -> PyResult<PyOperator> {
    Ok(PyOperator(ybx_core::dn_operator(&alg.0, &scalar(alpha)?, &scalar(beta)?, &scalar(gamma)?)))
}

/// Parameter case label of `(α, β, γ)`, or `"none"`.
#[pyfunction]
fn classify_dn(alpha: &str, beta: &str, gamma: &str) -> PyResult<String> {
    Ok(classify_dn_generic(&scalar(alpha)?, &scalar(beta)?, &scalar(gamma)?).to_string())
}

#[pyfunction]
fn dn_inverse(alg: &PyAlgebra, alpha: &str, beta: &str, gamma: &str) -> PyResult<PyOperator> {
    ybx_core::dn_inverse(&alg.0, &scalar(alpha)?, &scalar(beta)?, &scalar(gamma)?)
        .map(PyOperator)
        .map_err(value_err)
}

#[pyfunction]
fn colored_operator(alg: &PyAlgebra, p: &str, q: &str, u: &str, v: &str) -> PyResult<PyOperator> {
    let (p, q, u, v) = (scalar(p)?, scalar(q)?, scalar(u)?, scalar(v)?);
    Ok(PyOperator(ybx_core::colored_operator(&alg.0, &p, &q, &u, &v)))
}

#[pyfunction]
fn colored_inverse(alg: &PyAlgebra, p: &str, q: &str, u: &str, v: &str) -> PyResult<PyOperator> {
    let (p, q, u, v) = (scalar(p)?, scalar(q)?, scalar(u)?, scalar(v)?);
    ybx_core::colored_inverse(&alg.0, &p, &q, &u, &v)
        .map(PyOperator)
        .map_err(value_err)
}

/// `(W, X, Z)` of the commutator system.
#[pyfunction]
fn wxz_system(alg: &PyAlgebra, lam: &str, mu: &str) -> PyResult<(PyOperator, PyOperator, PyOperator)> {
    let t = ybx_core::wxz_system(&alg.0, &scalar(lam)?, &scalar(mu)?);
    Ok((PyOperator(t.w), PyOperator(t.x), PyOperator(t.z)))
}

fn center_element(l: &PySuperalgebra, z_index: usize) -> PyResult<Vec<ParamScalar>> {
    let center = l.0.even_center();
    let len = center.len();
    center
        .into_iter()
        .nth(z_index)
        .ok_or_else(|| PyIndexError::new_err(format!("even center has dimension {len}")))
}

#[pyfunction]
#[pyo3(signature = (l, alpha, z_index = 0))]
fn super_phi(l: &PySuperalgebra, alpha: &str, z_index: usize) -> PyResult<PyOperator> {
    let z = center_element(l, z_index)?;
    ybx_core::super_phi(&l.0, &z, &scalar(alpha)?)
        .map(PyOperator)
        .map_err(value_err)
}

#[pyfunction]
#[pyo3(signature = (l, alpha, z_index = 0))]
fn super_phi_inverse(l: &PySuperalgebra, alpha: &str, z_index: usize) -> PyResult<PyOperator> {
    let z = center_element(l, z_index)?;
    ybx_core::super_phi_inverse(&l.0, &z, &scalar(alpha)?)
        .map(PyOperator)
        .map_err(value_err)
}

/// Braid or QYBE report as JSON text.
#[pyfunction]
#[pyo3(signature = (op, equation = "braid", samples = None, seed = 0))]
fn check_constant(op: &PyOperator, equation: &str, samples: Option<usize>, seed: u64) -> PyResult<String> {
    let which = match equation {
        "braid" => ConstantEquation::Braid,
        "qybe" => ConstantEquation::Qybe,
        other => return Err(PyValueError::new_err(format!("unknown equation {other:?}"))),
    };
    let rep = match mode(samples, seed) {
        VerifyMode::Symbolic => verify_constant(&op.0, which),
        VerifyMode::Sampled(s) => verify_constant_sampled(&op.0, which, s),
    };
    Ok(report_json(&rep))
}

#[pyfunction]
#[pyo3(signature = (alg, p, q, samples = None, seed = 0))]
fn check_colored(alg: &PyAlgebra, p: &str, q: &str, samples: Option<usize>, seed: u64) -> PyResult<String> {
    let rep = verify_colored_family(&alg.0, &scalar(p)?, &scalar(q)?, mode(samples, seed));
    Ok(report_json(&rep))
}

#[pyfunction]
#[pyo3(signature = (alg, lam, mu, samples = None, seed = 0))]
fn check_wxz(alg: &PyAlgebra, lam: &str, mu: &str, samples: Option<usize>, seed: u64) -> PyResult<String> {
    let t = ybx_core::wxz_system(&alg.0, &scalar(lam)?, &scalar(mu)?);
    let rep = match mode(samples, seed) {
        VerifyMode::Symbolic => verify_wxz(&t),
        VerifyMode::Sampled(s) => verify_wxz_sampled(&t, s),
    };
    Ok(report_json(&rep))
}

#[pyfunction]
fn check_inverse(op: &PyOperator, inverse: &PyOperator) -> String {
    report_json(&verify_inverse_pair(&op.0, &inverse.0))
}

#[pymodule]
fn ybx(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAlgebra>()?;
    m.add_class::<PySuperalgebra>()?;
    m.add_class::<PyOperator>()?;
    m.add_function(wrap_pyfunction!(simplify, m)?)?;
    m.add_function(wrap_pyfunction!(substitute, m)?)?;
    m.add_function(wrap_pyfunction!(dn_operator, m)?)?;
    m.add_function(wrap_pyfunction!(dn_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(classify_dn, m)?)?;
    m.add_function(wrap_pyfunction!(colored_operator, m)?)?;
    m.add_function(wrap_pyfunction!(colored_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(wxz_system, m)?)?;
    m.add_function(wrap_pyfunction!(super_phi, m)?)?;
    m.add_function(wrap_pyfunction!(super_phi_inverse, m)?)?;
    m.add_function(wrap_pyfunction!(check_constant, m)?)?;
    m.add_function(wrap_pyfunction!(check_colored, m)?)?;
    m.add_function(wrap_pyfunction!(check_wxz, m)?)?;
    m.add_function(wrap_pyfunction!(check_inverse, m)?)?;
    Ok(())
}
