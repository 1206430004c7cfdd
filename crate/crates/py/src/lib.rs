//! Python bindings. Structured results cross the boundary as JSON and are
//! decoded into plain dicts and lists.

use std::sync::Arc;

use hecke_cell_lab::{run_suite, PointSpec, RunConfig, Suite};
use hecke_core::hecke_bernstein::{BernsteinAlgebra, Formula};
use hecke_core::laurent::TorusPoint;
use hecke_core::quotient_ht::{
    ideal_dims, lie_criterion_type_a, lt_dimension, module_report, principal_point, principal_report, TypeContext,
};
use hecke_core::root_data::{RootDatum, RootType, Weight};
use hecke_core::scalar::{parse_rational, Specialization};
use hecke_core::weyl_affine::{AffineWeyl, ExtAffineElt};
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use serde::Serialize;

fn err(e: hecke_core::Error) -> PyErr {
    match e {
        hecke_core::Error::Parse(_)
        | hecke_core::Error::UnsupportedType(_)
        | hecke_core::Error::UnsupportedForType(_) => PyValueError::new_err(e.to_string()),
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn root_type(name: &str) -> PyResult<RootType> {
    name.parse().map_err(err)
}

fn to_py(py: Python<'_>, v: &impl Serialize) -> PyResult<PyObject> {
    let text = serde_json::to_string(v).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    Ok(py.import_bound("json")?.call_method1("loads", (text,))?.unbind())
}

fn weight(d: &RootDatum, x: &[i32]) -> PyResult<Weight> {
    if x.len() != d.rank {
        return Err(PyValueError::new_err(format!("weight needs {} coordinates", d.rank)));
    }
    Ok(Weight::new(x))
}

/// Parses `"q=4 3"` or `"v=2 1/2*v 3"`: the specialization, then one
/// coordinate `a`, `a*v` or `a*v^m` per fundamental weight.
fn torus_point(d: &RootDatum, spec: &str) -> PyResult<TorusPoint> {
    let p = PointSpec::parse(spec).map_err(err)?;
    if p.coords.len() != d.rank {
        return Err(PyValueError::new_err(format!("point needs {} coordinates", d.rank)));
    }
    p.torus_point().map_err(err)
}

fn specialization(q: &str) -> PyResult<Specialization> {
    Specialization::q(parse_rational(q).map_err(err)?).map_err(err)
}

#[pyclass(name = "RootDatum", frozen)]
struct PyRootDatum {
    inner: Arc<RootDatum>,
}

#[pymethods]
impl PyRootDatum {
    #[new]
    fn new(root_type_name: &str) -> PyResult<Self> {
        Ok(Self { inner: Arc::new(RootDatum::build(root_type(root_type_name)?)) })
    }

    #[getter]
    fn root_type(&self) -> String {
        self.inner.type_label.to_string()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank
    }

    /// `|W_0|`.
    #[getter]
    fn order(&self) -> usize {
        self.inner.order()
    }

    /// Number of positive roots.
    #[getter]
    fn nu(&self) -> usize {
        self.inner.nu
    }

    #[getter]
    fn rho(&self) -> Vec<i32> {
        self.inner.rho.coords().to_vec()
    }

    fn positive_roots(&self) -> Vec<Vec<i32>> {
        self.inner.positive_roots.iter().map(|a| a.coords().to_vec()).collect()
    }

    /// Coefficients of `Σ_w q^{l(w)}`, constant term first.
    fn poincare_polynomial(&self) -> Vec<i64> {
        self.inner.poincare_polynomial()
    }

    fn act(&self, w: usize, x: Vec<i32>) -> PyResult<Vec<i32>> {
        if w >= self.inner.order() {
            return Err(PyValueError::new_err("Weyl group index out of range"));
        }
        Ok(self.inner.act(w, &weight(&self.inner, &x)?).coords().to_vec())
    }

    fn __repr__(&self) -> String {
        format!("RootDatum('{}')", self.inner.type_label)
    }
}

/// Elements `t_x w` are passed as `(x, w)` with `w` an index into `W_0`.
#[pyclass(name = "AffineWeyl", frozen)]
struct PyAffineWeyl {
    inner: AffineWeyl,
}

impl PyAffineWeyl {
    fn elt(&self, x: &[i32], w: usize) -> PyResult<ExtAffineElt> {
        let d = self.inner.datum();
        if w >= d.order() {
            return Err(PyValueError::new_err("Weyl group index out of range"));
        }
        Ok(ExtAffineElt { x: weight(d, x)?, w })
    }
}

fn pair(u: &ExtAffineElt) -> (Vec<i32>, usize) {
    (u.x.coords().to_vec(), u.w)
}

#[pymethods]
impl PyAffineWeyl {
    #[new]
    fn new(root_type_name: &str) -> PyResult<Self> {
        Ok(Self { inner: AffineWeyl::new(Arc::new(RootDatum::build(root_type(root_type_name)?))) })
    }

    fn length(&self, x: Vec<i32>, w: usize) -> PyResult<usize> {
        Ok(self.inner.length(&self.elt(&x, w)?))
    }

    fn mul(&self, a: (Vec<i32>, usize), b: (Vec<i32>, usize)) -> PyResult<(Vec<i32>, usize)> {
        Ok(pair(&self.inner.mul(&self.elt(&a.0, a.1)?, &self.elt(&b.0, b.1)?)))
    }

    /// Letters of a reduced word after the length-zero part; `0` is the affine reflection.
    fn reduced_word(&self, x: Vec<i32>, w: usize) -> PyResult<Vec<usize>> {
        use hecke_core::weyl_affine::Simple;
        let word = self.inner.reduced_word(&self.elt(&x, w)?);
        Ok(word
            .letters
            .iter()
            .map(|s| match s {
                Simple::Affine => 0,
                Simple::Finite(i) => i + 1,
            })
            .collect())
    }

    /// `{"w", "x", "v", "solutions", "length_additive"}` for `u = w t_x v`.
    fn factor_canonical(&self, py: Python<'_>, x: Vec<i32>, w: usize) -> PyResult<PyObject> {
        let f = self.inner.factor_canonical(&self.elt(&x, w)?).map_err(err)?;
        to_py(
            py,
            &serde_json::json!({
                "w": f.w, "x": f.x.coords(), "v": f.v,
                "solutions": f.solutions, "length_additive": f.length_additive,
            }),
        )
    }

    fn y0(&self, max_len: usize) -> Vec<(Vec<i32>, usize)> {
        self.inner.enumerate_y0(max_len).iter().map(pair).collect()
    }

    fn in_lowest_cell(&self, x: Vec<i32>, w: usize) -> PyResult<bool> {
        Ok(self.inner.c0_membership(&self.elt(&x, w)?))
    }

    fn ball_sizes(&self, max_len: usize) -> Vec<usize> {
        self.inner.ball(max_len).iter().map(Vec::len).collect()
    }
}

#[pyclass(name = "HeckeAlgebra", frozen)]
struct PyHeckeAlgebra {
    inner: BernsteinAlgebra,
}

#[pymethods]
impl PyHeckeAlgebra {
    #[new]
    fn new(root_type_name: &str) -> PyResult<Self> {
        Ok(Self { inner: BernsteinAlgebra::new(Arc::new(RootDatum::build(root_type(root_type_name)?))) })
    }

    /// Checks a named identity; `"spherical-sandwich"` takes a weight.
    #[pyo3(signature = (name, x=None))]
    fn verify_formula(&self, name: &str, x: Option<Vec<i32>>) -> PyResult<bool> {
        let f = match (name, x) {
            ("spherical-sandwich", Some(x)) => Formula::SphericalSandwich(weight(self.inner.datum(), &x)?),
            ("spherical-sandwich", None) => Formula::SphericalSandwich(Weight::zero(self.inner.rank())),
            _ => *Formula::FIXED
                .iter()
                .find(|f| f.name() == name)
                .ok_or_else(|| PyValueError::new_err(format!("unknown formula {name:?}")))?,
        };
        Ok(self.inner.verify(f).map_err(err)?.holds)
    }

    fn c_element(&self) -> String {
        self.inner.c_element().to_canonical_string()
    }

    fn cprime_element(&self) -> String {
        self.inner.cprime_element().to_canonical_string()
    }

    fn a_element(&self) -> PyResult<String> {
        Ok(self.inner.a_element().map_err(err)?.to_canonical_string())
    }

    fn b_element(&self) -> String {
        self.inner.b_element().to_canonical_string()
    }

    /// `C θ_x C′` in normal form.
    fn c_theta_cprime(&self, x: Vec<i32>) -> PyResult<String> {
        let b = &self.inner;
        let h = b.mul3(&b.c_element(), &b.theta_of(weight(b.datum(), &x)?), &b.cprime_element());
        Ok(h.to_canonical_string())
    }
}

/// The quotient `H_t` for one root type; points are strings such as `"q=4 3"`.
#[pyclass(name = "Quotient", frozen)]
struct PyQuotient {
    ctx: TypeContext,
}

#[pymethods]
impl PyQuotient {
    #[new]
    fn new(root_type_name: &str) -> PyResult<Self> {
        let d = Arc::new(RootDatum::build(root_type(root_type_name)?));
        Ok(Self { ctx: TypeContext::new(d).map_err(err)? })
    }

    /// Point string for the principal point `α_i(t) = q`.
    fn principal_point(&self, q: &str) -> PyResult<String> {
        Ok(principal_point(&self.ctx.datum, &specialization(q)?).label())
    }

    fn dimension(&self, point: &str) -> PyResult<usize> {
        let m = self.ctx.model(torus_point(&self.ctx.datum, point)?, None).map_err(err)?;
        Ok(m.dim())
    }

    /// Dimensions of `CH_tC`, `CH_tC′`, `C′H_tC`, `C′H_{t⁻¹}C′`.
    fn ideal_dims(&self, py: Python<'_>, point: &str) -> PyResult<PyObject> {
        let t = torus_point(&self.ctx.datum, point)?;
        let m = self.ctx.model(t.clone(), None).map_err(err)?;
        let mi = self.ctx.model(t.inverse(), None).map_err(err)?;
        to_py(py, &ideal_dims(&self.ctx, &m, &mi).map_err(err)?)
    }

    /// `dim H_t C θ_ρ C′`.
    fn module_dimension(&self, point: &str) -> PyResult<usize> {
        let m = self.ctx.model(torus_point(&self.ctx.datum, point)?, None).map_err(err)?;
        lt_dimension(&self.ctx, &m).map_err(err)
    }

    fn principal_report(&self, py: Python<'_>, q: &str) -> PyResult<PyObject> {
        to_py(py, &principal_report(&self.ctx, &specialization(q)?).map_err(err)?)
    }

    fn module_report(&self, py: Python<'_>, point: &str) -> PyResult<PyObject> {
        let m = self.ctx.model(torus_point(&self.ctx.datum, point)?, None).map_err(err)?;
        to_py(py, &module_report(&self.ctx, &m).map_err(err)?)
    }

    /// Type A only.
    fn lie_criterion(&self, py: Python<'_>, point: &str) -> PyResult<PyObject> {
        let t = torus_point(&self.ctx.datum, point)?;
        to_py(py, &lie_criterion_type_a(&self.ctx.datum, &t).map_err(err)?)
    }
}

/// Runs a verification suite and returns the report body as a dict.
#[pyfunction]
#[pyo3(signature = (suite, root_type_name, q=None, max_len=None, seed=1, samples=20))]
fn verify(
    py: Python<'_>,
    suite: &str,
    root_type_name: &str,
    q: Option<&str>,
    max_len: Option<usize>,
    seed: u64,
    samples: usize,
) -> PyResult<PyObject> {
    let suite: Suite = suite.parse().map_err(err)?;
    let mut cfg = RunConfig::new(suite, root_type(root_type_name)?);
    cfg.q = q.map(parse_rational).transpose().map_err(err)?;
    cfg.max_len = max_len;
    cfg.seed = seed;
    cfg.samples = samples;
    let report = py.allow_threads(|| run_suite(&cfg)).map_err(err)?;
    to_py(py, &report.body)
}

#[pymodule]
#[pyo3(name = "hecke_cell_lab")]
fn init_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootDatum>()?;
    m.add_class::<PyAffineWeyl>()?;
    m.add_class::<PyHeckeAlgebra>()?;
    m.add_class::<PyQuotient>()?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    Ok(())
}
