//! Python module `gorenstein_py`.
//!
//! Structured results (reports, Betti tables, profiles) come back as plain
//! Python dicts, decoded from the same JSON the CLI prints.

use std::sync::Arc;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;
use serde::Serialize;

use gorenstein::apolarity::{build_algebra, sample_dual_generator, DualGenerator, GradedArtinianAlgebra};
use gorenstein::compressed::{consequences_check, is_compressed, profile};
use gorenstein::harness::{
    instance_from_generator, measure_dr, run_golod_powers_suite, run_main_theorem_suite, run_map_checks, run_socle_quotient_suite,
    DrRoute, MapCheck, Measurements, RunConfig,
};
use gorenstein::homology::{koszul_betti, BettiDocument, GradedModule};
use gorenstein::linalg::{PrimeField, DEFAULT_PRIME};
use gorenstein::series;
use gorenstein::Error;

fn to_py(e: Error) -> PyErr {
    match e {
        Error::InvalidConfig(_) | Error::BadPrime { .. } | Error::SocleDegreeExcluded | Error::Parse { .. } | Error::OddSocle(_) => {
            PyValueError::new_err(e.to_string())
        }
        _ => PyRuntimeError::new_err(e.to_string()),
    }
}

fn to_dict<'py, T: Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyDict>> {
    let text = serde_json::to_string(value).map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    py.import("json")?.call_method1("loads", (text,))?.cast_into::<PyDict>().map_err(Into::into)
}

fn coeffs(p: &series::IntegerPolynomial) -> Vec<i128> {
    p.coeffs().to_vec()
}

/// A homogeneous dual generator `F` in the divided-power ring.
#[pyclass(name = "DualGenerator", module = "gorenstein_py", skip_from_py_object)]
#[derive(Clone)]
struct PyDualGenerator {
    inner: DualGenerator,
}

#[pymethods]
impl PyDualGenerator {
    /// Parse the text format: one `coefficient exponent...` line per term.
    #[staticmethod]
    #[pyo3(signature = (text, prime = DEFAULT_PRIME))]
    fn parse(text: &str, prime: u32) -> PyResult<Self> {
        let field = PrimeField::new(prime).map_err(to_py)?;
        Ok(Self {
            inner: DualGenerator::parse(field, text).map_err(to_py)?,
        })
    }

    /// A random form of degree `s` in `e` variables.
    #[staticmethod]
    #[pyo3(signature = (e, s, prime = DEFAULT_PRIME, seed = 0))]
    fn sample(e: usize, s: usize, prime: u32, seed: u64) -> PyResult<Self> {
        Ok(Self {
            inner: sample_dual_generator(e, s, prime, seed).map_err(to_py)?,
        })
    }

    #[getter]
    fn num_vars(&self) -> usize {
        self.inner.num_vars()
    }

    #[getter]
    fn degree(&self) -> usize {
        self.inner.degree()
    }

    #[getter]
    fn prime(&self) -> u32 {
        self.inner.field().modulus()
    }

    fn to_text(&self) -> String {
        self.inner.to_text()
    }

    /// The apolar algebra `Q / Ann(F)`.
    fn algebra(&self) -> PyResult<PyAlgebra> {
        Ok(PyAlgebra {
            inner: Arc::new(build_algebra(&self.inner).map_err(to_py)?),
            generator: self.inner.clone(),
        })
    }

    fn __repr__(&self) -> String {
        format!("DualGenerator(e={}, s={})", self.inner.num_vars(), self.inner.degree())
    }
}

/// A graded Artinian Gorenstein algebra `R = Q / Ann(F)`.
#[pyclass(name = "Algebra", module = "gorenstein_py", frozen)]
struct PyAlgebra {
    inner: Arc<GradedArtinianAlgebra>,
    generator: DualGenerator,
}

impl PyAlgebra {
    fn measurements(&self, seed: u64, trunc: Option<usize>) -> PyResult<Measurements> {
        let mut cfg = RunConfig::new(self.inner.num_vars(), self.inner.top_degree()).seed(seed);
        cfg.p = self.generator.field().modulus();
        cfg.trunc = trunc;
        cfg.allow_s3 = true;
        let inst = instance_from_generator(&cfg, self.generator.clone()).map_err(to_py)?;
        Ok(Measurements::new(inst))
    }
}

#[pymethods]
impl PyAlgebra {
    #[getter]
    fn num_vars(&self) -> usize {
        self.inner.num_vars()
    }

    #[getter]
    fn socle_degree(&self) -> usize {
        self.inner.top_degree()
    }

    #[getter]
    fn effective_embedding_dim(&self) -> usize {
        self.inner.effective_embedding_dim()
    }

    fn hilbert_function(&self) -> Vec<usize> {
        self.inner.hilbert_function()
    }

    fn length(&self) -> usize {
        self.inner.length()
    }

    /// The three compressedness tests as a dict.
    fn compressed<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        to_dict(py, &is_compressed(&self.inner).map_err(to_py)?)
    }

    fn consequences<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        to_dict(py, &consequences_check(&self.inner))
    }

    /// Bases and multiplication tables.
    fn to_dict<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        to_dict(py, &self.inner.to_document())
    }

    /// Betti table of `module` (`k`, `r`, `power:i`, `socle-quotient`) over
    /// `ring` (`q`, `p`, `r`) through homological degree `trunc`.
    #[pyo3(signature = (ring = "r", module = "k", trunc = None, seed = 0))]
    fn betti<'py>(&self, py: Python<'py>, ring: &str, module: &str, trunc: Option<usize>, seed: u64) -> PyResult<Bound<'py, PyDict>> {
        let m = self.measurements(seed, trunc)?;
        let n = m.instance.config.truncation();
        let target: Arc<GradedModule> = match module {
            "k" => m.module_k.clone(),
            "r" => m.module_r.clone(),
            "socle-quotient" => m.socle_quotient(),
            other => match other.strip_prefix("power:").map(str::parse::<usize>) {
                Some(Ok(i)) => m.power(i),
                _ => return Err(PyValueError::new_err(format!("unknown module {other:?}"))),
            },
        };
        let ring = match ring {
            "q" => m.q.clone(),
            "p" => m.p.clone(),
            "r" => m.r.clone(),
            other => return Err(PyValueError::new_err(format!("unknown ring {other:?}"))),
        };
        let res = py.detach(|| m.resolve(&ring, &target, n));
        to_dict(py, &BettiDocument::new(&res, module))
    }

    /// Graded Betti numbers over `Q` from the Koszul complex.
    fn koszul_betti<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let module = GradedModule::from_algebra(&self.inner);
        to_dict(py, &koszul_betti(&module))
    }

    /// Coefficients of `d_R` via `t1` (measured), `t2` (even closed form)
    /// or `lemma56` (closed Betti numbers over Q).
    #[pyo3(signature = (via = "t1"))]
    fn dr(&self, via: &str) -> PyResult<Vec<i128>> {
        let route = match via {
            "t1" => DrRoute::Measured,
            "t2" => DrRoute::ClosedForm,
            "lemma56" => DrRoute::BettiClosedForm,
            other => return Err(PyValueError::new_err(format!("unknown route {other:?}"))),
        };
        let m = self.measurements(0, None)?;
        Ok(coeffs(&measure_dr(&m.instance, route).map_err(to_py)?))
    }

    fn __repr__(&self) -> String {
        format!("Algebra(h={:?})", self.inner.hilbert_function())
    }
}

/// `ε_i` for `0 ≤ i ≤ s`.
#[pyfunction]
fn eps(e: usize, s: usize) -> Vec<usize> {
    gorenstein::compressed::eps(e, s)
}

#[pyfunction]
#[pyo3(name = "profile")]
fn py_profile<'py>(py: Python<'py>, e: usize, s: usize) -> PyResult<Bound<'py, PyDict>> {
    to_dict(py, &profile(e, s))
}

/// Hilbert series numerator of a compressed algebra.
#[pyfunction]
fn hilbert_series(e: usize, s: usize) -> Vec<i128> {
    coeffs(&series::hs_compressed(e, s))
}

/// `Po^Q_R` for even socle degree.
#[pyfunction]
fn poincare_q_closed_form(e: usize, s: usize) -> PyResult<Vec<i128>> {
    Ok(coeffs(&series::poqr_even_closed_form(e, s).map_err(to_py)?))
}

/// `d_R` for even socle degree.
#[pyfunction]
fn dr_closed_form(e: usize, s: usize) -> PyResult<Vec<i128>> {
    Ok(coeffs(&series::dr_even_closed_form(e, s).map_err(to_py)?))
}

fn config(e: usize, s: usize, prime: u32, seed: u64, trunc: Option<usize>, allow_s3: bool) -> RunConfig {
    let mut cfg = RunConfig::new(e, s).seed(seed);
    cfg.p = prime;
    cfg.trunc = trunc;
    cfg.allow_s3 = allow_s3;
    cfg
}

/// Run a suite (`main`, `golod-powers`, `socle`) and return its report.
#[pyfunction]
#[pyo3(signature = (e, s, suite = "main", prime = DEFAULT_PRIME, seed = 0, trunc = None, allow_s3 = false, with_maps = false, with_socle = false))]
#[allow(clippy::too_many_arguments)]
fn verify<'py>(
    py: Python<'py>,
    e: usize,
    s: usize,
    suite: &str,
    prime: u32,
    seed: u64,
    trunc: Option<usize>,
    allow_s3: bool,
    with_maps: bool,
    with_socle: bool,
) -> PyResult<Bound<'py, PyDict>> {
    let mut cfg = config(e, s, prime, seed, trunc, allow_s3);
    cfg.map_checks = with_maps;
    cfg.socle_check = with_socle;
    let report = py
        .detach(|| match suite {
            "main" => Ok(run_main_theorem_suite(&cfg)),
            "golod-powers" => Ok(run_golod_powers_suite(&cfg)),
            "socle" => Ok(run_socle_quotient_suite(&cfg)),
            other => Err(format!("unknown suite {other:?}")),
        })
        .map_err(PyValueError::new_err)?
        .map_err(to_py)?;
    to_dict(py, &report)
}

/// Tor-map checks: any of `nu`, `phi`, `rho`, `golod-criterion`.
#[pyfunction]
#[pyo3(signature = (e, s, checks = vec!["nu".to_string(), "phi".to_string(), "rho".to_string(), "golod-criterion".to_string()], prime = DEFAULT_PRIME, seed = 0, socle = false))]
fn maps<'py>(py: Python<'py>, e: usize, s: usize, checks: Vec<String>, prime: u32, seed: u64, socle: bool) -> PyResult<Bound<'py, PyDict>> {
    let cfg = config(e, s, prime, seed, None, false);
    let selected = checks
        .iter()
        .map(|c| match c.as_str() {
            "nu" => Ok(MapCheck::Nu),
            "phi" => Ok(MapCheck::Phi),
            "rho" => Ok(MapCheck::Rho),
            "golod-criterion" => Ok(MapCheck::GolodCriterion),
            other => Err(PyValueError::new_err(format!("unknown check {other:?}"))),
        })
        .collect::<PyResult<Vec<_>>>()?;
    let report = py.detach(|| run_map_checks(&cfg, &selected, socle)).map_err(to_py)?;
    to_dict(py, &report)
}

#[pymodule]
fn gorenstein_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyDualGenerator>()?;
    m.add_class::<PyAlgebra>()?;
    m.add_function(wrap_pyfunction!(eps, m)?)?;
    m.add_function(wrap_pyfunction!(py_profile, m)?)?;
    m.add_function(wrap_pyfunction!(hilbert_series, m)?)?;
    m.add_function(wrap_pyfunction!(poincare_q_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(dr_closed_form, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(maps, m)?)?;
    m.add("DEFAULT_PRIME", DEFAULT_PRIME)?;
    Ok(())
}
