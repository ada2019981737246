//! Python bindings: `import fullsupport`.
//!
//! Simple roots are 0-based here as in the Rust API (Bourbaki `α₁` is 0).

use num_bigint::BigUint;
use pyo3::exceptions::{PyIndexError, PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use fullsupport::cartan::{self, CartanType};
use fullsupport::counting::{self, CensusReport};
use fullsupport::invariants::{self, ExponentVector, GroupInvariants};
use fullsupport::oracle;
use fullsupport::poset::RootPoset;

fn parse(type_string: &str) -> PyResult<CartanType> {
    type_string
        .parse::<CartanType>()
        .map_err(|e| PyValueError::new_err(e.to_string()))
}

fn runtime<E: std::fmt::Display>(e: E) -> PyErr {
    PyRuntimeError::new_err(e.to_string())
}

fn coeffs_i64(p: &counting::IntPolynomial) -> Vec<i64> {
    use num_traits::ToPrimitive;
    p.coeffs()
        .iter()
        .map(|c| c.to_i64().expect("small coefficients"))
        .collect()
}

/// Positive roots of an irreducible crystallographic type, e.g. `RootSystem("F4")`.
#[pyclass(name = "RootSystem", frozen)]
struct PyRootSystem {
    inner: cartan::RootSystem,
    exponents: ExponentVector,
    invariants: GroupInvariants,
}

impl PyRootSystem {
    fn check_simple(&self, i: usize) -> PyResult<()> {
        if i >= self.inner.rank() {
            return Err(PyIndexError::new_err(format!(
                "simple root index {i} out of range for rank {}",
                self.inner.rank()
            )));
        }
        Ok(())
    }

    fn check_root(&self, i: usize) -> PyResult<()> {
        if i >= self.inner.len() {
            return Err(PyIndexError::new_err(format!(
                "root index {i} out of range ({} positive roots)",
                self.inner.len()
            )));
        }
        Ok(())
    }
}

#[pymethods]
impl PyRootSystem {
    #[new]
    fn new(cartan_type: &str) -> PyResult<Self> {
        let inner = cartan::RootSystem::from_type(parse(cartan_type)?);
        let (exponents, invariants) = invariants::compute(&inner).map_err(runtime)?;
        Ok(PyRootSystem {
            inner,
            exponents,
            invariants,
        })
    }

    #[getter]
    fn cartan_type(&self) -> String {
        self.inner
            .cartan_type()
            .map(|t| t.to_string())
            .unwrap_or_default()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.inner.rank()
    }

    /// Cartan matrix rows, convention `a[i][j] = 2(αi,αj)/(αi,αi)`.
    #[getter]
    fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        self.inner.cartan_matrix().entries().to_vec()
    }

    /// Coefficient vectors of the positive roots, sorted by height.
    #[getter]
    fn positive_roots(&self) -> Vec<Vec<u32>> {
        self.inner
            .positive_roots()
            .iter()
            .map(|r| r.coeffs().to_vec())
            .collect()
    }

    #[getter]
    fn highest_root(&self) -> Vec<u32> {
        self.inner.highest_root().coeffs().to_vec()
    }

    #[getter]
    fn exponents(&self) -> Vec<u32> {
        self.exponents.as_slice().to_vec()
    }

    #[getter]
    fn coxeter_number(&self) -> u32 {
        self.invariants.coxeter_number
    }

    #[getter]
    fn weyl_order(&self) -> BigUint {
        self.invariants.weyl_order.clone()
    }

    /// `(n_long, n_short)` over the simple roots.
    #[getter]
    fn simple_length_census(&self) -> (usize, usize) {
        (self.invariants.n_long, self.invariants.n_short)
    }

    fn __len__(&self) -> usize {
        self.inner.len()
    }

    fn __repr__(&self) -> String {
        format!("RootSystem({:?})", self.cartan_type())
    }

    fn support(&self, root: usize) -> PyResult<Vec<usize>> {
        self.check_root(root)?;
        Ok(self.inner.root(root).support().into_iter().collect())
    }

    /// `"long"` or `"short"`.
    fn length_class(&self, root: usize) -> PyResult<String> {
        self.check_root(root)?;
        Ok(cartan::length_class(&self.inner, self.inner.root(root)).to_string())
    }

    fn cover_relations(&self) -> Vec<(usize, usize)> {
        RootPoset::new(&self.inner).cover_relations()
    }

    /// Indices of the roots below `root` (inclusive).
    fn principal_ideal(&self, root: usize) -> PyResult<Vec<usize>> {
        self.check_root(root)?;
        Ok(RootPoset::new(&self.inner)
            .principal_ideal(root)
            .members()
            .collect())
    }

    /// Number of order ideals of the root poset.
    #[pyo3(signature = (cap = fullsupport::poset::DEFAULT_IDEAL_CAP))]
    fn count_ideals(&self, cap: usize) -> PyResult<usize> {
        let poset = RootPoset::new(&self.inner);
        let mut count = 0;
        for ideal in poset.enumerate_ideals_capped(cap) {
            ideal.map_err(runtime)?;
            count += 1;
        }
        Ok(count)
    }

    /// `(total, long, short)` full-support roots by enumeration.
    fn brute_census(&self) -> (u64, u64, u64) {
        counting::brute_full_support_census(&self.inner)
    }

    fn chapoton_count(&self) -> PyResult<u64> {
        counting::chapoton_count(&self.invariants, &self.exponents).map_err(runtime)
    }

    fn refined_counts(&self) -> PyResult<(u64, u64)> {
        counting::refined_counts(&self.invariants, &self.exponents).map_err(runtime)
    }

    /// Coefficients (lowest degree first) of `∏_{i<n}(t − e_i)`.
    fn restriction_charpoly(&self) -> Vec<i64> {
        coeffs_i64(&counting::restriction_charpoly_formula(&self.exponents))
    }

    /// The same polynomial, computed from the restricted arrangement at a simple root.
    fn oracle_charpoly(&self, simple: usize) -> PyResult<Vec<i64>> {
        self.check_simple(simple)?;
        let arr = oracle::restricted_arrangement(&self.inner, simple).map_err(runtime)?;
        let chi = oracle::characteristic_polynomial(&arr).map_err(runtime)?;
        Ok(coeffs_i64(&chi))
    }

    /// Normalizer index of `{e, s_i}` from the formula.
    fn normalizer_index(&self, simple: usize) -> PyResult<u64> {
        self.check_simple(simple)?;
        let class = self.inner.root(simple).length_class();
        counting::normalizer_index_formula(&self.exponents, self.invariants.class_size(class))
            .map_err(runtime)
    }

    /// Normalizer index of `{e, s_i}` from the explicitly generated group.
    #[pyo3(signature = (simple, cap = oracle::DEFAULT_GROUP_CAP))]
    fn normalizer_index_direct(&self, simple: usize, cap: u64) -> PyResult<u64> {
        self.check_simple(simple)?;
        let group = oracle::generate_weyl_group(&self.inner, cap).map_err(runtime)?;
        oracle::normalizer_index_direct(&group, &self.inner, simple).map_err(runtime)
    }

    /// The full census as a dict keyed like the CLI's CSV/JSON columns.
    fn census<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let report = counting::full_census(&self.inner).map_err(runtime)?;
        report_dict(py, &report)
    }
}

fn report_dict<'py>(py: Python<'py>, r: &CensusReport) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("type", &r.cartan_type)?;
    d.set_item("rank", r.rank)?;
    d.set_item("h", r.h)?;
    d.set_item("weylOrder", r.weyl_order.clone())?;
    d.set_item("exponents", &r.exponents)?;
    d.set_item("nLong", r.n_long)?;
    d.set_item("nShort", r.n_short)?;
    d.set_item("bruteTotal", r.brute_total)?;
    d.set_item("bruteLong", r.brute_long)?;
    d.set_item("bruteShort", r.brute_short)?;
    d.set_item("formulaTotal", r.formula_total)?;
    d.set_item("formulaLong", r.formula_long)?;
    d.set_item("formulaShort", r.formula_short)?;
    d.set_item("sommersLong", r.sommers_long)?;
    d.set_item("sommersShort", r.sommers_short)?;
    d.set_item("agree", r.agree)?;
    Ok(d)
}

/// Names of all admissible types up to `max_rank`, in table order.
#[pyfunction]
#[pyo3(signature = (max_rank = 8))]
fn admissible_types(max_rank: usize) -> Vec<String> {
    cartan::admissible_types(max_rank)
        .iter()
        .map(|t| t.to_string())
        .collect()
}

/// Census dicts for every admissible type up to `max_rank`.
#[pyfunction]
#[pyo3(signature = (max_rank = 8))]
fn census_table<'py>(py: Python<'py>, max_rank: usize) -> PyResult<Vec<Bound<'py, PyDict>>> {
    cartan::admissible_types(max_rank)
        .into_iter()
        .map(|t| {
            let report =
                counting::full_census(&cartan::RootSystem::from_type(t)).map_err(runtime)?;
            report_dict(py, &report)
        })
        .collect()
}

#[pymodule]
#[pyo3(name = "fullsupport")]
fn fullsupport_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRootSystem>()?;
    m.add_function(wrap_pyfunction!(admissible_types, m)?)?;
    m.add_function(wrap_pyfunction!(census_table, m)?)?;
    Ok(())
}
