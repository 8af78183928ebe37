//! Python bindings for the `odd_e6` verification library.
//!
//! Vectors cross the boundary as lists of ints, Eisenstein vectors as four
//! `(a, b)` pairs meaning `a + bω`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use odd_e6::coset_enum::{self, DEFAULT_COSET_BUDGET};
use odd_e6::eisenstein::{self as eis, EisensteinVector};
use odd_e6::isometry::{self, DEFAULT_CLOSURE_BUDGET};
use odd_e6::lattice::{self as lat, LatticeVector};
use odd_e6::presentation::{self as pres, DiagramKind, Word};
use odd_e6::suites::{self, Suite, SuiteOptions};
use odd_e6::{e6, gosset};

fn err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn vector(coords: Vec<i64>) -> PyResult<LatticeVector> {
    LatticeVector::new(coords).map_err(err)
}

fn root(coords: Vec<i64>) -> PyResult<lat::Root> {
    lat::Root::new(vector(coords)?).map_err(err)
}

fn eisenstein(pairs: [(i64, i64); 4]) -> EisensteinVector {
    EisensteinVector::from_pairs(pairs)
}

fn word(text: &str) -> Word {
    Word::new(text.split('.').filter(|s| !s.is_empty()))
}

/// Minkowski product `-x0 y0 + x1 y1 + ... + xn yn`.
#[pyfunction]
fn inner(u: Vec<i64>, v: Vec<i64>) -> PyResult<i64> {
    lat::inner(&vector(u)?, &vector(v)?).map_err(err)
}

/// Reflection of `v` in the mirror of a norm-1 or norm-2 root.
#[pyfunction]
fn reflect(root_coords: Vec<i64>, v: Vec<i64>) -> PyResult<Vec<i64>> {
    let r = lat::reflect(&root(root_coords)?, &vector(v)?).map_err(err)?;
    Ok(r.coords().to_vec())
}

#[pyfunction]
fn simple_roots(n: usize) -> PyResult<Vec<Vec<i64>>> {
    let roots = lat::simple_roots(n).map_err(err)?;
    Ok(roots.iter().map(|r| r.vector().coords().to_vec()).collect())
}

#[pyfunction]
fn chamber_vertices(n: usize) -> PyResult<Vec<Vec<i64>>> {
    let vs = lat::chamber_vertices(n).map_err(err)?;
    Ok(vs.iter().map(|v| v.coords().to_vec()).collect())
}

/// Returns `(order, kernel_mod2, kernel_mod3)` for the stabilizer Γ₀.
#[pyfunction]
#[pyo3(signature = (n, budget = DEFAULT_CLOSURE_BUDGET))]
fn stabilizer_congruence(
    py: Python<'_>,
    n: usize,
    budget: usize,
) -> PyResult<(usize, usize, usize)> {
    let r = py
        .detach(|| isometry::stabilizer_congruence_check(n, budget))
        .map_err(err)?;
    Ok((r.order, r.kernel_mod2, r.kernel_mod3))
}

/// Order of the projective mod-3 image of the Gosset wall reflections.
#[pyfunction]
fn projective_mod3_order(py: Python<'_>, n: usize) -> PyResult<usize> {
    py.detach(|| {
        let g = isometry::closure(&isometry::mod3_generators(n)?)?;
        Ok(isometry::projective_order(&g))
    })
    .map_err(|e: odd_e6::Error| err(e))
}

#[pyfunction]
fn tile_count(n: usize) -> PyResult<usize> {
    Ok(gosset::build_tessellation(n).map_err(err)?.tile_count())
}

/// Labels of the Gosset walls for `n` in 2..=4.
#[pyfunction]
fn wall_labels(n: usize) -> PyResult<Vec<String>> {
    Ok(gosset::gosset_walls(n).map_err(err)?.labels().to_vec())
}

/// Checks on the ten E6 roots labelled by the Petersen graph.
///
/// Returns `(all_roots, petersen_gram, hexagon_sums_vanish, group_order)`.
#[pyfunction]
fn e6_configuration(py: Python<'_>) -> PyResult<(bool, bool, bool, usize)> {
    py.detach(|| {
        let system = e6::build_e6();
        let betas = e6::beta_configuration();
        let roots = e6::non_roots(&system, &betas).is_empty();
        let gram = e6::verify_petersen_gram(&betas)?;
        let sums = e6::failing_hexagons(&betas)?.is_empty();
        let order = e6::verify_generation(&system, &betas, e6::DEFAULT_PERMUTATION_BUDGET)?;
        Ok((roots, gram, sums, order))
    })
    .map_err(|e: odd_e6::Error| err(e))
}

#[pyfunction]
fn e6_root_count() -> usize {
    e6::build_e6().len()
}

/// Image of `v` under the hexaflection in the norm-one vector `e`.
#[pyfunction]
fn hexaflection(e: [(i64, i64); 4], v: [(i64, i64); 4]) -> PyResult<Vec<(i64, i64)>> {
    let h = eis::hexaflection(&eisenstein(e), &eisenstein(v)).map_err(err)?;
    Ok(h.0.iter().map(|z| (z.a, z.b)).collect())
}

/// Order of the hexaflection in `e`, or `None` if above `limit`.
#[pyfunction]
#[pyo3(signature = (e, limit = 12))]
fn hexaflection_order(e: [(i64, i64); 4], limit: usize) -> PyResult<Option<usize>> {
    eis::hexaflection_order_on(&eisenstein(e), &eis::standard_basis(), 1, limit).map_err(err)
}

/// Runs a verification suite and returns its JSON report.
#[pyfunction]
#[pyo3(signature = (suite, n = None, max_n = 6, budget = DEFAULT_COSET_BUDGET, seed = 0))]
fn run_suite(
    py: Python<'_>,
    suite: &str,
    n: Option<usize>,
    max_n: usize,
    budget: usize,
    seed: u64,
) -> PyResult<String> {
    let suite: Suite = suite.parse().map_err(err)?;
    let opts = SuiteOptions {
        n,
        max_n,
        budget,
        seed,
    };
    Ok(py.detach(|| suites::run_suite(suite, &opts)).to_json())
}

/// A group presentation on involutive generators.
#[pyclass(frozen)]
struct Presentation(pres::Presentation);

#[pymethods]
impl Presentation {
    /// The deflated presentation attached to dimension `n` in 2..=4.
    #[staticmethod]
    fn for_dimension(n: usize) -> PyResult<Self> {
        let kind = DiagramKind::for_dimension(n).map_err(err)?;
        Ok(Self(pres::build_presentation(kind)))
    }

    #[staticmethod]
    fn from_text(text: &str) -> PyResult<Self> {
        pres::Presentation::parse_relator_text(text)
            .map(Self)
            .map_err(err)
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.0.generators().to_vec()
    }

    #[getter]
    fn relators(&self) -> Vec<String> {
        self.0.relators().iter().map(Word::to_string).collect()
    }

    /// `(involution, commuting, braid, deflation)` relator counts.
    fn counts(&self) -> (usize, usize, usize, usize) {
        let c = self.0.counts();
        (c.involution, c.commuting, c.braid, c.deflation)
    }

    /// The same presentation without its deflation relators.
    fn coxeter_part(&self) -> Self {
        Self(self.0.coxeter_part())
    }

    fn to_text(&self) -> String {
        self.0.to_relator_text()
    }

    /// Enumerates cosets of the subgroup generated by dotted words.
    #[pyo3(signature = (subgroup = Vec::new(), budget = DEFAULT_COSET_BUDGET))]
    fn enumerate(
        &self,
        py: Python<'_>,
        subgroup: Vec<String>,
        budget: usize,
    ) -> PyResult<CosetTable> {
        let words: Vec<Word> = subgroup.iter().map(|s| word(s)).collect();
        py.detach(|| coset_enum::todd_coxeter(&self.0, &words, budget))
            .map(CosetTable)
            .map_err(err)
    }

    fn __len__(&self) -> usize {
        self.0.relators().len()
    }

    fn __repr__(&self) -> String {
        let (i, c, b, d) = self.counts();
        format!(
            "Presentation(generators={}, relators={i}+{c}+{b}+{d})",
            self.0.generators().len()
        )
    }
}

/// Result of a coset enumeration.
#[pyclass(frozen)]
struct CosetTable(coset_enum::CosetTable);

#[pymethods]
impl CosetTable {
    #[getter]
    fn closed(&self) -> bool {
        self.0.is_closed()
    }

    /// Number of cosets once closed, else `None`.
    #[getter]
    fn index(&self) -> Option<usize> {
        self.0.index()
    }

    #[getter]
    fn cosets_defined(&self) -> usize {
        self.0.cosets_defined()
    }

    #[getter]
    fn generators(&self) -> Vec<String> {
        self.0.generators().to_vec()
    }

    /// Image of coset `coset` (0-based) under generator number `generator`.
    fn image(&self, coset: usize, generator: usize) -> PyResult<usize> {
        let n = self.0.index().ok_or_else(|| err("table is not closed"))?;
        if coset >= n || generator >= self.0.generators().len() {
            return Err(err(format!(
                "coset {coset} or generator {generator} out of range"
            )));
        }
        Ok(self.0.image(coset, generator))
    }

    fn dump(&self) -> String {
        self.0.dump()
    }

    fn __repr__(&self) -> String {
        match self.0.index() {
            Some(n) => format!("CosetTable(index={n})"),
            None => format!("CosetTable(open, defined={})", self.0.cosets_defined()),
        }
    }
}

#[pymodule]
#[pyo3(name = "odd_e6")]
fn odd_e6_module(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_class::<Presentation>()?;
    m.add_class::<CosetTable>()?;
    m.add_function(wrap_pyfunction!(inner, m)?)?;
    m.add_function(wrap_pyfunction!(reflect, m)?)?;
    m.add_function(wrap_pyfunction!(simple_roots, m)?)?;
    m.add_function(wrap_pyfunction!(chamber_vertices, m)?)?;
    m.add_function(wrap_pyfunction!(stabilizer_congruence, m)?)?;
    m.add_function(wrap_pyfunction!(projective_mod3_order, m)?)?;
    m.add_function(wrap_pyfunction!(tile_count, m)?)?;
    m.add_function(wrap_pyfunction!(wall_labels, m)?)?;
    m.add_function(wrap_pyfunction!(e6_configuration, m)?)?;
    m.add_function(wrap_pyfunction!(e6_root_count, m)?)?;
    m.add_function(wrap_pyfunction!(hexaflection, m)?)?;
    m.add_function(wrap_pyfunction!(hexaflection_order, m)?)?;
    m.add_function(wrap_pyfunction!(run_suite, m)?)?;
    Ok(())
}

/// Registers the module with an embedded interpreter; call before
/// `Python::initialize`.
pub fn register_embedded() {
    pyo3::append_to_inittab!(odd_e6_module);
}
