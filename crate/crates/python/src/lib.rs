//! Python bindings: codes, lattice roots, the exceptional and classical
//! algebras, and the verification suite. Structured results are returned
//! as plain dicts and lists.

use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyModule;
use serde::Serialize;

use lieforge_core::analysis::{self, Check};
use lieforge_core::classical::{self, Series};
use lieforge_core::codes::{BinaryCode, BitWord};
use lieforge_core::composition::{self, AlgebraKind, OCTONION_BASIS, OCTONION_TABLE};
use lieforge_core::coordalg;
use lieforge_core::lattices::{self, RootVector};
use lieforge_core::liealg::{self, StructureConstantsJson};
use lieforge_core::rational::{from_pair, to_pair, SparseVec};
use lieforge_core::Error;

create_exception!(lieforge, LieforgeError, PyException);

fn err(e: Error) -> PyErr {
    match e {
        Error::Input(_) | Error::Json(_) | Error::Io(_) => PyValueError::new_err(e.to_string()),
        other => LieforgeError::new_err(other.to_string()),
    }
}

/// Converts a serializable value into Python objects through `json.loads`.
fn to_py<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(|e| err(e.into()))?;
    Ok(PyModule::import(py, "json")?.call_method1("loads", (text,))?.unbind())
}

fn kind(name: &str) -> PyResult<AlgebraKind> {
    name.parse().map_err(err)
}

/// A binary linear code.
#[pyclass(name = "Code", module = "lieforge", frozen)]
struct PyCode(BinaryCode);

#[pymethods]
impl PyCode {
    /// Code spanned by rows given as `0`/`1` strings of equal length.
    #[new]
    #[pyo3(signature = (rows, n = None))]
    fn new(rows: Vec<String>, n: Option<usize>) -> PyResult<Self> {
        let words = rows.iter().map(|r| r.parse::<BitWord>()).collect::<Result<Vec<_>, _>>().map_err(err)?;
        let n = match (n, words.first()) {
            (Some(n), _) => n,
            (None, Some(w)) => w.len(),
            (None, None) => return Err(PyValueError::new_err("pass n for a code without rows")),
        };
        Ok(PyCode(BinaryCode::from_generator(&words, n).map_err(err)?))
    }

    /// One of hamming7, simplex7, exthamming8, even4.
    #[staticmethod]
    fn builtin(name: &str) -> PyResult<Self> {
        Ok(PyCode(BinaryCode::builtin_by_name(name).map_err(err)?))
    }

    #[getter]
    fn n(&self) -> usize {
        self.0.len()
    }

    #[getter]
    fn k(&self) -> usize {
        self.0.dimension()
    }

    #[getter]
    fn minimum_distance(&self) -> Option<usize> {
        self.0.minimum_distance()
    }

    #[getter]
    fn parameters(&self) -> String {
        self.0.parameters_label()
    }

    #[getter]
    fn generator(&self) -> Vec<String> {
        self.0.generator().iter().map(BitWord::to_bit_string).collect()
    }

    fn codewords(&self) -> Vec<String> {
        self.0.codewords().iter().map(BitWord::to_bit_string).collect()
    }

    fn weight_enumerator(&self) -> Vec<u64> {
        self.0.weight_enumerator()
    }

    fn dual(&self) -> Self {
        PyCode(self.0.dual())
    }

    fn contains(&self, word: &str) -> PyResult<bool> {
        let w: BitWord = word.parse().map_err(err)?;
        if w.len() != self.0.len() {
            return Err(PyValueError::new_err("word length differs from the code length"));
        }
        Ok(self.0.contains(&w))
    }

    fn is_subcode_of(&self, other: &PyCode) -> bool {
        self.0.is_subcode_of(&other.0)
    }

    /// Roots of the Construction A lattice in doubled coordinates.
    fn lattice_roots(&self) -> Vec<Vec<i64>> {
        lattices::roots_of_code_lattice(&self.0).into_iter().map(|r| r.0).collect()
    }

    fn __eq__(&self, other: &PyCode) -> bool {
        self.0 == other.0
    }

    fn __repr__(&self) -> String {
        format!("Code({})", self.0.parameters_label())
    }
}

/// Simple roots, Cartan matrix and type of a root system in doubled coordinates.
#[pyfunction]
fn identify_root_system(py: Python<'_>, roots: Vec<Vec<i64>>) -> PyResult<Py<PyAny>> {
    let roots: Vec<RootVector> = roots.into_iter().map(RootVector).collect();
    to_py(py, &lattices::identify_root_system(&roots).map_err(err)?)
}

/// Whether `−1` lies in the Weyl group of the lattice of `code`.
#[pyfunction]
fn minus_one_in_weyl(code: &PyCode) -> PyResult<bool> {
    let roots = lattices::roots_of_code_lattice(&code.0);
    let frame = lattices::orthogonal_root_frame(&roots).map_err(err)?;
    lattices::minus_one_in_weyl(&frame).map_err(err)
}

/// `ε(c, d)` entries of the sign table of e7, e8 or f4 as `(c, d, sign)`.
#[pyfunction]
fn sign_table(py: Python<'_>, algebra: &str) -> PyResult<Py<PyAny>> {
    to_py(py, &composition::sign_table(kind(algebra)?).to_json())
}

/// Product of octonion basis elements by name, e.g. `("i", "j") -> (1, "k")`.
#[pyfunction]
fn octonion_product(a: &str, b: &str) -> PyResult<(i8, &'static str)> {
    let index = |s: &str| {
        OCTONION_BASIS
            .iter()
            .position(|x| *x == s)
            .ok_or_else(|| PyValueError::new_err(format!("unknown octonion basis element {s:?}")))
    };
    let (sign, k) = OCTONION_TABLE[index(a)?][index(b)?];
    Ok((sign, OCTONION_BASIS[k as usize]))
}

/// Coordinate-algebra products and code-algebra axiom report of e7, e8 or f4.
#[pyfunction]
fn coordinate_algebra(py: Python<'_>, algebra: &str) -> PyResult<(Py<PyAny>, Py<PyAny>)> {
    let a = coordalg::exceptional(kind(algebra)?);
    Ok((to_py(py, &a.to_json())?, to_py(py, &coordalg::axiom_report(&a))?))
}

fn parse_vector(terms: Vec<(usize, i64, i64)>) -> PyResult<SparseVec> {
    let terms = terms
        .into_iter()
        .map(|(k, num, den)| Ok((k, from_pair(num, den).map_err(err)?)))
        .collect::<PyResult<Vec<_>>>()?;
    Ok(SparseVec::from_terms(terms))
}

fn render_vector(v: &SparseVec) -> Vec<(usize, i64, i64)> {
    v.terms()
        .iter()
        .map(|(k, c)| {
            let [num, den] = to_pair(c);
            (*k, num, den)
        })
        .collect()
}

/// A Lie algebra given by exact structure constants on a labelled basis.
#[pyclass(name = "LieAlgebra", module = "lieforge", frozen)]
struct PyLieAlgebra(liealg::LieAlgebra);

#[pymethods]
impl PyLieAlgebra {
    /// e7, e8 or f4.
    #[staticmethod]
    fn exceptional(algebra: &str) -> PyResult<Self> {
        let a = coordalg::exceptional(kind(algebra)?);
        Ok(PyLieAlgebra(liealg::build_lie_algebra(&a).map_err(err)?))
    }

    /// Matrix model of series c, d or b, cross-checked against the abstract
    /// builder; returns the rebuilt algebra and the report.
    #[staticmethod]
    fn classical(py: Python<'_>, series: &str, n: usize) -> PyResult<(Self, Py<PyAny>)> {
        let series: Series = series.parse().map_err(err)?;
        let (report, rebuilt) = classical::cross_check(series, n).map_err(err)?;
        Ok((PyLieAlgebra(rebuilt), to_py(py, &report)?))
    }

    /// Parses the `lieforge/sc/v1` structure-constant JSON.
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        let json: StructureConstantsJson = serde_json::from_str(text).map_err(|e| err(e.into()))?;
        Ok(PyLieAlgebra(liealg::LieAlgebra::from_json(&json).map_err(err)?))
    }

    fn to_json(&self) -> PyResult<String> {
        serde_json::to_string(&self.0.to_json()).map_err(|e| err(e.into()))
    }

    #[getter]
    fn dim(&self) -> usize {
        self.0.dim()
    }

    #[getter]
    fn rank(&self) -> usize {
        self.0.rank()
    }

    #[getter]
    fn basis(&self) -> Vec<String> {
        self.0.basis().iter().map(ToString::to_string).collect()
    }

    #[getter]
    fn cartan_indices(&self) -> Vec<usize> {
        self.0.cartan_indices().to_vec()
    }

    fn index_of(&self, label: &str) -> PyResult<usize> {
        let l: liealg::BasisLabel = label.parse().map_err(err)?;
        self.0
            .index_of(&l)
            .ok_or_else(|| PyValueError::new_err(format!("{label} is not a basis label")))
    }

    /// Bracket of two vectors given as `[(index, num, den), ...]`.
    fn bracket(&self, x: Vec<(usize, i64, i64)>, y: Vec<(usize, i64, i64)>) -> PyResult<Vec<(usize, i64, i64)>> {
        let v = self.0.bracket(&parse_vector(x)?, &parse_vector(y)?).map_err(err)?;
        Ok(render_vector(&v))
    }

    /// `[x_i, x_j]` for basis indices.
    fn bracket_basis(&self, i: usize, j: usize) -> PyResult<Vec<(usize, i64, i64)>> {
        if i >= self.0.dim() || j >= self.0.dim() {
            return Err(PyValueError::new_err("basis index out of range"));
        }
        Ok(render_vector(&self.0.bracket_basis(i, j)))
    }

    /// Runs the named checks (default: all) and returns the report.
    #[pyo3(signature = (checks = None))]
    fn verify(&self, py: Python<'_>, checks: Option<Vec<String>>) -> PyResult<Py<PyAny>> {
        let checks: Vec<Check> = match checks {
            None => Check::ALL.to_vec(),
            Some(names) => names.iter().map(|s| s.parse()).collect::<Result<_, _>>().map_err(err)?,
        };
        let report = py.detach(|| analysis::verify(&self.0, &checks));
        to_py(py, &report)
    }

    fn check_jacobi(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let report = py.detach(|| analysis::check_jacobi(&self.0));
        to_py(py, &report)
    }

    fn roots(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        let report = analysis::extract_roots(&self.0).map_err(err)?;
        let value = serde_json::json!({
            "report": report,
            "roots": report.roots.iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
        });
        to_py(py, &value)
    }

    fn __repr__(&self) -> String {
        format!("LieAlgebra(dim={}, rank={})", self.0.dim(), self.0.rank())
    }
}

#[pymodule]
fn lieforge(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("LieforgeError", m.py().get_type::<LieforgeError>())?;
    m.add_class::<PyCode>()?;
    m.add_class::<PyLieAlgebra>()?;
    m.add_function(wrap_pyfunction!(identify_root_system, m)?)?;
    m.add_function(wrap_pyfunction!(minus_one_in_weyl, m)?)?;
    m.add_function(wrap_pyfunction!(sign_table, m)?)?;
    m.add_function(wrap_pyfunction!(octonion_product, m)?)?;
    m.add_function(wrap_pyfunction!(coordinate_algebra, m)?)?;
    Ok(())
}
