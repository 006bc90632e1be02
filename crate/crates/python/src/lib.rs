//! Python bindings: graphs, exact rational functions in q, magnitude,
//! power series, weightings and the two theorem checkers.

use magnitude_core::dsl::parse_expr;
use magnitude_core::graph::{parse_edge_list, to_edge_list};
use magnitude_core::magnitude::{
    check_inclusion_exclusion as check_ie, connected_components_vs_mag_at_1,
    verify_weighting as verify, whitney_weight_transform,
};
use magnitude_core::{
    magnitude_rational, magnitude_series_oracle, weighting as weighting_of, Family, IntPoly,
    MagnitudeResult, SubgraphSelection, TruncatedSeries, TwistSpec,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use pyo3::exceptions::{PyTypeError, PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyType};

fn err(e: magnitude_core::Error) -> PyErr {
    match e {
        magnitude_core::Error::DivisionByZero | magnitude_core::Error::Pole => {
            PyZeroDivisionError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

fn fraction<'py>(py: Python<'py>, num: BigInt, den: BigInt) -> PyResult<Bound<'py, PyAny>> {
    py.import("fractions")?
        .getattr("Fraction")?
        .call1((num, den))
}

/// A finite simple graph on vertices `0..n`.
#[pyclass(name = "Graph", module = "graphmag", frozen, skip_from_py_object)]
#[derive(Clone)]
pub struct PyGraph {
    inner: magnitude_core::Graph,
}

impl From<magnitude_core::Graph> for PyGraph {
    fn from(inner: magnitude_core::Graph) -> Self {
        PyGraph { inner }
    }
}

fn family(f: Family) -> PyResult<PyGraph> {
    f.build().map(PyGraph::from).map_err(err)
}

#[pymethods]
impl PyGraph {
    #[new]
    #[pyo3(signature = (n, edges = Vec::new()))]
    fn new(n: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        magnitude_core::Graph::from_edge_list(n, &edges)
            .map(Into::into)
            .map_err(err)
    }

    /// Builds a graph from an expression such as `"K2 * K3"` or
    /// `"glue(C3, 0 1, C3, 0 1)"`.
    #[classmethod]
    fn parse(_cls: &Bound<'_, PyType>, expr: &str) -> PyResult<Self> {
        let e = parse_expr(expr).map_err(|e| PyValueError::new_err(format!("parse error {e}")))?;
        e.build().map(Into::into).map_err(err)
    }

    /// Parses the edge-list text format (`n <count>` then `u v` lines).
    #[classmethod]
    fn from_edge_list(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        parse_edge_list(text).map(Into::into).map_err(err)
    }

    #[staticmethod]
    fn complete(n: usize) -> PyResult<Self> {
        family(Family::Complete(n))
    }

    #[staticmethod]
    fn cycle(n: usize) -> PyResult<Self> {
        family(Family::Cycle(n))
    }

    #[staticmethod]
    fn path(n: usize) -> PyResult<Self> {
        family(Family::Path(n))
    }

    #[staticmethod]
    fn edgeless(n: usize) -> PyResult<Self> {
        family(Family::Edgeless(n))
    }

    #[staticmethod]
    fn complete_bipartite(m: usize, n: usize) -> PyResult<Self> {
        family(Family::CompleteBipartite(m, n))
    }

    #[staticmethod]
    fn petersen() -> PyResult<Self> {
        family(Family::Petersen)
    }

    /// `K6` with the edges of one triangle removed.
    #[staticmethod]
    fn w_graph() -> PyResult<Self> {
        family(Family::WGraph)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    #[getter]
    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn neighbors(&self, v: usize) -> PyResult<Vec<usize>> {
        if v >= self.inner.vertex_count() {
            return Err(PyValueError::new_err(format!("vertex {v} out of range")));
        }
        Ok(self.inner.neighbors(v).to_vec())
    }

    /// All-pairs distances; `None` marks unreachable pairs.
    fn distances(&self) -> Vec<Vec<Option<usize>>> {
        let d = self.inner.distances();
        (0..self.inner.vertex_count())
            .map(|x| d.row(x).iter().map(|e| e.finite()).collect())
            .collect()
    }

    fn component_count(&self) -> usize {
        self.inner.component_count()
    }

    fn is_vertex_transitive(&self) -> bool {
        self.inner.is_vertex_transitive()
    }

    fn disjoint_union(&self, other: &PyGraph) -> Self {
        self.inner.disjoint_union(&other.inner).into()
    }

    fn cartesian_product(&self, other: &PyGraph) -> Self {
        self.inner.cartesian_product(&other.inner).into()
    }

    fn one_point_join(&self, x: usize, other: &PyGraph, y: usize) -> PyResult<Self> {
        self.inner
            .one_point_join(x, &other.inner, y)
            .map(Into::into)
            .map_err(err)
    }

    fn edge_glue(
        &self,
        edge: (usize, usize),
        other: &PyGraph,
        other_edge: (usize, usize),
    ) -> PyResult<Self> {
        self.inner
            .edge_glue(edge, &other.inner, other_edge)
            .map(Into::into)
            .map_err(err)
    }

    fn to_edge_list(&self) -> String {
        to_edge_list(&self.inner)
    }

    fn __add__(&self, other: &PyGraph) -> Self {
        self.disjoint_union(other)
    }

    fn __mul__(&self, other: &PyGraph) -> Self {
        self.cartesian_product(other)
    }

    fn __eq__(&self, other: &PyGraph) -> bool {
        self.inner.vertex_count() == other.inner.vertex_count()
            && self.inner.edges() == other.inner.edges()
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph({}, {:?})",
            self.inner.vertex_count(),
            self.inner.edges()
        )
    }
}

/// An element of Q(q) in canonical form: coprime integer numerator and
/// denominator, jointly primitive, lowest denominator coefficient positive.
#[pyclass(
    name = "RationalFunction",
    module = "graphmag",
    frozen,
    skip_from_py_object
)]
#[derive(Clone)]
pub struct PyRational {
    inner: magnitude_core::RationalFunction,
}

impl From<magnitude_core::RationalFunction> for PyRational {
    fn from(inner: magnitude_core::RationalFunction) -> Self {
        PyRational { inner }
    }
}

/// Accepts a RationalFunction or a Python int.
fn as_rational(obj: &Bound<'_, PyAny>) -> PyResult<magnitude_core::RationalFunction> {
    if let Ok(r) = obj.cast::<PyRational>() {
        return Ok(r.get().inner.clone());
    }
    if let Ok(n) = obj.extract::<BigInt>() {
        return Ok(magnitude_core::RationalFunction::from_integer(n));
    }
    Err(PyTypeError::new_err(
        "expected a RationalFunction or an int",
    ))
}

#[pymethods]
impl PyRational {
    /// `RationalFunction([n0, n1, ...], [d0, d1, ...])`, coefficients in
    /// ascending powers of q.
    #[new]
    #[pyo3(signature = (numerator, denominator = vec![BigInt::from(1)]))]
    fn new(numerator: Vec<BigInt>, denominator: Vec<BigInt>) -> PyResult<Self> {
        magnitude_core::RationalFunction::new(IntPoly::new(numerator), IntPoly::new(denominator))
            .map(Into::into)
            .map_err(err)
    }

    #[getter]
    fn numerator(&self) -> Vec<BigInt> {
        self.inner.numerator().coeffs().to_vec()
    }

    #[getter]
    fn denominator(&self) -> Vec<BigInt> {
        self.inner.denominator().coeffs().to_vec()
    }

    /// Value at a rational point (an int or a `fractions.Fraction`).
    fn evaluate<'py>(
        &self,
        py: Python<'py>,
        at: &Bound<'py, PyAny>,
    ) -> PyResult<Bound<'py, PyAny>> {
        let num: BigInt = at.getattr("numerator")?.extract()?;
        let den: BigInt = at.getattr("denominator")?.extract()?;
        let v = self
            .inner
            .evaluate(&num_rational_from(num, den)?)
            .map_err(err)?;
        fraction(py, v.numer().clone(), v.denom().clone())
    }

    /// The first `order + 1` power-series coefficients.
    fn series(&self, order: usize) -> PyResult<Vec<BigInt>> {
        TruncatedSeries::from_rational(&self.inner, order)
            .map(|s| s.coeffs().to_vec())
            .map_err(err)
    }

    fn to_latex(&self) -> String {
        self.inner.to_latex()
    }

    /// `{"num": [...], "den": [...]}` with coefficients as decimal strings.
    fn to_json(&self) -> String {
        serde_json::to_string(&self.inner).expect("serializable")
    }

    #[classmethod]
    fn from_json(_cls: &Bound<'_, PyType>, text: &str) -> PyResult<Self> {
        serde_json::from_str::<magnitude_core::RationalFunction>(text)
            .map(PyRational::from)
            .map_err(|e| PyValueError::new_err(e.to_string()))
    }

    fn __add__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((&self.inner + &as_rational(other)?).into())
    }

    fn __radd__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__add__(other)
    }

    fn __sub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((&self.inner - &as_rational(other)?).into())
    }

    fn __rsub__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((&as_rational(other)? - &self.inner).into())
    }

    fn __mul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        Ok((&self.inner * &as_rational(other)?).into())
    }

    fn __rmul__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.__mul__(other)
    }

    fn __truediv__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        self.inner
            .checked_div(&as_rational(other)?)
            .map(Into::into)
            .map_err(err)
    }

    fn __rtruediv__(&self, other: &Bound<'_, PyAny>) -> PyResult<Self> {
        as_rational(other)?
            .checked_div(&self.inner)
            .map(Into::into)
            .map_err(err)
    }

    fn __neg__(&self) -> Self {
        (-&self.inner).into()
    }

    fn __eq__(&self, other: &Bound<'_, PyAny>) -> bool {
        as_rational(other).is_ok_and(|o| o == self.inner)
    }

    fn __hash__(&self) -> u64 {
        use std::hash::{DefaultHasher, Hash, Hasher};
        let mut h = DefaultHasher::new();
        self.inner.hash(&mut h);
        h.finish()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }

    fn __repr__(&self) -> String {
        format!(
            "RationalFunction({:?}, {:?})",
            self.numerator(),
            self.denominator()
        )
    }
}

fn num_rational_from(num: BigInt, den: BigInt) -> PyResult<BigRational> {
    if den == BigInt::from(0) {
        return Err(PyZeroDivisionError::new_err("zero denominator"));
    }
    Ok(BigRational::new(num, den))
}

/// `|G|` as a canonical rational function.
#[pyfunction]
fn magnitude(g: &PyGraph) -> PyRational {
    magnitude_rational(&g.inner).into()
}

/// Coefficients `c_0..c_order` of `|G|`; with `check`, the expansion is
/// compared against the alternating-walk sum and a mismatch raises.
#[pyfunction]
#[pyo3(signature = (g, order = 16, check = true))]
fn magnitude_series(g: &PyGraph, order: usize, check: bool) -> PyResult<Vec<BigInt>> {
    let r = MagnitudeResult::compute(&g.inner, Some(order), check).map_err(err)?;
    Ok(r.series.expect("order was requested").coeffs().to_vec())
}

/// The same coefficients from the alternating-walk sum alone.
#[pyfunction]
fn walk_series(g: &PyGraph, order: usize) -> Vec<BigInt> {
    magnitude_series_oracle(&g.inner, order).coeffs().to_vec()
}

#[pyfunction]
fn weighting(g: &PyGraph) -> Vec<PyRational> {
    weighting_of(&g.inner)
        .into_inner()
        .into_iter()
        .map(Into::into)
        .collect()
}

/// Whether `weights` solve `sum_y q^d(x,y) w(y) = 1` for every vertex `x`.
#[pyfunction]
fn verify_weighting(g: &PyGraph, weights: Vec<Bound<'_, PyAny>>) -> PyResult<bool> {
    let w = weights
        .iter()
        .map(as_rational)
        .collect::<PyResult<Vec<_>>>()?;
    Ok(verify(&g.inner, &w))
}

/// `(|G|(1) as a Fraction or None at a pole, number of components)`.
#[pyfunction]
fn magnitude_at_one<'py>(
    py: Python<'py>,
    g: &PyGraph,
) -> PyResult<(Option<Bound<'py, PyAny>>, usize)> {
    let r = connected_components_vs_mag_at_1(&g.inner);
    let value = match r.value_at_one {
        Some(v) => Some(fraction(py, v.numer().clone(), v.denom().clone())?),
        None => None,
    };
    Ok((value, r.components))
}

fn selection<'g>(
    host: &'g magnitude_core::Graph,
    vertices: &[usize],
    edges: Option<Vec<(usize, usize)>>,
) -> PyResult<SubgraphSelection<'g>> {
    match edges {
        Some(e) => SubgraphSelection::new(host, vertices, &e),
        None => SubgraphSelection::induced(host, vertices),
    }
    .map_err(err)
}

/// Checks `|X| = |G| + |H| - |G ∩ H|` and its hypotheses. Subgraphs are
/// induced on the given vertices unless edge lists are passed.
#[pyfunction]
#[pyo3(signature = (x, g_vertices, h_vertices, g_edges = None, h_edges = None))]
fn check_inclusion_exclusion<'py>(
    py: Python<'py>,
    x: &PyGraph,
    g_vertices: Vec<usize>,
    h_vertices: Vec<usize>,
    g_edges: Option<Vec<(usize, usize)>>,
    h_edges: Option<Vec<(usize, usize)>>,
) -> PyResult<Bound<'py, PyDict>> {
    let g = selection(&x.inner, &g_vertices, g_edges)?;
    let h = selection(&x.inner, &h_vertices, h_edges)?;
    let r = check_ie(&x.inner, &g, &h).map_err(err)?;
    let d = PyDict::new(py);
    d.set_item("covers", r.covers)?;
    d.set_item("intersection_convex", r.intersection_convex)?;
    d.set_item("h_projects", r.h_projects)?;
    d.set_item("g_projects", r.g_projects)?;
    d.set_item("theorem_applies", r.theorem_applies())?;
    d.set_item("identity_holds", r.identity_holds)?;
    d.set_item("mag_x", PyRational::from(r.mag_x))?;
    d.set_item("mag_g", PyRational::from(r.mag_g))?;
    d.set_item("mag_h", PyRational::from(r.mag_h))?;
    d.set_item("mag_intersection", PyRational::from(r.mag_intersection))?;
    Ok(d)
}

/// Glues `(G, g+, g-)` to `(H, h+, h-)` both ways and compares the results.
///
/// Returns a dict with the graphs `x` (`g+~h+`) and `y` (`g+~h-`), their
/// magnitudes, whether the gluing points are adjacent, and, when they are,
/// the transformed weighting of `y` and whether it checks out.
#[pyfunction]
fn whitney_twist<'py>(
    py: Python<'py>,
    g: &PyGraph,
    g_plus: usize,
    g_minus: usize,
    h: &PyGraph,
    h_plus: usize,
    h_minus: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let twist = TwistSpec::new(
        g.inner.clone(),
        g_plus,
        g_minus,
        h.inner.clone(),
        h_plus,
        h_minus,
    )
    .map_err(err)?
    .build();
    let (mx, my) = (magnitude_rational(&twist.x), magnitude_rational(&twist.y));
    let d = PyDict::new(py);
    d.set_item("adjacent", twist.gluing_points_adjacent())?;
    d.set_item("equal", mx == my)?;
    d.set_item("mag_x", PyRational::from(mx))?;
    d.set_item("mag_y", PyRational::from(my))?;
    if twist.gluing_points_adjacent() {
        let t = whitney_weight_transform(&twist, &weighting_of(&twist.x)).map_err(err)?;
        d.set_item(
            "transform_verified",
            verify(&twist.y, t.weights_y.weights()),
        )?;
        let weights: Vec<PyRational> = t
            .weights_y
            .into_inner()
            .into_iter()
            .map(Into::into)
            .collect();
        d.set_item("weights_y", weights)?;
    } else {
        d.set_item("transform_verified", py.None())?;
        d.set_item("weights_y", py.None())?;
    }
    d.set_item("x", PyGraph::from(twist.x))?;
    d.set_item("y", PyGraph::from(twist.y))?;
    Ok(d)
}

#[pymodule]
fn graphmag(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_class::<PyRational>()?;
    m.add_function(wrap_pyfunction!(magnitude, m)?)?;
    m.add_function(wrap_pyfunction!(magnitude_series, m)?)?;
    m.add_function(wrap_pyfunction!(walk_series, m)?)?;
    m.add_function(wrap_pyfunction!(weighting, m)?)?;
    m.add_function(wrap_pyfunction!(verify_weighting, m)?)?;
    m.add_function(wrap_pyfunction!(magnitude_at_one, m)?)?;
    m.add_function(wrap_pyfunction!(check_inclusion_exclusion, m)?)?;
    m.add_function(wrap_pyfunction!(whitney_twist, m)?)?;
    Ok(())
}
