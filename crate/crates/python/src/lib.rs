//! Python bindings for the rainbow-forcing toolkit: the graph type, the
//! catalogue and gadget builders, forcing certificates, embeddings, the
//! fractional-width program and the cubic colouring scheme.

use std::collections::BTreeSet;
use std::time::Duration;

use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;
use pyo3::types::PyDict;

use antiramsey::certify::{
    forces_with, smallest_forcing_multiplicity, Mode, MultiplicityScan, SearchOptions, Verdict,
};
use antiramsey::colouring::{self, EdgeColouring};
use antiramsey::constructions;
use antiramsey::copies;
use antiramsey::families::{self, Element, SetFamily};
use antiramsey::graph::{degeneracy, girth, structural_report, to_dot};
use antiramsey::matching;
use antiramsey::patterns::{ar_d_bounds, Pattern};
use antiramsey::rainbow;

fn value_err(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

/// An undirected simple graph with dense vertex ids.
#[pyclass(name = "Graph")]
#[derive(Clone)]
struct PyGraph {
    inner: antiramsey::Graph,
}

#[pymethods]
impl PyGraph {
    #[new]
    fn new(vertex_count: usize, edges: Vec<(usize, usize)>) -> PyResult<Self> {
        let inner = antiramsey::Graph::new(vertex_count, &edges).map_err(value_err)?;
        Ok(PyGraph { inner })
    }

    /// Catalogue lookup: petersen, k4, k5, prism, bull, c_7, p_4, star_3,
    /// matching_2, k_2_4, k4_subdivided, triangle_pendant, nonmono, ...
    #[staticmethod]
    fn named(name: &str) -> PyResult<Self> {
        let inner = constructions::named_graph(name).map_err(value_err)?;
        Ok(PyGraph { inner })
    }

    /// The cycle blow-up host with the given cycle length and multiplicity.
    #[staticmethod]
    fn gadget(cycle_len: usize, multiplicity: usize) -> PyResult<Self> {
        let built = constructions::gadget(cycle_len, multiplicity).map_err(value_err)?;
        Ok(PyGraph { inner: built.graph })
    }

    /// Connected k-regular host of girth k+2 with chromatic index k+1.
    #[staticmethod]
    fn class2_regular(k: usize) -> PyResult<Self> {
        let inner = constructions::class2_regular(k).map_err(value_err)?;
        Ok(PyGraph { inner })
    }

    /// Host for a forest with max degree e(F) - 1.
    #[staticmethod]
    fn forest_host(forest: &PyGraph) -> PyResult<Self> {
        let inner = constructions::forest_host(&forest.inner).map_err(value_err)?;
        Ok(PyGraph { inner })
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn edge_count(&self) -> usize {
        self.inner.edge_count()
    }

    fn edges(&self) -> Vec<(usize, usize)> {
        self.inner.edges().to_vec()
    }

    fn max_degree(&self) -> usize {
        self.inner.max_degree()
    }

    fn degeneracy(&self) -> (usize, Vec<usize>) {
        let (d, ordering) = degeneracy(&self.inner);
        (d, ordering.order)
    }

    /// Shortest cycle length; None for forests.
    fn girth(&self) -> Option<usize> {
        girth(&self.inner)
    }

    fn structure<'py>(&self, py: Python<'py>) -> PyResult<Bound<'py, PyDict>> {
        let report = structural_report(&self.inner);
        let dict = PyDict::new(py);
        dict.set_item("connected", report.connected)?;
        dict.set_item("bridges", report.bridges)?;
        dict.set_item("cut_vertices", report.cut_vertices)?;
        dict.set_item("is_regular_of", report.is_regular_of)?;
        dict.set_item("max_degree", report.max_degree)?;
        dict.set_item("min_degree", report.min_degree)?;
        Ok(dict)
    }

    fn to_dot(&self) -> String {
        to_dot(&self.inner)
    }

    fn copies_of(&self, pattern: &PyGraph) -> PyResult<usize> {
        let h = Pattern::new(pattern.inner.clone()).map_err(value_err)?;
        Ok(copies::count_copies(&self.inner, &h))
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(vertices={}, edges={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

fn colouring_from_pairs(
    g: &antiramsey::Graph,
    edges: Vec<(usize, usize, u32)>,
) -> PyResult<EdgeColouring> {
    let mut c = EdgeColouring::empty(g);
    for (u, v, col) in edges {
        let e = g
            .edge_id(u, v)
            .ok_or_else(|| value_err(format!("{u}-{v} is not an edge")))?;
        c.set(e, col);
    }
    Ok(c)
}

fn colouring_to_pairs(g: &antiramsey::Graph, c: &EdgeColouring) -> Vec<(usize, usize, u32)> {
    g.edges()
        .iter()
        .enumerate()
        .filter_map(|(e, &(u, v))| c.get(e).map(|col| (u, v, col)))
        .collect()
}

fn parse_mode(mode: &str, value: Option<u32>) -> PyResult<Mode> {
    match (mode, value) {
        ("proper", _) => Ok(Mode::Proper),
        ("m_bounded", Some(m)) => Ok(Mode::MBounded(m)),
        ("palette_limited", Some(q)) => Ok(Mode::PaletteLimited(q)),
        _ => Err(value_err(
            "mode must be proper, m_bounded (with value) or palette_limited (with value)",
        )),
    }
}

/// Decide whether every colouring of the host contains a rainbow copy of
/// the pattern. Returns a dict with verdict, witness, stats and mode.
#[pyfunction]
#[pyo3(signature = (host, pattern, mode="proper", mode_value=None, budget_nodes=None, budget_secs=None, workers=1))]
#[allow(clippy::too_many_arguments)]
fn forces<'py>(
    py: Python<'py>,
    host: &PyGraph,
    pattern: &PyGraph,
    mode: &str,
    mode_value: Option<u32>,
    budget_nodes: Option<u64>,
    budget_secs: Option<u64>,
    workers: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let h = Pattern::new(pattern.inner.clone()).map_err(value_err)?;
    let mode = parse_mode(mode, mode_value)?;
    let options = SearchOptions {
        budget_nodes,
        budget_time: budget_secs.map(Duration::from_secs),
        workers,
        ..SearchOptions::default()
    };
    let cert = forces_with(&host.inner, &h, mode, &options).map_err(value_err)?;
    let dict = PyDict::new(py);
    dict.set_item(
        "verdict",
        match cert.verdict {
            Verdict::Forces => "forces",
            Verdict::WitnessFound => "witness_found",
            Verdict::Inconclusive => "inconclusive",
        },
    )?;
    dict.set_item(
        "witness",
        cert.witness_colouring()
            .map(|w| colouring_to_pairs(&host.inner, &w)),
    )?;
    dict.set_item("nodes", cert.stats.nodes)?;
    dict.set_item("wall_ms", cert.stats.wall_ms)?;
    Ok(dict)
}

/// Least gadget multiplicity that forces a rainbow cycle of the given
/// length; None when every multiplicity up to the cap has a witness.
#[pyfunction]
#[pyo3(signature = (cycle_len, max_multiplicity, budget_secs=None))]
fn smallest_forcing_multiplicity_py(
    cycle_len: usize,
    max_multiplicity: usize,
    budget_secs: Option<u64>,
) -> PyResult<Option<usize>> {
    let options = SearchOptions {
        budget_time: budget_secs.map(Duration::from_secs),
        ..SearchOptions::default()
    };
    match smallest_forcing_multiplicity(cycle_len, max_multiplicity, &options)
        .map_err(value_err)?
    {
        MultiplicityScan::Found { multiplicity, .. } => Ok(Some(multiplicity)),
        MultiplicityScan::NotFoundUpTo(_) => Ok(None),
        MultiplicityScan::Inconclusive { multiplicity, .. } => Err(PyRuntimeError::new_err(
            format!("inconclusive at multiplicity {multiplicity}"),
        )),
    }
}

#[pyfunction]
fn chromatic_index(host: &PyGraph) -> PyResult<usize> {
    if host.inner.edge_count() == 0 {
        return Err(value_err("host has no edges"));
    }
    Ok(colouring::chromatic_index(&host.inner))
}

#[pyfunction]
fn is_proper(host: &PyGraph, edges: Vec<(usize, usize, u32)>) -> PyResult<bool> {
    let c = colouring_from_pairs(&host.inner, edges)?;
    Ok(colouring::is_proper(&host.inner, &c))
}

/// First rainbow copy of the pattern under a total proper colouring,
/// as (vertex_map, edge_list), or None.
#[pyfunction]
fn find_rainbow_copy(
    host: &PyGraph,
    pattern: &PyGraph,
    edges: Vec<(usize, usize, u32)>,
) -> PyResult<Option<(Vec<usize>, Vec<(usize, usize)>)>> {
    let h = Pattern::new(pattern.inner.clone()).map_err(value_err)?;
    let c = colouring_from_pairs(&host.inner, edges)?;
    if !colouring::is_proper(&host.inner, &c) {
        return Err(value_err("colouring must be total and proper"));
    }
    Ok(rainbow::find_rainbow_copy(&host.inner, &c, &h).map(|embedding| {
        let edge_list = embedding
            .edge_ids
            .iter()
            .map(|&e| host.inner.edge(e))
            .collect();
        (embedding.map, edge_list)
    }))
}

/// Proper colouring of a connected bridgeless cubic host with at most 4
/// colours and no rainbow 4-cycle, as (u, v, colour) triples.
#[pyfunction]
fn avoid_rainbow_c4(host: &PyGraph) -> PyResult<Vec<(usize, usize, u32)>> {
    let c = matching::avoid_rainbow_c4_cubic(&host.inner).map_err(value_err)?;
    Ok(colouring_to_pairs(&host.inner, &c))
}

fn parse_elements(set: Vec<String>) -> PyResult<BTreeSet<Element>> {
    set.iter()
        .map(|text| {
            Element::parse(text).ok_or_else(|| value_err(format!("bad element `{text}`")))
        })
        .collect()
}

/// Exact fractional width of a set family; elements are strings `v<id>`
/// or `c<id>`. Returns the value as an exact fraction string.
#[pyfunction]
fn fractional_width(sets: Vec<Vec<String>>) -> PyResult<String> {
    let sets: Vec<BTreeSet<Element>> = sets
        .into_iter()
        .map(parse_elements)
        .collect::<PyResult<_>>()?;
    let family = SetFamily::new(sets);
    Ok(families::fractional_width(&family)
        .map_err(value_err)?
        .to_string())
}

/// Pairwise disjoint representatives, one per group; groups are lists of
/// set indices. Returns chosen set indices or None.
#[pyfunction]
fn disjoint_representatives(
    sets: Vec<Vec<String>>,
    groups: Vec<Vec<usize>>,
) -> PyResult<Option<Vec<usize>>> {
    let sets: Vec<BTreeSet<Element>> = sets
        .into_iter()
        .map(parse_elements)
        .collect::<PyResult<_>>()?;
    let family = SetFamily::new(sets).with_groups(groups);
    families::disjoint_representatives(&family).map_err(value_err)
}

/// Degree anti-Ramsey bounds for a pattern: (lower, upper, provenance).
#[pyfunction]
fn bounds(pattern: &PyGraph) -> PyResult<(usize, Option<usize>, String)> {
    let h = Pattern::new(pattern.inner.clone()).map_err(value_err)?;
    let b = ar_d_bounds(&h);
    Ok((b.lower, b.upper, b.provenance))
}

#[pymodule]
fn antiramsey_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyGraph>()?;
    m.add_function(wrap_pyfunction!(forces, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_index, m)?)?;
    m.add_function(wrap_pyfunction!(is_proper, m)?)?;
    m.add_function(wrap_pyfunction!(find_rainbow_copy, m)?)?;
    m.add_function(wrap_pyfunction!(avoid_rainbow_c4, m)?)?;
    m.add_function(wrap_pyfunction!(fractional_width, m)?)?;
    m.add_function(wrap_pyfunction!(disjoint_representatives, m)?)?;
    m.add_function(wrap_pyfunction!(bounds, m)?)?;
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    // keep the Python name short and predictable
    m.add_function(wrap_pyfunction!(smallest_forcing_multiplicity_py, m)?)?;
    Ok(())
}
