//! Python bindings: the counting oracles, reductions, inflations, and the
//! verification harness, with rationals crossing the boundary as strings
//! (`"num"` or `"num/den"`) and counts as Python ints.

use countforge_cli::{formats, verify};
use countforge_core::exactmath::Rational;
use countforge_core::inflate::{
    bundle_gadget, inflate as inflate_graph, path_gadget, theta_graph, wump_graph, ThetaSpec,
    WumpSpec,
};
use countforge_core::oracles::{self, Matrix, PermMethod, ZVariant};
use countforge_core::structures::{Multigraph, TerminalTriple, WeightMap};
use countforge_core::{isetred, permred, pipelines, satchain};
use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::PyDict;

fn err(e: countforge_core::Error) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(s: &str) -> PyResult<Rational> {
    formats::parse_rational(s, 0).map_err(err)
}

fn rat_str(x: &Rational) -> String {
    formats::serialize_rational(x)
}

/// An undirected multigraph with 0-based vertex ids.
#[pyclass]
#[derive(Clone)]
struct Graph {
    inner: Multigraph,
}

#[pymethods]
impl Graph {
    #[new]
    fn new(vertices: usize) -> Self {
        Graph { inner: Multigraph::new(vertices) }
    }

    /// Parse the `graph n m` text format; returns (graph, edge weights).
    #[staticmethod]
    fn parse(text: &str) -> PyResult<(Graph, Vec<String>)> {
        let (g, w) = formats::parse_graph(text).map_err(err)?;
        let weights = w.as_slice().iter().map(rat_str).collect();
        Ok((Graph { inner: g }, weights))
    }

    fn add_edge(&mut self, u: usize, v: usize) -> PyResult<usize> {
        self.inner.add_edge(u, v).map_err(err)
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

    fn is_simple(&self) -> bool {
        self.inner.is_simple()
    }

    /// Connected components when only the listed edges (all, if omitted)
    /// are present.
    #[pyo3(signature = (subset=None))]
    fn component_count(&self, subset: Option<Vec<usize>>) -> PyResult<usize> {
        match subset {
            Some(ids) => self.inner.component_count(&ids).map_err(err),
            None => Ok(self.inner.component_count_full()),
        }
    }

    /// Serialize to the `graph n m` text format; weights default to 1.
    #[pyo3(signature = (weights=None))]
    fn serialize(&self, weights: Option<Vec<String>>) -> PyResult<String> {
        let w = match weights {
            Some(items) => {
                let mut parsed = Vec::with_capacity(items.len());
                for item in &items {
                    parsed.push(rational(item)?);
                }
                WeightMap::from_vec(parsed)
            }
            None => WeightMap::ones(self.inner.edge_count()),
        };
        formats::serialize_graph(&self.inner, &w).map_err(err)
    }

    fn __repr__(&self) -> String {
        format!(
            "Graph(vertices={}, edges={})",
            self.inner.vertex_count(),
            self.inner.edge_count()
        )
    }
}

/// A CNF formula; clauses are lists of nonzero literals (±1-based).
#[pyclass]
#[derive(Clone)]
struct Cnf {
    inner: countforge_core::structures::Cnf,
}

#[pymethods]
impl Cnf {
    #[new]
    fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> PyResult<Self> {
        Ok(Cnf { inner: countforge_core::structures::Cnf::new(num_vars, clauses).map_err(err)? })
    }

    /// Parse DIMACS text.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Cnf> {
        Ok(Cnf { inner: formats::parse_cnf(text).map_err(err)? })
    }

    #[getter]
    fn num_vars(&self) -> usize {
        self.inner.num_vars()
    }

    #[getter]
    fn num_clauses(&self) -> usize {
        self.inner.num_clauses()
    }

    fn clauses(&self) -> Vec<Vec<i32>> {
        self.inner.clauses().to_vec()
    }

    fn serialize(&self) -> String {
        formats::serialize_cnf(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!("Cnf(vars={}, clauses={})", self.inner.num_vars(), self.inner.num_clauses())
    }
}

/// A weighted directed graph (weights are rational strings).
#[pyclass]
#[derive(Clone)]
struct Digraph {
    inner: countforge_core::structures::Digraph,
}

#[pymethods]
impl Digraph {
    #[new]
    fn new(vertices: usize) -> Self {
        Digraph { inner: countforge_core::structures::Digraph::new(vertices) }
    }

    #[staticmethod]
    fn parse(text: &str) -> PyResult<Digraph> {
        Ok(Digraph { inner: formats::parse_digraph(text).map_err(err)? })
    }

    fn add_arc(&mut self, u: usize, v: usize, weight: &str) -> PyResult<usize> {
        self.inner.add_arc(u, v, rational(weight)?).map_err(err)
    }

    #[getter]
    fn vertex_count(&self) -> usize {
        self.inner.vertex_count()
    }

    #[getter]
    fn arc_count(&self) -> usize {
        self.inner.arc_count()
    }

    fn arcs(&self) -> Vec<(usize, usize, String)> {
        self.inner.arcs().iter().map(|(u, v, w)| (*u, *v, rat_str(w))).collect()
    }

    fn serialize(&self) -> String {
        formats::serialize_digraph(&self.inner)
    }

    fn __repr__(&self) -> String {
        format!(
            "Digraph(vertices={}, arcs={})",
            self.inner.vertex_count(),
            self.inner.arc_count()
        )
    }
}

#[pyfunction]
fn count_sat(f: &Cnf) -> PyResult<BigInt> {
    oracles::count_sat(&f.inner).map_err(err)
}

#[pyfunction]
fn count_nae(f: &Cnf) -> PyResult<BigInt> {
    oracles::count_nae(&f.inner).map_err(err)
}

#[pyfunction]
fn count_independent_sets(g: &Graph) -> PyResult<BigInt> {
    oracles::count_independent_sets(&g.inner).map_err(err)
}

#[pyfunction]
fn count_maxcut(g: &Graph) -> PyResult<(usize, BigInt)> {
    let cut = oracles::count_maxcut(&g.inner).map_err(err)?;
    Ok((cut.size, cut.count))
}

#[pyfunction]
fn count_3tmc(g: &Graph, terminals: [usize; 3]) -> PyResult<(usize, BigInt)> {
    let t = TerminalTriple::new(g.inner.clone(), terminals).map_err(err)?;
    let cut = oracles::count_3tmc(&t).map_err(err)?;
    Ok((cut.size, cut.count))
}

#[pyfunction]
fn count_colourings(g: &Graph, colours: usize) -> PyResult<BigInt> {
    oracles::count_colourings(&g.inner, colours).map_err(err)
}

/// Coefficients of the chromatic polynomial, constant term first.
#[pyfunction]
fn chromatic_polynomial(g: &Graph) -> PyResult<Vec<String>> {
    let p = oracles::chromatic_polynomial(&g.inner).map_err(err)?;
    Ok(p.coeffs().iter().map(rat_str).collect())
}

/// All-terminal reliability; `route` is "brute" or "tutte".
#[pyfunction]
#[pyo3(signature = (g, p, route="brute"))]
fn reliability(g: &Graph, p: &str, route: &str) -> PyResult<String> {
    let p = rational(p)?;
    let value = match route {
        "brute" => oracles::reliability_bruteforce(&g.inner, &p).map_err(err)?,
        "tutte" => pipelines::reliability_from_tutte(&g.inner, &p).map_err(err)?,
        other => return Err(PyValueError::new_err(format!("unknown route: {other}"))),
    };
    Ok(rat_str(&value))
}

/// Permanent of a square matrix of rational strings;
/// `method` is "naive", "ryser", or "cycles".
#[pyfunction]
#[pyo3(signature = (rows, method="ryser"))]
fn permanent(rows: Vec<Vec<String>>, method: &str) -> PyResult<String> {
    let method = match method {
        "naive" => PermMethod::Naive,
        "ryser" => PermMethod::Ryser,
        "cycles" => PermMethod::CycleCover,
        other => return Err(PyValueError::new_err(format!("unknown method: {other}"))),
    };
    let mut parsed = Vec::with_capacity(rows.len());
    for row in &rows {
        let mut out = Vec::with_capacity(row.len());
        for cell in row {
            out.push(rational(cell)?);
        }
        parsed.push(out);
    }
    let a = Matrix::from_rows(parsed).map_err(err)?;
    Ok(rat_str(&oracles::permanent(&a, method).map_err(err)?))
}

/// Permanent of a digraph's adjacency matrix (parallel arc weights sum).
#[pyfunction]
#[pyo3(signature = (d, method="cycles"))]
fn permanent_of_digraph(d: &Digraph, method: &str) -> PyResult<String> {
    let method = match method {
        "naive" => PermMethod::Naive,
        "ryser" => PermMethod::Ryser,
        "cycles" => PermMethod::CycleCover,
        other => return Err(PyValueError::new_err(format!("unknown method: {other}"))),
    };
    Ok(rat_str(&oracles::permanent_of_digraph(&d.inner, method).map_err(err)?))
}

fn variant_of(name: &str) -> PyResult<ZVariant> {
    match name {
        "z" => Ok(ZVariant::Z),
        "z0" => Ok(ZVariant::Z0),
        other => Err(PyValueError::new_err(format!("unknown variant: {other}"))),
    }
}

/// Z(G; q, w) with a uniform weight, or per-edge `weights` strings.
#[pyfunction]
#[pyo3(signature = (g, q, w=None, weights=None, variant="z"))]
fn z_eval(
    g: &Graph,
    q: &str,
    w: Option<&str>,
    weights: Option<Vec<String>>,
    variant: &str,
) -> PyResult<String> {
    let q = rational(q)?;
    let map = match (w, weights) {
        (Some(_), Some(_)) => {
            return Err(PyValueError::new_err("pass either w or weights, not both"))
        }
        (Some(w), None) => WeightMap::uniform(g.inner.edge_count(), rational(w)?),
        (None, Some(items)) => {
            let mut parsed = Vec::with_capacity(items.len());
            for item in &items {
                parsed.push(rational(item)?);
            }
            WeightMap::from_vec(parsed)
        }
        (None, None) => WeightMap::ones(g.inner.edge_count()),
    };
    let value = oracles::z_subset_sum(&g.inner, &q, &map, variant_of(variant)?).map_err(err)?;
    Ok(rat_str(&value))
}

#[pyfunction]
fn tutte_eval(g: &Graph, x: &str, y: &str) -> PyResult<String> {
    let value = oracles::tutte_subset_sum(&g.inner, &rational(x)?, &rational(y)?).map_err(err)?;
    Ok(rat_str(&value))
}

/// Pad a CNF with repeated-literal clauses until every variable is
/// balanced.
#[pyfunction]
fn balance_literals(f: &Cnf) -> PyResult<Cnf> {
    Ok(Cnf { inner: permred::balance_literals(&f.inner).map_err(err)? })
}

/// 3-CNF → ±1-weighted digraph; returns (digraph, occurrence_count) with
/// per(digraph) = (−2)^occurrence_count · #Sat for balanced inputs.
#[pyfunction]
fn sat_to_perm(f: &Cnf) -> PyResult<(Digraph, usize)> {
    let inst = permred::sat_to_perm_pm1(&f.inner).map_err(err)?;
    Ok((Digraph { inner: inst.digraph }, inst.occurrence_count))
}

/// 3-CNF → graph whose independent-set count matches #Sat mod 2.
#[pyfunction]
fn sat_to_indset(f: &Cnf) -> PyResult<Graph> {
    let inst = isetred::sat_to_indset_graph(&f.inner).map_err(err)?;
    Ok(Graph { inner: inst.graph })
}

#[pyfunction]
fn indset_to_2sat(g: &Graph) -> PyResult<Cnf> {
    Ok(Cnf { inner: isetred::indset_to_2sat(&g.inner).map_err(err)? })
}

/// CNF → NAE-SAT instance; returns (formula, relation_constant) with
/// count_nae = relation_constant · (count_sat + 1).
#[pyfunction]
fn sat_to_nae(f: &Cnf) -> PyResult<(Cnf, u64)> {
    let inst = satchain::sat_to_nae(&f.inner).map_err(err)?;
    Ok((Cnf { inner: inst.formula }, inst.relation_constant))
}

/// Trivariate NAE formula → (multigraph, k): cuts of size k count the NAE
/// assignments, and no cut is larger.
#[pyfunction]
fn nae_to_maxcut(f: &Cnf) -> PyResult<(Graph, usize)> {
    let (g, k) = satchain::nae_to_maxcut(&f.inner).map_err(err)?;
    Ok((Graph { inner: g }, k))
}

/// 3-stretch a multigraph into a simple graph with a known cut relation.
#[pyfunction]
fn maxcut_to_simple(g: &Graph) -> PyResult<Graph> {
    Ok(Graph { inner: satchain::maxcut_to_simple(&g.inner).map_err(err)? })
}

/// Replace every edge by a gadget: kind "stretch"/"thicken" take one
/// integer parameter, "theta"/"wump" a list.
#[pyfunction]
fn inflate(g: &Graph, kind: &str, params: Vec<usize>) -> PyResult<Graph> {
    let single = || -> PyResult<usize> {
        match params.as_slice() {
            [k] => Ok(*k),
            _ => Err(PyValueError::new_err("this gadget takes exactly one integer")),
        }
    };
    let gadget = match kind {
        "stretch" => path_gadget(single()?).map_err(err)?,
        "thicken" => bundle_gadget(single()?).map_err(err)?,
        "theta" => theta_graph(&ThetaSpec::new(params.clone()).map_err(err)?),
        "wump" => wump_graph(&WumpSpec::new(params.clone()).map_err(err)?),
        other => return Err(PyValueError::new_err(format!("unknown gadget kind: {other}"))),
    };
    Ok(Graph { inner: inflate_graph(&g.inner, &gadget).map_err(err)? })
}

/// Coefficients of v ↦ Z(G;q,v) recovered through thickenings with the
/// brute-force oracle.
#[pyfunction]
fn thicken_coeffs(g: &Graph, q: &str, w: &str) -> PyResult<Vec<String>> {
    let q = rational(q)?;
    let w = rational(w)?;
    let poly = pipelines::coeffs_by_thickening(&g.inner, &q, &w, |h| {
        oracles::z_subset_sum(h, &q, &WeightMap::uniform(h.edge_count(), w.clone()), ZVariant::Z)
    })
    .map_err(err)?;
    Ok(poly.coeffs().iter().map(rat_str).collect())
}

/// Cut-size distribution and (max size, count) from the Ising point.
#[pyfunction]
fn maxcut_ising(py: Python<'_>, g: &Graph) -> PyResult<(Py<PyDict>, (usize, BigInt))> {
    let (dist, best) = pipelines::maxcut_from_ising(&g.inner).map_err(err)?;
    let out = PyDict::new(py);
    for (size, count) in dist {
        out.set_item(size, count)?;
    }
    Ok((out.into(), (best.size, best.count)))
}

/// 3-terminal minimum-cut count recovered from Z₀ at a fixed q.
#[pyfunction]
fn tmc3_from_z0(g: &Graph, terminals: [usize; 3], q: &str) -> PyResult<BigInt> {
    let t = TerminalTriple::new(g.inner.clone(), terminals).map_err(err)?;
    pipelines::tmc3_from_z0(&t, &rational(q)?).map_err(err)
}

/// 3-colouring count extracted from chromatic evaluations at q.
#[pyfunction]
fn chromatic3_via_linial(g: &Graph, q: &str) -> PyResult<String> {
    let q = rational(q)?;
    let value = pipelines::chromatic3_via_linial(&g.inner, &q, |h| {
        Ok(oracles::chromatic_polynomial(h)?.eval(&q))
    })
    .map_err(err)?;
    Ok(rat_str(&value))
}

/// Run a named verification suite (or "all"); returns the JSON report.
#[pyfunction]
#[pyo3(signature = (suite, seed=0, trials=None, max_n=None, max_m=None))]
fn verify_suite(
    suite: &str,
    seed: u64,
    trials: Option<usize>,
    max_n: Option<usize>,
    max_m: Option<usize>,
) -> PyResult<String> {
    let limits = verify::Limits { trials, max_n, max_m };
    if suite == "all" {
        let reports = verify::verify_all(seed, &limits);
        serde_json::to_string(&reports).map_err(|e| PyValueError::new_err(e.to_string()))
    } else {
        let report = verify::verify_suite(suite, seed, &limits).map_err(err)?;
        serde_json::to_string(&report).map_err(|e| PyValueError::new_err(e.to_string()))
    }
}

#[pyfunction]
fn suite_names() -> Vec<&'static str> {
    verify::suite_names()
}

#[pymodule]
fn countforge(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Graph>()?;
    m.add_class::<Cnf>()?;
    m.add_class::<Digraph>()?;
    m.add_function(wrap_pyfunction!(count_sat, m)?)?;
    m.add_function(wrap_pyfunction!(count_nae, m)?)?;
    m.add_function(wrap_pyfunction!(count_independent_sets, m)?)?;
    m.add_function(wrap_pyfunction!(count_maxcut, m)?)?;
    m.add_function(wrap_pyfunction!(count_3tmc, m)?)?;
    m.add_function(wrap_pyfunction!(count_colourings, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic_polynomial, m)?)?;
    m.add_function(wrap_pyfunction!(reliability, m)?)?;
    m.add_function(wrap_pyfunction!(permanent, m)?)?;
    m.add_function(wrap_pyfunction!(permanent_of_digraph, m)?)?;
    m.add_function(wrap_pyfunction!(z_eval, m)?)?;
    m.add_function(wrap_pyfunction!(tutte_eval, m)?)?;
    m.add_function(wrap_pyfunction!(balance_literals, m)?)?;
    m.add_function(wrap_pyfunction!(sat_to_perm, m)?)?;
    m.add_function(wrap_pyfunction!(sat_to_indset, m)?)?;
    m.add_function(wrap_pyfunction!(indset_to_2sat, m)?)?;
    m.add_function(wrap_pyfunction!(sat_to_nae, m)?)?;
    m.add_function(wrap_pyfunction!(nae_to_maxcut, m)?)?;
    m.add_function(wrap_pyfunction!(maxcut_to_simple, m)?)?;
    m.add_function(wrap_pyfunction!(inflate, m)?)?;
    m.add_function(wrap_pyfunction!(thicken_coeffs, m)?)?;
    m.add_function(wrap_pyfunction!(maxcut_ising, m)?)?;
    m.add_function(wrap_pyfunction!(tmc3_from_z0, m)?)?;
    m.add_function(wrap_pyfunction!(chromatic3_via_linial, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    m.add_function(wrap_pyfunction!(suite_names, m)?)?;
    Ok(())
}
