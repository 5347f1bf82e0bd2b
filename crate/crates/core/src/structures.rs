//! Graph and formula containers.
//!
//! `Multigraph` allows loops and parallel edges and hands out dense
//! `EdgeId`s in insertion order; all surgery is by value (inputs are never
//! mutated) and re-densifies ids with an explicit old-to-new map.

use crate::error::{Error, Result};
use crate::exactmath::Rational;
use num_traits::One;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Undirected multigraph with loops and parallel edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Multigraph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
}

impl Multigraph {
    pub fn new(n: usize) -> Self {
        Multigraph { n, edges: Vec::new() }
    }

    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId)]) -> Result<Self> {
        let mut g = Multigraph::new(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Append an edge, returning its dense id.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<EdgeId> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidInput(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        self.edges.push((u, v));
        Ok(self.edges.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<(VertexId, VertexId)> {
        self.edges
            .get(e)
            .copied()
            .ok_or_else(|| Error::InvalidInput(format!("invalid edge id {e}")))
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn is_loop(&self, e: EdgeId) -> Result<bool> {
        let (u, v) = self.endpoints(e)?;
        Ok(u == v)
    }

    /// True when the graph has no loops and no parallel edges.
    pub fn is_simple(&self) -> bool {
        let mut seen = std::collections::HashSet::new();
        for &(u, v) in &self.edges {
            if u == v {
                return false;
            }
            let key = (u.min(v), u.max(v));
            if !seen.insert(key) {
                return false;
            }
        }
        true
    }

    /// Number of connected components of `(V, A)`; isolated vertices count.
    pub fn component_count(&self, subset: &[EdgeId]) -> Result<usize> {
        let mut dsu = Dsu::new(self.n);
        for &e in subset {
            let (u, v) = self.endpoints(e)?;
            dsu.union(u, v);
        }
        Ok(dsu.components())
    }

    /// `k(E)`: components with every edge present.
    pub fn component_count_full(&self) -> usize {
        let mut dsu = Dsu::new(self.n);
        for &(u, v) in &self.edges {
            dsu.union(u, v);
        }
        dsu.components()
    }

    pub fn is_connected(&self) -> bool {
        self.component_count_full() <= 1
    }

    /// True when `e` is a bridge, i.e. deleting it increases `k`.
    pub fn is_bridge(&self, e: EdgeId) -> Result<bool> {
        let (u, v) = self.endpoints(e)?;
        if u == v {
            return Ok(false);
        }
        let mut dsu = Dsu::new(self.n);
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if i != e {
                dsu.union(a, b);
            }
        }
        Ok(dsu.find(u) != dsu.find(v))
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SurgeryKind {
    Delete,
    Contract,
}

/// Result of deleting or contracting a single edge.
///
/// `edge_map[old]` is the new id of a surviving edge, `None` for the removed
/// edge itself. Contraction keeps the lower endpoint, re-densifying vertex
/// ids; contracting a loop is defined as deletion.
#[derive(Clone, Debug)]
pub struct SurgeryResult {
    pub graph: Multigraph,
    pub edge_map: Vec<Option<EdgeId>>,
}

pub fn edge_surgery(g: &Multigraph, e: EdgeId, kind: SurgeryKind) -> Result<SurgeryResult> {
    let (u, v) = g.endpoints(e)?;
    let delete = matches!(kind, SurgeryKind::Delete) || u == v;
    let mut edge_map = vec![None; g.edge_count()];
    if delete {
        let mut out = Multigraph::new(g.vertex_count());
        for (i, &(a, b)) in g.edges().iter().enumerate() {
            if i == e {
                continue;
            }
            edge_map[i] = Some(out.add_edge(a, b)?);
        }
        return Ok(SurgeryResult { graph: out, edge_map });
    }
    let (keep, gone) = (u.min(v), u.max(v));
    let remap = |x: VertexId| -> VertexId {
        if x == gone {
            keep
        } else if x > gone {
            x - 1
        } else {
            x
        }
    };
    let mut out = Multigraph::new(g.vertex_count() - 1);
    for (i, &(a, b)) in g.edges().iter().enumerate() {
        if i == e {
            continue;
        }
        edge_map[i] = Some(out.add_edge(remap(a), remap(b))?);
    }
    Ok(SurgeryResult { graph: out, edge_map })
}

/// Per-edge rational weights, indexed by `EdgeId`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WeightMap {
    weights: Vec<Rational>,
}

impl WeightMap {
    pub fn uniform(m: usize, w: Rational) -> Self {
        WeightMap { weights: vec![w; m] }
    }

    pub fn ones(m: usize) -> Self {
        Self::uniform(m, Rational::one())
    }

    pub fn from_vec(weights: Vec<Rational>) -> Self {
        WeightMap { weights }
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn get(&self, e: EdgeId) -> Result<&Rational> {
        self.weights
            .get(e)
            .ok_or_else(|| Error::InvalidInput(format!("no weight for edge id {e}")))
    }

    pub fn set(&mut self, e: EdgeId, w: Rational) -> Result<()> {
        if e >= self.weights.len() {
            return Err(Error::InvalidInput(format!("no weight for edge id {e}")));
        }
        self.weights[e] = w;
        Ok(())
    }

    pub fn as_slice(&self) -> &[Rational] {
        &self.weights
    }

    /// Carry weights through a surgery's old-to-new edge map.
    pub fn remap(&self, edge_map: &[Option<EdgeId>], new_len: usize) -> WeightMap {
        let mut out = vec![Rational::one(); new_len];
        for (old, slot) in edge_map.iter().enumerate() {
            if let Some(new) = slot {
                out[*new] = self.weights[old].clone();
            }
        }
        WeightMap { weights: out }
    }
}

/// Directed multigraph with rational arc weights; arcs have dense ids.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Digraph {
    n: usize,
    arcs: Vec<(VertexId, VertexId, Rational)>,
}

impl Digraph {
    pub fn new(n: usize) -> Self {
        Digraph { n, arcs: Vec::new() }
    }

    pub fn add_arc(&mut self, u: VertexId, v: VertexId, w: Rational) -> Result<usize> {
        if u >= self.n || v >= self.n {
            return Err(Error::InvalidInput(format!(
                "arc ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        self.arcs.push((u, v, w));
        Ok(self.arcs.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> &[(VertexId, VertexId, Rational)] {
        &self.arcs
    }
}

/// CNF formula; literals are nonzero integers, negative for negation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Cnf {
    num_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl Cnf {
    pub fn new(num_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for clause in &clauses {
            for &lit in clause {
                if lit == 0 || lit.unsigned_abs() as usize > num_vars {
                    return Err(Error::InvalidInput(format!(
                        "literal {lit} out of range for {num_vars} variables"
                    )));
                }
            }
        }
        Ok(Cnf { num_vars, clauses })
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn num_clauses(&self) -> usize {
        self.clauses.len()
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// Largest clause width (0 for an empty formula).
    pub fn max_width(&self) -> usize {
        self.clauses.iter().map(|c| c.len()).max().unwrap_or(0)
    }

    /// Errors unless every clause has width `1..=3`.
    pub fn require_3cnf(&self) -> Result<()> {
        for (i, clause) in self.clauses.iter().enumerate() {
            if clause.is_empty() || clause.len() > 3 {
                return Err(Error::InvalidInput(format!(
                    "clause {i} has width {}, expected 1..=3",
                    clause.len()
                )));
            }
        }
        Ok(())
    }
}

/// Graph with an ordered pair of terminals; the template for edge inflation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoTerminalGraph {
    pub graph: Multigraph,
    pub left: VertexId,
    pub right: VertexId,
}

impl TwoTerminalGraph {
    pub fn new(graph: Multigraph, left: VertexId, right: VertexId) -> Result<Self> {
        if left >= graph.vertex_count() || right >= graph.vertex_count() {
            return Err(Error::InvalidInput("terminal out of range".into()));
        }
        Ok(TwoTerminalGraph { graph, left, right })
    }
}

/// Graph with three distinct terminals.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TerminalTriple {
    pub graph: Multigraph,
    pub terminals: [VertexId; 3],
}

impl TerminalTriple {
    pub fn new(graph: Multigraph, terminals: [VertexId; 3]) -> Result<Self> {
        for &t in &terminals {
            if t >= graph.vertex_count() {
                return Err(Error::InvalidInput("terminal out of range".into()));
            }
        }
        if terminals[0] == terminals[1] || terminals[1] == terminals[2] || terminals[0] == terminals[2]
        {
            return Err(Error::InvalidInput("terminals must be distinct".into()));
        }
        Ok(TerminalTriple { graph, terminals })
    }
}

/// Union-find over `0..n` with union by size.
#[derive(Clone)]
pub(crate) struct Dsu {
    parent: Vec<u32>,
    size: Vec<u32>,
    components: usize,
}

impl Dsu {
    pub fn new(n: usize) -> Self {
        Dsu {
            parent: (0..n as u32).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    pub fn find(&self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            x = self.parent[x] as usize;
        }
        x
    }

    /// Union; returns the merged-away root when the sets were distinct.
    pub fn union(&mut self, a: usize, b: usize) -> Option<usize> {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return None;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra as u32;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        Some(rb)
    }

    /// Undo a union recorded by the return value of `union`.
    pub fn undo(&mut self, merged_root: usize) {
        let ra = self.parent[merged_root] as usize;
        self.parent[merged_root] = merged_root as u32;
        self.size[ra] -= self.size[merged_root];
        self.components += 1;
    }

    pub fn components(&self) -> usize {
        self.components
    }
}
