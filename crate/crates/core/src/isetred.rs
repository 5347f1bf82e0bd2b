//! Parity-preserving reduction from 3-SAT to counting independent sets,
//! and the exact #IS → #2-SAT translation.
//!
//! Satisfying assignments correspond to the "good" independent sets: one
//! literal vertex per variable triangle, one partial-assignment vertex per
//! clause block, no guards. All other independent sets pair up, so the
//! total count has the same parity as #Sat — no uniqueness promise needed.

use crate::error::{Error, Result};
use crate::structures::{Cnf, Multigraph, VertexId};

/// Graph built by `sat_to_indset_graph`, with the source sizes retained so
/// callers can locate the vertex blocks.
///
/// Layout: variable v owns vertices 3v (x, "true"), 3v+1 (x̄, "false") and
/// 3v+2 (guard); clause c owns 3n+8c .. 3n+8c+7, the seven satisfying
/// partial assignments in binary order followed by the clause guard.
#[derive(Clone, Debug)]
pub struct IndsetInstance {
    pub graph: Multigraph,
    pub n_src: usize,
    pub m_src: usize,
}

impl IndsetInstance {
    /// Vertex whose membership encodes "variable v is true".
    pub fn true_vertex(&self, v: usize) -> VertexId {
        3 * v
    }

    /// Vertex whose membership encodes "variable v is false".
    pub fn false_vertex(&self, v: usize) -> VertexId {
        3 * v + 1
    }

    pub fn var_guard(&self, v: usize) -> VertexId {
        3 * v + 2
    }

    /// Clause vertex for partial assignment `i` in 1..=7, where the bits
    /// of i are the truth values of (ℓ₁, ℓ₂, ℓ₃), most significant first.
    pub fn clause_vertex(&self, c: usize, i: usize) -> VertexId {
        3 * self.n_src + 8 * c + (i - 1)
    }

    pub fn clause_guard(&self, c: usize) -> VertexId {
        3 * self.n_src + 8 * c + 7
    }

    pub fn is_guard(&self, u: VertexId) -> bool {
        if u < 3 * self.n_src {
            u % 3 == 2
        } else {
            (u - 3 * self.n_src) % 8 == 7
        }
    }

    pub fn is_literal_vertex(&self, u: VertexId) -> bool {
        u < 3 * self.n_src && u % 3 != 2
    }

    pub fn is_clause_vertex(&self, u: VertexId) -> bool {
        u >= 3 * self.n_src && !self.is_guard(u)
    }
}

/// Encode a width-3 CNF with distinct variables per clause as a simple
/// graph with 3n+8m vertices and 3n+49m edges whose independent-set count
/// is congruent to #Sat mod 2.
pub fn sat_to_indset_graph(f: &Cnf) -> Result<IndsetInstance> {
    for (c, clause) in f.clauses().iter().enumerate() {
        if clause.len() != 3 {
            return Err(Error::InvalidInput(format!(
                "clause {c} has width {}, expected exactly 3",
                clause.len()
            )));
        }
        let vars: Vec<u32> = clause.iter().map(|l| l.unsigned_abs()).collect();
        if vars[0] == vars[1] || vars[1] == vars[2] || vars[0] == vars[2] {
            return Err(Error::InvalidInput(format!(
                "clause {c} repeats a variable"
            )));
        }
    }
    let n = f.num_vars();
    let m = f.num_clauses();
    let mut g = Multigraph::new(3 * n + 8 * m);
    let inst_layout = IndsetInstance {
        graph: Multigraph::new(0),
        n_src: n,
        m_src: m,
    };
    for v in 0..n {
        let (x, nx, gv) = (
            inst_layout.true_vertex(v),
            inst_layout.false_vertex(v),
            inst_layout.var_guard(v),
        );
        g.add_edge(x, nx)?;
        g.add_edge(x, gv)?;
        g.add_edge(nx, gv)?;
    }
    for (c, clause) in f.clauses().iter().enumerate() {
        for i in 1..=7usize {
            for j in i + 1..=7 {
                g.add_edge(inst_layout.clause_vertex(c, i), inst_layout.clause_vertex(c, j))?;
            }
        }
        for i in 1..=7usize {
            g.add_edge(inst_layout.clause_vertex(c, i), inst_layout.clause_guard(c))?;
        }
        for i in 1..=7usize {
            let bits = [(i >> 2) & 1 == 1, (i >> 1) & 1 == 1, i & 1 == 1];
            for (j, &lit) in clause.iter().enumerate() {
                let v = lit.unsigned_abs() as usize - 1;
                let var_true = if lit > 0 { bits[j] } else { !bits[j] };
                let target = if var_true {
                    inst_layout.false_vertex(v)
                } else {
                    inst_layout.true_vertex(v)
                };
                g.add_edge(inst_layout.clause_vertex(c, i), target)?;
            }
        }
    }
    debug_assert_eq!(g.edge_count(), 3 * n + 49 * m);
    debug_assert!(g.is_simple());
    Ok(IndsetInstance {
        graph: g,
        n_src: n,
        m_src: m,
    })
}

/// One variable per vertex, one clause (ū ∨ v̄) per edge: satisfying
/// assignments are exactly the independent sets.
pub fn indset_to_2sat(g: &Multigraph) -> Result<Cnf> {
    if !g.is_simple() {
        return Err(Error::InvalidInput(
            "independent-set translation expects a simple graph".into(),
        ));
    }
    let clauses = g
        .edges()
        .iter()
        .map(|&(u, v)| vec![-((u + 1) as i32), -((v + 1) as i32)])
        .collect();
    Cnf::new(g.vertex_count(), clauses)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Int;
    use crate::oracles::{count_independent_sets, count_sat};

    fn cnf(n: usize, clauses: &[&[i32]]) -> Cnf {
        Cnf::new(n, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    fn parity(x: &Int) -> Int {
        x % Int::from(2)
    }

    #[test]
    fn sizes_match() {
        let inst = sat_to_indset_graph(&cnf(3, &[&[1, 2, 3]])).unwrap();
        assert_eq!(inst.graph.vertex_count(), 17);
        assert_eq!(inst.graph.edge_count(), 58);
        assert!(inst.graph.is_simple());
    }

    #[test]
    fn rejects_bad_clauses() {
        assert!(sat_to_indset_graph(&cnf(2, &[&[1, 2]])).is_err());
        assert!(sat_to_indset_graph(&cnf(2, &[&[1, 1, 2]])).is_err());
        assert!(sat_to_indset_graph(&cnf(2, &[&[1, -1, 2]])).is_err());
    }

    #[test]
    fn parity_matches_small_formulas() {
        let formulas = [
            cnf(3, &[]),
            cnf(3, &[&[1, 2, 3]]),
            cnf(3, &[&[1, 2, 3], &[-1, -2, -3]]),
            cnf(3, &[&[1, -2, 3], &[1, 2, -3]]),
            cnf(4, &[&[1, 2, 3], &[2, 3, 4]]),
        ];
        for f in formulas {
            let inst = sat_to_indset_graph(&f).unwrap();
            let is_count = count_independent_sets(&inst.graph).unwrap();
            let sat = count_sat(&f).unwrap();
            assert_eq!(parity(&is_count), parity(&sat), "formula {:?}", f.clauses());
        }
    }

    #[test]
    fn unique_formula_gives_odd_count() {
        // exclude every assignment except (T,T,T): the clause killing
        // assignment a reads x if a(x) is false, x̄ if true
        let mut clauses = Vec::new();
        for a in 0..7u8 {
            let lit = |j: usize| -> i32 {
                let v = (j + 1) as i32;
                if a & (1 << j) == 0 {
                    v
                } else {
                    -v
                }
            };
            clauses.push(vec![lit(0), lit(1), lit(2)]);
        }
        let f = Cnf::new(3, clauses).unwrap();
        assert_eq!(count_sat(&f).unwrap(), Int::from(1));
        let inst = sat_to_indset_graph(&f).unwrap();
        assert_eq!(inst.graph.vertex_count(), 65);
        let is_count = count_independent_sets(&inst.graph).unwrap();
        assert_eq!(parity(&is_count), Int::from(1));
    }

    #[test]
    fn good_sets_biject_with_assignments() {
        let f = cnf(3, &[&[1, 2, 3]]);
        let inst = sat_to_indset_graph(&f).unwrap();
        let g = &inst.graph;
        let n = g.vertex_count();
        let mut good_assignments = std::collections::BTreeSet::new();
        for mask in 0..1u32 << n {
            let has = |u: usize| mask & (1 << u) != 0;
            if g.edges().iter().any(|&(u, v)| has(u) && has(v)) {
                continue;
            }
            let literals = (0..n).filter(|&u| has(u) && inst.is_literal_vertex(u)).count();
            let clause_verts = (0..n).filter(|&u| has(u) && inst.is_clause_vertex(u)).count();
            let guards = (0..n).filter(|&u| has(u) && inst.is_guard(u)).count();
            if literals == inst.n_src && clause_verts == inst.m_src && guards == 0 {
                // a good set picks exactly one literal per variable
                let mut assignment = Vec::new();
                for v in 0..inst.n_src {
                    let t = has(inst.true_vertex(v));
                    let fv = has(inst.false_vertex(v));
                    assert!(t ^ fv, "one literal vertex per variable");
                    assignment.push(t);
                }
                assert!(good_assignments.insert(assignment), "bijection is injective");
            }
        }
        // exactly the 7 satisfying assignments of (x∨y∨z)
        assert_eq!(good_assignments.len(), 7);
        assert!(!good_assignments.contains(&vec![false, false, false]));
        for a in good_assignments {
            assert!(a.iter().any(|&b| b));
        }
    }

    #[test]
    fn two_sat_translation() {
        let k2 = Multigraph::from_edges(2, &[(0, 1)]).unwrap();
        let f = indset_to_2sat(&k2).unwrap();
        assert_eq!(f.clauses(), &[vec![-1, -2]]);
        assert_eq!(count_sat(&f).unwrap(), Int::from(3));

        let edgeless = Multigraph::new(3);
        let f = indset_to_2sat(&edgeless).unwrap();
        assert_eq!(count_sat(&f).unwrap(), Int::from(8));

        for g in [
            Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap(),
            Multigraph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap(),
            Multigraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap(),
        ] {
            let f = indset_to_2sat(&g).unwrap();
            assert_eq!(
                count_sat(&f).unwrap(),
                count_independent_sets(&g).unwrap()
            );
        }

        let doubled = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        assert!(indset_to_2sat(&doubled).is_err());
    }
}
