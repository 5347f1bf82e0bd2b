//! The reduction chain #3-Sat → #NAE-3-Sat⁺ → MaxCut on multigraphs →
//! MaxCut on simple graphs, with an assignment-planting step in front so
//! every instance downstream is satisfiable.

use crate::error::{Error, Result};
use crate::inflate::{inflate, path_gadget};
use crate::structures::{Cnf, Multigraph};

/// A NAE-satisfiability instance produced by [`sat_to_nae`], every clause
/// trivariate and at least one not-all-equal assignment guaranteed (the
/// planted assignment and its complement). `relation_constant` is the
/// integer with count_nae(formula) = relation_constant·(count_sat(source)+1).
#[derive(Clone, Debug)]
pub struct NaeInstance {
    pub formula: Cnf,
    pub relation_constant: u64,
}

/// Add one satisfying assignment to a 3-CNF without disturbing the count
/// otherwise: count_sat(result) = count_sat(f) + 1.
///
/// A fresh switch y gates two regimes. Each clause (ℓ₁∨ℓ₂∨ℓ₃) is replaced
/// by definition variables a ↔ (ℓ₁∨b), b ↔ (ℓ₂∨ℓ₃) (width ≤ 3 clauses)
/// plus (ȳ∨a), so under y = true the definitions force a to the clause's
/// truth value and every model of f extends uniquely. Clauses (y∨xᵢ) pin
/// all original variables under y = false, leaving exactly one extra
/// assignment there.
pub fn plant_assignment(f: &Cnf) -> Result<Cnf> {
    f.require_3cnf()?;
    let n = f.num_vars();
    let y = (n + 1) as i32;
    let mut next = n + 2;
    let mut fresh = || {
        let v = next as i32;
        next += 1;
        v
    };
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    for clause in f.clauses() {
        let a = fresh();
        match clause.as_slice() {
            [l1] => {
                // a ↔ ℓ₁
                clauses.push(vec![-a, *l1]);
                clauses.push(vec![a, -l1]);
            }
            [l1, l2] => {
                // a ↔ (ℓ₁ ∨ ℓ₂)
                clauses.push(vec![-a, *l1, *l2]);
                clauses.push(vec![a, -l1]);
                clauses.push(vec![a, -l2]);
            }
            [l1, l2, l3] => {
                let b = fresh();
                // a ↔ (ℓ₁ ∨ b), b ↔ (ℓ₂ ∨ ℓ₃)
                clauses.push(vec![-a, *l1, b]);
                clauses.push(vec![a, -l1]);
                clauses.push(vec![a, -b]);
                clauses.push(vec![-b, *l2, *l3]);
                clauses.push(vec![b, -l2]);
                clauses.push(vec![b, -l3]);
            }
            _ => unreachable!("widths checked by require_3cnf"),
        }
        clauses.push(vec![-y, a]);
    }
    for v in 1..=n {
        clauses.push(vec![y, v as i32]);
    }
    Cnf::new(next - 1, clauses)
}

/// Plant an assignment, then convert to an all-trivariate NAE instance
/// with count_nae = 2·(count_sat(f)+1).
///
/// Each trivariate clause (a∨b∨c) becomes (x∨ā)(x∨b̄)(x̄∨a∨b)(x∨c) for a
/// fresh x (so x ↔ a∨b, and the NAE reading of the surviving trivariate
/// clause adds no constraint beyond those companions); a single fresh z is
/// then appended positively to every clause still short of three literals.
/// Complementation-invariance of NAE supplies the factor 2.
pub fn sat_to_nae(f: &Cnf) -> Result<NaeInstance> {
    let planted = plant_assignment(f)?;
    let mut next = planted.num_vars() + 1;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    for clause in planted.clauses() {
        if let [a, b, c] = clause.as_slice() {
            let x = next as i32;
            next += 1;
            clauses.push(vec![x, -a]);
            clauses.push(vec![x, -b]);
            clauses.push(vec![-x, *a, *b]);
            clauses.push(vec![x, *c]);
        } else {
            clauses.push(clause.clone());
        }
    }
    let z = next as i32;
    for clause in &mut clauses {
        if clause.len() < 3 {
            clause.push(z);
        }
    }
    let formula = Cnf::new(next, clauses)?;
    Ok(NaeInstance { formula, relation_constant: 2 })
}

fn literal_vertex(lit: i32, n: usize) -> usize {
    let v = lit.unsigned_abs() as usize - 1;
    if lit > 0 {
        v
    } else {
        n + v
    }
}

/// NAE instance to MaxCut on a multigraph: vertices x and x̄ per variable
/// joined by an edge, plus a triangle on the literal vertices of every
/// clause (parallel edges kept — the counting needs multiplicity).
///
/// With k = 2m+n, no cut exceeds k and the cuts of size exactly k are in
/// bijection with the NAE assignments.
pub fn nae_to_maxcut(f: &Cnf) -> Result<(Multigraph, usize)> {
    if f.clauses().iter().any(|c| c.len() != 3) {
        return Err(Error::InvalidInput(
            "the cut construction needs every clause trivariate".into(),
        ));
    }
    let n = f.num_vars();
    let m = f.num_clauses();
    let mut g = Multigraph::new(2 * n);
    for v in 0..n {
        g.add_edge(v, n + v)?;
    }
    for clause in f.clauses() {
        let verts: Vec<usize> = clause.iter().map(|&l| literal_vertex(l, n)).collect();
        for (i, j) in [(0, 1), (1, 2), (0, 2)] {
            g.add_edge(verts[i], verts[j])?;
        }
    }
    Ok((g, 2 * m + n))
}

/// 3-stretch to a simple graph; with (k, c) = count_maxcut(g) the output
/// has count_maxcut = (2m+k, 3^{m−k}·c) for m = m(g).
pub fn maxcut_to_simple(g: &Multigraph) -> Result<Multigraph> {
    let stretched = inflate(g, &path_gadget(3)?)?;
    debug_assert!(stretched.is_simple());
    Ok(stretched)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::Int;
    use crate::oracles::{count_maxcut, count_nae, count_sat};

    fn cnf(n: usize, clauses: &[&[i32]]) -> Cnf {
        Cnf::new(n, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn planting_adds_exactly_one_assignment() {
        let unsat = cnf(1, &[&[1], &[-1]]);
        assert_eq!(count_sat(&unsat).unwrap(), Int::from(0));
        assert_eq!(count_sat(&plant_assignment(&unsat).unwrap()).unwrap(), Int::from(1));

        let f = cnf(3, &[&[1, 2, 3]]);
        assert_eq!(count_sat(&plant_assignment(&f).unwrap()).unwrap(), Int::from(8));

        let empty = cnf(3, &[]);
        let planted = plant_assignment(&empty).unwrap();
        assert_eq!(count_sat(&planted).unwrap(), Int::from(9));
        assert_eq!(planted.num_vars(), 4);

        let mixed = cnf(4, &[&[1, -2], &[2, 3, -4], &[-1]]);
        let before = count_sat(&mixed).unwrap();
        let planted = plant_assignment(&mixed).unwrap();
        assert_eq!(count_sat(&planted).unwrap(), before + 1);
        // linear growth: one or two fresh variables and ≤ 7 clauses per
        // clause, plus one clause per original variable
        assert!(planted.num_vars() <= mixed.num_vars() + 1 + 2 * mixed.num_clauses());
        assert!(planted.num_clauses() <= 7 * mixed.num_clauses() + mixed.num_vars());
    }

    #[test]
    fn nae_conversion_doubles_planted_count() {
        let f = cnf(3, &[&[1, 2, 3]]);
        let instance = sat_to_nae(&f).unwrap();
        assert_eq!(instance.relation_constant, 2);
        assert!(instance.formula.clauses().iter().all(|c| c.len() == 3));
        assert_eq!(count_nae(&instance.formula).unwrap(), Int::from(16));

        let planted = plant_assignment(&f).unwrap();
        assert!(instance.formula.num_clauses() <= 4 * planted.num_clauses());

        let unsat = cnf(1, &[&[1], &[-1]]);
        let instance = sat_to_nae(&unsat).unwrap();
        assert_eq!(count_nae(&instance.formula).unwrap(), Int::from(2));
    }

    #[test]
    fn cut_construction_counts_nae_assignments() {
        let f = cnf(3, &[&[1, 2, 3]]);
        let (g, k) = nae_to_maxcut(&f).unwrap();
        assert_eq!(g.vertex_count(), 6);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(k, 5);
        let cut = count_maxcut(&g).unwrap();
        assert_eq!(cut.size, 5);
        assert_eq!(Int::from(6), cut.count);
        assert_eq!(count_nae(&f).unwrap(), cut.count);

        assert!(nae_to_maxcut(&cnf(2, &[&[1, 2]])).is_err());
    }

    #[test]
    fn chain_composes_to_the_sat_count() {
        for (f, expected) in [
            (cnf(2, &[&[1, 2]]), 3u64),
            (cnf(2, &[&[1], &[-1, 2]]), 1),
            (cnf(1, &[&[1], &[-1]]), 0),
        ] {
            assert_eq!(count_sat(&f).unwrap(), Int::from(expected));
            let instance = sat_to_nae(&f).unwrap();
            let nae = count_nae(&instance.formula).unwrap();
            assert_eq!(nae, Int::from(2 * (expected + 1)));
            let (g, k) = nae_to_maxcut(&instance.formula).unwrap();
            let cut = count_maxcut(&g).unwrap();
            // a satisfiable instance always reaches k
            assert_eq!(cut.size, k);
            assert_eq!(cut.count, nae);
        }
    }

    #[test]
    fn stretch_relation_on_multigraphs() {
        let doubled = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let before = count_maxcut(&doubled).unwrap();
        assert_eq!((before.size, before.count.clone()), (2, Int::from(2)));
        let stretched = maxcut_to_simple(&doubled).unwrap();
        assert!(stretched.is_simple());
        let after = count_maxcut(&stretched).unwrap();
        assert_eq!(after.size, 2 * 2 + before.size);
        assert_eq!(after.count, before.count);

        // a loop is never cut; its stretch is a cuttable triangle
        let looped = Multigraph::from_edges(1, &[(0, 0)]).unwrap();
        let after = count_maxcut(&maxcut_to_simple(&looped).unwrap()).unwrap();
        assert_eq!((after.size, after.count), (2, Int::from(6)));

        let mixed = Multigraph::from_edges(3, &[(0, 1), (0, 1), (1, 2), (2, 2), (0, 2)]).unwrap();
        let before = count_maxcut(&mixed).unwrap();
        let after = count_maxcut(&maxcut_to_simple(&mixed).unwrap()).unwrap();
        let m = mixed.edge_count();
        assert_eq!(after.size, 2 * m + before.size);
        assert_eq!(
            after.count,
            Int::from(3u64).pow((m - before.size) as u32) * &before.count
        );
    }
}
