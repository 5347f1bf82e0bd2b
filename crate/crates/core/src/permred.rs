//! The reduction chain #3-Sat → Perm over {−1,0,1} → Perm over [0,n] →
//! Perm over {0,1}, plus the mod-3 unique-satisfiability decision.
//!
//! A formula is encoded as a digraph whose weighted cycle covers are in
//! sign-weighted correspondence with satisfying assignments: each variable
//! gets a two-cycle selector, each clause a four-vertex gadget that blocks
//! exactly the all-literals-false routing, and each literal occurrence an
//! equality gadget tying the clause to the selector (weight −1 when the
//! occurrence is false, +2 when true, 0 when inconsistent).

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{lagrange_interpolate, rat, Int, Rational};
use crate::oracles::cycle_cover_sum;
use crate::structures::{Cnf, Digraph};

/// Output of `sat_to_perm_pm1`: a digraph with weights in {−1, 1}.
///
/// For a balanced source formula, `per(digraph) = (−2)^i · #Sat` with
/// `i = occurrence_count`, the number of literal occurrences any single
/// assignment sets false (constant across assignments exactly when the
/// formula is balanced).
#[derive(Clone, Debug)]
pub struct PermInstance {
    pub digraph: Digraph,
    /// Arc ids of the weight-(−1) self-loops (one per literal occurrence).
    pub neg_loop_arcs: Vec<usize>,
    pub occurrence_count: usize,
}

fn require_width3(f: &Cnf) -> Result<()> {
    for (i, clause) in f.clauses().iter().enumerate() {
        if clause.len() != 3 {
            return Err(Error::InvalidInput(format!(
                "clause {i} has width {}, expected exactly 3",
                clause.len()
            )));
        }
    }
    Ok(())
}

/// Per-variable (positive, negative) occurrence counts.
fn occurrence_counts(f: &Cnf) -> Vec<(usize, usize)> {
    let mut counts = vec![(0usize, 0usize); f.num_vars()];
    for clause in f.clauses() {
        for &lit in clause {
            let v = lit.unsigned_abs() as usize - 1;
            if lit > 0 {
                counts[v].0 += 1;
            } else {
                counts[v].1 += 1;
            }
        }
    }
    counts
}

pub fn is_balanced(f: &Cnf) -> bool {
    occurrence_counts(f).iter().all(|&(p, n)| p == n)
}

/// Append tautological clauses (x∨x̄∨x̄) / (x̄∨x∨x) until every variable
/// occurs equally often positively and negatively. The satisfying-
/// assignment count is unchanged and the growth is linear.
pub fn balance_literals(f: &Cnf) -> Result<Cnf> {
    require_width3(f)?;
    let mut clauses = f.clauses().to_vec();
    for (v, &(p, n)) in occurrence_counts(f).iter().enumerate() {
        let x = (v + 1) as i32;
        for _ in n..p {
            clauses.push(vec![x, -x, -x]);
        }
        for _ in p..n {
            clauses.push(vec![-x, x, x]);
        }
    }
    Cnf::new(f.num_vars(), clauses)
}

/// Equality gadget on an existing triple (a, a′, apex): +1 loops on a and
/// a′, a −1 loop on the apex, and the six linking arcs. Returns the arc id
/// of the −1 loop.
fn add_equality_gadget(d: &mut Digraph, a: usize, a2: usize, apex: usize) -> usize {
    let neg = d.add_arc(apex, apex, rat(-1)).expect("in range");
    for &(x, y) in &[(a, a), (a2, a2), (a, a2), (a2, a), (a, apex), (apex, a), (a2, apex), (apex, a2)]
    {
        d.add_arc(x, y, rat(1)).expect("in range");
    }
    neg
}

/// Encode a width-3 CNF as a ±1-weighted digraph whose permanent is
/// `Σ_{σ ⊨ f} (−1)^{i(σ)} 2^{j(σ)}` over false/true occurrence counts;
/// for balanced formulas that is `(−2)^i · #Sat`.
///
/// Tautological padding clauses repeat a variable, so repeated variables
/// are accepted here; each occurrence is wired to its own subdivision
/// point and the clause gadget stays occurrence-faithful.
pub fn sat_to_perm_pm1(f: &Cnf) -> Result<PermInstance> {
    require_width3(f)?;
    let n = f.num_vars();
    let m = f.num_clauses();
    let counts = occurrence_counts(f);

    // vertex layout: per variable top, bottom, then its positive and
    // negative subdivision points; per clause b, L, R, M, then (a′, apex)
    // for each of the three positions
    let mut next = 0usize;
    let mut alloc = |k: usize| {
        let base = next;
        next += k;
        base
    };
    let mut top = vec![0; n];
    let mut bot = vec![0; n];
    let mut pos_sub: Vec<Vec<usize>> = Vec::with_capacity(n);
    let mut neg_sub: Vec<Vec<usize>> = Vec::with_capacity(n);
    for v in 0..n {
        top[v] = alloc(1);
        bot[v] = alloc(1);
        let (p, q) = counts[v];
        pos_sub.push((0..p).map(|_| alloc(1)).collect());
        neg_sub.push((0..q).map(|_| alloc(1)).collect());
    }
    let mut clause_base = vec![0; m];
    for c in 0..m {
        clause_base[c] = alloc(10);
    }
    debug_assert_eq!(next, 2 * n + 13 * m);

    let mut d = Digraph::new(next);
    let one = Rational::one();

    // selectors: two literal paths top → … → bottom plus the return arc;
    // the path carrying literal ℓ is traversed exactly when ℓ is false
    for v in 0..n {
        for (sub, _) in [(&pos_sub[v], 0), (&neg_sub[v], 1)] {
            let mut prev = top[v];
            for &a in sub {
                d.add_arc(prev, a, one.clone())?;
                prev = a;
            }
            d.add_arc(prev, bot[v], one.clone())?;
        }
        d.add_arc(bot[v], top[v], one.clone())?;
    }

    let mut neg_loop_arcs = Vec::with_capacity(3 * m);
    let mut next_pos = vec![0usize; n];
    let mut next_neg = vec![0usize; n];
    for (c, clause) in f.clauses().iter().enumerate() {
        let base = clause_base[c];
        let (b, l, r, mm) = (base, base + 1, base + 2, base + 3);
        // outer triangle b → L → R → b, one subdivision point per position
        let corners = [(b, l), (l, r), (r, b)];
        for (j, &lit) in clause.iter().enumerate() {
            let a2 = base + 4 + 2 * j;
            let apex = base + 5 + 2 * j;
            let (from, to) = corners[j];
            d.add_arc(from, a2, one.clone())?;
            d.add_arc(a2, to, one.clone())?;
            let v = lit.unsigned_abs() as usize - 1;
            let a = if lit > 0 {
                let k = next_pos[v];
                next_pos[v] += 1;
                pos_sub[v][k]
            } else {
                let k = next_neg[v];
                next_neg[v] += 1;
                neg_sub[v][k]
            };
            neg_loop_arcs.push(add_equality_gadget(&mut d, a, a2, apex));
        }
        for &(x, y) in &[(mm, l), (l, mm), (mm, r), (r, mm), (mm, b), (b, mm), (l, r), (r, l)] {
            d.add_arc(x, y, one.clone())?;
        }
    }

    let occurrence_count = counts.iter().map(|&(p, q)| p.min(q)).sum();
    Ok(PermInstance {
        digraph: d,
        neg_loop_arcs,
        occurrence_count,
    })
}

/// An equality gadget in isolation. When a side is "forced", its vertex is
/// put on a mandatory external path, modelling a traversed selector or
/// clause segment. Permanent: −1 both forced, +2 neither, 0 mixed.
pub fn equality_gadget_demo(selector_forced: bool, clause_forced: bool) -> Digraph {
    let extra = 2 * (selector_forced as usize + clause_forced as usize);
    let mut d = Digraph::new(3 + extra);
    let _ = add_equality_gadget(&mut d, 0, 1, 2);
    let mut next = 3;
    for (flag, hub) in [(selector_forced, 0), (clause_forced, 1)] {
        if flag {
            let (p, q) = (next, next + 1);
            next += 2;
            d.add_arc(p, hub, rat(1)).unwrap();
            d.add_arc(hub, q, rat(1)).unwrap();
            d.add_arc(q, p, rat(1)).unwrap();
        }
    }
    d
}

/// A clause gadget in isolation with each outer position either forced
/// (its subdivision point only reachable along the outer path) or
/// disabled (outer path removed, subdivision point self-covered).
/// Permanent: 1 unless all three positions are used, then 0.
pub fn clause_gadget_demo(outer_used: [bool; 3]) -> Digraph {
    let mut d = Digraph::new(7);
    let (b, l, r, m) = (0, 1, 2, 3);
    let corners = [(b, l), (l, r), (r, b)];
    for (j, &used) in outer_used.iter().enumerate() {
        let a2 = 4 + j;
        if used {
            let (from, to) = corners[j];
            d.add_arc(from, a2, rat(1)).unwrap();
            d.add_arc(a2, to, rat(1)).unwrap();
        } else {
            d.add_arc(a2, a2, rat(1)).unwrap();
        }
    }
    for &(x, y) in &[(m, l), (l, m), (m, r), (r, m), (m, b), (b, m), (l, r), (r, l)] {
        d.add_arc(x, y, rat(1)).unwrap();
    }
    d
}

fn digraph_with_weights(d: &Digraph, arcs: &[usize], w: &Rational) -> Digraph {
    let mut out = Digraph::new(d.vertex_count());
    for (id, (u, v, wt)) in d.arcs().iter().enumerate() {
        let weight = if arcs.contains(&id) { w.clone() } else { wt.clone() };
        out.add_arc(*u, *v, weight).expect("same vertex set");
    }
    out
}

/// Evaluate per(inst) through an oracle restricted to non-negative loop
/// weights: the −1 loops become a shared variable a, the oracle is asked
/// at a = 0..d, and the degree-≤ d polynomial is read off at a = −1.
/// Makes exactly d+1 oracle calls (one, when there are no −1 loops).
pub fn perm_value_by_interpolation<F>(inst: &PermInstance, mut oracle: F) -> Result<Rational>
where
    F: FnMut(&Digraph) -> Result<Rational>,
{
    let d = &inst.digraph;
    for &id in &inst.neg_loop_arcs {
        match d.arcs().get(id) {
            Some((u, v, w)) if u == v && *w == rat(-1) => {}
            _ => {
                return Err(Error::InvalidInput(format!(
                    "arc {id} is not a weight -1 self-loop"
                )))
            }
        }
    }
    for (id, (_, _, w)) in d.arcs().iter().enumerate() {
        if *w == rat(-1) && !inst.neg_loop_arcs.contains(&id) {
            return Err(Error::InvalidInput(format!(
                "arc {id} carries weight -1 but is not listed as a loop to substitute"
            )));
        }
    }
    let deg = inst.neg_loop_arcs.len();
    if deg == 0 {
        return oracle(d);
    }
    let mut nodes = Vec::with_capacity(deg + 1);
    for a in 0..=deg {
        let g = digraph_with_weights(d, &inst.neg_loop_arcs, &rat(a as i64));
        nodes.push((rat(a as i64), oracle(&g)?));
    }
    let p = lagrange_interpolate(&nodes)?;
    Ok(p.eval(&rat(-1)))
}

/// Replace every arc of integer weight a ≥ 2 by a doubling chain: links of
/// weight 2 (one direct arc plus a looped relay), self-loops on the chain,
/// and a tap into the head for every set binary digit. Weight-0 arcs are
/// dropped, weight-1 arcs kept; the permanent is unchanged.
pub fn expand_weights_to_01(d: &Digraph) -> Result<Digraph> {
    let mut weights = Vec::with_capacity(d.arc_count());
    for (_, _, w) in d.arcs() {
        if !w.is_integer() || w.is_negative() {
            return Err(Error::InvalidInput(format!(
                "weight {w} is not a non-negative integer"
            )));
        }
        weights.push(w.to_integer());
    }
    let mut out = Digraph::new(d.vertex_count());
    let mut next = d.vertex_count();
    let one = Rational::one();
    for ((u, v, _), a) in d.arcs().iter().zip(weights) {
        if a.is_zero() {
            continue;
        }
        if a.is_one() {
            out.add_arc(*u, *v, one.clone())?;
            continue;
        }
        let bits = a.bits() as usize; // a >= 2, so bits >= 2
        let k = bits - 1;
        let chain: Vec<usize> = (0..k).map(|i| next + 2 * i).collect();
        let relays: Vec<usize> = (0..k).map(|i| next + 2 * i + 1).collect();
        next += 2 * k;
        out = grow(out, next);
        let mut prev = *u;
        for j in 0..k {
            // weight-2 link prev → chain[j]
            out.add_arc(prev, chain[j], one.clone())?;
            out.add_arc(prev, relays[j], one.clone())?;
            out.add_arc(relays[j], chain[j], one.clone())?;
            out.add_arc(relays[j], relays[j], one.clone())?;
            out.add_arc(chain[j], chain[j], one.clone())?;
            prev = chain[j];
        }
        for (j, c) in chain.iter().enumerate() {
            if a.bit(j as u64 + 1) {
                out.add_arc(*c, *v, one.clone())?;
            }
        }
        if a.bit(0) {
            out.add_arc(*u, *v, one.clone())?;
        }
    }
    Ok(out)
}

/// Rebuild a digraph with extra isolated vertices appended.
fn grow(d: Digraph, n: usize) -> Digraph {
    let mut out = Digraph::new(n);
    for (u, v, w) in d.arcs() {
        out.add_arc(*u, *v, w.clone()).expect("grown");
    }
    out
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SatVerdict {
    Satisfiable,
    Unsatisfiable,
}

/// Decide satisfiability of a balanced width-3 formula promised to have at
/// most one satisfying assignment, via the permanent mod 3: the −1 loops
/// are replaced by weight-2 loop gadgets, making per ≡ 4^i·#Sat ≡ #Sat
/// (mod 3). Residue 0 means unsatisfiable, 1 means the unique assignment
/// exists. Residue 2 breaks the promise — an error when `promise_unique`
/// is set; otherwise it still certifies satisfiability. Note the UNSAT
/// answer is only sound under the promise: #Sat ≡ 0 (mod 3) with three or
/// more assignments also lands on residue 0.
pub fn unique_sat_mod3(f: &Cnf, promise_unique: bool) -> Result<SatVerdict> {
    if !is_balanced(f) {
        return Err(Error::InvalidInput(
            "mod-3 decision requires a balanced formula".into(),
        ));
    }
    let inst = sat_to_perm_pm1(f)?;
    // weight-2 loop gadget: keep a +1 loop and add a looped companion
    // reachable both ways, doubling the self-cover weight
    let mut g = digraph_with_weights(&inst.digraph, &inst.neg_loop_arcs, &rat(1));
    let mut next = g.vertex_count();
    g = grow(g, next + inst.neg_loop_arcs.len());
    for &id in &inst.neg_loop_arcs {
        let v = inst.digraph.arcs()[id].0;
        let h = next;
        next += 1;
        g.add_arc(v, h, rat(1))?;
        g.add_arc(h, v, rat(1))?;
        g.add_arc(h, h, rat(1))?;
    }
    let per = cycle_cover_sum(&g)?;
    let residue = per.to_integer().mod_floor(&Int::from(3));
    if residue.is_zero() {
        Ok(SatVerdict::Unsatisfiable)
    } else if residue.is_one() {
        Ok(SatVerdict::Satisfiable)
    } else if promise_unique {
        Err(Error::PromiseViolation)
    } else {
        Ok(SatVerdict::Satisfiable)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracles::{count_sat, permanent_naive, permanent_of_digraph, PermMethod};

    fn cnf(n: usize, clauses: &[&[i32]]) -> Cnf {
        Cnf::new(n, clauses.iter().map(|c| c.to_vec()).collect()).unwrap()
    }

    #[test]
    fn balancing_preserves_count() {
        let f = cnf(3, &[&[1, 2, 3]]);
        let b = balance_literals(&f).unwrap();
        assert!(is_balanced(&b));
        assert_eq!(b.num_clauses(), 4);
        assert_eq!(count_sat(&b).unwrap(), count_sat(&f).unwrap());

        let already = cnf(2, &[&[1, -1, 2], &[-2, 1, -1]]);
        assert!(is_balanced(&already));
        assert_eq!(balance_literals(&already).unwrap().clauses(), already.clauses());

        // an absent variable needs no padding
        let sparse = cnf(2, &[&[1, 1, 1]]);
        let b = balance_literals(&sparse).unwrap();
        assert!(b.clauses().iter().all(|c| !c.contains(&2) && !c.contains(&-2)));
        assert_eq!(count_sat(&b).unwrap(), count_sat(&sparse).unwrap());
    }

    #[test]
    fn selector_alone_has_permanent_two() {
        let inst = sat_to_perm_pm1(&cnf(1, &[])).unwrap();
        assert_eq!(inst.digraph.vertex_count(), 2);
        assert_eq!(inst.digraph.arc_count(), 3);
        assert_eq!(inst.occurrence_count, 0);
        assert_eq!(
            permanent_of_digraph(&inst.digraph, PermMethod::CycleCover).unwrap(),
            rat(2)
        );
    }

    #[test]
    fn equality_gadget_table() {
        let cases = [
            ((true, true), rat(-1)),
            ((false, false), rat(2)),
            ((true, false), rat(0)),
            ((false, true), rat(0)),
        ];
        for ((s, c), expect) in cases {
            let d = equality_gadget_demo(s, c);
            assert_eq!(
                permanent_of_digraph(&d, PermMethod::Naive).unwrap(),
                expect,
                "forced = ({s}, {c})"
            );
        }
    }

    #[test]
    fn clause_gadget_blocks_all_three() {
        for bits in 0..8u8 {
            let used = [bits & 1 != 0, bits & 2 != 0, bits & 4 != 0];
            let d = clause_gadget_demo(used);
            let expect = if used == [true, true, true] { rat(0) } else { rat(1) };
            assert_eq!(
                permanent_of_digraph(&d, PermMethod::Naive).unwrap(),
                expect,
                "outer = {used:?}"
            );
        }
    }

    #[test]
    fn unbalanced_signed_count() {
        // single clause on distinct variables: Σ over the 7 satisfying
        // assignments of (−1)^{false occ} 2^{true occ} = 8 − 12 + 6 = 2
        let inst = sat_to_perm_pm1(&cnf(3, &[&[1, 2, 3]])).unwrap();
        assert_eq!(inst.digraph.vertex_count(), 19);
        assert_eq!(
            permanent_of_digraph(&inst.digraph, PermMethod::CycleCover).unwrap(),
            rat(2)
        );
    }

    #[test]
    fn balanced_identity_small() {
        // balanced pair of tautologies: #Sat = 2, i = 3 → per = −16
        let f = cnf(1, &[&[1, -1, -1], &[-1, 1, 1]]);
        assert!(is_balanced(&f));
        let inst = sat_to_perm_pm1(&f).unwrap();
        assert_eq!(inst.occurrence_count, 3);
        assert_eq!(
            permanent_of_digraph(&inst.digraph, PermMethod::CycleCover).unwrap(),
            rat(-16)
        );
        // size bookkeeping: 2n + 13m vertices, 3n + 44m arcs
        assert_eq!(inst.digraph.vertex_count(), 2 + 26);
        assert_eq!(inst.digraph.arc_count(), 3 + 88);
    }

    #[test]
    fn width_must_be_three() {
        assert!(sat_to_perm_pm1(&cnf(2, &[&[1, 2]])).is_err());
        assert!(balance_literals(&cnf(1, &[&[1]])).is_err());
    }

    #[test]
    fn interpolation_examples() {
        let mut d = Digraph::new(1);
        d.add_arc(0, 0, rat(-1)).unwrap();
        let inst = PermInstance {
            digraph: d,
            neg_loop_arcs: vec![0],
            occurrence_count: 0,
        };
        let v = perm_value_by_interpolation(&inst, |g| {
            permanent_of_digraph(g, PermMethod::Naive)
        })
        .unwrap();
        assert_eq!(v, rat(-1));

        // no −1 loops: one call, passed through
        let mut calls = 0;
        let mut plain = Digraph::new(2);
        plain.add_arc(0, 1, rat(1)).unwrap();
        plain.add_arc(1, 0, rat(1)).unwrap();
        let inst = PermInstance {
            digraph: plain,
            neg_loop_arcs: vec![],
            occurrence_count: 0,
        };
        let v = perm_value_by_interpolation(&inst, |g| {
            calls += 1;
            permanent_of_digraph(g, PermMethod::Naive)
        })
        .unwrap();
        assert_eq!((v, calls), (rat(1), 1));

        // ±1 digraph with two −1 loops agrees with the direct permanent
        let mut d = Digraph::new(3);
        d.add_arc(0, 0, rat(-1)).unwrap();
        d.add_arc(1, 1, rat(-1)).unwrap();
        d.add_arc(2, 2, rat(1)).unwrap();
        d.add_arc(0, 1, rat(1)).unwrap();
        d.add_arc(1, 0, rat(1)).unwrap();
        d.add_arc(1, 2, rat(1)).unwrap();
        d.add_arc(2, 1, rat(1)).unwrap();
        let direct = permanent_of_digraph(&d, PermMethod::Naive).unwrap();
        let inst = PermInstance {
            digraph: d,
            neg_loop_arcs: vec![0, 1],
            occurrence_count: 0,
        };
        let mut calls = 0;
        let v = perm_value_by_interpolation(&inst, |g| {
            calls += 1;
            permanent_of_digraph(g, PermMethod::Naive)
        })
        .unwrap();
        assert_eq!((v, calls), (direct, 3));

        // an unlisted −1 arc is rejected
        let mut d = Digraph::new(1);
        d.add_arc(0, 0, rat(-1)).unwrap();
        let inst = PermInstance {
            digraph: d,
            neg_loop_arcs: vec![],
            occurrence_count: 0,
        };
        assert!(perm_value_by_interpolation(&inst, |g| {
            permanent_of_digraph(g, PermMethod::Naive)
        })
        .is_err());
    }

    #[test]
    fn weight_expansion_preserves_permanent() {
        let mut d = Digraph::new(2);
        d.add_arc(0, 1, rat(2)).unwrap();
        d.add_arc(1, 0, rat(1)).unwrap();
        let e = expand_weights_to_01(&d).unwrap();
        assert!(e.arcs().iter().all(|(_, _, w)| *w == rat(1)));
        assert_eq!(permanent_of_digraph(&e, PermMethod::Naive).unwrap(), rat(2));

        let mut d = Digraph::new(2);
        d.add_arc(0, 1, rat(5)).unwrap();
        d.add_arc(1, 0, rat(1)).unwrap();
        d.add_arc(0, 0, rat(0)).unwrap();
        let e = expand_weights_to_01(&d).unwrap();
        assert_eq!(permanent_of_digraph(&e, PermMethod::Naive).unwrap(), rat(5));

        // weight on a loop
        let mut d = Digraph::new(1);
        d.add_arc(0, 0, rat(3)).unwrap();
        let e = expand_weights_to_01(&d).unwrap();
        assert_eq!(permanent_of_digraph(&e, PermMethod::Naive).unwrap(), rat(3));

        let mut plain = Digraph::new(2);
        plain.add_arc(0, 1, rat(1)).unwrap();
        plain.add_arc(1, 0, rat(1)).unwrap();
        assert_eq!(expand_weights_to_01(&plain).unwrap(), plain);

        let mut bad = Digraph::new(1);
        bad.add_arc(0, 0, rat(-2)).unwrap();
        assert!(expand_weights_to_01(&bad).is_err());
        let mut frac = Digraph::new(1);
        frac.add_arc(0, 0, crate::exactmath::ratio(1, 2)).unwrap();
        assert!(expand_weights_to_01(&frac).is_err());
    }

    #[test]
    fn mod3_decision() {
        // balanced and unsatisfiable: x and ¬x both forced
        let unsat = cnf(1, &[&[1, 1, 1], &[-1, -1, -1]]);
        assert_eq!(count_sat(&unsat).unwrap(), Int::from(0));
        assert_eq!(
            unique_sat_mod3(&unsat, true).unwrap(),
            SatVerdict::Unsatisfiable
        );

        // two satisfying assignments break the promise
        let two = cnf(1, &[&[1, -1, -1], &[-1, 1, 1]]);
        assert_eq!(count_sat(&two).unwrap(), Int::from(2));
        assert!(matches!(
            unique_sat_mod3(&two, true),
            Err(Error::PromiseViolation)
        ));
        assert_eq!(
            unique_sat_mod3(&two, false).unwrap(),
            SatVerdict::Satisfiable
        );

        assert!(unique_sat_mod3(&cnf(1, &[&[1, 1, 1]]), true).is_err());
    }

    #[test]
    fn mod3_unique_formula() {
        // (x∨x∨x) balanced by three pads keeps its single assignment
        let f = balance_literals(&cnf(1, &[&[1, 1, 1]])).unwrap();
        assert_eq!(count_sat(&f).unwrap(), Int::from(1));
        assert_eq!(unique_sat_mod3(&f, true).unwrap(), SatVerdict::Satisfiable);
    }

    #[test]
    fn end_to_end_balanced_identity() {
        let f = cnf(2, &[&[1, -2, 2]]);
        let b = balance_literals(&f).unwrap();
        let inst = sat_to_perm_pm1(&b).unwrap();
        let per = permanent_of_digraph(&inst.digraph, PermMethod::CycleCover).unwrap();
        let mut expect = Rational::from(count_sat(&f).unwrap());
        for _ in 0..inst.occurrence_count {
            expect *= rat(-2);
        }
        assert_eq!(per, expect);
    }

    #[test]
    fn naive_permanent_on_matrix_of_demo() {
        // the demo graphs have no parallel arcs, so the matrix permanent
        // agrees with cycle-cover enumeration
        let d = equality_gadget_demo(false, false);
        let m = crate::oracles::digraph_to_matrix(&d);
        assert_eq!(permanent_naive(&m).unwrap(), rat(2));
    }
}
