//! Interpolation and extraction pipelines: recovering whole coefficient
//! lists — and from them counts — out of point evaluations of Z.
//!
//! Each `coeffs_by_*` pipeline inflates the input graph by a family of
//! gadgets whose shifted weights are pairwise distinct, queries a point
//! oracle on every inflated graph, strips the per-edge prefactors, and
//! Lagrange-interpolates the coefficients of v ↦ Z(G;q,v). The extraction
//! routines then read counting answers (cut distributions, terminal
//! mincuts, colourings, reliability) out of such polynomials.
//!
//! Oracles are plain callables `&Multigraph -> Result<Rational>`,
//! evaluating Z (or Z₀) at the pipeline's fixed point; they must be pure.

use std::collections::BTreeMap;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{
    lagrange_interpolate, pow_usize, rat, rat_abs, shift_substitute, to_int, Int, Poly, Rational,
};
use crate::inflate::{
    bundle_gadget, generate_theta_sets, generate_wump_sequences, inflate, path_gadget, theta_graph,
    theta_shift, wump_graph, wump_shift, ThetaSpec,
};
use crate::oracles::{tutte_subset_sum, z_subset_sum_poly, CutCount, ZVariant};
use crate::structures::{
    edge_surgery, EdgeId, Multigraph, SurgeryKind, TerminalTriple, TwoTerminalGraph,
};

/// One oracle call of a coefficient-recovery pipeline: evaluate the fixed
/// point on `graph`, divide by `divisor`, and the quotient is the target
/// polynomial's value at `node`.
#[derive(Clone, Debug)]
pub struct PlannedQuery {
    pub graph: Multigraph,
    pub divisor: Rational,
    pub node: Rational,
}

fn run_plan<F>(plan: Vec<PlannedQuery>, mut oracle: F) -> Result<Poly>
where
    F: FnMut(&Multigraph) -> Result<Rational>,
{
    let mut points = Vec::with_capacity(plan.len());
    for query in plan {
        let value = oracle(&query.graph)?;
        points.push((query.node, value / query.divisor));
    }
    lagrange_interpolate(&points)
}

/// The query plan behind [`coeffs_by_thickening`]: the k-thickenings
/// G_k for k = 1..m+1 with nodes w_k = (1+w)^k − 1 and no prefactor.
pub fn thickening_query_plan(
    g: &Multigraph,
    q: &Rational,
    w: &Rational,
) -> Result<Vec<PlannedQuery>> {
    if w.is_zero() || *w == rat(-1) || *w == rat(-2) {
        return Err(Error::UnsupportedPoint(
            "thickening interpolation needs w ∉ {0, −1, −2}".into(),
        ));
    }
    if q.is_one() {
        return Err(Error::UnsupportedPoint(
            "thickening interpolation needs q ≠ 1".into(),
        ));
    }
    let m = g.edge_count();
    (1..=m + 1)
        .map(|k| {
            Ok(PlannedQuery {
                graph: inflate(g, &bundle_gadget(k)?)?,
                divisor: Rational::one(),
                node: pow_usize(&(Rational::one() + w), k) - Rational::one(),
            })
        })
        .collect()
}

/// Coefficients of v ↦ Z(G;q,v) recovered from an oracle for the fixed
/// point (q,w) evaluated on the thickenings of G.
pub fn coeffs_by_thickening<F>(
    g: &Multigraph,
    q: &Rational,
    w: &Rational,
    oracle: F,
) -> Result<Poly>
where
    F: FnMut(&Multigraph) -> Result<Rational>,
{
    run_plan(thickening_query_plan(g, q, w)?, oracle)
}

/// Smallest-k thickened 2-stretch that moves a degenerate (q,w) to an
/// admissible weight: each edge becomes two k-bundles in series.
fn theta_preprocessing(
    q: &Rational,
    w: &Rational,
) -> Result<(TwoTerminalGraph, Rational, Rational)> {
    for k in 1..=64usize {
        let wk = pow_usize(&(Rational::one() + w), k) - Rational::one();
        if wk.is_zero() {
            continue;
        }
        let Ok(two) = theta_shift(q, &wk, &ThetaSpec::new(vec![2])?) else {
            continue;
        };
        let we = two.shifted_weight;
        if we.is_zero() || *q == -&we || *q == rat(-2) * &we {
            continue;
        }
        let spine = path_gadget(2)?;
        let graph = inflate(&spine.graph, &bundle_gadget(k)?)?;
        let gamma = TwoTerminalGraph::new(graph, spine.left, spine.right)?;
        return Ok((gamma, two.per_edge_factor, we));
    }
    Err(Error::ConstructionError(
        "thickened 2-stretch preprocessing cannot exit the degenerate set".into(),
    ))
}

/// The query plan behind [`coeffs_by_theta`]: theta inflations (composed
/// with the degenerate-point preprocessing gadget when q ∈ {−w, −2w}).
pub fn theta_query_plan(g: &Multigraph, q: &Rational, w: &Rational) -> Result<Vec<PlannedQuery>> {
    if q.is_zero() || q.is_one() {
        return Err(Error::UnsupportedPoint(
            "theta interpolation needs q ∉ {0, 1}".into(),
        ));
    }
    if w.is_zero() {
        return Err(Error::UnsupportedPoint(
            "theta interpolation needs w ≠ 0".into(),
        ));
    }
    for (bq, bw) in [(4, -2), (2, -1), (2, -2)] {
        if *q == rat(bq) && *w == rat(bw) {
            return Err(Error::UnsupportedPoint(format!(
                "theta interpolation is undefined at (q, w) = ({bq}, {bw})"
            )));
        }
    }
    let m = g.edge_count();
    let (pre, w_eff) = if *q == -w || *q == rat(-2) * w {
        let (gamma, factor, we) = theta_preprocessing(q, w)?;
        (Some((gamma, factor)), we)
    } else {
        (None, w.clone())
    };
    let specs = generate_theta_sets(q, &w_eff, m)?;
    let mut plan = Vec::with_capacity(specs.len());
    for spec in &specs {
        let shift = theta_shift(q, &w_eff, spec)?;
        let theta = theta_graph(spec);
        let (gadget, pre_divisor) = match &pre {
            None => (theta, Rational::one()),
            Some((gamma, factor)) => {
                let sum_s: usize = spec.path_lengths.iter().sum();
                let composed = inflate(&theta.graph, gamma)?;
                (
                    TwoTerminalGraph::new(composed, theta.left, theta.right)?,
                    pow_usize(factor, m * sum_s),
                )
            }
        };
        plan.push(PlannedQuery {
            graph: inflate(g, &gadget)?,
            divisor: pow_usize(&shift.per_edge_factor, m) * pre_divisor,
            node: shift.shifted_weight,
        });
    }
    Ok(plan)
}

/// Coefficients of v ↦ Z(G;q,v) recovered via theta inflations; handles
/// the q ∈ {−w, −2w} degeneracies by preprocessing, and rejects the three
/// points where no preprocessing can succeed.
pub fn coeffs_by_theta<F>(g: &Multigraph, q: &Rational, w: &Rational, oracle: F) -> Result<Poly>
where
    F: FnMut(&Multigraph) -> Result<Rational>,
{
    run_plan(theta_query_plan(g, q, w)?, oracle)
}

/// The query plan behind [`coeffs_by_wump`]: wump inflations at q = 0,
/// with a stretch (w < 0) or parallel-2-paths (0 < w ≤ 9) preprocessing
/// step that moves the weight into (−1,0) ∪ (9,∞).
pub fn wump_query_plan(g: &Multigraph, w: &Rational) -> Result<Vec<PlannedQuery>> {
    if w.is_zero() {
        return Err(Error::UnsupportedPoint(
            "wump interpolation needs w ≠ 0".into(),
        ));
    }
    let m = g.edge_count();
    let nine = rat(9);
    let (pre, w_eff): (Option<(TwoTerminalGraph, Rational)>, Rational) = if w.is_negative() {
        let mut k = 1usize;
        while rat(k as i64) <= rat_abs(w) {
            k += 1;
        }
        if k == 1 {
            (None, w.clone())
        } else {
            let factor = rat(k as i64) * pow_usize(w, k - 1);
            (Some((path_gadget(k)?, factor)), w / rat(k as i64))
        }
    } else if *w <= nine {
        let mut k = 1usize;
        let shifted = loop {
            let cand = pow_usize(&(Rational::one() + w / rat(2)), k) - Rational::one();
            if cand > nine {
                break cand;
            }
            k += 1;
        };
        let spine = bundle_gadget(k)?;
        let graph = inflate(&spine.graph, &path_gadget(2)?)?;
        let gamma = TwoTerminalGraph::new(graph, spine.left, spine.right)?;
        (Some((gamma, pow_usize(&(rat(2) * w), k))), shifted)
    } else {
        (None, w.clone())
    };
    let specs = generate_wump_sequences(&w_eff, m)?;
    let mut plan = Vec::with_capacity(specs.len());
    for spec in &specs {
        let shift = wump_shift(&w_eff, spec)?;
        let wump = wump_graph(spec);
        let (gadget, pre_divisor) = match &pre {
            None => (wump, Rational::one()),
            Some((gamma, factor)) => {
                let hump_edges = wump.graph.edge_count();
                let composed = inflate(&wump.graph, gamma)?;
                (
                    TwoTerminalGraph::new(composed, wump.left, wump.right)?,
                    pow_usize(factor, m * hump_edges),
                )
            }
        };
        plan.push(PlannedQuery {
            graph: inflate(g, &gadget)?,
            divisor: pow_usize(&shift.per_edge_factor, m) * pre_divisor,
            node: shift.shifted_weight,
        });
    }
    Ok(plan)
}

/// Coefficients of v ↦ Z₀(G;0,v) recovered from a Z₀-at-q=0 oracle via
/// wump inflations.
pub fn coeffs_by_wump<F>(g: &Multigraph, w: &Rational, oracle: F) -> Result<Poly>
where
    F: FnMut(&Multigraph) -> Result<Rational>,
{
    run_plan(wump_query_plan(g, w)?, oracle)
}

/// Cut-size distribution and maximum cut from the Ising point q = 2.
///
/// Z(G;2,v) = Σ_c N_c (1+v)^{m−c}, where N_c counts the spin assignments
/// with cut size c; rebasing the polynomial to powers of (1+v) reads off
/// the whole distribution. A subset and its complement are counted
/// separately, so the distribution sums to 2^n.
pub fn maxcut_from_ising(g: &Multigraph) -> Result<(BTreeMap<usize, Int>, CutCount)> {
    let m = g.edge_count();
    let p = z_subset_sum_poly(g, &rat(2), &[], ZVariant::Z)?;
    let rebased = shift_substitute(&p, &rat(-1));
    let mut distribution = BTreeMap::new();
    let mut best: Option<CutCount> = None;
    for c in 0..=m {
        let n_c = rebased.coeff(m - c);
        if n_c.is_zero() {
            continue;
        }
        let count = to_int(&n_c)?;
        distribution.insert(c, count.clone());
        best = Some(CutCount { size: c, count });
    }
    let best = best.ok_or_else(|| {
        Error::ConstructionError("cut distribution unexpectedly empty".into())
    })?;
    Ok((distribution, best))
}

/// Number of minimum 3-terminal cuts, extracted from the two-class
/// polynomial of the graph with a weight-−1 triangle added between the
/// terminals: after dividing by Q = (q−1)(q−2), the first nonzero
/// coefficient d_{m−c} (scanning c upward from 0) is the mincut count.
pub fn tmc3_from_z0(t: &TerminalTriple, q: &Rational) -> Result<Int> {
    if *q == rat(1) || *q == rat(2) {
        return Err(Error::UnsupportedPoint(
            "terminal-mincut extraction needs q ∉ {1, 2}".into(),
        ));
    }
    let g = &t.graph;
    if !g.is_simple() {
        return Err(Error::InvalidInput(
            "terminal-mincut extraction requires a simple graph".into(),
        ));
    }
    if !g.is_connected() || g.vertex_count() == 0 {
        return Err(Error::InvalidInput(
            "terminal-mincut extraction requires a connected graph".into(),
        ));
    }
    let m = g.edge_count();
    let [a, b, c] = t.terminals;
    let mut augmented = g.clone();
    let t_edges = [
        augmented.add_edge(a, b)?,
        augmented.add_edge(b, c)?,
        augmented.add_edge(a, c)?,
    ];
    let p = z_subset_sum_poly(&augmented, q, &t_edges, ZVariant::Z0)?;
    let big_q = (q - rat(1)) * (q - rat(2));
    for cut in 0..=m {
        let d = p.coeff(m - cut);
        if !d.is_zero() {
            return to_int(&(d / &big_q));
        }
    }
    Ok(Int::zero())
}

/// Removes three fixed-weight −1 edges from the two-class polynomial by
/// delete/contract expansion, 3-stretching every one of the 8 resulting
/// graphs to simplicity so that only simple single-weight oracle calls
/// remain (8 per interpolation node).
///
/// The oracle receives a simple graph and a weight w′ and must return
/// Z₀(·;q,w′) with every edge at w′. Deleting an edge that is a bridge of
/// the intermediate graph picks up a factor q.
pub fn eliminate_t_edges<F>(
    g: &Multigraph,
    t: [EdgeId; 3],
    q: &Rational,
    mut oracle: F,
) -> Result<Poly>
where
    F: FnMut(&Multigraph, &Rational) -> Result<Rational>,
{
    if t[0] == t[1] || t[1] == t[2] || t[0] == t[2] {
        return Err(Error::InvalidInput("the three edges must be distinct".into()));
    }
    for &e in &t {
        g.endpoints(e)?;
        if g.is_bridge(e)? {
            return Err(Error::InvalidInput(format!(
                "edge {e} is a bridge; its deletion term would disconnect the graph"
            )));
        }
    }
    let m = g.edge_count();
    let mut pieces = Vec::with_capacity(8);
    for mask in 0..8u32 {
        let mut work = g.clone();
        let mut ids = [Some(t[0]), Some(t[1]), Some(t[2])];
        let mut q_pow = 0usize;
        for i in 0..3 {
            let e = ids[i].expect("surgeries only remove the processed edge");
            let contract = mask & (1 << i) != 0;
            if !contract && work.is_bridge(e)? {
                q_pow += 1;
            }
            let kind = if contract { SurgeryKind::Contract } else { SurgeryKind::Delete };
            let result = edge_surgery(&work, e, kind)?;
            for slot in ids.iter_mut().skip(i + 1) {
                *slot = result.edge_map[slot.expect("tracked")];
            }
            work = result.graph;
        }
        debug_assert_eq!(work.edge_count(), m - 3);
        let stretched = inflate(&work, &path_gadget(3)?)?;
        debug_assert!(stretched.is_simple());
        pieces.push((mask.count_ones() % 2 == 1, q_pow, stretched));
    }
    let needed = m - 2;
    let mut points = Vec::with_capacity(needed);
    let mut candidate = 0i64;
    while points.len() < needed {
        candidate += 1;
        let wp = rat(candidate);
        if !q.is_zero() && *q == rat(-2) * &wp {
            continue;
        }
        let (node, factor) = if q.is_zero() {
            (&wp / rat(3), rat(3) * pow_usize(&wp, 2))
        } else {
            let s = theta_shift(q, &wp, &ThetaSpec::new(vec![3])?)?;
            (s.shifted_weight, s.per_edge_factor)
        };
        let mut total = Rational::zero();
        for (negate, q_pow, stretched) in &pieces {
            let value = oracle(stretched, &wp)?;
            let term = value / pow_usize(&factor, m - 3) * pow_usize(q, *q_pow);
            if *negate {
                total -= term;
            } else {
                total += term;
            }
        }
        points.push((node, total));
    }
    lagrange_interpolate(&points)
}

/// G joined with a complete graph on `extra` fresh vertices, each adjacent
/// to everything.
pub fn join_complete(g: &Multigraph, extra: usize) -> Result<Multigraph> {
    let n = g.vertex_count();
    let mut out = Multigraph::new(n + extra);
    for &(u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for a in n..n + extra {
        for b in 0..a {
            out.add_edge(b, a)?;
        }
    }
    Ok(out)
}

/// χ(G;3) from an oracle for G′ ↦ χ(G′;q), using χ(G+K_i;q) =
/// q(q−1)···(q−i+1)·χ(G;q−i): integer q ≥ 3 divides a single join query
/// by the falling factorial; other q interpolate the degree-≤ n chromatic
/// polynomial through the points q, q−1, …, q−n and evaluate at 3.
pub fn chromatic3_via_linial<F>(g: &Multigraph, q: &Rational, mut oracle: F) -> Result<Rational>
where
    F: FnMut(&Multigraph) -> Result<Rational>,
{
    if *q == rat(0) || *q == rat(1) || *q == rat(2) {
        return Err(Error::UnsupportedPoint(
            "the falling-factorial prefactor vanishes for q ∈ {0, 1, 2}".into(),
        ));
    }
    let falling = |count: usize| -> Rational {
        (0..count).fold(Rational::one(), |acc, t| acc * (q - rat(t as i64)))
    };
    if q.is_integer() && *q >= rat(3) {
        let i = (q.to_integer() - Int::from(3))
            .to_usize()
            .ok_or_else(|| Error::InvalidInput("q too large for the direct route".into()))?;
        let value = oracle(&join_complete(g, i)?)?;
        Ok(value / falling(i))
    } else {
        let n = g.vertex_count();
        let mut points = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let prefactor = falling(i);
            if prefactor.is_zero() {
                return Err(Error::UnsupportedPoint(
                    "the falling-factorial prefactor vanishes on an interpolation node".into(),
                ));
            }
            let value = oracle(&join_complete(g, i)?)?;
            points.push((q - rat(i as i64), value / prefactor));
        }
        Ok(lagrange_interpolate(&points)?.eval(&rat(3)))
    }
}

/// All-terminal reliability from a single Tutte evaluation:
/// R(G;p) = p^{m−n+1}(1−p)^{n−1}·T(G;1,1/p) for connected G, where p is
/// the independent edge failure probability.
pub fn reliability_from_tutte(g: &Multigraph, p: &Rational) -> Result<Rational> {
    if g.vertex_count() == 0 || !g.is_connected() {
        return Err(Error::InvalidInput(
            "reliability extraction requires a connected graph".into(),
        ));
    }
    if !(p > &Rational::zero() && p < &Rational::one()) {
        return Err(Error::RangeError(
            "edge failure probability must lie strictly between 0 and 1".into(),
        ));
    }
    let (n, m) = (g.vertex_count(), g.edge_count());
    let tutte = tutte_subset_sum(g, &rat(1), &(Rational::one() / p))?;
    Ok(pow_usize(p, m + 1 - n) * pow_usize(&(Rational::one() - p), n - 1) * tutte)
}
