//! Graph inflations — stretch, thickening, theta, wump — and the exact
//! weight-shift algebra attached to each.
//!
//! Inflating every edge of G by a two-terminal gadget H multiplies the
//! partition function by a per-edge prefactor and moves the edge weight to
//! a shifted value; the generators at the end manufacture families of
//! gadgets whose shifted weights are pairwise distinct, which is what the
//! interpolation pipelines need.

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{pow_usize, rat, rat_abs, Rational};
use crate::structures::{Multigraph, TwoTerminalGraph};

/// A weight shift: evaluating on the inflated graph equals
/// `per_edge_factor^{m(G)}` times the evaluation on G at `shifted_weight`
/// (times a global prefactor where the owning identity has one).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ShiftResult {
    pub shifted_weight: Rational,
    pub per_edge_factor: Rational,
}

/// Path lengths of a theta gadget: two terminals joined by internally
/// disjoint paths, one per listed length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ThetaSpec {
    pub path_lengths: Vec<usize>,
}

impl ThetaSpec {
    pub fn new(mut path_lengths: Vec<usize>) -> Result<Self> {
        if path_lengths.is_empty() {
            return Err(Error::InvalidInput("theta spec must be nonempty".into()));
        }
        if path_lengths.iter().any(|&s| s == 0) {
            return Err(Error::InvalidInput("theta path lengths must be positive".into()));
        }
        path_lengths.sort_unstable();
        if path_lengths.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::InvalidInput("theta path lengths must be distinct".into()));
        }
        Ok(ThetaSpec { path_lengths })
    }
}

/// Hump path lengths of a wump gadget: the i-th hump (1-indexed) is i
/// parallel paths of `path_lengths[i-1]` edges between junction i−1 and
/// junction i.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct WumpSpec {
    pub path_lengths: Vec<usize>,
}

impl WumpSpec {
    pub fn new(path_lengths: Vec<usize>) -> Result<Self> {
        if path_lengths.is_empty() {
            return Err(Error::InvalidInput("wump spec must be nonempty".into()));
        }
        if path_lengths.iter().any(|&s| s == 0) {
            return Err(Error::InvalidInput("wump path lengths must be positive".into()));
        }
        Ok(WumpSpec { path_lengths })
    }
}

/// Replace every edge of `g` by a fresh copy of `h`, identifying the left
/// terminal with the lower endpoint (the canonical orientation). For a
/// loop both terminals land on the one vertex. Original vertices keep
/// their ids; each copy's internal vertices are appended in order.
pub fn inflate(g: &Multigraph, h: &TwoTerminalGraph) -> Result<Multigraph> {
    if h.left == h.right {
        return Err(Error::InvalidInput("gadget terminals must be distinct".into()));
    }
    let hn = h.graph.vertex_count();
    let internal: Vec<usize> = (0..hn).filter(|&v| v != h.left && v != h.right).collect();
    let mut out = Multigraph::new(g.vertex_count() + g.edge_count() * internal.len());
    let mut next = g.vertex_count();
    for &(u, v) in g.edges() {
        let (lo, hi) = (u.min(v), u.max(v));
        let mut map = vec![0usize; hn];
        map[h.left] = lo;
        map[h.right] = hi;
        for &x in &internal {
            map[x] = next;
            next += 1;
        }
        for &(a, b) in h.graph.edges() {
            out.add_edge(map[a], map[b])?;
        }
    }
    Ok(out)
}

/// A path of k edges as a two-terminal gadget; inflation = k-stretch.
pub fn path_gadget(k: usize) -> Result<TwoTerminalGraph> {
    if k == 0 {
        return Err(Error::InvalidInput("path gadget needs at least one edge".into()));
    }
    let mut g = Multigraph::new(k + 1);
    for i in 0..k {
        let (a, b) = (if i == 0 { 0 } else { i + 1 }, if i == k - 1 { 1 } else { i + 2 });
        g.add_edge(a, b)?;
    }
    TwoTerminalGraph::new(g, 0, 1)
}

/// A bundle of k parallel edges; inflation = k-thickening.
pub fn bundle_gadget(k: usize) -> Result<TwoTerminalGraph> {
    if k == 0 {
        return Err(Error::InvalidInput("bundle gadget needs at least one edge".into()));
    }
    let mut g = Multigraph::new(2);
    for _ in 0..k {
        g.add_edge(0, 1)?;
    }
    TwoTerminalGraph::new(g, 0, 1)
}

/// Terminals 0 and 1 joined by one internally disjoint path per length.
pub fn theta_graph(spec: &ThetaSpec) -> TwoTerminalGraph {
    let n = 2 + spec.path_lengths.iter().map(|&s| s - 1).sum::<usize>();
    let mut g = Multigraph::new(n);
    let mut next = 2;
    for &s in &spec.path_lengths {
        let mut prev = 0;
        for i in 0..s {
            let to = if i == s - 1 {
                1
            } else {
                next += 1;
                next - 1
            };
            g.add_edge(prev, to).expect("in range");
            prev = to;
        }
    }
    TwoTerminalGraph::new(g, 0, 1).expect("two terminals")
}

/// Humps concatenated left to right; terminals are the outer junctions.
pub fn wump_graph(spec: &WumpSpec) -> TwoTerminalGraph {
    let l = spec.path_lengths.len();
    let n = (l + 1) + spec
        .path_lengths
        .iter()
        .enumerate()
        .map(|(idx, &s)| (idx + 1) * (s - 1))
        .sum::<usize>();
    let mut g = Multigraph::new(n);
    let mut next = 1;
    let mut left = 0;
    for (idx, &s) in spec.path_lengths.iter().enumerate() {
        let paths = idx + 1;
        let right = next + paths * (s - 1);
        for _ in 0..paths {
            let mut prev = left;
            for i in 0..s {
                let to = if i == s - 1 {
                    right
                } else {
                    next += 1;
                    next - 1
                };
                g.add_edge(prev, to).expect("in range");
                prev = to;
            }
        }
        next = right + 1;
        left = right;
    }
    TwoTerminalGraph::new(g, 0, left).expect("two terminals")
}

/// Weight shift of the theta inflation:
/// Z(G⊗Θ_S; q, w) = factor^{m(G)} · Z(G; q, w_S) with
/// w_S = −1 + Π_s (1 + q/((1+q/w)^s − 1)) and
/// factor = q^{−|S|} · Π_s ((q+w)^s − w^s).
pub fn theta_shift(q: &Rational, w: &Rational, spec: &ThetaSpec) -> Result<ShiftResult> {
    if w.is_zero() {
        return Err(Error::DegenerateShift("theta shift needs w ≠ 0".into()));
    }
    if q.is_zero() || *q == rat(-2) * w {
        return Err(Error::DegenerateShift("theta shift needs q ∉ {0, −2w}".into()));
    }
    let ratio = Rational::one() + q / w;
    let mut shifted = Rational::one();
    let mut factor = Rational::one();
    for &s in &spec.path_lengths {
        let denom = pow_usize(&ratio, s) - Rational::one();
        if denom.is_zero() {
            return Err(Error::DegenerateShift(format!(
                "theta shift undefined: (1+q/w)^{s} = 1"
            )));
        }
        shifted *= Rational::one() + q / denom;
        factor *= (pow_usize(&(q + w), s) - pow_usize(w, s)) / q;
    }
    Ok(ShiftResult {
        shifted_weight: shifted - Rational::one(),
        per_edge_factor: factor,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReplacementKind {
    Path,
    Bundle,
}

/// Series and parallel compositions of weighted edges.
///
/// A path at q = 0 composes as 1/w′ = Σ 1/wᵢ with prefactor
/// C_P = (1/w′)·Π wᵢ; a bundle composes at any q as w′ = −1 + Π(1+wᵢ)
/// with prefactor 1. A uniform path at general q routes through the theta
/// shift with S = {k}.
pub fn series_parallel_shift(
    kind: ReplacementKind,
    weights: &[Rational],
    q: &Rational,
) -> Result<ShiftResult> {
    if weights.is_empty() {
        return Err(Error::InvalidInput("replacement needs at least one edge".into()));
    }
    match kind {
        ReplacementKind::Bundle => {
            let mut prod = Rational::one();
            for w in weights {
                prod *= Rational::one() + w;
            }
            Ok(ShiftResult {
                shifted_weight: prod - Rational::one(),
                per_edge_factor: Rational::one(),
            })
        }
        ReplacementKind::Path => {
            if q.is_zero() {
                let mut inv_sum = Rational::zero();
                let mut prod = Rational::one();
                for w in weights {
                    if w.is_zero() {
                        return Err(Error::DegenerateShift(
                            "path composition at q = 0 needs nonzero weights".into(),
                        ));
                    }
                    inv_sum += Rational::one() / w;
                    prod *= w;
                }
                if inv_sum.is_zero() {
                    return Err(Error::DegenerateShift(
                        "path composition at q = 0: reciprocal weights cancel".into(),
                    ));
                }
                let shifted = Rational::one() / &inv_sum;
                Ok(ShiftResult {
                    per_edge_factor: inv_sum * prod,
                    shifted_weight: shifted,
                })
            } else {
                let w0 = &weights[0];
                if weights.iter().any(|w| w != w0) {
                    return Err(Error::DegenerateShift(
                        "path composition at q ≠ 0 requires uniform weights".into(),
                    ));
                }
                theta_shift(q, w0, &ThetaSpec::new(vec![weights.len()])?)
            }
        }
    }
}

/// Weight shift of the wump inflation at q = 0:
/// Z₀(G⊗W_S; 0, w) = C_S^{m(G)} · Z₀(G; 0, w_S) with
/// 1/w_S = Σᵢ 1/((1+w/sᵢ)^i − 1) and
/// C_S = (1/w_S) · Πᵢ w^{(sᵢ−1)i} ((w+sᵢ)^i − sᵢ^i).
pub fn wump_shift(w: &Rational, spec: &WumpSpec) -> Result<ShiftResult> {
    if w.is_zero() {
        return Err(Error::DegenerateShift("wump shift needs w ≠ 0".into()));
    }
    let mut inv_sum = Rational::zero();
    let mut prod = Rational::one();
    for (idx, &s) in spec.path_lengths.iter().enumerate() {
        let i = idx + 1;
        let s_rat = rat(s as i64);
        let hump = pow_usize(&(Rational::one() + w / &s_rat), i) - Rational::one();
        if hump.is_zero() {
            return Err(Error::DegenerateShift(format!(
                "wump shift undefined: (1+w/{s})^{i} = 1"
            )));
        }
        inv_sum += Rational::one() / hump;
        prod *= pow_usize(w, (s - 1) * i) * (pow_usize(&(w + &s_rat), i) - pow_usize(&s_rat, i));
    }
    if inv_sum.is_zero() {
        return Err(Error::DegenerateShift(
            "wump shift undefined: hump weights cancel in series".into(),
        ));
    }
    Ok(ShiftResult {
        shifted_weight: Rational::one() / &inv_sum,
        per_edge_factor: inv_sum * prod,
    })
}

fn floor_log2(m: usize) -> usize {
    (usize::BITS - 1 - m.leading_zeros()) as usize
}

fn ceil_log2(m: usize) -> usize {
    floor_log2(m) + usize::from(!m.is_power_of_two())
}

/// m+1 theta specs whose shifted weights at (q, w) are pairwise distinct.
///
/// All path lengths are even, so (1+q/w)^s depends only on b = |1+q/w|;
/// the base length s₀ is the first even point where f(s) = 1 + q/(b^s−1)
/// has settled on the sign of its monotone limit, and the gap Δ is the
/// smallest even integer > 6 passing the separation inequalities. Set i
/// spreads the binary digits of i across Δ·⌈log m⌉-spaced slots.
/// Distinctness is re-verified exactly on the produced shifts.
pub fn generate_theta_sets(q: &Rational, w: &Rational, m: usize) -> Result<Vec<ThetaSpec>> {
    if w.is_zero() || q.is_zero() || q.is_one() || *q == -w || *q == rat(-2) * w {
        return Err(Error::RangeError(
            "theta set generation requires w ≠ 0 and q ∉ {0, 1, −w, −2w}".into(),
        ));
    }
    let b = rat_abs(&(Rational::one() + q / w));
    let one = Rational::one();
    let limit = if b > one { one.clone() } else { &one - q };
    let mut s0 = None;
    let mut s = 2usize;
    while s <= 10_000 {
        let f = &one + q / (pow_usize(&b, s) - &one);
        if !f.is_zero() && f.is_positive() == limit.is_positive() {
            s0 = Some(s);
            break;
        }
        s += 2;
    }
    let Some(s0) = s0 else {
        return Err(Error::ConstructionError(
            "no admissible base length for the theta family".into(),
        ));
    };
    let specs: Vec<ThetaSpec> = if m == 0 {
        vec![ThetaSpec::new(vec![s0])?]
    } else {
        let digits = floor_log2(m) + 1;
        let spread = ceil_log2(m).max(1);
        // smallest even Δ > 6 satisfying the separation inequalities,
        // with |q−1| conservatively clamped below by 1 on the small side
        let q_gap = rat_abs(&(q - &one)).max(one.clone());
        let lhs = rat(8) * rat((m * m) as i64) * pow_usize(&q_gap, 1 + spread);
        let q_abs = rat_abs(q);
        let mut delta = 8usize;
        loop {
            let rhs = if b > one {
                &q_abs * pow_usize(&b, delta * spread)
            } else {
                &q_abs
                    * pow_usize(&rat_abs(&(&one - q)), digits - 1)
                    * pow_usize(&(&one / &b), delta * spread)
            };
            if lhs < rhs {
                break;
            }
            delta += 2;
            if delta > 10_000 {
                return Err(Error::ConstructionError(
                    "no admissible gap parameter for the theta family".into(),
                ));
            }
        }
        (0..=m)
            .map(|i| {
                let lengths = (0..digits)
                    .map(|j| s0 + delta * spread * (2 * j + ((i >> j) & 1)))
                    .collect();
                ThetaSpec::new(lengths)
            })
            .collect::<Result<_>>()?
    };
    let shifts: Vec<Rational> = specs
        .iter()
        .map(|spec| theta_shift(q, w, spec).map(|r| r.shifted_weight))
        .collect::<Result<_>>()?;
    for i in 0..shifts.len() {
        for j in i + 1..shifts.len() {
            if shifts[i] == shifts[j] {
                return Err(Error::ConstructionError(format!(
                    "theta shifts {i} and {j} collide at the given point"
                )));
            }
        }
    }
    Ok(specs)
}

/// m+1 wump specs whose shifted weights at w are pairwise distinct.
///
/// Every hump is a 2-path hump except that the binary digits of i sit at
/// hump indices r, 2r, …, where they flip the hump to 3-paths; r = 1 for
/// w > 9, otherwise the smallest r with (1+w/3)^r < 1/4. Distinctness is
/// re-verified exactly on the produced shifts.
pub fn generate_wump_sequences(w: &Rational, m: usize) -> Result<Vec<WumpSpec>> {
    let one = Rational::one();
    let in_low = w > &rat(-1) && w.is_negative();
    let in_high = w > &rat(9);
    if !in_low && !in_high {
        return Err(Error::RangeError(
            "wump sequence generation requires w ∈ (−1,0) or w > 9".into(),
        ));
    }
    let r = if in_high {
        1
    } else {
        let base = &one + w / rat(3);
        let quarter = crate::exactmath::ratio(1, 4);
        let mut r = 1usize;
        while pow_usize(&base, r) >= quarter {
            r += 1;
            if r > 10_000 {
                return Err(Error::ConstructionError(
                    "no admissible spacing for the wump family".into(),
                ));
            }
        }
        r
    };
    let bits = ceil_log2(m + 1).max(1);
    let l = r * bits;
    let specs: Vec<WumpSpec> = (0..=m)
        .map(|i| {
            let lengths = (1..=l)
                .map(|pos| {
                    if pos % r == 0 && (i >> (pos / r - 1)) & 1 == 1 {
                        3
                    } else {
                        2
                    }
                })
                .collect();
            WumpSpec::new(lengths)
        })
        .collect::<Result<_>>()?;
    let shifts: Vec<Rational> = specs
        .iter()
        .map(|spec| wump_shift(w, spec).map(|r| r.shifted_weight))
        .collect::<Result<_>>()?;
    for i in 0..shifts.len() {
        for j in i + 1..shifts.len() {
            if shifts[i] == shifts[j] {
                return Err(Error::ConstructionError(format!(
                    "wump shifts {i} and {j} collide at the given weight"
                )));
            }
        }
    }
    Ok(specs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::ratio;
    use crate::oracles::{z_subset_sum, ZVariant};
    use crate::structures::WeightMap;

    fn k2() -> Multigraph {
        Multigraph::from_edges(2, &[(0, 1)]).unwrap()
    }

    fn triangle() -> Multigraph {
        Multigraph::from_edges(3, &[(0, 1), (1, 2), (0, 2)]).unwrap()
    }

    #[test]
    fn stretch_and_thicken_shapes() {
        let c6 = inflate(&triangle(), &path_gadget(2).unwrap()).unwrap();
        assert_eq!(c6.vertex_count(), 6);
        assert_eq!(c6.edge_count(), 6);
        assert!(c6.is_connected());
        assert!(c6.is_simple());

        let tripled = inflate(&k2(), &bundle_gadget(3).unwrap()).unwrap();
        assert_eq!(tripled.vertex_count(), 2);
        assert_eq!(tripled.edge_count(), 3);
    }

    #[test]
    fn theta_graph_shapes() {
        let single = theta_graph(&ThetaSpec::new(vec![1]).unwrap());
        assert_eq!(single.graph.vertex_count(), 2);
        assert_eq!(single.graph.edge_count(), 1);

        let t235 = theta_graph(&ThetaSpec::new(vec![2, 3, 5]).unwrap());
        assert_eq!(t235.graph.vertex_count(), 9);
        assert_eq!(t235.graph.edge_count(), 10);
        let inflated = inflate(&k2(), &t235).unwrap();
        assert_eq!(inflated.vertex_count(), 9);
        assert_eq!(inflated.edge_count(), 10);

        // S = {2,2} is rejected as a spec but the 4-cycle arises from
        // inflating a doubled edge with a 2-path
        assert!(ThetaSpec::new(vec![2, 2]).is_err());
        let doubled = Multigraph::from_edges(2, &[(0, 1), (0, 1)]).unwrap();
        let c4 = inflate(&doubled, &path_gadget(2).unwrap()).unwrap();
        assert_eq!((c4.vertex_count(), c4.edge_count()), (4, 4));

        // loops keep both terminals on the one vertex
        let looped = Multigraph::from_edges(1, &[(0, 0)]).unwrap();
        let l2 = inflate(&looped, &path_gadget(2).unwrap()).unwrap();
        assert_eq!((l2.vertex_count(), l2.edge_count()), (2, 2));
    }

    #[test]
    fn wump_graph_shapes() {
        let single = wump_graph(&WumpSpec::new(vec![1]).unwrap());
        assert_eq!(single.graph.vertex_count(), 2);
        assert_eq!(single.graph.edge_count(), 1);

        let path = wump_graph(&WumpSpec::new(vec![4]).unwrap());
        assert_eq!(path.graph.vertex_count(), 5);
        assert_eq!(path.graph.edge_count(), 4);

        let figure = wump_graph(&WumpSpec::new(vec![3, 2, 3, 2]).unwrap());
        assert_eq!(figure.graph.edge_count(), 3 + 4 + 9 + 8);
        assert_eq!(figure.graph.vertex_count(), 5 + 2 + 2 + 6 + 4);
        assert!(figure.graph.is_connected());
    }

    #[test]
    fn theta_shift_basics() {
        let (q, w) = (rat(2), rat(1));
        let s1 = theta_shift(&q, &w, &ThetaSpec::new(vec![1]).unwrap()).unwrap();
        assert_eq!(s1.shifted_weight, w);
        assert_eq!(s1.per_edge_factor, rat(1));

        assert!(theta_shift(&rat(0), &w, &ThetaSpec::new(vec![2]).unwrap()).is_err());
        assert!(theta_shift(&q, &rat(0), &ThetaSpec::new(vec![2]).unwrap()).is_err());
        // q = −2w makes (1+q/w)^2 = 1
        assert!(theta_shift(&rat(-2), &rat(1), &ThetaSpec::new(vec![2]).unwrap()).is_err());
        // q = −w is fine: the ratio collapses to 0
        assert!(theta_shift(&rat(-1), &rat(1), &ThetaSpec::new(vec![2]).unwrap()).is_ok());
    }

    #[test]
    fn theta_identity_on_small_graphs() {
        let spec = ThetaSpec::new(vec![2, 3]).unwrap();
        let gadget = theta_graph(&spec);
        for g in [k2(), triangle()] {
            for (q, w) in [(rat(2), rat(1)), (ratio(5, 3), ratio(-3, 7)), (rat(-1), rat(2))] {
                let shift = theta_shift(&q, &w, &spec).unwrap();
                let inflated = inflate(&g, &gadget).unwrap();
                let lhs = z_subset_sum(
                    &inflated,
                    &q,
                    &WeightMap::uniform(inflated.edge_count(), w.clone()),
                    ZVariant::Z,
                )
                .unwrap();
                let rhs = pow_usize(&shift.per_edge_factor, g.edge_count())
                    * z_subset_sum(
                        &g,
                        &q,
                        &WeightMap::uniform(g.edge_count(), shift.shifted_weight.clone()),
                        ZVariant::Z,
                    )
                    .unwrap();
                assert_eq!(lhs, rhs, "q={q} w={w}");
            }
        }
    }

    #[test]
    fn series_parallel_rules() {
        let w = ratio(3, 5);
        let p = series_parallel_shift(ReplacementKind::Path, &[w.clone(), w.clone()], &rat(0))
            .unwrap();
        assert_eq!(p.shifted_weight, &w / rat(2));
        assert_eq!(p.per_edge_factor, rat(2) * &w);

        let b = series_parallel_shift(ReplacementKind::Bundle, &[w.clone(), w.clone()], &rat(7))
            .unwrap();
        assert_eq!(
            b.shifted_weight,
            pow_usize(&(Rational::one() + &w), 2) - Rational::one()
        );
        assert_eq!(b.per_edge_factor, rat(1));

        // non-uniform path at q = 0
        let p2 = series_parallel_shift(
            ReplacementKind::Path,
            &[rat(1), rat(2)],
            &rat(0),
        )
        .unwrap();
        assert_eq!(p2.shifted_weight, ratio(2, 3));
        assert_eq!(p2.per_edge_factor, rat(3));

        // 3-stretch at general q: 1 + q/w_S = (1+q/w)³
        let (q, w) = (ratio(5, 2), ratio(-7, 3));
        let s = series_parallel_shift(ReplacementKind::Path, &vec![w.clone(); 3], &q).unwrap();
        assert_eq!(
            Rational::one() + &q / &s.shifted_weight,
            pow_usize(&(Rational::one() + &q / &w), 3)
        );

        assert!(series_parallel_shift(ReplacementKind::Path, &[rat(0)], &rat(0)).is_err());
        assert!(
            series_parallel_shift(ReplacementKind::Path, &[rat(1), rat(-1)], &rat(0)).is_err()
        );
        assert!(
            series_parallel_shift(ReplacementKind::Path, &[rat(1), rat(2)], &rat(3)).is_err()
        );
    }

    #[test]
    fn bundle_matches_thickening_identity() {
        // Z(G; q, (1+w)^k − 1) = Z(G_k; q, w)
        let g = triangle();
        for k in 1..=4usize {
            for (q, w) in [(rat(3), ratio(1, 2)), (ratio(-5, 7), rat(2))] {
                let shift =
                    series_parallel_shift(ReplacementKind::Bundle, &vec![w.clone(); k], &q)
                        .unwrap();
                let thick = inflate(&g, &bundle_gadget(k).unwrap()).unwrap();
                let lhs = z_subset_sum(
                    &thick,
                    &q,
                    &WeightMap::uniform(thick.edge_count(), w.clone()),
                    ZVariant::Z,
                )
                .unwrap();
                let rhs = z_subset_sum(
                    &g,
                    &q,
                    &WeightMap::uniform(3, shift.shifted_weight.clone()),
                    ZVariant::Z,
                )
                .unwrap();
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn stretch_identity_at_q_zero() {
        // Z₀(G_k; 0, w) = (k·w^{k−1})^{m} · Z₀(G; 0, w/k)
        let g = triangle();
        let w = ratio(5, 3);
        for k in 1..=3usize {
            let shift =
                series_parallel_shift(ReplacementKind::Path, &vec![w.clone(); k], &rat(0)).unwrap();
            assert_eq!(shift.shifted_weight, &w / rat(k as i64));
            let stretched = inflate(&g, &path_gadget(k).unwrap()).unwrap();
            let lhs = z_subset_sum(
                &stretched,
                &rat(0),
                &WeightMap::uniform(stretched.edge_count(), w.clone()),
                ZVariant::Z0,
            )
            .unwrap();
            let rhs = pow_usize(&shift.per_edge_factor, 3)
                * z_subset_sum(
                    &g,
                    &rat(0),
                    &WeightMap::uniform(3, shift.shifted_weight.clone()),
                    ZVariant::Z0,
                )
                .unwrap();
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn wump_shift_basics() {
        let w = ratio(7, 2);
        let s1 = wump_shift(&w, &WumpSpec::new(vec![1]).unwrap()).unwrap();
        assert_eq!(s1.shifted_weight, w);
        assert_eq!(s1.per_edge_factor, rat(1));

        let s4 = wump_shift(&w, &WumpSpec::new(vec![4]).unwrap()).unwrap();
        assert_eq!(s4.shifted_weight, &w / rat(4));
        assert_eq!(s4.per_edge_factor, rat(4) * pow_usize(&w, 3));

        assert!(wump_shift(&rat(0), &WumpSpec::new(vec![2]).unwrap()).is_err());
        // (1 + w/s)^i = 1 at w = −4, s = 2, i = 2
        assert!(wump_shift(&rat(-4), &WumpSpec::new(vec![2, 2]).unwrap()).is_err());
    }

    #[test]
    fn wump_identity_on_small_graphs() {
        let spec = WumpSpec::new(vec![2, 1]).unwrap();
        let gadget = wump_graph(&spec);
        assert_eq!(gadget.graph.edge_count(), 4);
        for g in [k2(), triangle()] {
            for w in [rat(2), ratio(-3, 5), ratio(7, 4)] {
                let shift = wump_shift(&w, &spec).unwrap();
                let inflated = inflate(&g, &gadget).unwrap();
                let lhs = z_subset_sum(
                    &inflated,
                    &rat(0),
                    &WeightMap::uniform(inflated.edge_count(), w.clone()),
                    ZVariant::Z0,
                )
                .unwrap();
                let rhs = pow_usize(&shift.per_edge_factor, g.edge_count())
                    * z_subset_sum(
                        &g,
                        &rat(0),
                        &WeightMap::uniform(g.edge_count(), shift.shifted_weight.clone()),
                        ZVariant::Z0,
                    )
                    .unwrap();
                assert_eq!(lhs, rhs, "w={w}");
            }
        }
    }

    #[test]
    fn whitney_twist_insensitivity() {
        // asymmetric gadget: a 2-path plus a direct edge with a pendant
        // triangle hanging off the left side
        let mut h = Multigraph::new(4);
        h.add_edge(0, 2).unwrap();
        h.add_edge(2, 1).unwrap();
        h.add_edge(0, 1).unwrap();
        h.add_edge(0, 3).unwrap();
        h.add_edge(2, 3).unwrap();
        let fwd = TwoTerminalGraph::new(h.clone(), 0, 1).unwrap();
        let rev = TwoTerminalGraph::new(h, 1, 0).unwrap();
        let g = triangle();
        let a = inflate(&g, &fwd).unwrap();
        let b = inflate(&g, &rev).unwrap();
        for (q, w) in [(rat(2), rat(1)), (ratio(-3, 2), ratio(5, 7))] {
            let za = z_subset_sum(&a, &q, &WeightMap::uniform(a.edge_count(), w.clone()), ZVariant::Z)
                .unwrap();
            let zb = z_subset_sum(&b, &q, &WeightMap::uniform(b.edge_count(), w.clone()), ZVariant::Z)
                .unwrap();
            assert_eq!(za, zb);
        }
    }

    #[test]
    fn theta_family_generation() {
        let specs = generate_theta_sets(&rat(2), &rat(1), 4).unwrap();
        assert_eq!(specs.len(), 5);
        for spec in &specs {
            assert_eq!(spec.path_lengths.len(), 3);
            assert!(spec.path_lengths.iter().all(|s| s % 2 == 0));
        }
        assert!(generate_theta_sets(&rat(1), &rat(1), 2).is_err());
        assert!(generate_theta_sets(&rat(0), &rat(1), 2).is_err());
        assert!(generate_theta_sets(&rat(-2), &rat(2), 2).is_err());
        assert!(generate_theta_sets(&rat(-4), &rat(2), 2).is_err());

        let single = generate_theta_sets(&ratio(5, 3), &ratio(-2, 7), 0).unwrap();
        assert_eq!(single.len(), 1);
    }

    #[test]
    fn wump_family_generation() {
        let specs = generate_wump_sequences(&rat(10), 4).unwrap();
        assert_eq!(specs.len(), 5);
        // r = 1, 3 digit positions
        assert!(specs.iter().all(|s| s.path_lengths.len() == 3));
        assert_eq!(specs[0].path_lengths, vec![2, 2, 2]);
        assert_eq!(specs[5 - 1].path_lengths, vec![2, 2, 3]);

        let low = generate_wump_sequences(&ratio(-1, 2), 4).unwrap();
        assert_eq!(low.len(), 5);
        // (5/6)^r < 1/4 first holds at r = 8
        assert_eq!(low[0].path_lengths.len(), 8 * 3);

        assert!(matches!(
            generate_wump_sequences(&rat(1), 3),
            Err(Error::RangeError(_))
        ));
        assert!(generate_wump_sequences(&rat(9), 3).is_err());
        assert!(generate_wump_sequences(&rat(-1), 3).is_err());
    }
}
