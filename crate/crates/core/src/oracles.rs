//! Brute-force counting oracles and exact partition-function evaluation.
//!
//! Everything here is an independent ground truth: satisfying-assignment
//! counters, cut and colouring enumerators, three permanent algorithms, and
//! subset-sum evaluation of Z, Z₀ and the Tutte polynomial. The reductions
//! and pipelines elsewhere in the crate are tested against these.
//!
//! Capacity guards are explicit; exceeding one is an error, never a silent
//! truncation. The subset-enumeration cap can be widened per call through
//! the `_capped` variants or globally via `COUNTFORGE_MAX_SUBSET_BITS`.

use std::collections::HashMap;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactmath::{pow_usize, rat, Int, Poly, Rational};
use crate::structures::{
    edge_surgery, Digraph, Dsu, EdgeId, Multigraph, SurgeryKind, TerminalTriple, WeightMap,
};

pub const MAX_SAT_VARS: usize = 30;
pub const MAX_IS_VERTICES: usize = 80;
pub const MAX_CUT_VERTICES: usize = 24;
pub const MAX_NAIVE_PERMANENT: usize = 9;
pub const MAX_RYSER_PERMANENT: usize = 26;
pub const MAX_CYCLE_COVER_VERTICES: usize = 128;
pub const DEFAULT_SUBSET_EDGES: usize = 22;
/// Budget for `count_colourings`: c^n may not exceed 2^26.
pub const COLOURING_BUDGET: u128 = 1 << 26;

/// Global subset-enumeration cap; `COUNTFORGE_MAX_SUBSET_BITS` overrides.
pub fn max_subset_edges() -> usize {
    std::env::var("COUNTFORGE_MAX_SUBSET_BITS")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_SUBSET_EDGES)
}

fn guard(what: &'static str, limit: usize, actual: usize) -> Result<()> {
    if actual > limit {
        Err(Error::Capacity { what, limit, actual })
    } else {
        Ok(())
    }
}

/// Maximum cut size together with the number of vertex subsets attaining
/// it; a subset and its complement are counted separately.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CutCount {
    pub size: usize,
    pub count: Int,
}

fn clause_masks(f: &crate::structures::Cnf) -> Vec<(u64, u64)> {
    f.clauses()
        .iter()
        .map(|clause| {
            let (mut pos, mut neg) = (0u64, 0u64);
            for &lit in clause {
                let v = lit.unsigned_abs() as usize - 1;
                if lit > 0 {
                    pos |= 1 << v;
                } else {
                    neg |= 1 << v;
                }
            }
            (pos, neg)
        })
        .collect()
}

/// Number of satisfying assignments, by enumeration over all 2^n points.
pub fn count_sat(f: &crate::structures::Cnf) -> Result<Int> {
    let n = f.num_vars();
    guard("sat variables", MAX_SAT_VARS, n)?;
    let masks = clause_masks(f);
    let mut count = 0u64;
    for a in 0..1u64 << n {
        let sat = masks
            .iter()
            .all(|&(pos, neg)| (a & pos) != 0 || (!a & neg) != 0);
        if sat {
            count += 1;
        }
    }
    Ok(Int::from(count))
}

/// Number of assignments under which every clause has both a true and a
/// false literal.
pub fn count_nae(f: &crate::structures::Cnf) -> Result<Int> {
    let n = f.num_vars();
    guard("sat variables", MAX_SAT_VARS, n)?;
    let masks = clause_masks(f);
    let mut count = 0u64;
    for a in 0..1u64 << n {
        let nae = masks.iter().all(|&(pos, neg)| {
            let has_true = (a & pos) != 0 || (!a & neg) != 0;
            let has_false = (!a & pos) != 0 || (a & neg) != 0;
            has_true && has_false
        });
        if nae {
            count += 1;
        }
    }
    Ok(Int::from(count))
}

/// Number of independent vertex sets (including ∅): peel isolated
/// vertices, split connected components, branch on a maximum-degree
/// vertex. Parallel edges collapse; loops are rejected.
pub fn count_independent_sets(g: &Multigraph) -> Result<Int> {
    let n = g.vertex_count();
    guard("independent-set vertices", MAX_IS_VERTICES, n)?;
    let mut adj = vec![0u128; n];
    for &(u, v) in g.edges() {
        if u == v {
            return Err(Error::InvalidInput(
                "independent-set counting rejects loops".into(),
            ));
        }
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    fn rec(mut rem: u128, adj: &[u128]) -> Int {
        let mut isolated = 0u128;
        let mut scan = rem;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            if adj[v] & rem == 0 {
                isolated |= 1 << v;
            }
        }
        rem &= !isolated;
        let free = isolated.count_ones();
        if rem == 0 {
            return Int::one() << free;
        }
        // connected component of the lowest remaining vertex
        let mut comp = 1u128 << rem.trailing_zeros();
        loop {
            let mut grown = comp;
            let mut scan = comp;
            while scan != 0 {
                let v = scan.trailing_zeros() as usize;
                scan &= scan - 1;
                grown |= adj[v] & rem;
            }
            if grown == comp {
                break;
            }
            comp = grown;
        }
        if comp != rem {
            return (rec(comp, adj) * rec(rem & !comp, adj)) << free;
        }
        let mut best = rem.trailing_zeros() as usize;
        let mut best_deg = 0;
        let mut scan = rem;
        while scan != 0 {
            let v = scan.trailing_zeros() as usize;
            scan &= scan - 1;
            let deg = (adj[v] & rem).count_ones() as usize;
            if deg > best_deg {
                best = v;
                best_deg = deg;
            }
        }
        let without = rec(rem & !(1 << best), adj);
        let with = rec(rem & !adj[best] & !(1 << best), adj);
        (without + with) << free
    }
    let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    Ok(rec(full, &adj))
}

fn cut_size_histogram(g: &Multigraph) -> Result<Vec<u64>> {
    let n = g.vertex_count();
    guard("cut vertices", MAX_CUT_VERTICES, n)?;
    let m = g.edge_count();
    // neighbour occurrences with multiplicity, loops skipped
    let mut inc: Vec<Vec<u32>> = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        if u != v {
            inc[u].push(v as u32);
            inc[v].push(u as u32);
        }
    }
    let mut hist = vec![0u64; m + 1];
    let mut side = vec![false; n];
    let mut cut = 0usize;
    hist[0] += 1;
    // Gray-code walk over all assignments, one vertex flip per step
    for t in 1..1u64 << n {
        let v = t.trailing_zeros() as usize;
        for &u in &inc[v] {
            if side[u as usize] == side[v] {
                cut += 1;
            } else {
                cut -= 1;
            }
        }
        side[v] = !side[v];
        hist[cut] += 1;
    }
    Ok(hist)
}

/// Maximum cut by exhaustive enumeration of all 2^n assignments;
/// parallel edges count with multiplicity, loops never cross.
pub fn count_maxcut(g: &Multigraph) -> Result<CutCount> {
    let hist = cut_size_histogram(g)?;
    let size = hist.iter().rposition(|&c| c > 0).unwrap_or(0);
    Ok(CutCount {
        size,
        count: Int::from(hist[size]),
    })
}

/// Full distribution cut-size → number of vertex subsets.
pub fn maxcut_distribution(g: &Multigraph) -> Result<std::collections::BTreeMap<usize, Int>> {
    let hist = cut_size_histogram(g)?;
    Ok(hist
        .into_iter()
        .enumerate()
        .filter(|&(_, c)| c > 0)
        .map(|(s, c)| (s, Int::from(c)))
        .collect())
}

/// Smallest number of edges whose removal pairwise separates the three
/// terminals, and the number of such minimum edge sets.
pub fn count_3tmc(t: &TerminalTriple) -> Result<CutCount> {
    count_3tmc_capped(t, max_subset_edges())
}

pub fn count_3tmc_capped(t: &TerminalTriple, cap: usize) -> Result<CutCount> {
    let g = &t.graph;
    let m = g.edge_count();
    guard("3tmc edges", cap, m)?;
    let mut dsu = Dsu::new(g.vertex_count());
    let mut hist = vec![0u64; m + 1];
    // Every leaf reached is a separating edge set: the keep branch is
    // pruned whenever it would merge two terminal components.
    fn rec(
        g: &Multigraph,
        terms: &[usize; 3],
        e: usize,
        cuts: usize,
        dsu: &mut Dsu,
        hist: &mut [u64],
    ) {
        if e == g.edge_count() {
            hist[cuts] += 1;
            return;
        }
        let (u, v) = g.edges()[e];
        let (ru, rv) = (dsu.find(u), dsu.find(v));
        let troots = [dsu.find(terms[0]), dsu.find(terms[1]), dsu.find(terms[2])];
        let joins_terminals =
            ru != rv && troots.contains(&ru) && troots.contains(&rv);
        if !joins_terminals {
            let undo = dsu.union(u, v);
            rec(g, terms, e + 1, cuts, dsu, hist);
            if let Some(root) = undo {
                dsu.undo(root);
            }
        }
        rec(g, terms, e + 1, cuts + 1, dsu, hist);
    }
    rec(g, &t.terminals, 0, 0, &mut dsu, &mut hist);
    let size = hist
        .iter()
        .position(|&c| c > 0)
        .expect("removing all edges always separates distinct terminals");
    Ok(CutCount {
        size,
        count: Int::from(hist[size]),
    })
}

/// Number of proper vertex colourings with `c` colours; parallel edges act
/// as one constraint, a loop forces 0.
pub fn count_colourings(g: &Multigraph, c: usize) -> Result<Int> {
    let n = g.vertex_count();
    if n == 0 {
        return Ok(Int::one());
    }
    if c == 0 {
        return Ok(Int::zero());
    }
    let budget = (c as u128)
        .checked_pow(n as u32)
        .filter(|&b| b <= COLOURING_BUDGET);
    if budget.is_none() {
        return Err(Error::Capacity {
            what: "colouring budget c^n",
            limit: COLOURING_BUDGET as usize,
            actual: usize::MAX,
        });
    }
    if g.edges().iter().any(|&(u, v)| u == v) {
        return Ok(Int::zero());
    }
    // neighbours with smaller index, deduplicated
    let mut earlier: Vec<Vec<usize>> = vec![Vec::new(); n];
    for &(u, v) in g.edges() {
        let (lo, hi) = (u.min(v), u.max(v));
        if !earlier[hi].contains(&lo) {
            earlier[hi].push(lo);
        }
    }
    fn rec(v: usize, n: usize, c: usize, colour: &mut [usize], earlier: &[Vec<usize>]) -> u64 {
        if v == n {
            return 1;
        }
        let mut total = 0;
        'next: for k in 0..c {
            for &u in &earlier[v] {
                if colour[u] == k {
                    continue 'next;
                }
            }
            colour[v] = k;
            total += rec(v + 1, n, c, colour, earlier);
        }
        total
    }
    let mut colour = vec![0usize; n];
    Ok(Int::from(rec(0, n, c, &mut colour, &earlier)))
}

/// Chromatic polynomial as χ(x) = Σ_k S(G,k)·x(x−1)···(x−k+1), where
/// S(G,k) counts partitions of V into k nonempty independent sets (a
/// subset DP with each block anchored at its lowest vertex). Loops make
/// the polynomial identically zero; evaluable at any rational point.
pub fn chromatic_polynomial(g: &Multigraph) -> Result<Poly> {
    let n = g.vertex_count();
    guard("chromatic-polynomial vertices", 16, n)?;
    if n == 0 {
        return Ok(Poly::constant(Rational::one()));
    }
    let mut adj = vec![0u32; n];
    for &(u, v) in g.edges() {
        if u == v {
            return Ok(Poly::zero());
        }
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    fn independent(s: u32, adj: &[u32]) -> bool {
        let mut t = s;
        while t != 0 {
            let v = t.trailing_zeros() as usize;
            if adj[v] & s != 0 {
                return false;
            }
            t &= t - 1;
        }
        true
    }
    let full = (1u32 << n) - 1;
    let mut prev = vec![0u64; full as usize + 1];
    prev[0] = 1;
    let mut falling = Poly::constant(Rational::one());
    let mut acc = Poly::zero();
    for k in 1..=n {
        let mut cur = vec![0u64; full as usize + 1];
        for mask in 1..=full {
            let low = mask.trailing_zeros();
            let cand = mask & !(1 << low) & !adj[low as usize];
            let rest = mask & !(1 << low);
            let mut s = cand;
            loop {
                if independent(s, &adj) {
                    cur[mask as usize] += prev[(rest & !s) as usize];
                }
                if s == 0 {
                    break;
                }
                s = (s - 1) & cand;
            }
        }
        falling = falling.mul(&Poly::from_coeffs(vec![rat(-((k - 1) as i64)), Rational::one()]));
        if cur[full as usize] != 0 {
            acc = acc.add(&falling.scale(&rat(cur[full as usize] as i64)));
        }
        prev = cur;
    }
    Ok(acc)
}

/// Dense square matrix of rationals, row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    n: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(Error::InvalidInput(format!(
                    "matrix must be square; got a row of length {} in an {n}-row matrix",
                    row.len()
                )));
            }
        }
        Ok(Matrix {
            n,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.n + j]
    }
}

/// Arc-weight-sum matrix of a digraph (parallel arcs add).
pub fn digraph_to_matrix(d: &Digraph) -> Matrix {
    let n = d.vertex_count();
    let mut data = vec![Rational::zero(); n * n];
    for (u, v, w) in d.arcs() {
        data[u * n + v] += w.clone();
    }
    Matrix { n, data }
}

/// One arc per nonzero matrix entry.
pub fn matrix_to_digraph(a: &Matrix) -> Digraph {
    let mut d = Digraph::new(a.n);
    for i in 0..a.n {
        for j in 0..a.n {
            let w = a.get(i, j);
            if !w.is_zero() {
                d.add_arc(i, j, w.clone()).expect("indices in range");
            }
        }
    }
    d
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PermMethod {
    Naive,
    Ryser,
    CycleCover,
}

/// Permanent by full permutation expansion.
pub fn permanent_naive(a: &Matrix) -> Result<Rational> {
    guard("naive permanent size", MAX_NAIVE_PERMANENT, a.n)?;
    fn rec(a: &Matrix, row: usize, used: u32) -> Rational {
        if row == a.n {
            return Rational::one();
        }
        let mut acc = Rational::zero();
        for col in 0..a.n {
            if used & (1 << col) == 0 {
                acc += a.get(row, col) * rec(a, row + 1, used | (1 << col));
            }
        }
        acc
    }
    Ok(rec(a, 0, 0))
}

/// Ryser's inclusion–exclusion formula with Gray-code column updates.
pub fn permanent_ryser(a: &Matrix) -> Result<Rational> {
    guard("ryser permanent size", MAX_RYSER_PERMANENT, a.n)?;
    let n = a.n;
    if n == 0 {
        return Ok(Rational::one());
    }
    let mut row_sums = vec![Rational::zero(); n];
    let mut acc = Rational::zero();
    let mut gray = 0u64;
    for t in 1..1u64 << n {
        let j = t.trailing_zeros() as usize;
        gray ^= 1 << j;
        if gray & (1 << j) != 0 {
            for (i, s) in row_sums.iter_mut().enumerate() {
                *s += a.get(i, j);
            }
        } else {
            for (i, s) in row_sums.iter_mut().enumerate() {
                *s -= a.get(i, j);
            }
        }
        let mut prod = Rational::one();
        for s in &row_sums {
            prod *= s;
        }
        if (n - gray.count_ones() as usize) % 2 == 0 {
            acc += prod;
        } else {
            acc -= prod;
        }
    }
    Ok(acc)
}

struct CycleCoverTables {
    // per processing position: (column, summed weight), column-sorted
    rows: Vec<Vec<(usize, Rational)>>,
    // columns some position ≥ i can still choose
    suffix_relevant: Vec<u128>,
}

/// Row-processing order chosen to keep the memoization frontier small:
/// greedily pick the row that minimizes the number of columns touched by
/// both processed and unprocessed rows. On the clustered gadget graphs the
/// reductions emit, this finishes one gadget before opening the next;
/// without it the state space explodes.
fn cycle_cover_order(d: &Digraph) -> Vec<usize> {
    let n = d.vertex_count();
    let mut cols: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut remaining = vec![0usize; n];
    for (u, v, w) in d.arcs() {
        if !w.is_zero() && !cols[*u].contains(v) {
            cols[*u].push(*v);
            remaining[*v] += 1;
        }
    }
    let mut touched = vec![false; n];
    let mut placed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut best = (isize::MAX, usize::MAX);
        for r in 0..n {
            if placed[r] {
                continue;
            }
            let mut delta = 0isize;
            for &c in &cols[r] {
                let opens = !touched[c] && remaining[c] > 1;
                let closes = touched[c] && remaining[c] == 1;
                delta += opens as isize - closes as isize;
            }
            if (delta, r) < best {
                best = (delta, r);
            }
        }
        let r = best.1;
        placed[r] = true;
        order.push(r);
        for &c in &cols[r] {
            touched[c] = true;
            remaining[c] -= 1;
        }
    }
    order
}

fn cycle_cover_tables(d: &Digraph) -> Result<CycleCoverTables> {
    let n = d.vertex_count();
    guard("cycle-cover vertices", MAX_CYCLE_COVER_VERTICES, n)?;
    let mut maps: Vec<std::collections::BTreeMap<usize, Rational>> = vec![Default::default(); n];
    for (u, v, w) in d.arcs() {
        *maps[*u].entry(*v).or_insert_with(Rational::zero) += w.clone();
    }
    let mut rows: Vec<Vec<(usize, Rational)>> = maps
        .into_iter()
        .map(|m| m.into_iter().filter(|(_, w)| !w.is_zero()).collect())
        .collect();
    let order = cycle_cover_order(d);
    rows = order.into_iter().map(|r| std::mem::take(&mut rows[r])).collect();
    let mut suffix_relevant = vec![0u128; n + 1];
    for i in (0..n).rev() {
        let mut mask = suffix_relevant[i + 1];
        for &(v, _) in &rows[i] {
            mask |= 1 << v;
        }
        suffix_relevant[i] = mask;
    }
    Ok(CycleCoverTables { rows, suffix_relevant })
}

fn cover_int(
    t: &CycleCoverTables,
    weights: &[Vec<i128>],
    row: usize,
    unused: u128,
    memo: &mut [HashMap<u128, i128>],
) -> Option<i128> {
    if row == t.rows.len() {
        return Some(1);
    }
    if unused & !t.suffix_relevant[row] != 0 {
        return Some(0);
    }
    if let Some(&v) = memo[row].get(&unused) {
        return Some(v);
    }
    let mut acc: i128 = 0;
    for (idx, &(col, _)) in t.rows[row].iter().enumerate() {
        if unused & (1 << col) != 0 {
            let sub = cover_int(t, weights, row + 1, unused & !(1 << col), memo)?;
            acc = acc.checked_add(weights[row][idx].checked_mul(sub)?)?;
        }
    }
    memo[row].insert(unused, acc);
    Some(acc)
}

fn cover_rat(
    t: &CycleCoverTables,
    row: usize,
    unused: u128,
    memo: &mut [HashMap<u128, Rational>],
) -> Rational {
    if row == t.rows.len() {
        return Rational::one();
    }
    if unused & !t.suffix_relevant[row] != 0 {
        return Rational::zero();
    }
    if let Some(v) = memo[row].get(&unused) {
        return v.clone();
    }
    let mut acc = Rational::zero();
    for &(col, ref w) in &t.rows[row] {
        if unused & (1 << col) != 0 {
            acc += w * cover_rat(t, row + 1, unused & !(1 << col), memo);
        }
    }
    memo[row].insert(unused, acc.clone());
    acc
}

/// Sum over all cycle covers of the product of arc weights; equals the
/// permanent of the arc-weight-sum matrix. Memoized on (row, unused
/// columns) with dead-column pruning, so the gadget graphs the permanent
/// reductions emit stay tractable.
pub fn cycle_cover_sum(d: &Digraph) -> Result<Rational> {
    let t = cycle_cover_tables(d)?;
    let n = t.rows.len();
    let full = if n == 128 { u128::MAX } else { (1u128 << n) - 1 };
    // integer fast path when all weights are modest integers
    let int_weights: Option<Vec<Vec<i128>>> = t
        .rows
        .iter()
        .map(|row| {
            row.iter()
                .map(|(_, w)| {
                    if w.is_integer() {
                        i64::try_from(w.to_integer()).ok().map(i128::from)
                    } else {
                        None
                    }
                })
                .collect()
        })
        .collect();
    if let Some(weights) = int_weights {
        let mut memo = vec![HashMap::new(); n];
        if let Some(v) = cover_int(&t, &weights, 0, full, &mut memo) {
            return Ok(Rational::from(Int::from(v)));
        }
    }
    let mut memo = vec![HashMap::new(); n];
    Ok(cover_rat(&t, 0, full, &mut memo))
}

/// Permanent of a matrix by the chosen method.
pub fn permanent(a: &Matrix, method: PermMethod) -> Result<Rational> {
    match method {
        PermMethod::Naive => permanent_naive(a),
        PermMethod::Ryser => permanent_ryser(a),
        PermMethod::CycleCover => cycle_cover_sum(&matrix_to_digraph(a)),
    }
}

/// Permanent of a digraph's arc-weight-sum matrix.
pub fn permanent_of_digraph(d: &Digraph, method: PermMethod) -> Result<Rational> {
    match method {
        PermMethod::CycleCover => cycle_cover_sum(d),
        _ => permanent(&digraph_to_matrix(d), method),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ZVariant {
    /// Σ_A q^{k(A)} Π w(e)
    Z,
    /// Σ_A q^{k(A)−k(E)} Π w(e); still meaningful at q = 0
    Z0,
}

/// Subset counts bucketed by (components, edges chosen); the workhorse for
/// every uniform-weight evaluation.
fn component_size_buckets(g: &Multigraph) -> Vec<Vec<u64>> {
    let (n, m) = (g.vertex_count(), g.edge_count());
    let mut buckets = vec![vec![0u64; m + 1]; n + 1];
    let mut dsu = Dsu::new(n);
    fn rec(g: &Multigraph, e: usize, size: usize, dsu: &mut Dsu, buckets: &mut [Vec<u64>]) {
        if e == g.edge_count() {
            buckets[dsu.components()][size] += 1;
            return;
        }
        rec(g, e + 1, size, dsu, buckets);
        let (u, v) = g.edges()[e];
        let undo = dsu.union(u, v);
        rec(g, e + 1, size + 1, dsu, buckets);
        if let Some(root) = undo {
            dsu.undo(root);
        }
    }
    rec(g, 0, 0, &mut dsu, &mut buckets);
    buckets
}

/// Multivariate Tutte partition function by subset enumeration.
pub fn z_subset_sum(
    g: &Multigraph,
    q: &Rational,
    w: &WeightMap,
    variant: ZVariant,
) -> Result<Rational> {
    z_subset_sum_capped(g, q, w, variant, max_subset_edges())
}

pub fn z_subset_sum_capped(
    g: &Multigraph,
    q: &Rational,
    w: &WeightMap,
    variant: ZVariant,
    cap: usize,
) -> Result<Rational> {
    let m = g.edge_count();
    guard("subset-sum edges", cap, m)?;
    if w.len() != m {
        return Err(Error::InvalidInput(format!(
            "weight map has {} entries for {m} edges",
            w.len()
        )));
    }
    let base = match variant {
        ZVariant::Z => 0,
        ZVariant::Z0 => g.component_count_full(),
    };
    let uniform = w.as_slice().windows(2).all(|p| p[0] == p[1]);
    if uniform || m == 0 {
        let w0 = if m == 0 { Rational::one() } else { w.get(0)?.clone() };
        let buckets = component_size_buckets(g);
        let mut acc = Rational::zero();
        for (k, row) in buckets.iter().enumerate() {
            for (size, &count) in row.iter().enumerate() {
                if count > 0 {
                    acc += pow_usize(q, k - base)
                        * pow_usize(&w0, size)
                        * Rational::from(Int::from(count));
                }
            }
        }
        return Ok(acc);
    }
    // general weights: accumulate Σ Π w(e) per component count
    let mut per_k = vec![Rational::zero(); g.vertex_count() + 1];
    let mut dsu = Dsu::new(g.vertex_count());
    fn rec(
        g: &Multigraph,
        w: &WeightMap,
        e: usize,
        prod: Rational,
        dsu: &mut Dsu,
        per_k: &mut [Rational],
    ) {
        if e == g.edge_count() {
            per_k[dsu.components()] += prod;
            return;
        }
        rec(g, w, e + 1, prod.clone(), dsu, per_k);
        let (u, v) = g.edges()[e];
        let undo = dsu.union(u, v);
        let we = w.get(e).expect("length checked");
        rec(g, w, e + 1, prod * we, dsu, per_k);
        if let Some(root) = undo {
            dsu.undo(root);
        }
    }
    rec(g, w, 0, Rational::one(), &mut dsu, &mut per_k);
    let mut acc = Rational::zero();
    for (k, sum) in per_k.iter().enumerate() {
        if !sum.is_zero() {
            acc += pow_usize(q, k - base) * sum;
        }
    }
    Ok(acc)
}

/// The two-class polynomial: edges in `t_edges` carry fixed weight −1,
/// all others the formal variable; returns w ↦ Z₀(G;q,𝐰) (or Z).
pub fn z_subset_sum_poly(
    g: &Multigraph,
    q: &Rational,
    t_edges: &[EdgeId],
    variant: ZVariant,
) -> Result<Poly> {
    let m = g.edge_count();
    guard("subset-sum edges", max_subset_edges(), m)?;
    let mut in_t = vec![false; m];
    for &e in t_edges {
        g.endpoints(e)?;
        in_t[e] = true;
    }
    let base = match variant {
        ZVariant::Z => 0,
        ZVariant::Z0 => g.component_count_full(),
    };
    // buckets[(k, free-edge count, parity of |A∩T|)]
    let n = g.vertex_count();
    let mut buckets = vec![vec![[0u64; 2]; m + 1]; n + 1];
    let mut dsu = Dsu::new(n);
    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &Multigraph,
        in_t: &[bool],
        e: usize,
        size: usize,
        t_odd: bool,
        dsu: &mut Dsu,
        buckets: &mut [Vec<[u64; 2]>],
    ) {
        if e == g.edge_count() {
            buckets[dsu.components()][size][t_odd as usize] += 1;
            return;
        }
        rec(g, in_t, e + 1, size, t_odd, dsu, buckets);
        let (u, v) = g.edges()[e];
        let undo = dsu.union(u, v);
        if in_t[e] {
            rec(g, in_t, e + 1, size, !t_odd, dsu, buckets);
        } else {
            rec(g, in_t, e + 1, size + 1, t_odd, dsu, buckets);
        }
        if let Some(root) = undo {
            dsu.undo(root);
        }
    }
    rec(g, &in_t, 0, 0, false, &mut dsu, &mut buckets);
    let mut coeffs = vec![Rational::zero(); m + 1];
    for (k, row) in buckets.iter().enumerate() {
        for (size, counts) in row.iter().enumerate() {
            for (parity, &count) in counts.iter().enumerate() {
                if count > 0 {
                    let mut term = pow_usize(q, k - base) * Rational::from(Int::from(count));
                    if parity == 1 {
                        term = -term;
                    }
                    coeffs[size] += term;
                }
            }
        }
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// Deletion–contraction evaluation; the recursive counterpart of
/// `z_subset_sum`. Loops factor out as (1+w); in the Z₀ variant a bridge
/// deletion gains a factor q.
pub fn z_delcon(g: &Multigraph, q: &Rational, w: &WeightMap, variant: ZVariant) -> Result<Rational> {
    if w.len() != g.edge_count() {
        return Err(Error::InvalidInput(format!(
            "weight map has {} entries for {} edges",
            w.len(),
            g.edge_count()
        )));
    }
    let m = g.edge_count();
    if m == 0 {
        return Ok(match variant {
            ZVariant::Z => pow_usize(q, g.vertex_count()),
            ZVariant::Z0 => Rational::one(),
        });
    }
    let e = m - 1;
    let we = w.get(e)?.clone();
    if g.is_loop(e)? {
        let del = edge_surgery(g, e, SurgeryKind::Delete)?;
        let wd = w.remap(&del.edge_map, del.graph.edge_count());
        return Ok((Rational::one() + we) * z_delcon(&del.graph, q, &wd, variant)?);
    }
    let bridge = g.is_bridge(e)?;
    let del = edge_surgery(g, e, SurgeryKind::Delete)?;
    let wd = w.remap(&del.edge_map, del.graph.edge_count());
    let mut del_term = z_delcon(&del.graph, q, &wd, variant)?;
    if matches!(variant, ZVariant::Z0) && bridge {
        del_term *= q;
    }
    let con = edge_surgery(g, e, SurgeryKind::Contract)?;
    let wc = w.remap(&con.edge_map, con.graph.edge_count());
    let con_term = we * z_delcon(&con.graph, q, &wc, variant)?;
    Ok(del_term + con_term)
}

/// Tutte polynomial by its subgraph expansion.
pub fn tutte_subset_sum(g: &Multigraph, x: &Rational, y: &Rational) -> Result<Rational> {
    tutte_subset_sum_capped(g, x, y, max_subset_edges())
}

pub fn tutte_subset_sum_capped(
    g: &Multigraph,
    x: &Rational,
    y: &Rational,
    cap: usize,
) -> Result<Rational> {
    guard("subset-sum edges", cap, g.edge_count())?;
    let ke = g.component_count_full();
    let n = g.vertex_count();
    let (xm, ym) = (x - Rational::one(), y - Rational::one());
    let buckets = component_size_buckets(g);
    let mut acc = Rational::zero();
    for (k, row) in buckets.iter().enumerate() {
        for (size, &count) in row.iter().enumerate() {
            if count > 0 {
                acc += pow_usize(&xm, k - ke)
                    * pow_usize(&ym, k + size - n)
                    * Rational::from(Int::from(count));
            }
        }
    }
    Ok(acc)
}

/// T(G;x,y) recovered from Z at q=(x−1)(y−1), w=y−1.
pub fn convert_z_tutte(g: &Multigraph, x: &Rational, y: &Rational) -> Result<Rational> {
    let one = Rational::one();
    if *x == one || *y == one {
        return Err(Error::UnsupportedPoint(
            "Tutte-from-Z conversion needs x ≠ 1 and y ≠ 1".into(),
        ));
    }
    let (xm, ym) = (x - &one, y - &one);
    let q = &xm * &ym;
    let m = g.edge_count();
    let z = z_subset_sum(g, &q, &WeightMap::uniform(m, ym.clone()), ZVariant::Z)?;
    Ok(z / (pow_usize(&xm, g.component_count_full()) * pow_usize(&ym, g.vertex_count())))
}

/// χ(G;q) = (−1)^{n−k(E)} q^{k(E)} T(G;1−q,0).
pub fn chromatic_from_tutte(g: &Multigraph, q: &Rational) -> Result<Rational> {
    let t = tutte_subset_sum(g, &(Rational::one() - q), &Rational::zero())?;
    let mut val = pow_usize(q, g.component_count_full()) * t;
    if (g.vertex_count() - g.component_count_full()) % 2 == 1 {
        val = -val;
    }
    Ok(val)
}

/// Probability that the surviving graph is connected when each edge fails
/// independently with probability p.
pub fn reliability_bruteforce(g: &Multigraph, p: &Rational) -> Result<Rational> {
    if p.is_negative() || *p > Rational::one() {
        return Err(Error::RangeError(
            "failure probability must lie in [0,1]".into(),
        ));
    }
    guard("subset-sum edges", max_subset_edges(), g.edge_count())?;
    if g.vertex_count() == 0 {
        return Ok(Rational::one());
    }
    if !g.is_connected() {
        return Ok(Rational::zero());
    }
    let m = g.edge_count();
    let survive = Rational::one() - p;
    let buckets = component_size_buckets(g);
    let mut acc = Rational::zero();
    for (size, &count) in buckets[1].iter().enumerate() {
        if count > 0 {
            acc += pow_usize(&survive, size)
                * pow_usize(p, m - size)
                * Rational::from(Int::from(count));
        }
    }
    Ok(acc)
}
