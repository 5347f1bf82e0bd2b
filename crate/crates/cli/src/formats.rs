//! Plain-text formats: DIMACS CNF, edge-list graphs and digraphs, and
//! square rational matrices.
//!
//! Conventions shared by the graph-family formats: a header line
//! (`graph <n> <m>`, `digraph <n> <m>`, `matrix <n>`), one record per
//! line, 0-based vertex ids, `#` starts a comment anywhere on a line,
//! and rationals written `<int>` or `<int>/<uint>` with the sign on the
//! numerator. DIMACS keeps its own conventions: `c` comment lines,
//! `p cnf <vars> <clauses>`, clauses terminated by 0 and free to span
//! lines. Serialization normalizes whitespace but preserves structure,
//! so `parse(serialize(v)) = v` and serializing a reparsed text is
//! idempotent.

use countforge_core::exactmath::{Int, Rational};
use countforge_core::oracles::Matrix;
use countforge_core::structures::{Cnf, Digraph, Multigraph, WeightMap};
use countforge_core::{Error, Result};
use num_traits::{One, Zero};

fn err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

/// Parse `<int>` or `<int>/<uint>`; the denominator must be a positive
/// plain integer (no sign).
pub fn parse_rational(token: &str, line: usize) -> Result<Rational> {
    fn parse_int(s: &str, line: usize, signed: bool) -> Result<Int> {
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits != s && !signed {
            return Err(err(line, format!("denominator may not be signed: {s}")));
        }
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err(line, format!("malformed integer: {s}")));
        }
        s.parse::<Int>()
            .map_err(|_| err(line, format!("malformed integer: {s}")))
    }
    match token.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(token, line, true)?)),
        Some((num, den)) => {
            let num = parse_int(num, line, true)?;
            let den = parse_int(den, line, false)?;
            if den.is_zero() {
                return Err(err(line, "zero denominator"));
            }
            Ok(Rational::new(num, den))
        }
    }
}

pub fn serialize_rational(x: &Rational) -> String {
    if x.denom().is_one() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

/// Non-comment lines as (1-based line number, whitespace-split tokens),
/// with `#` stripping the rest of its line.
fn records(text: &str) -> Vec<(usize, Vec<&str>)> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = line.split_whitespace().collect();
        if !tokens.is_empty() {
            out.push((i + 1, tokens));
        }
    }
    out
}

fn parse_usize(token: &str, line: usize, what: &str) -> Result<usize> {
    if !token.bytes().all(|b| b.is_ascii_digit()) || token.is_empty() {
        return Err(err(line, format!("malformed {what}: {token}")));
    }
    token
        .parse()
        .map_err(|_| err(line, format!("{what} out of range: {token}")))
}

fn vertex(token: &str, line: usize, n: usize) -> Result<usize> {
    let v = parse_usize(token, line, "vertex")?;
    if v >= n {
        return Err(err(line, format!("vertex {v} out of range (n = {n})")));
    }
    Ok(v)
}

struct EdgeList {
    n: usize,
    rows: Vec<(usize, usize, usize, Rational)>,
}

fn parse_edge_list(text: &str, keyword: &str) -> Result<EdgeList> {
    let records = records(text);
    let Some(((hline, header), body)) = records.split_first() else {
        return Err(err(1, format!("missing `{keyword} <n> <m>` header")));
    };
    let (hline, header) = (*hline, header);
    match header.as_slice() {
        [kw, n, m] if *kw == keyword => {
            let n = parse_usize(n, hline, "vertex count")?;
            let m = parse_usize(m, hline, "edge count")?;
            if body.len() != m {
                let line = body.last().map_or(hline, |r| r.0);
                return Err(err(
                    line,
                    format!("expected {m} edge lines, found {}", body.len()),
                ));
            }
            let mut rows = Vec::with_capacity(m);
            for (line, tokens) in body {
                let (u, v, w) = match tokens.as_slice() {
                    [u, v] => (u, v, Rational::one()),
                    [u, v, w] => (u, v, parse_rational(w, *line)?),
                    _ => {
                        return Err(err(*line, "expected `u v` or `u v weight`"));
                    }
                };
                rows.push((*line, vertex(u, *line, n)?, vertex(v, *line, n)?, w));
            }
            Ok(EdgeList { n, rows })
        }
        _ => Err(err(hline, format!("malformed header: expected `{keyword} <n> <m>`"))),
    }
}

/// Parse an undirected edge list with optional weights (omitted = 1).
pub fn parse_graph(text: &str) -> Result<(Multigraph, WeightMap)> {
    let list = parse_edge_list(text, "graph")?;
    let mut g = Multigraph::new(list.n);
    let mut weights = Vec::with_capacity(list.rows.len());
    for (line, u, v, w) in list.rows {
        g.add_edge(u, v).map_err(|e| err(line, e.to_string()))?;
        weights.push(w);
    }
    Ok((g, WeightMap::from_vec(weights)))
}

pub fn serialize_graph(g: &Multigraph, w: &WeightMap) -> Result<String> {
    serialize_edge_list("graph", g.vertex_count(), g.edges(), w)
}

pub fn parse_digraph(text: &str) -> Result<Digraph> {
    let list = parse_edge_list(text, "digraph")?;
    let mut d = Digraph::new(list.n);
    for (line, u, v, w) in list.rows {
        d.add_arc(u, v, w).map_err(|e| err(line, e.to_string()))?;
    }
    Ok(d)
}

pub fn serialize_digraph(d: &Digraph) -> String {
    let mut out = format!("digraph {} {}\n", d.vertex_count(), d.arc_count());
    for (u, v, w) in d.arcs() {
        append_edge(&mut out, *u, *v, w);
    }
    out
}

fn serialize_edge_list(
    keyword: &str,
    n: usize,
    edges: &[(usize, usize)],
    w: &WeightMap,
) -> Result<String> {
    if w.len() != edges.len() {
        return Err(Error::InvalidInput(format!(
            "{} weights for {} edges",
            w.len(),
            edges.len()
        )));
    }
    let mut out = format!("{keyword} {n} {}\n", edges.len());
    for (e, (u, v)) in edges.iter().enumerate() {
        append_edge(&mut out, *u, *v, w.get(e)?);
    }
    Ok(out)
}

fn append_edge(out: &mut String, u: usize, v: usize, w: &Rational) {
    if w.is_one() {
        out.push_str(&format!("{u} {v}\n"));
    } else {
        out.push_str(&format!("{u} {v} {}\n", serialize_rational(w)));
    }
}

pub fn parse_matrix(text: &str) -> Result<Matrix> {
    let records = records(text);
    let Some(((hline, header), body)) = records.split_first() else {
        return Err(err(1, "missing `matrix <n>` header"));
    };
    let n = match header.as_slice() {
        ["matrix", n] => parse_usize(n, *hline, "dimension")?,
        _ => return Err(err(*hline, "malformed header: expected `matrix <n>`")),
    };
    if body.len() != n {
        let line = body.last().map_or(*hline, |r| r.0);
        return Err(err(line, format!("expected {n} rows, found {}", body.len())));
    }
    let mut rows = Vec::with_capacity(n);
    for (line, tokens) in body {
        if tokens.len() != n {
            return Err(err(*line, format!("expected {n} entries, found {}", tokens.len())));
        }
        let mut row = Vec::with_capacity(n);
        for t in tokens {
            row.push(parse_rational(t, *line)?);
        }
        rows.push(row);
    }
    Matrix::from_rows(rows)
}

pub fn serialize_matrix(a: &Matrix) -> String {
    let n = a.n();
    let mut out = format!("matrix {n}\n");
    for i in 0..n {
        let row: Vec<String> = (0..n).map(|j| serialize_rational(a.get(i, j))).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

/// Parse DIMACS CNF: `c` comment lines, a `p cnf <vars> <clauses>`
/// header, then exactly `<clauses>` 0-terminated clauses.
pub fn parse_cnf(text: &str) -> Result<Cnf> {
    let mut header: Option<(usize, usize)> = None;
    let mut clauses: Vec<Vec<i32>> = Vec::new();
    let mut current: Vec<i32> = Vec::new();
    let mut last_line = 1;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let tokens: Vec<&str> = raw.split_whitespace().collect();
        match tokens.first() {
            None => continue,
            Some(t) if t.starts_with('c') => continue,
            Some(&"p") => {
                if header.is_some() {
                    return Err(err(line, "duplicate header"));
                }
                match tokens.as_slice() {
                    ["p", "cnf", vars, cls] => {
                        header = Some((
                            parse_usize(vars, line, "variable count")?,
                            parse_usize(cls, line, "clause count")?,
                        ));
                    }
                    _ => return Err(err(line, "malformed header: expected `p cnf <vars> <clauses>`")),
                }
            }
            Some(_) => {
                let Some((vars, _)) = header else {
                    return Err(err(line, "clause before `p cnf` header"));
                };
                last_line = line;
                for t in tokens {
                    let lit: i32 = t
                        .parse()
                        .map_err(|_| err(line, format!("malformed literal: {t}")))?;
                    if lit == 0 {
                        if current.is_empty() {
                            return Err(err(line, "empty clause"));
                        }
                        clauses.push(std::mem::take(&mut current));
                    } else {
                        if lit.unsigned_abs() as usize > vars {
                            return Err(err(
                                line,
                                format!("literal {lit} out of range (vars = {vars})"),
                            ));
                        }
                        current.push(lit);
                    }
                }
            }
        }
    }
    let Some((vars, expected)) = header else {
        return Err(err(last_line, "missing `p cnf` header"));
    };
    if !current.is_empty() {
        return Err(err(last_line, "unterminated clause (missing 0)"));
    }
    if clauses.len() != expected {
        return Err(err(
            last_line,
            format!("expected {expected} clauses, found {}", clauses.len()),
        ));
    }
    Cnf::new(vars, clauses).map_err(|e| match e {
        Error::Parse { .. } => e,
        other => err(last_line, other.to_string()),
    })
}

pub fn serialize_cnf(f: &Cnf) -> String {
    let mut out = format!("p cnf {} {}\n", f.num_vars(), f.num_clauses());
    for clause in f.clauses() {
        for lit in clause {
            out.push_str(&lit.to_string());
            out.push(' ');
        }
        out.push_str("0\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use countforge_core::exactmath::{rat, ratio};

    #[test]
    fn cnf_roundtrip_and_errors() {
        let f = parse_cnf("p cnf 3 1\n1 2 3 0\n").unwrap();
        assert_eq!(f.num_vars(), 3);
        assert_eq!(f.clauses(), &[vec![1, 2, 3]]);
        assert_eq!(parse_cnf(&serialize_cnf(&f)).unwrap(), f);

        // comments and clauses spanning lines
        let g = parse_cnf("c a comment\np cnf 4 2\n1 -2\n3 0 -1 4 0\n").unwrap();
        assert_eq!(g.clauses(), &[vec![1, -2, 3], vec![-1, 4]]);

        for bad in [
            "p cnf 3 1\n1 2 0 3",    // trailing unterminated clause
            "p cnf 2 1\n1 3 0\n",    // literal out of range
            "p cnf 2 2\n1 0\n",      // clause count mismatch
            "1 0\np cnf 1 1\n",      // clause before header
            "p dnf 1 1\n1 0\n",      // wrong format tag
        ] {
            assert!(matches!(parse_cnf(bad), Err(Error::Parse { .. })), "{bad}");
        }
        let e = parse_cnf("p cnf 2 1\nx 0\n").unwrap_err();
        assert_eq!(e, err(2, "malformed literal: x"));
    }

    #[test]
    fn graph_roundtrip_and_errors() {
        let (g, w) = parse_graph("graph 2 1\n0 1\n").unwrap();
        assert_eq!((g.vertex_count(), g.edges()), (2, &[(0, 1)][..]));
        assert_eq!(w.as_slice(), &[rat(1)]);

        assert!(matches!(
            parse_graph("graph 2 1\n0 5\n"),
            Err(Error::Parse { line: 2, .. })
        ));

        let text = "# weighted multigraph\ngraph 3 4\n0 1 2/3\n0 1\n2 2 -1\n1 2 5\n";
        let (g, w) = parse_graph(text).unwrap();
        assert_eq!(g.edge_count(), 4);
        assert_eq!(w.get(0).unwrap(), &ratio(2, 3));
        let text2 = serialize_graph(&g, &w).unwrap();
        let (g2, w2) = parse_graph(&text2).unwrap();
        assert_eq!((g2, w2), (g, w));

        for bad in [
            "graph 2\n",                  // malformed header
            "graph 2 2\n0 1\n",           // missing edge line
            "graph 2 1\n0 1\n1 0\n",      // extra edge line
            "graph 2 1\n0 1 1/0\n",       // zero denominator
            "graph 2 1\n0 1 1/-2\n",      // signed denominator
            "graph 2 1\n0 1 2 3\n",       // too many tokens
        ] {
            assert!(matches!(parse_graph(bad), Err(Error::Parse { .. })), "{bad}");
        }
    }

    #[test]
    fn digraph_and_matrix_roundtrip() {
        let d = parse_digraph("digraph 2 3\n0 0 -1\n0 1\n1 0 7/2\n").unwrap();
        assert_eq!(d.arcs().len(), 3);
        assert_eq!(parse_digraph(&serialize_digraph(&d)).unwrap(), d);

        let a = parse_matrix("matrix 2\n1 -1/2\n0 3\n").unwrap();
        assert_eq!(a.get(0, 1), &ratio(-1, 2));
        assert_eq!(parse_matrix(&serialize_matrix(&a)).unwrap(), a);
        assert!(matches!(
            parse_matrix("matrix 2\n1 2\n3\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn rational_grammar() {
        assert_eq!(parse_rational("-12", 1).unwrap(), rat(-12));
        assert_eq!(parse_rational("4/6", 1).unwrap(), ratio(2, 3));
        for bad in ["", "--1", "1/", "/2", "1/-2", "+1", "a", "1.5", "1/2/3"] {
            assert!(parse_rational(bad, 1).is_err(), "{bad}");
        }
    }
}
