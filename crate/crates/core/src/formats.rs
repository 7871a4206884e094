//! Plain-text file formats for graphs, skew arrays, embeddings and orientations.
//!
//! Vertices are always named by label. Edge ids are 0-based positions in the graph file.
//! Lines starting with `#` and blank lines are ignored everywhere.

use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{OrderedGraph, OrderedVertexSet};
use crate::kasteleyn::{Embedding, Orientation};
use crate::pfaffian::SkewArray;
use crate::ring::Ring;

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse { line, msg: msg.into() }
}

fn weight<R: Ring>(line: usize, s: &str) -> Result<R> {
    R::parse_exact(s).ok_or_else(|| parse_err(line, format!("bad weight `{s}`")))
}

/// `vertices: v1 ... vn` followed by `edge: u v w` lines.
pub fn parse_graph<R: Ring>(text: &str) -> Result<OrderedGraph<R>> {
    let mut lines = content_lines(text);
    let (first, head) = lines.next().ok_or_else(|| parse_err(1, "empty graph file"))?;
    let labels = head
        .strip_prefix("vertices:")
        .ok_or_else(|| parse_err(first, "expected `vertices:`"))?
        .split_whitespace();
    let vs = OrderedVertexSet::new(labels)?;
    let mut edges = Vec::new();
    for (no, line) in lines {
        let rest = line.strip_prefix("edge:").ok_or_else(|| parse_err(no, "expected `edge: u v w`"))?;
        let parts: Vec<&str> = rest.split_whitespace().collect();
        let [u, v, w] = parts[..] else {
            return Err(parse_err(no, "expected `edge: u v w`"));
        };
        let idx = |s: &str| vs.index_of(s).map_err(|e| parse_err(no, e.to_string()));
        edges.push((idx(u)?, idx(v)?, weight(no, w)?));
    }
    OrderedGraph::new(vs, edges)
}

pub fn write_graph<R: Ring>(g: &OrderedGraph<R>) -> String {
    let mut out = format!("vertices: {}\n", g.vertices().labels().join(" "));
    for e in g.edges() {
        writeln!(out, "edge: {} {} {}", g.label(e.u), g.label(e.v), e.weight).expect("write to string");
    }
    out
}

/// `n` followed by 1-based `i j value` lines for nonzero upper-triangular entries.
pub fn parse_skew<R: Ring>(text: &str) -> Result<SkewArray<R>> {
    let mut lines = content_lines(text);
    let (first, head) = lines.next().ok_or_else(|| parse_err(1, "empty array file"))?;
    let n: usize = head.parse().map_err(|_| parse_err(first, format!("bad size `{head}`")))?;
    let mut a = SkewArray::zero(n);
    for (no, line) in lines {
        let parts: Vec<&str> = line.split_whitespace().collect();
        let [i, j, v] = parts[..] else {
            return Err(parse_err(no, "expected `i j value`"));
        };
        let index = |s: &str| match s.parse::<usize>() {
            Ok(k) if (1..=n).contains(&k) => Ok(k - 1),
            _ => Err(parse_err(no, format!("index `{s}` outside 1..={n}"))),
        };
        let (i, j) = (index(i)?, index(j)?);
        if i >= j {
            return Err(parse_err(no, "entries must satisfy i < j"));
        }
        a.set(i, j, weight(no, v)?);
    }
    Ok(a)
}

/// `rot: v e1 ... ek` per vertex and one `outer: f` per component with a cycle.
pub fn parse_embedding<R: Ring>(g: &OrderedGraph<R>, text: &str) -> Result<Embedding> {
    let mut rotation = vec![Vec::new(); g.n()];
    let mut outer = Vec::new();
    for (no, line) in content_lines(text) {
        if let Some(rest) = line.strip_prefix("rot:") {
            let mut parts = rest.split_whitespace();
            let v = parts.next().ok_or_else(|| parse_err(no, "missing vertex"))?;
            let v = g.vertices().index_of(v).map_err(|e| parse_err(no, e.to_string()))?;
            rotation[v] = parts
                .map(|e| e.parse::<usize>().map_err(|_| parse_err(no, format!("bad edge id `{e}`"))))
                .collect::<Result<_>>()?;
        } else if let Some(rest) = line.strip_prefix("outer:") {
            outer.push(rest.trim().parse().map_err(|_| parse_err(no, format!("bad face id `{}`", rest.trim())))?);
        } else {
            return Err(parse_err(no, "expected `rot:` or `outer:`"));
        }
    }
    Embedding::new(g, rotation, outer)
}

pub fn write_embedding<R: Ring>(g: &OrderedGraph<R>, emb: &Embedding) -> String {
    let mut out = String::new();
    for v in 0..g.n() {
        let ids: Vec<String> = emb.rotation(v).iter().map(|e| e.to_string()).collect();
        writeln!(out, "rot: {} {}", g.label(v), ids.join(" ")).expect("write to string");
    }
    for f in emb.outer_faces() {
        writeln!(out, "outer: {f}").expect("write to string");
    }
    out
}

/// `arc: id tail head` for every edge.
pub fn parse_orientation<R: Ring>(g: &OrderedGraph<R>, text: &str) -> Result<Orientation> {
    let mut forward: Vec<Option<bool>> = vec![None; g.edge_count()];
    for (no, line) in content_lines(text) {
        let rest = line.strip_prefix("arc:").ok_or_else(|| parse_err(no, "expected `arc: id tail head`"))?;
        let parts: Vec<&str> = rest.split_whitespace().collect();
        let [id, tail, head] = parts[..] else {
            return Err(parse_err(no, "expected `arc: id tail head`"));
        };
        let id: usize = id.parse().map_err(|_| parse_err(no, format!("bad edge id `{id}`")))?;
        if id >= g.edge_count() {
            return Err(parse_err(no, format!("edge id {id} out of range")));
        }
        let e = g.edge(id);
        let (t, h) = (g.label(e.u), g.label(e.v));
        forward[id] = Some(match (tail, head) {
            (a, b) if a == t && b == h => true,
            (a, b) if a == h && b == t => false,
            _ => return Err(parse_err(no, format!("edge {id} joins `{t}` and `{h}`"))),
        });
    }
    let forward = forward
        .into_iter()
        .enumerate()
        .map(|(id, f)| f.ok_or_else(|| parse_err(0, format!("edge {id} has no arc"))))
        .collect::<Result<_>>()?;
    Ok(Orientation::new(forward))
}

pub fn write_orientation<R: Ring>(g: &OrderedGraph<R>, xi: &Orientation) -> String {
    let mut out = String::new();
    for id in 0..g.edge_count() {
        let (t, h) = xi.arc(g, id);
        writeln!(out, "arc: {id} {} {}", g.label(t), g.label(h)).expect("write to string");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec, WeightMode};
    use crate::kasteleyn::{kasteleyn_orient, PlaneGraph};
    use num_bigint::BigInt;
    use num_rational::BigRational;

    #[test]
    fn graph_round_trip_is_exact() {
        let text = "vertices: a b c d\nedge: a b 3\nedge: b c -1/2\nedge: c d 7\nedge: d a 1\n";
        let g: OrderedGraph<BigRational> = parse_graph(text).unwrap();
        assert_eq!(write_graph(&g), text);
        assert!(parse_graph::<BigInt>(text).is_err());
        let with_comments = format!("# a square\n\n{text}");
        assert_eq!(write_graph(&parse_graph::<BigRational>(&with_comments).unwrap()), text);
    }

    #[test]
    fn parse_errors_carry_lines() {
        let err = parse_graph::<BigInt>("vertices: a b\nedge: a z 1\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        assert!(parse_skew::<BigInt>("3\n2 1 5\n").is_err());
    }

    #[test]
    fn skew_round_trip() {
        let a: SkewArray<BigInt> = parse_skew("4\n1 2 5\n3 4 -2\n").unwrap();
        assert_eq!(a.to_string(), "4\n1 2 5\n3 4 -2\n");
    }

    #[test]
    fn embedding_and_orientation_round_trip() {
        let fam = generate(&"grid:3,3".parse::<FamilySpec>().unwrap(), &WeightMode::Unit, 0).unwrap();
        let emb = fam.embedding.unwrap();
        let text = write_embedding(&fam.graph, &emb);
        assert_eq!(parse_embedding(&fam.graph, &text).unwrap(), emb);
        let xi = kasteleyn_orient(&PlaneGraph::new(&fam.graph, &emb).unwrap()).unwrap();
        let text = write_orientation(&fam.graph, &xi);
        assert_eq!(parse_orientation(&fam.graph, &text).unwrap(), xi);
    }
}
