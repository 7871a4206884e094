//! Ordered vertex sets, vertex subsets and weighted multigraphs with a fixed vertex order.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::ring::Ring;

/// Finite vertex set with a fixed total order; index `i` is the `i`-th vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedVertexSet {
    labels: Vec<String>,
    index: HashMap<String, usize>,
}

impl OrderedVertexSet {
    pub fn new<I, S>(labels: I) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if l.is_empty() || l.chars().any(char::is_whitespace) {
                return Err(Error::Precondition(format!("invalid vertex label `{l}`")));
            }
            if index.insert(l.clone(), i).is_some() {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        Ok(OrderedVertexSet { labels, index })
    }

    /// Vertices labelled `1..=n`.
    pub fn numbered(n: usize) -> Self {
        Self::new((1..=n).map(|i| i.to_string())).expect("numbered labels are distinct")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn index_of(&self, label: &str) -> Result<usize> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| Error::UnknownLabel(label.to_string()))
    }

    pub fn subset<S: AsRef<str>>(&self, labels: &[S]) -> Result<VertexSubset> {
        labels
            .iter()
            .map(|l| self.index_of(l.as_ref()))
            .collect::<Result<Vec<_>>>()
            .map(VertexSubset::new)
    }

    pub fn all(&self) -> VertexSubset {
        VertexSubset::range(self.len())
    }

    pub fn labels_of(&self, s: &VertexSubset) -> Vec<&str> {
        s.iter().map(|i| self.label(i)).collect()
    }
}

/// Subset of an ordered vertex set, stored as sorted ambient indices.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSubset(Vec<usize>);

impl VertexSubset {
    pub fn new(mut members: Vec<usize>) -> Self {
        members.sort_unstable();
        members.dedup();
        VertexSubset(members)
    }

    pub fn empty() -> Self {
        VertexSubset(Vec::new())
    }

    pub fn range(n: usize) -> Self {
        VertexSubset((0..n).collect())
    }

    pub fn from_mask(mask: &[bool]) -> Self {
        VertexSubset(mask.iter().enumerate().filter(|(_, &b)| b).map(|(i, _)| i).collect())
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSubset((0..64).filter(|i| bits >> i & 1 == 1).collect())
    }

    pub fn members(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = usize> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    /// 1-based position of `v` inside this subset.
    pub fn position(&self, v: usize) -> Option<usize> {
        self.0.binary_search(&v).ok().map(|p| p + 1)
    }

    pub fn largest(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn union(&self, other: &Self) -> Self {
        Self::new(self.0.iter().chain(&other.0).copied().collect())
    }

    pub fn intersection(&self, other: &Self) -> Self {
        VertexSubset(self.iter().filter(|&v| other.contains(v)).collect())
    }

    pub fn difference(&self, other: &Self) -> Self {
        VertexSubset(self.iter().filter(|&v| !other.contains(v)).collect())
    }

    pub fn sym_diff(&self, other: &Self) -> Self {
        self.difference(other).union(&other.difference(self))
    }

    pub fn is_subset_of(&self, other: &Self) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &Self) -> bool {
        self.iter().all(|v| !other.contains(v))
    }

    pub fn with(&self, v: usize) -> Self {
        let mut m = self.0.clone();
        m.push(v);
        Self::new(m)
    }

    pub fn without(&self, v: usize) -> Self {
        VertexSubset(self.iter().filter(|&x| x != v).collect())
    }

    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut m = vec![false; n];
        for v in self.iter() {
            m[v] = true;
        }
        m
    }

    /// Bit mask; callers guarantee every member is below 64.
    pub fn bits(&self) -> u64 {
        self.iter().fold(0u64, |acc, v| acc | 1 << v)
    }

    /// All subsets of this subset, in bit-mask order.
    pub fn subsets(&self) -> impl Iterator<Item = VertexSubset> + '_ {
        let k = self.len();
        (0u64..1 << k).map(move |m| VertexSubset((0..k).filter(|i| m >> i & 1 == 1).map(|i| self.0[i]).collect()))
    }

    /// Subsets of size `r`, in bit-mask order.
    pub fn subsets_of_size(&self, r: usize) -> impl Iterator<Item = VertexSubset> + '_ {
        self.subsets().filter(move |s| s.len() == r)
    }
}

impl FromIterator<usize> for VertexSubset {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        Self::new(iter.into_iter().collect())
    }
}

impl fmt::Display for VertexSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, v) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// Sum of the 1-based positions of the elements of `x` inside `m`.
pub fn setsum(x: &VertexSubset, m: &VertexSubset) -> Result<usize> {
    x.iter()
        .map(|v| m.position(v).ok_or_else(|| Error::NotSubset(format!("{x} in {m}"))))
        .sum()
}

pub fn sym_diff(a: &VertexSubset, b: &VertexSubset) -> VertexSubset {
    a.sym_diff(b)
}

#[derive(Clone, Debug, PartialEq)]
pub struct Edge<R> {
    pub u: usize,
    pub v: usize,
    pub weight: R,
}

impl<R> Edge<R> {
    pub fn other(&self, x: usize) -> usize {
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }

    /// Endpoints with the smaller index first.
    pub fn ordered(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

/// Loopless weighted multigraph over an ordered vertex set; edge ids are positions in input order.
#[derive(Clone, Debug)]
pub struct OrderedGraph<R> {
    vertices: OrderedVertexSet,
    edges: Vec<Edge<R>>,
    adjacency: Vec<Vec<usize>>,
}

/// Result of an induced deletion, with maps back into the parent graph.
#[derive(Clone, Debug)]
pub struct InducedSubgraph<R> {
    pub graph: OrderedGraph<R>,
    pub vertex_origin: Vec<usize>,
    pub edge_origin: Vec<usize>,
}

impl<R: Ring> OrderedGraph<R> {
    pub fn new(vertices: OrderedVertexSet, edges: Vec<(usize, usize, R)>) -> Result<Self> {
        let n = vertices.len();
        let mut adjacency = vec![Vec::new(); n];
        let mut out = Vec::with_capacity(edges.len());
        for (id, (u, v, weight)) in edges.into_iter().enumerate() {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { index: x, len: n });
                }
            }
            if u == v {
                return Err(Error::Loop(id));
            }
            adjacency[u].push(id);
            adjacency[v].push(id);
            out.push(Edge { u, v, weight });
        }
        Ok(OrderedGraph { vertices, edges: out, adjacency })
    }

    pub fn from_labelled<S: AsRef<str>>(labels: &[S], edges: &[(&str, &str, R)]) -> Result<Self> {
        let vs = OrderedVertexSet::new(labels.iter().map(|s| s.as_ref().to_string()))?;
        let es = edges
            .iter()
            .map(|(a, b, w)| Ok((vs.index_of(a)?, vs.index_of(b)?, w.clone())))
            .collect::<Result<Vec<_>>>()?;
        Self::new(vs, es)
    }

    pub fn vertices(&self) -> &OrderedVertexSet {
        &self.vertices
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge<R>] {
        &self.edges
    }

    pub fn edge(&self, id: usize) -> &Edge<R> {
        &self.edges[id]
    }

    pub fn check_edge(&self, id: usize) -> Result<()> {
        if id < self.edges.len() {
            Ok(())
        } else {
            Err(Error::EdgeOutOfRange { id, len: self.edges.len() })
        }
    }

    /// Incident edge ids of `v`, in input order.
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn edges_between(&self, u: usize, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adjacency[u].iter().copied().filter(move |&e| self.edges[e].other(u) == v)
    }

    pub fn label(&self, v: usize) -> &str {
        self.vertices.label(v)
    }

    /// Product of the weights of the given edges.
    pub fn weight_of(&self, edge_ids: &[usize]) -> R {
        edge_ids.iter().fold(R::one(), |acc, &e| acc * self.edges[e].weight.clone())
    }

    pub fn check_subset(&self, s: &VertexSubset) -> Result<()> {
        match s.largest() {
            Some(m) if m >= self.n() => Err(Error::VertexOutOfRange { index: m, len: self.n() }),
            _ => Ok(()),
        }
    }

    /// `G - S`, keeping vertex order and edge order.
    pub fn induced_delete(&self, s: &VertexSubset) -> Result<OrderedGraph<R>> {
        Ok(self.induced_delete_with_maps(s)?.graph)
    }

    pub fn induced_delete_with_maps(&self, s: &VertexSubset) -> Result<InducedSubgraph<R>> {
        self.check_subset(s)?;
        let keep: Vec<usize> = (0..self.n()).filter(|&v| !s.contains(v)).collect();
        let mut new_index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_index[v] = i;
        }
        let vs = OrderedVertexSet::new(keep.iter().map(|&v| self.label(v).to_string()))?;
        let mut edges = Vec::new();
        let mut edge_origin = Vec::new();
        for (id, e) in self.edges.iter().enumerate() {
            if !s.contains(e.u) && !s.contains(e.v) {
                edges.push((new_index[e.u], new_index[e.v], e.weight.clone()));
                edge_origin.push(id);
            }
        }
        Ok(InducedSubgraph { graph: Self::new(vs, edges)?, vertex_origin: keep, edge_origin })
    }

    /// Same graph with the given edges removed; the remaining edges keep their relative order.
    pub fn delete_edges(&self, ids: &[usize]) -> Result<OrderedGraph<R>> {
        for &id in ids {
            self.check_edge(id)?;
        }
        let edges = self
            .edges
            .iter()
            .enumerate()
            .filter(|(id, _)| !ids.contains(id))
            .map(|(_, e)| (e.u, e.v, e.weight.clone()))
            .collect();
        Self::new(self.vertices.clone(), edges)
    }

    /// Same graph and edge ids, vertices listed in a new order: new vertex `i` is old vertex `order[i]`.
    pub fn reordered(&self, order: &[usize]) -> Result<OrderedGraph<R>> {
        let n = self.n();
        let mut inverse = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n || inverse[v] != usize::MAX {
                return Err(Error::Precondition("reordering is not a permutation".into()));
            }
            inverse[v] = i;
        }
        if order.len() != n {
            return Err(Error::Precondition("reordering is not a permutation".into()));
        }
        let vs = OrderedVertexSet::new(order.iter().map(|&v| self.label(v).to_string()))?;
        let edges = self.edges.iter().map(|e| (inverse[e.u], inverse[e.v], e.weight.clone())).collect();
        Self::new(vs, edges)
    }

    pub fn with_weights(&self, weights: Vec<R>) -> Result<OrderedGraph<R>> {
        if weights.len() != self.edges.len() {
            return Err(Error::Dimension(format!("{} weights for {} edges", weights.len(), self.edges.len())));
        }
        let edges = self.edges.iter().zip(weights).map(|(e, w)| (e.u, e.v, w)).collect();
        Self::new(self.vertices.clone(), edges)
    }

    pub fn map_weights<S: Ring>(&self, f: impl Fn(&R) -> S) -> OrderedGraph<S> {
        let edges = self.edges.iter().map(|e| (e.u, e.v, f(&e.weight))).collect();
        OrderedGraph::new(self.vertices.clone(), edges).expect("same structure")
    }

    /// Proper 2-colouring (`false` for the class of the first vertex of each component), if any.
    pub fn two_colouring(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut colour: Vec<Option<bool>> = vec![None; n];
        for s in 0..n {
            if colour[s].is_some() {
                continue;
            }
            colour[s] = Some(false);
            let mut stack = vec![s];
            while let Some(x) = stack.pop() {
                let cx = colour[x].unwrap();
                for &e in &self.adjacency[x] {
                    let y = self.edges[e].other(x);
                    match colour[y] {
                        None => {
                            colour[y] = Some(!cx);
                            stack.push(y);
                        }
                        Some(cy) if cy == cx => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(colour.into_iter().map(Option::unwrap).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn path4() -> OrderedGraph<BigInt> {
        let one = BigInt::from(1);
        OrderedGraph::from_labelled(
            &["a", "b", "c", "d"],
            &[("a", "b", one.clone()), ("b", "c", BigInt::from(2)), ("c", "d", one)],
        )
        .unwrap()
    }

    #[test]
    fn setsum_positions_are_one_based() {
        let m = VertexSubset::new(vec![1, 3, 5, 7]);
        let x = VertexSubset::new(vec![3, 7]);
        assert_eq!(setsum(&x, &m).unwrap(), 2 + 4);
        assert!(setsum(&VertexSubset::new(vec![2]), &m).is_err());
    }

    #[test]
    fn subset_algebra() {
        let a = VertexSubset::new(vec![0, 1, 2]);
        let b = VertexSubset::new(vec![2, 3]);
        assert_eq!(a.sym_diff(&b), VertexSubset::new(vec![0, 1, 3]));
        assert_eq!(a.intersection(&b), VertexSubset::new(vec![2]));
        assert_eq!(a.subsets().count(), 8);
        assert_eq!(a.subsets_of_size(2).count(), 3);
        assert_eq!(VertexSubset::from_bits(a.bits()), a);
    }

    #[test]
    fn induced_delete_keeps_order() {
        let g = path4();
        let s = g.vertices().subset(&["b"]).unwrap();
        let h = g.induced_delete_with_maps(&s).unwrap();
        assert_eq!(h.graph.vertices().labels(), &["a", "c", "d"]);
        assert_eq!(h.edge_origin, vec![2]);
        assert_eq!(h.graph.edge(0).weight, BigInt::from(1));
        assert!(matches!(g.vertices().subset(&["z"]), Err(Error::UnknownLabel(_))));
    }

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(OrderedVertexSet::new(["a", "a"]).is_err());
        let vs = OrderedVertexSet::numbered(2);
        assert!(OrderedGraph::new(vs, vec![(0, 0, BigInt::from(1))]).is_err());
    }

    #[test]
    fn reorder_and_colouring() {
        let g = path4();
        let r = g.reordered(&[3, 2, 1, 0]).unwrap();
        assert_eq!(r.label(0), "d");
        assert_eq!(r.edge(1).weight, BigInt::from(2));
        assert_eq!(g.two_colouring().unwrap(), vec![false, true, false, true]);
    }
}
