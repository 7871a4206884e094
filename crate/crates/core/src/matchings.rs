//! Perfect matching enumeration and generating functions.

use crate::error::{Error, Result};
use crate::graph::{OrderedGraph, VertexSubset};
use crate::pfaffian::crossing_sign;
use crate::ring::{Ring, Sign};

/// Perfect matching as a sorted list of edge ids.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching(Vec<usize>);

impl Matching {
    pub fn from_sorted(mut ids: Vec<usize>) -> Self {
        ids.sort_unstable();
        Matching(ids)
    }

    /// Checks that `ids` is a perfect matching of the subgraph induced by `on`.
    pub fn validated<R: Ring>(g: &OrderedGraph<R>, ids: Vec<usize>, on: &VertexSubset) -> Result<Self> {
        g.check_subset(on)?;
        let mut seen = vec![false; g.n()];
        for &id in &ids {
            g.check_edge(id)?;
            let e = g.edge(id);
            for x in [e.u, e.v] {
                if !on.contains(x) {
                    return Err(Error::InvalidMatching(format!("edge {id} leaves the vertex set")));
                }
                if std::mem::replace(&mut seen[x], true) {
                    return Err(Error::InvalidMatching(format!("vertex `{}` covered twice", g.label(x))));
                }
            }
        }
        if let Some(v) = on.iter().find(|&v| !seen[v]) {
            return Err(Error::InvalidMatching(format!("vertex `{}` uncovered", g.label(v))));
        }
        Ok(Self::from_sorted(ids))
    }

    pub fn edges(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight<R: Ring>(&self, g: &OrderedGraph<R>) -> R {
        g.weight_of(&self.0)
    }

    /// Endpoint pairs `(i, j)` with `i < j`.
    pub fn pairs<R: Ring>(&self, g: &OrderedGraph<R>) -> Vec<(usize, usize)> {
        self.0.iter().map(|&e| g.edge(e).ordered()).collect()
    }

    pub fn covered<R: Ring>(&self, g: &OrderedGraph<R>) -> VertexSubset {
        self.0.iter().flat_map(|&e| [g.edge(e).u, g.edge(e).v]).collect()
    }

    /// `(-1)^crossings` with respect to the vertex order of `g`.
    pub fn sign<R: Ring>(&self, g: &OrderedGraph<R>) -> Sign {
        crossing_sign(&self.pairs(g), &self.covered(g)).expect("a matching is a pairing of its cover")
    }
}

/// Lazy enumeration of the perfect matchings of `G[vertices] - deleted edges`.
///
/// Branches on the lowest uncovered vertex and tries its edges in input order.
pub struct Matchings<'g, R> {
    g: &'g OrderedGraph<R>,
    edge_ok: Vec<bool>,
    covered: Vec<bool>,
    frames: Vec<Frame>,
    state: State,
}

struct Frame {
    v: usize,
    next: usize,
    chosen: Option<usize>,
}

#[derive(PartialEq)]
enum State {
    Descend,
    Advance,
    Done,
}

impl<'g, R: Ring> Matchings<'g, R> {
    pub fn new(g: &'g OrderedGraph<R>, vertices: &VertexSubset, deleted_edges: &[usize]) -> Result<Self> {
        g.check_subset(vertices)?;
        for &e in deleted_edges {
            g.check_edge(e)?;
        }
        let covered: Vec<bool> = vertices.mask(g.n()).into_iter().map(|b| !b).collect();
        let mut edge_ok: Vec<bool> = g.edges().iter().map(|e| !covered[e.u] && !covered[e.v]).collect();
        for &e in deleted_edges {
            edge_ok[e] = false;
        }
        let state = if vertices.len() % 2 == 1 { State::Done } else { State::Descend };
        Ok(Matchings { g, edge_ok, covered, frames: Vec::new(), state })
    }

    pub fn all(g: &'g OrderedGraph<R>) -> Self {
        Self::new(g, &g.vertices().all(), &[]).expect("full vertex set is valid")
    }
}

impl<R: Ring> Iterator for Matchings<'_, R> {
    type Item = Matching;

    fn next(&mut self) -> Option<Matching> {
        loop {
            match self.state {
                State::Done => return None,
                State::Descend => match self.covered.iter().position(|c| !c) {
                    None => {
                        self.state = State::Advance;
                        return Some(Matching::from_sorted(self.frames.iter().filter_map(|f| f.chosen).collect()));
                    }
                    Some(v) => {
                        self.frames.push(Frame { v, next: 0, chosen: None });
                        self.state = State::Advance;
                    }
                },
                State::Advance => {
                    let Some(f) = self.frames.last_mut() else {
                        self.state = State::Done;
                        return None;
                    };
                    if let Some(e) = f.chosen.take() {
                        let e = self.g.edge(e);
                        self.covered[e.u] = false;
                        self.covered[e.v] = false;
                    }
                    let inc = self.g.incident(f.v);
                    let found = (f.next..inc.len()).find(|&j| {
                        let id = inc[j];
                        self.edge_ok[id] && !self.covered[self.g.edge(id).other(f.v)]
                    });
                    match found {
                        Some(j) => {
                            let id = inc[j];
                            f.chosen = Some(id);
                            f.next = j + 1;
                            let e = self.g.edge(id);
                            self.covered[e.u] = true;
                            self.covered[e.v] = true;
                            self.state = State::Descend;
                        }
                        None => {
                            self.frames.pop();
                        }
                    }
                }
            }
        }
    }
}

pub fn enumerate_matchings<R: Ring>(g: &OrderedGraph<R>) -> Vec<Matching> {
    Matchings::all(g).collect()
}

/// Perfect matchings of `G - removed_vertices - removed_edges`.
pub fn enumerate_matchings_without<R: Ring>(
    g: &OrderedGraph<R>,
    removed_vertices: &VertexSubset,
    removed_edges: &[usize],
) -> Result<Vec<Matching>> {
    g.check_subset(removed_vertices)?;
    let keep = g.vertices().all().difference(removed_vertices);
    Ok(Matchings::new(g, &keep, removed_edges)?.collect())
}

/// `M(G)`: sum of matching weights; the number of perfect matchings for unit weights.
pub fn matching_gf<R: Ring>(g: &OrderedGraph<R>) -> R {
    Matchings::all(g).fold(R::zero(), |acc, m| acc + m.weight(g))
}

/// `M(G - V' - E')`.
pub fn matching_gf_without<R: Ring>(
    g: &OrderedGraph<R>,
    removed_vertices: &VertexSubset,
    removed_edges: &[usize],
) -> Result<R> {
    g.check_subset(removed_vertices)?;
    let keep = g.vertices().all().difference(removed_vertices);
    Ok(Matchings::new(g, &keep, removed_edges)?.fold(R::zero(), |acc, m| acc + m.weight(g)))
}

/// `M(G[vertices])`.
pub fn matching_gf_on<R: Ring>(g: &OrderedGraph<R>, vertices: &VertexSubset) -> Result<R> {
    Ok(Matchings::new(g, vertices, &[])?.fold(R::zero(), |acc, m| acc + m.weight(g)))
}

pub fn matching_count<R: Ring>(g: &OrderedGraph<R>) -> usize {
    Matchings::all(g).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use num_traits::{One, Zero};

    fn cycle(n: usize) -> OrderedGraph<BigInt> {
        let vs = crate::graph::OrderedVertexSet::numbered(n);
        OrderedGraph::new(vs, (0..n).map(|i| (i, (i + 1) % n, BigInt::from(i as i64 + 2))).collect()).unwrap()
    }

    #[test]
    fn even_cycle_has_two_matchings() {
        let g = cycle(6);
        let ms = enumerate_matchings(&g);
        assert_eq!(ms.len(), 2);
        // weights 2..7 alternate: 2*4*6 + 3*5*7
        assert_eq!(matching_gf(&g), BigInt::from(48 + 105));
        assert_eq!(matching_count(&cycle(5)), 0);
    }

    #[test]
    fn empty_graph_has_the_empty_matching() {
        let g: OrderedGraph<BigInt> = OrderedGraph::new(crate::graph::OrderedVertexSet::numbered(0), vec![]).unwrap();
        assert_eq!(matching_gf(&g), BigInt::one());
        let h = cycle(4);
        assert_eq!(matching_gf_without(&h, &h.vertices().all(), &[]).unwrap(), BigInt::one());
    }

    #[test]
    fn deletions() {
        let g = cycle(4);
        // removing edge 0 leaves the matching {1,3}
        assert_eq!(matching_gf_without(&g, &VertexSubset::empty(), &[0]).unwrap(), BigInt::from(3 * 5));
        let s = VertexSubset::new(vec![0, 1]);
        assert_eq!(matching_gf_without(&g, &s, &[]).unwrap(), BigInt::from(4));
        assert_eq!(matching_gf_without(&g, &VertexSubset::new(vec![0, 2]), &[]).unwrap(), BigInt::zero());
    }

    #[test]
    fn validation_and_sign() {
        let g = cycle(4);
        let all = g.vertices().all();
        assert!(Matching::validated(&g, vec![0, 2], &all).is_ok());
        assert!(Matching::validated(&g, vec![0, 1], &all).is_err());
        assert!(Matching::validated(&g, vec![0], &all).is_err());
        // {1,2},{3,4} has no crossing; {2,3},{4,1} neither
        for m in enumerate_matchings(&g) {
            assert_eq!(m.sign(&g), Sign::Plus);
        }
    }
}
