//! Plane graphs as views on a root embedding: vertex/edge deletions, cycles, enclosure,
//! interior vertices, blocks and block faces.

use std::collections::VecDeque;

use super::embedding::{dart, dart_edge, twin, Embedding};
use crate::error::{Error, Result};
use crate::graph::{OrderedGraph, VertexSubset};
use crate::matchings::Matchings;
use crate::ring::Ring;

/// Subgraph of an embedded root graph, given by kept-vertex and kept-edge masks.
///
/// Geometry (faces, enclosure) is always taken from the root embedding.
#[derive(Clone, Debug)]
pub struct PlaneGraph<'a, R> {
    graph: &'a OrderedGraph<R>,
    embedding: &'a Embedding,
    vertex_kept: Vec<bool>,
    edge_kept: Vec<bool>,
}

/// Simple closed walk: `edges[i]` joins `vertices[i]` and `vertices[i + 1]` (cyclically).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl Cycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSubset {
        self.vertices.iter().copied().collect()
    }

    pub fn labels<R: Ring>(&self, g: &OrderedGraph<R>) -> Vec<String> {
        self.vertices.iter().map(|&v| g.label(v).to_string()).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BlockKind {
    TwoConnected,
    Bridge,
}

#[derive(Clone, Debug)]
pub struct Block {
    pub kind: BlockKind,
    pub edges: Vec<usize>,
    pub vertices: VertexSubset,
}

#[derive(Clone, Debug)]
pub struct BlockDecomposition {
    pub blocks: Vec<Block>,
    pub cut_vertices: VertexSubset,
    pub isolated: VertexSubset,
}

/// Face walk of a block under the restricted rotation system.
#[derive(Clone, Debug)]
pub struct BlockFace {
    pub darts: Vec<usize>,
    pub cycle: Cycle,
    pub bounded: bool,
}

impl<'a, R: Ring> PlaneGraph<'a, R> {
    pub fn new(graph: &'a OrderedGraph<R>, embedding: &'a Embedding) -> Result<Self> {
        if !embedding.fits(graph) {
            return Err(Error::InvalidEmbedding("embedding does not belong to this graph".into()));
        }
        Ok(PlaneGraph {
            graph,
            embedding,
            vertex_kept: vec![true; graph.n()],
            edge_kept: vec![true; graph.edge_count()],
        })
    }

    pub fn graph(&self) -> &'a OrderedGraph<R> {
        self.graph
    }

    pub fn embedding(&self) -> &'a Embedding {
        self.embedding
    }

    /// `G - S`; incident edges go too.
    pub fn without_vertices(&self, s: &VertexSubset) -> Result<Self> {
        self.graph.check_subset(s)?;
        let mut out = self.clone();
        for v in s.iter() {
            out.vertex_kept[v] = false;
        }
        for (id, e) in self.graph.edges().iter().enumerate() {
            if !out.vertex_kept[e.u] || !out.vertex_kept[e.v] {
                out.edge_kept[id] = false;
            }
        }
        Ok(out)
    }

    pub fn without_edges(&self, ids: &[usize]) -> Result<Self> {
        let mut out = self.clone();
        for &e in ids {
            self.graph.check_edge(e)?;
            out.edge_kept[e] = false;
        }
        Ok(out)
    }

    pub fn vertex_kept(&self, v: usize) -> bool {
        self.vertex_kept[v]
    }

    pub fn edge_kept(&self, e: usize) -> bool {
        self.edge_kept[e]
    }

    pub fn kept_vertices(&self) -> VertexSubset {
        VertexSubset::from_mask(&self.vertex_kept)
    }

    pub fn kept_edges(&self) -> Vec<usize> {
        (0..self.edge_kept.len()).filter(|&e| self.edge_kept[e]).collect()
    }

    pub fn deleted_edges(&self) -> Vec<usize> {
        (0..self.edge_kept.len()).filter(|&e| !self.edge_kept[e]).collect()
    }

    pub fn matchings(&self) -> Matchings<'a, R> {
        Matchings::new(self.graph, &self.kept_vertices(), &self.deleted_edges()).expect("masks fit the graph")
    }

    /// Root faces enclosed by `c`: not reachable from an outer face without crossing an edge of `c`.
    pub fn enclosed_faces(&self, c: &Cycle) -> Vec<bool> {
        let emb = self.embedding;
        let nf = emb.faces().len();
        let mut on_cycle = vec![false; emb.edge_count()];
        for &e in &c.edges {
            on_cycle[e] = true;
        }
        let mut reached = vec![false; nf];
        let mut queue: VecDeque<usize> = emb.outer_faces().iter().copied().collect();
        for &f in emb.outer_faces() {
            reached[f] = true;
        }
        while let Some(f) = queue.pop_front() {
            for &d in &emb.faces()[f] {
                if on_cycle[dart_edge(d)] {
                    continue;
                }
                let g = emb.face_of(twin(d));
                if !reached[g] {
                    reached[g] = true;
                    queue.push_back(g);
                }
            }
        }
        reached.into_iter().map(|r| !r).collect()
    }

    /// Kept vertices strictly inside `c`.
    pub fn interior_vertices(&self, c: &Cycle) -> Vec<usize> {
        let enclosed = self.enclosed_faces(c);
        let on = c.vertex_set();
        (0..self.graph.n())
            .filter(|&v| self.vertex_kept[v] && !on.contains(v))
            .filter(|&v| {
                let rot = self.embedding.rotation(v);
                !rot.is_empty()
                    && rot.iter().all(|&e| {
                        let d = dart(e, self.embedding.ends(e).0 != v);
                        enclosed[self.embedding.face_of(d)]
                    })
            })
            .collect()
    }

    /// Darts of `c` listed so that the enclosed region lies on their right.
    pub fn clockwise_darts(&self, c: &Cycle) -> Vec<usize> {
        let darts: Vec<usize> = c
            .edges
            .iter()
            .zip(&c.vertices)
            .map(|(&e, &v)| dart(e, self.embedding.ends(e).0 != v))
            .collect();
        let enclosed = self.enclosed_faces(c);
        if c.edges.is_empty() || !enclosed[self.embedding.face_of(darts[0])] {
            darts
        } else {
            darts.iter().rev().map(|&d| twin(d)).collect()
        }
    }

    /// Biconnected components of the kept subgraph (edge-based, so parallel edges form blocks).
    pub fn blocks(&self) -> BlockDecomposition {
        let n = self.graph.n();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut timer = 0;
        let mut stack: Vec<usize> = Vec::new();
        let mut blocks = Vec::new();
        let mut cut = vec![false; n];
        for root in 0..n {
            if !self.vertex_kept[root] || disc[root] != usize::MAX {
                continue;
            }
            let mut children = 0;
            self.tarjan(root, None, &mut disc, &mut low, &mut timer, &mut stack, &mut blocks, &mut cut, &mut children);
            if children > 1 {
                cut[root] = true;
            }
        }
        let isolated = (0..n)
            .filter(|&v| self.vertex_kept[v] && self.graph.incident(v).iter().all(|&e| !self.edge_kept[e]))
            .collect();
        BlockDecomposition { blocks, cut_vertices: VertexSubset::from_mask(&cut), isolated }
    }

    #[allow(clippy::too_many_arguments)]
    fn tarjan(
        &self,
        v: usize,
        parent_edge: Option<usize>,
        disc: &mut [usize],
        low: &mut [usize],
        timer: &mut usize,
        stack: &mut Vec<usize>,
        blocks: &mut Vec<Block>,
        cut: &mut [bool],
        root_children: &mut usize,
    ) {
        disc[v] = *timer;
        low[v] = *timer;
        *timer += 1;
        for &e in self.graph.incident(v) {
            if !self.edge_kept[e] || Some(e) == parent_edge {
                continue;
            }
            let w = self.graph.edge(e).other(v);
            if disc[w] == usize::MAX {
                stack.push(e);
                if parent_edge.is_none() {
                    *root_children += 1;
                }
                let mut dummy = 0;
                self.tarjan(w, Some(e), disc, low, timer, stack, blocks, cut, &mut dummy);
                low[v] = low[v].min(low[w]);
                if low[w] >= disc[v] {
                    if parent_edge.is_some() {
                        cut[v] = true;
                    }
                    let mut edges = Vec::new();
                    while let Some(f) = stack.pop() {
                        edges.push(f);
                        if f == e {
                            break;
                        }
                    }
                    edges.sort_unstable();
                    let vertices = edges.iter().flat_map(|&f| [self.graph.edge(f).u, self.graph.edge(f).v]).collect();
                    let kind = if edges.len() == 1 { BlockKind::Bridge } else { BlockKind::TwoConnected };
                    blocks.push(Block { kind, edges, vertices });
                }
            } else if disc[w] < disc[v] {
                stack.push(e);
                low[v] = low[v].min(disc[w]);
            }
        }
    }

    /// Face walks of a 2-connected block under the rotation restricted to its edges.
    pub fn block_faces(&self, block: &Block) -> Result<Vec<BlockFace>> {
        let emb = self.embedding;
        let mut in_block = vec![false; emb.edge_count()];
        for &e in &block.edges {
            in_block[e] = true;
        }
        let restricted: Vec<Vec<usize>> =
            (0..self.graph.n()).map(|v| emb.rotation(v).iter().copied().filter(|&e| in_block[e]).collect()).collect();
        let next = |d: usize| {
            let h = emb.ends(dart_edge(d));
            let head = if d.is_multiple_of(2) { h.1 } else { h.0 };
            let rot = &restricted[head];
            let k = rot.iter().position(|&e| e == dart_edge(d)).expect("edge is in its block");
            let e2 = rot[(k + rot.len() - 1) % rot.len()];
            dart(e2, emb.ends(e2).0 != head)
        };
        let mut seen = vec![false; 2 * emb.edge_count()];
        let mut out = Vec::new();
        for &e in &block.edges {
            for d in [2 * e, 2 * e + 1] {
                if seen[d] {
                    continue;
                }
                let mut darts = Vec::new();
                let mut x = d;
                while !seen[x] {
                    seen[x] = true;
                    darts.push(x);
                    x = next(x);
                }
                let cycle = Cycle {
                    vertices: darts.iter().map(|&d| emb.tail(d)).collect(),
                    edges: darts.iter().map(|&d| dart_edge(d)).collect(),
                };
                if cycle.vertex_set().len() != cycle.vertices.len() {
                    return Err(Error::InvalidEmbedding("block face is not a simple cycle".into()));
                }
                let bounded = self.enclosed_faces(&cycle)[emb.face_of(darts[0])];
                out.push(BlockFace { darts, cycle, bounded });
            }
        }
        if out.iter().filter(|f| !f.bounded).count() != 1 {
            return Err(Error::InvalidEmbedding("block does not have exactly one unbounded face".into()));
        }
        Ok(out)
    }

    /// All simple cycles of the kept subgraph, each once, including 2-cycles of parallel edges.
    pub fn simple_cycles(&self) -> Vec<Cycle> {
        let mut out = Vec::new();
        let n = self.graph.n();
        let mut on_path = vec![false; n];
        for s in 0..n {
            if !self.vertex_kept[s] {
                continue;
            }
            let mut vs = vec![s];
            let mut es = Vec::new();
            on_path[s] = true;
            self.cycles_from(s, &mut vs, &mut es, &mut on_path, &mut out);
            on_path[s] = false;
        }
        out
    }

    fn cycles_from(&self, s: usize, vs: &mut Vec<usize>, es: &mut Vec<usize>, on_path: &mut [bool], out: &mut Vec<Cycle>) {
        let v = *vs.last().unwrap();
        for &e in self.graph.incident(v) {
            if !self.edge_kept[e] || es.last() == Some(&e) {
                continue;
            }
            let w = self.graph.edge(e).other(v);
            if w == s {
                if !es.is_empty() && es[0] < e {
                    let mut edges = es.clone();
                    edges.push(e);
                    out.push(Cycle { vertices: vs.clone(), edges });
                }
            } else if w > s && !on_path[w] {
                on_path[w] = true;
                vs.push(w);
                es.push(e);
                self.cycles_from(s, vs, es, on_path, out);
                es.pop();
                vs.pop();
                on_path[w] = false;
            }
        }
    }

    /// A root face whose boundary meets `vs` in the given cyclic order (either direction).
    pub fn face_with_cyclic_order(&self, vs: &[usize]) -> Option<usize> {
        let emb = self.embedding;
        (0..emb.faces().len()).find(|&f| {
            let walk = emb.face_vertices(f);
            let pos: Option<Vec<usize>> = vs.iter().map(|v| walk.iter().position(|w| w == v)).collect();
            let Some(pos) = pos else { return false };
            let descents = |p: &[usize]| (0..p.len()).filter(|&i| p[i] > p[(i + 1) % p.len()]).count();
            let rev: Vec<usize> = pos.iter().rev().copied().collect();
            pos.len() < 2 || descents(&pos) == 1 || descents(&rev) == 1
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec, WeightMode};

    #[test]
    fn grid_faces_and_blocks() {
        let fam = generate(&"grid:3,3".parse::<FamilySpec>().unwrap(), &WeightMode::Unit, 0).unwrap();
        let emb = fam.embedding.unwrap();
        let pg = PlaneGraph::new(&fam.graph, &emb).unwrap();
        let b = pg.blocks();
        assert_eq!(b.blocks.len(), 1);
        let faces = pg.block_faces(&b.blocks[0]).unwrap();
        assert_eq!(faces.iter().filter(|f| f.bounded).count(), 4);
        let outer = faces.iter().find(|f| !f.bounded).unwrap();
        assert_eq!(pg.interior_vertices(&outer.cycle), vec![4]);
        // 4 unit squares, 4 two-square rectangles, 4 L-shapes, the boundary
        assert_eq!(pg.simple_cycles().len(), 13);
        let cut = pg.without_vertices(&VertexSubset::new(vec![4])).unwrap();
        assert_eq!(cut.blocks().blocks.len(), 1);
        let cut = pg.without_vertices(&VertexSubset::new(vec![1, 4])).unwrap();
        let bd = cut.blocks();
        assert_eq!(bd.blocks.len(), 6);
        assert!(bd.blocks.iter().all(|b| b.kind == BlockKind::Bridge));
    }
}
