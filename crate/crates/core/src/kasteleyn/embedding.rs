//! Combinatorial plane embeddings given by rotation systems.

use crate::error::{Error, Result};
use crate::graph::OrderedGraph;
use crate::ring::Ring;

/// Dart `2e` runs `u -> v` along edge `e = (u, v)`, dart `2e + 1` runs `v -> u`.
pub fn dart(e: usize, reversed: bool) -> usize {
    2 * e + reversed as usize
}

pub fn dart_edge(d: usize) -> usize {
    d / 2
}

pub fn twin(d: usize) -> usize {
    d ^ 1
}

/// Rotation system (incident edges listed counter-clockwise around each vertex) together with
/// one designated outer face per connected component that has edges.
///
/// Faces are traced with the face on the left of every dart, so bounded faces run
/// counter-clockwise and outer faces clockwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    rotation: Vec<Vec<usize>>,
    ends: Vec<(usize, usize)>,
    slot: Vec<[usize; 2]>,
    faces: Vec<Vec<usize>>,
    dart_face: Vec<usize>,
    component: Vec<usize>,
    outer: Vec<usize>,
    is_outer: Vec<bool>,
}

impl Embedding {
    /// `outer` lists face ids (see [`Embedding::faces`]); components with a single face need none.
    pub fn new<R: Ring>(g: &OrderedGraph<R>, rotation: Vec<Vec<usize>>, outer: Vec<usize>) -> Result<Self> {
        let ends: Vec<(usize, usize)> = g.edges().iter().map(|e| (e.u, e.v)).collect();
        let mut emb = Self::traced(g.n(), ends, rotation)?;
        emb.set_outer(outer)?;
        Ok(emb)
    }

    /// Faces only; outer faces still unset.
    fn traced(n: usize, ends: Vec<(usize, usize)>, rotation: Vec<Vec<usize>>) -> Result<Self> {
        if rotation.len() != n {
            return Err(Error::InvalidEmbedding(format!("{} rotations for {n} vertices", rotation.len())));
        }
        let m = ends.len();
        let mut slot = vec![[usize::MAX; 2]; m];
        for (v, rot) in rotation.iter().enumerate() {
            for (k, &e) in rot.iter().enumerate() {
                if e >= m {
                    return Err(Error::InvalidEmbedding(format!("edge {e} out of range at vertex {v}")));
                }
                let side = if ends[e].0 == v {
                    0
                } else if ends[e].1 == v {
                    1
                } else {
                    return Err(Error::InvalidEmbedding(format!("edge {e} is not incident with vertex {v}")));
                };
                if slot[e][side] != usize::MAX {
                    return Err(Error::InvalidEmbedding(format!("edge {e} listed twice at vertex {v}")));
                }
                slot[e][side] = k;
            }
        }
        if let Some(e) = slot.iter().position(|s| s.contains(&usize::MAX)) {
            return Err(Error::InvalidEmbedding(format!("edge {e} missing from a rotation")));
        }
        let component = components(n, &ends);
        let mut emb = Embedding {
            rotation,
            ends,
            slot,
            faces: Vec::new(),
            dart_face: vec![usize::MAX; 2 * m],
            component,
            outer: Vec::new(),
            is_outer: Vec::new(),
        };
        for d in 0..2 * m {
            if emb.dart_face[d] != usize::MAX {
                continue;
            }
            let f = emb.faces.len();
            let mut walk = Vec::new();
            let mut x = d;
            while emb.dart_face[x] == usize::MAX {
                emb.dart_face[x] = f;
                walk.push(x);
                x = emb.next(x);
            }
            emb.faces.push(walk);
        }
        emb.check_euler()?;
        Ok(emb)
    }

    fn check_euler(&self) -> Result<()> {
        let k = self.component.iter().copied().max().map_or(0, |c| c + 1);
        let mut v = vec![0i64; k];
        let mut e = vec![0i64; k];
        let mut f = vec![0i64; k];
        for &c in &self.component {
            v[c] += 1;
        }
        for &(a, _) in &self.ends {
            e[self.component[a]] += 1;
        }
        for walk in &self.faces {
            f[self.component[self.tail(walk[0])]] += 1;
        }
        for c in 0..k {
            if e[c] > 0 && v[c] - e[c] + f[c] != 2 {
                return Err(Error::InvalidEmbedding(format!(
                    "rotation system is not planar (component with V={} E={} F={})",
                    v[c], e[c], f[c]
                )));
            }
        }
        Ok(())
    }

    fn set_outer(&mut self, outer: Vec<usize>) -> Result<()> {
        let k = self.component.iter().copied().max().map_or(0, |c| c + 1);
        let mut chosen = vec![None; k];
        for &f in &outer {
            let walk = self.faces.get(f).ok_or_else(|| Error::InvalidEmbedding(format!("no face {f}")))?;
            let c = self.component[self.tail(walk[0])];
            if chosen[c].replace(f).is_some() {
                return Err(Error::InvalidEmbedding(format!("two outer faces in the component of face {f}")));
            }
        }
        let mut faces_per = vec![Vec::new(); k];
        for (f, walk) in self.faces.iter().enumerate() {
            faces_per[self.component[self.tail(walk[0])]].push(f);
        }
        for c in 0..k {
            match (chosen[c], faces_per[c].len()) {
                (_, 0) => {}
                (None, 1) => chosen[c] = Some(faces_per[c][0]),
                (None, _) => {
                    return Err(Error::InvalidEmbedding("a component has no designated outer face".into()));
                }
                _ => {}
            }
        }
        self.outer = chosen.into_iter().flatten().collect();
        self.outer.sort_unstable();
        self.is_outer = vec![false; self.faces.len()];
        for &f in &self.outer {
            self.is_outer[f] = true;
        }
        Ok(())
    }

    /// Straight-line embedding from vertex coordinates; the clockwise face of each component is outer.
    pub fn from_coordinates<R: Ring>(g: &OrderedGraph<R>, xy: &[(f64, f64)]) -> Result<Self> {
        if xy.len() != g.n() {
            return Err(Error::Dimension(format!("{} coordinates for {} vertices", xy.len(), g.n())));
        }
        let rotation: Vec<Vec<usize>> = (0..g.n())
            .map(|v| {
                let mut inc: Vec<usize> = g.incident(v).to_vec();
                let angle = |e: usize| {
                    let w = g.edge(e).other(v);
                    (xy[w].1 - xy[v].1).atan2(xy[w].0 - xy[v].0)
                };
                inc.sort_by(|&a, &b| angle(a).total_cmp(&angle(b)));
                inc
            })
            .collect();
        let ends = g.edges().iter().map(|e| (e.u, e.v)).collect();
        let mut emb = Self::traced(g.n(), ends, rotation)?;
        let outer: Vec<usize> = (0..emb.faces.len())
            .filter(|&f| {
                let area: f64 = emb.faces[f]
                    .iter()
                    .map(|&d| {
                        let (a, b) = (xy[emb.tail(d)], xy[emb.head(d)]);
                        a.0 * b.1 - b.0 * a.1
                    })
                    .sum();
                area < -1e-9
            })
            .collect();
        // components consisting of a tree have one face and zero area
        emb.set_outer(outer)?;
        Ok(emb)
    }

    /// Mirror image: every rotation reversed; the same regions stay outer.
    pub fn mirrored(&self) -> Embedding {
        let rotation = self.rotation.iter().map(|r| r.iter().rev().copied().collect()).collect();
        let mut emb = Self::traced(self.rotation.len(), self.ends.clone(), rotation).expect("mirror of a valid embedding");
        let outer = self.outer.iter().map(|&f| emb.dart_face[twin(self.faces[f][0])]).collect();
        emb.set_outer(outer).expect("one outer face per component");
        emb
    }

    pub fn tail(&self, d: usize) -> usize {
        let (u, v) = self.ends[dart_edge(d)];
        if d.is_multiple_of(2) {
            u
        } else {
            v
        }
    }

    pub fn head(&self, d: usize) -> usize {
        self.tail(twin(d))
    }

    /// Next dart along the face on the left: clockwise neighbour of the reversed dart at the head.
    pub fn next(&self, d: usize) -> usize {
        let h = self.head(d);
        let e = dart_edge(d);
        let side = if self.ends[e].0 == h { 0 } else { 1 };
        let rot = &self.rotation[h];
        let k = self.slot[e][side];
        let e2 = rot[(k + rot.len() - 1) % rot.len()];
        dart(e2, self.ends[e2].0 != h)
    }

    pub fn rotation(&self, v: usize) -> &[usize] {
        &self.rotation[v]
    }

    pub fn rotations(&self) -> &[Vec<usize>] {
        &self.rotation
    }

    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.ends.len()
    }

    pub fn ends(&self, e: usize) -> (usize, usize) {
        self.ends[e]
    }

    /// Face boundary walks as dart sequences; face ids follow the first dart in increasing order.
    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }

    pub fn face_of(&self, d: usize) -> usize {
        self.dart_face[d]
    }

    pub fn outer_faces(&self) -> &[usize] {
        &self.outer
    }

    pub fn is_outer(&self, f: usize) -> bool {
        self.is_outer[f]
    }

    pub fn component(&self, v: usize) -> usize {
        self.component[v]
    }

    /// Vertex sequence of face `f` (tails of its darts).
    pub fn face_vertices(&self, f: usize) -> Vec<usize> {
        self.faces[f].iter().map(|&d| self.tail(d)).collect()
    }

    /// Whether the embedding belongs to `g` (same vertex count and edge endpoints).
    pub fn fits<R: Ring>(&self, g: &OrderedGraph<R>) -> bool {
        g.n() == self.rotation.len()
            && g.edge_count() == self.ends.len()
            && g.edges().iter().zip(&self.ends).all(|(e, &(u, v))| e.u == u && e.v == v)
    }
}

fn components(n: usize, ends: &[(usize, usize)]) -> Vec<usize> {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        let mut y = x;
        while p[y] != r {
            let nx = p[y];
            p[y] = r;
            y = nx;
        }
        r
    }
    for &(u, v) in ends {
        let (a, b) = (find(&mut parent, u), find(&mut parent, v));
        if a != b {
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut id = vec![usize::MAX; n];
    let mut next = 0;
    (0..n)
        .map(|v| {
            let r = find(&mut parent, v);
            if id[r] == usize::MAX {
                id[r] = next;
                next += 1;
            }
            id[r]
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::OrderedVertexSet;
    use num_bigint::BigInt;

    fn square() -> (OrderedGraph<BigInt>, Vec<(f64, f64)>) {
        let one = || BigInt::from(1);
        let g = OrderedGraph::new(
            OrderedVertexSet::numbered(4),
            vec![(0, 1, one()), (1, 2, one()), (2, 3, one()), (3, 0, one())],
        )
        .unwrap();
        (g, vec![(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)])
    }

    #[test]
    fn square_has_two_faces() {
        let (g, xy) = square();
        let emb = Embedding::from_coordinates(&g, &xy).unwrap();
        assert_eq!(emb.faces().len(), 2);
        assert_eq!(emb.outer_faces().len(), 1);
        let inner = 1 - emb.outer_faces()[0];
        // the bounded face runs counter-clockwise: 1 -> 2 -> 3 -> 4
        let vs = emb.face_vertices(inner);
        let start = vs.iter().position(|&v| v == 0).unwrap();
        assert_eq!(vs[(start + 1) % 4], 1);
        let m = emb.mirrored();
        assert_eq!(m.outer_faces().len(), 1);
        let inner_m = 1 - m.outer_faces()[0];
        let vs = m.face_vertices(inner_m);
        let start = vs.iter().position(|&v| v == 0).unwrap();
        assert_eq!(vs[(start + 1) % 4], 3);
    }

    #[test]
    fn rejects_bad_rotations() {
        let (g, _) = square();
        assert!(Embedding::new(&g, vec![vec![0, 3], vec![0, 1], vec![1, 2], vec![2]], vec![0]).is_err());
        assert!(Embedding::new(&g, vec![vec![0, 3], vec![0, 1], vec![1, 2], vec![2, 3]], vec![]).is_err());
        assert!(Embedding::new(&g, vec![vec![0, 3], vec![0, 1], vec![1, 2], vec![2, 3]], vec![0]).is_ok());
    }

    #[test]
    fn k5_rotation_is_not_planar() {
        let vs = OrderedVertexSet::numbered(5);
        let mut edges = Vec::new();
        for i in 0..5 {
            for j in i + 1..5 {
                edges.push((i, j, BigInt::from(1)));
            }
        }
        let g = OrderedGraph::new(vs, edges).unwrap();
        let rot: Vec<Vec<usize>> = (0..5).map(|v| g.incident(v).to_vec()).collect();
        assert!(matches!(Embedding::new(&g, rot, vec![0]), Err(Error::InvalidEmbedding(_))));
    }
}
