//! Kasteleyn orientations: construction, admissibility checks, Kasteleyn matrices and
//! matching counts through a single Pfaffian.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use super::embedding::{dart, dart_edge, twin};
use super::plane::{BlockKind, Cycle, PlaneGraph};
use crate::error::{precondition, Error, Result};
use crate::graph::{OrderedGraph, VertexSubset};
use crate::matchings::Matching;
use crate::pfaffian::{crossing_sign, pf_eliminate, SkewArray};
use crate::ring::{Ring, Sign};
use crate::superposition::Superposition;

/// Orientation of every edge of a root graph: `forward[e]` means `u -> v` for `e = (u, v)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Orientation {
    forward: Vec<bool>,
}

impl Orientation {
    pub fn new(forward: Vec<bool>) -> Self {
        Orientation { forward }
    }

    pub fn forward(&self, e: usize) -> bool {
        self.forward[e]
    }

    pub fn len(&self) -> usize {
        self.forward.len()
    }

    pub fn is_empty(&self) -> bool {
        self.forward.is_empty()
    }

    pub fn flip(&mut self, e: usize) {
        self.forward[e] = !self.forward[e];
    }

    /// Dart along which `e` is oriented.
    pub fn arc_dart(&self, e: usize) -> usize {
        dart(e, !self.forward[e])
    }

    pub fn arc<R: Ring>(&self, g: &OrderedGraph<R>, e: usize) -> (usize, usize) {
        let ed = g.edge(e);
        if self.forward[e] {
            (ed.u, ed.v)
        } else {
            (ed.v, ed.u)
        }
    }

    /// `+1` when edge `e` is oriented away from `from`.
    pub fn edge_sign<R: Ring>(&self, g: &OrderedGraph<R>, e: usize, from: usize) -> Sign {
        if self.arc(g, e).0 == from {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    /// `xi(u, v)` on a vertex pair: `+1` for `u -> v`; `None` without a connecting edge.
    pub fn xi<R: Ring>(&self, g: &OrderedGraph<R>, u: usize, v: usize) -> Result<Option<Sign>> {
        let mut found: Option<(usize, Sign)> = None;
        for e in g.edges_between(u, v) {
            let s = self.edge_sign(g, e, u);
            match found {
                Some((a, t)) if t != s => return Err(Error::ParallelConflict { a, b: e }),
                None => found = Some((e, s)),
                _ => {}
            }
        }
        Ok(found.map(|(_, s)| s))
    }

    /// Errors if two parallel edges among `edges` disagree.
    pub fn check_parallel<R: Ring>(&self, g: &OrderedGraph<R>, edges: &[usize]) -> Result<()> {
        let mut by_pair: std::collections::HashMap<(usize, usize), (usize, bool)> = Default::default();
        for &e in edges {
            let (a, b) = g.edge(e).ordered();
            let dir = self.arc(g, e).0 == a;
            if let Some(&(f, d)) = by_pair.get(&(a, b)) {
                if d != dir {
                    return Err(Error::ParallelConflict { a: f, b: e });
                }
            } else {
                by_pair.insert((a, b), (e, dir));
            }
        }
        Ok(())
    }

    /// Number of edges of a dart sequence whose orientation agrees with the traversal.
    pub fn co_oriented(&self, darts: &[usize]) -> usize {
        darts.iter().filter(|&&d| self.arc_dart(dart_edge(d)) == d).count()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMode {
    /// Bounded contour cycles of every 2-connected block.
    Faces,
    /// Every simple cycle.
    AllCycles,
    /// Every cycle of length above two in a superposition of two perfect matchings.
    SuperpositionCycles,
}

impl FromStr for CheckMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "faces" => Ok(CheckMode::Faces),
            "all" | "all_cycles" => Ok(CheckMode::AllCycles),
            "super" | "superposition_cycles" => Ok(CheckMode::SuperpositionCycles),
            _ => Err(Error::Precondition(format!("unknown check mode `{s}`"))),
        }
    }
}

impl fmt::Display for CheckMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CheckMode::Faces => "faces",
            CheckMode::AllCycles => "all",
            CheckMode::SuperpositionCycles => "super",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub cycle: Vec<String>,
    pub co_oriented: usize,
    pub interior: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibilityReport {
    pub mode: CheckMode,
    pub checked: usize,
    pub violations: Vec<Violation>,
}

impl AdmissibilityReport {
    pub fn is_admissible(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for AdmissibilityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.is_admissible() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} mode={} cycles={} violations={}", self.mode, self.checked, self.violations.len())?;
        for v in &self.violations {
            write!(f, "\n  cycle {} co-oriented={} interior={}", v.cycle.join("-"), v.co_oriented, v.interior)?;
        }
        Ok(())
    }
}

/// Orientation in which every bounded contour cycle of every block has an odd number of
/// clockwise co-oriented edges plus interior vertices.
pub fn kasteleyn_orient<R: Ring>(pg: &PlaneGraph<'_, R>) -> Result<Orientation> {
    let g = pg.graph();
    let mut orientation = Orientation::new(vec![true; g.edge_count()]);
    let mut assigned = vec![false; g.edge_count()];
    for block in pg.blocks().blocks {
        if block.kind == BlockKind::Bridge {
            continue;
        }
        let faces = pg.block_faces(&block)?;
        let mut face_of_dart = std::collections::HashMap::new();
        for (f, face) in faces.iter().enumerate() {
            for &d in &face.darts {
                face_of_dart.insert(d, f);
            }
        }
        let root = faces.iter().position(|f| !f.bounded).expect("one unbounded face");
        let mut parent_edge = vec![None; faces.len()];
        let mut seen = vec![false; faces.len()];
        let mut order = vec![root];
        let mut queue = VecDeque::from([root]);
        seen[root] = true;
        while let Some(f) = queue.pop_front() {
            for &d in &faces[f].darts {
                let h = face_of_dart[&twin(d)];
                if !seen[h] {
                    seen[h] = true;
                    parent_edge[h] = Some(dart_edge(d));
                    order.push(h);
                    queue.push_back(h);
                }
            }
        }
        // each face's dual-tree parent is processed after it, so its parent edge is still free
        for &f in order.iter().skip(1).rev() {
            let face = &faces[f];
            let pe = parent_edge[f].expect("non-root faces have a parent");
            for &d in &face.darts {
                assigned[dart_edge(d)] = true;
            }
            // clockwise traversal of a bounded face walk is the reversed walk
            let cw: Vec<usize> = face.darts.iter().rev().map(|&d| twin(d)).collect();
            let others: Vec<usize> = cw.iter().copied().filter(|&d| dart_edge(d) != pe).collect();
            let parity = orientation.co_oriented(&others) + pg.interior_vertices(&face.cycle).len();
            let pe_cw = *cw.iter().find(|&&d| dart_edge(d) == pe).expect("parent edge on the face");
            let want_co = parity.is_multiple_of(2);
            orientation.forward[pe] = (pe_cw % 2 == 0) == want_co;
        }
    }
    orientation.check_parallel(g, &pg.kept_edges())?;
    Ok(orientation)
}

fn check_cycle<R: Ring>(pg: &PlaneGraph<'_, R>, xi: &Orientation, c: &Cycle) -> Option<Violation> {
    let cw = pg.clockwise_darts(c);
    let e = xi.co_oriented(&cw);
    let p = pg.interior_vertices(c).len();
    (e + p).is_multiple_of(2).then(|| Violation { cycle: c.labels(pg.graph()), co_oriented: e, interior: p })
}

pub fn verify_admissible<R: Ring>(pg: &PlaneGraph<'_, R>, xi: &Orientation, mode: CheckMode) -> Result<AdmissibilityReport> {
    if xi.len() != pg.graph().edge_count() {
        return Err(Error::Dimension(format!("orientation has {} edges, graph {}", xi.len(), pg.graph().edge_count())));
    }
    let mut report = AdmissibilityReport { mode, checked: 0, violations: Vec::new() };
    match mode {
        CheckMode::Faces => {
            for block in pg.blocks().blocks.iter().filter(|b| b.kind == BlockKind::TwoConnected) {
                for face in pg.block_faces(block)?.iter().filter(|f| f.bounded) {
                    report.checked += 1;
                    report.violations.extend(check_cycle(pg, xi, &face.cycle));
                }
            }
        }
        CheckMode::AllCycles => {
            for c in pg.simple_cycles() {
                report.checked += 1;
                report.violations.extend(check_cycle(pg, xi, &c));
            }
        }
        CheckMode::SuperpositionCycles => {
            let g = pg.graph();
            let ms: Vec<Matching> = pg.matchings().collect();
            for (i, mu) in ms.iter().enumerate() {
                for nu in &ms[i + 1..] {
                    let s = Superposition {
                        red: VertexSubset::empty(),
                        blue: VertexSubset::empty(),
                        red_matching: mu.clone(),
                        blue_matching: nu.clone(),
                    };
                    for c in s.decompose(g).cycles.iter().filter(|c| c.vertices.len() > 2) {
                        report.checked += 1;
                        let darts: Vec<usize> = c
                            .edges
                            .iter()
                            .zip(&c.vertices)
                            .map(|(&(e, _), &v)| dart(e, g.edge(e).u != v))
                            .collect();
                        let co = xi.co_oriented(&darts);
                        if co.is_multiple_of(2) {
                            let labels = c.vertices.iter().map(|&v| g.label(v).to_string()).collect();
                            report.violations.push(Violation { cycle: labels, co_oriented: co, interior: 0 });
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

/// `D(G, xi)` over the kept vertices listed in `order`:
/// `d_ij = sum over kept edges between them of (sign of the edge from i to j) * weight`.
pub fn kasteleyn_matrix_in_order<R: Ring>(pg: &PlaneGraph<'_, R>, xi: &Orientation, order: &[usize]) -> Result<SkewArray<R>> {
    let g = pg.graph();
    let mut pos = vec![usize::MAX; g.n()];
    for (k, &v) in order.iter().enumerate() {
        if !pg.vertex_kept(v) {
            return precondition(format!("vertex `{}` is not in the graph", g.label(v)));
        }
        pos[v] = k;
    }
    let mut d = SkewArray::zero(order.len());
    for e in pg.kept_edges() {
        let (t, h) = xi.arc(g, e);
        if pos[t] == usize::MAX || pos[h] == usize::MAX {
            continue;
        }
        let cur = d.get(pos[t], pos[h]);
        d.set(pos[t], pos[h], cur + g.edge(e).weight.clone());
    }
    Ok(d)
}

/// `D(G, xi)` over the kept vertices in their inherited order.
pub fn kasteleyn_matrix<R: Ring>(pg: &PlaneGraph<'_, R>, xi: &Orientation) -> Result<SkewArray<R>> {
    kasteleyn_matrix_in_order(pg, xi, pg.kept_vertices().members())
}

/// Sign of the term of `Pf(D(G, xi))` belonging to `m`, relative to the matching weight.
pub fn term_sign<R: Ring>(g: &OrderedGraph<R>, xi: &Orientation, m: &Matching) -> Sign {
    let pairs = m.pairs(g);
    let cover = m.covered(g);
    let edges: Sign = m.edges().iter().map(|&e| xi.edge_sign(g, e, g.edge(e).ordered().0)).product();
    crossing_sign(&pairs, &cover).expect("matching") * edges
}

/// `M(G)` via one Pfaffian of the Kasteleyn matrix; the global sign is fixed by the first
/// perfect matching in enumeration order.
pub fn count_via_pfaffian<R: Ring>(pg: &PlaneGraph<'_, R>) -> Result<R> {
    let xi = kasteleyn_orient(pg)?;
    let pf = pf_eliminate(&kasteleyn_matrix(pg, &xi)?);
    Ok(match pg.matchings().next() {
        Some(m) => term_sign(pg.graph(), &xi, &m).apply(pf),
        None => pf,
    })
}

/// Admissibility of `xi` on `G - S` where `S` is an even subset of the vertices of a contour cycle.
pub fn inherited_admissibility_check<R: Ring>(
    pg: &PlaneGraph<'_, R>,
    xi: &Orientation,
    contour: &Cycle,
    s: &VertexSubset,
) -> Result<Vec<AdmissibilityReport>> {
    if !s.is_subset_of(&contour.vertex_set()) {
        return precondition("removed vertices must lie on the contour cycle");
    }
    if s.len() % 2 == 1 {
        return precondition("an even number of contour vertices must be removed");
    }
    let sub = pg.without_vertices(s)?;
    Ok(vec![
        verify_admissible(&sub, xi, CheckMode::Faces)?,
        verify_admissible(&sub, xi, CheckMode::SuperpositionCycles)?,
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{generate, FamilySpec, WeightMode};
    use crate::matchings::matching_gf;
    use num_bigint::BigInt;

    fn fam(s: &str) -> crate::families::Family {
        generate(&s.parse::<FamilySpec>().unwrap(), &WeightMode::Unit, 0).unwrap()
    }

    #[test]
    fn grid_counts() {
        for (s, want) in [("grid:2,2", 2), ("grid:4,4", 36), ("grid:3,4", 11), ("cycle:6", 2), ("complete:4", 3)] {
            let f = fam(s);
            let emb = f.embedding.unwrap();
            let pg = PlaneGraph::new(&f.graph, &emb).unwrap();
            assert_eq!(count_via_pfaffian(&pg).unwrap(), BigInt::from(want), "{s}");
        }
    }

    #[test]
    fn orientation_is_admissible_in_every_mode() {
        let f = fam("grid:3,4");
        let emb = f.embedding.unwrap();
        let pg = PlaneGraph::new(&f.graph, &emb).unwrap();
        let xi = kasteleyn_orient(&pg).unwrap();
        for mode in [CheckMode::Faces, CheckMode::AllCycles, CheckMode::SuperpositionCycles] {
            let r = verify_admissible(&pg, &xi, mode).unwrap();
            assert!(r.is_admissible(), "{r}");
            assert!(r.checked > 0);
        }
        let mut bad = xi.clone();
        bad.flip(0);
        assert!(!verify_admissible(&pg, &bad, CheckMode::Faces).unwrap().is_admissible());
    }

    #[test]
    fn all_terms_share_a_sign() {
        let f = fam("aztec:2");
        let emb = f.embedding.unwrap();
        let pg = PlaneGraph::new(&f.graph, &emb).unwrap();
        let xi = kasteleyn_orient(&pg).unwrap();
        let signs: Vec<Sign> = pg.matchings().map(|m| term_sign(&f.graph, &xi, &m)).collect();
        assert_eq!(signs.len(), 8);
        assert!(signs.iter().all(|&s| s == signs[0]));
        let pf = pf_eliminate(&kasteleyn_matrix(&pg, &xi).unwrap());
        assert_eq!(signs[0].apply(pf), matching_gf(&f.graph));
    }

    #[test]
    fn removing_contour_vertices_keeps_admissibility() {
        let f = fam("grid:2,4");
        let emb = f.embedding.unwrap();
        let pg = PlaneGraph::new(&f.graph, &emb).unwrap();
        let xi = kasteleyn_orient(&pg).unwrap();
        let block = &pg.blocks().blocks[0];
        let faces = pg.block_faces(block).unwrap();
        let outer = faces.iter().find(|f| !f.bounded).unwrap();
        let inner = faces.iter().find(|f| f.bounded).unwrap();
        for contour in [&outer.cycle, &inner.cycle] {
            let s = contour.vertex_set();
            for r in inherited_admissibility_check(&pg, &xi, contour, &s).unwrap() {
                assert!(r.is_admissible(), "{r}");
            }
        }
        let odd = VertexSubset::new(vec![inner.cycle.vertices[0]]);
        assert!(inherited_admissibility_check(&pg, &xi, &inner.cycle, &odd).is_err());
    }
}
