//! Bicoloured graphs, superpositions of a red and a blue matching, path/cycle decomposition
//! and the colour swap along a path.

use crate::error::{Error, Result};
use crate::graph::{OrderedGraph, VertexSubset};
use crate::matchings::{Matching, Matchings};
use crate::ring::{Ring, Sign};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Colour {
    Red,
    Blue,
}

impl Colour {
    pub fn flip(self) -> Colour {
        match self {
            Colour::Red => Colour::Blue,
            Colour::Blue => Colour::Red,
        }
    }
}

/// `G` with red vertices `r`, blue vertices `b`; red copy is `G - b`, blue copy is `G - r`.
#[derive(Clone, Debug)]
pub struct BicolouredGraph<'g, R> {
    graph: &'g OrderedGraph<R>,
    red: VertexSubset,
    blue: VertexSubset,
}

pub fn build_bicoloured<'g, R: Ring>(
    g: &'g OrderedGraph<R>,
    red: &VertexSubset,
    blue: &VertexSubset,
) -> Result<BicolouredGraph<'g, R>> {
    g.check_subset(red)?;
    g.check_subset(blue)?;
    if !red.is_disjoint(blue) {
        return Err(Error::Precondition(format!("red {red} and blue {blue} overlap")));
    }
    Ok(BicolouredGraph { graph: g, red: red.clone(), blue: blue.clone() })
}

impl<'g, R: Ring> BicolouredGraph<'g, R> {
    pub fn graph(&self) -> &'g OrderedGraph<R> {
        self.graph
    }

    pub fn red(&self) -> &VertexSubset {
        &self.red
    }

    pub fn blue(&self) -> &VertexSubset {
        &self.blue
    }

    pub fn coloured(&self) -> VertexSubset {
        self.red.union(&self.blue)
    }

    /// Vertex set of the red copy, `V - b`.
    pub fn red_side(&self) -> VertexSubset {
        self.graph.vertices().all().difference(&self.blue)
    }

    pub fn blue_side(&self) -> VertexSubset {
        self.graph.vertices().all().difference(&self.red)
    }

    /// All superpositions, red matching outermost, both in enumeration order.
    pub fn superpositions(&self) -> impl Iterator<Item = Superposition> + '_ {
        let blue: Vec<Matching> = Matchings::new(self.graph, &self.blue_side(), &[]).expect("valid subset").collect();
        Matchings::new(self.graph, &self.red_side(), &[]).expect("valid subset").flat_map(move |mu| {
            let blue = blue.clone();
            blue.into_iter().map(move |nu| Superposition {
                red: self.red.clone(),
                blue: self.blue.clone(),
                red_matching: mu.clone(),
                blue_matching: nu,
            })
        })
    }
}

/// Pair `(mu, nu)`: `mu` a perfect matching of `G - b`, `nu` of `G - r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Superposition {
    pub red: VertexSubset,
    pub blue: VertexSubset,
    pub red_matching: Matching,
    pub blue_matching: Matching,
}

/// Alternating path between two coloured vertices; starts at the smaller index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicolouredPath {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, Colour)>,
}

impl BicolouredPath {
    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn end(&self) -> usize {
        *self.vertices.last().expect("paths are nonempty")
    }
}

/// Alternating cycle through white vertices only; a doubled edge gives a 2-cycle.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BicolouredCycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<(usize, Colour)>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Decomposition {
    pub paths: Vec<BicolouredPath>,
    pub cycles: Vec<BicolouredCycle>,
}

/// Result of swapping colours along the path that ends at `x`.
#[derive(Clone, Debug)]
pub struct Swap {
    pub superposition: Superposition,
    /// Other endpoint of the swapped path.
    pub partner: usize,
    /// Whether `x` and its partner had the same colour before the swap.
    pub same_class: bool,
}

impl Superposition {
    pub fn new<R: Ring>(
        g: &OrderedGraph<R>,
        red: VertexSubset,
        blue: VertexSubset,
        red_matching: Vec<usize>,
        blue_matching: Vec<usize>,
    ) -> Result<Self> {
        let bg = build_bicoloured(g, &red, &blue)?;
        let mu = Matching::validated(g, red_matching, &bg.red_side())
            .map_err(|e| Error::InvalidSuperposition(format!("red matching: {e}")))?;
        let nu = Matching::validated(g, blue_matching, &bg.blue_side())
            .map_err(|e| Error::InvalidSuperposition(format!("blue matching: {e}")))?;
        Ok(Superposition { red, blue, red_matching: mu, blue_matching: nu })
    }

    pub fn coloured(&self) -> VertexSubset {
        self.red.union(&self.blue)
    }

    pub fn weight<R: Ring>(&self, g: &OrderedGraph<R>) -> R {
        self.red_matching.weight(g) * self.blue_matching.weight(g)
    }

    /// `sgn(mu) * sgn(nu)`.
    pub fn sign<R: Ring>(&self, g: &OrderedGraph<R>) -> Sign {
        self.red_matching.sign(g) * self.blue_matching.sign(g)
    }

    fn partners<R: Ring>(&self, g: &OrderedGraph<R>) -> [Vec<Option<usize>>; 2] {
        let mut out = [vec![None; g.n()], vec![None; g.n()]];
        for (slot, m) in out.iter_mut().zip([&self.red_matching, &self.blue_matching]) {
            for &e in m.edges() {
                slot[g.edge(e).u] = Some(e);
                slot[g.edge(e).v] = Some(e);
            }
        }
        out
    }

    pub fn decompose<R: Ring>(&self, g: &OrderedGraph<R>) -> Decomposition {
        let partner = self.partners(g);
        let pick = |c: Colour, v: usize| partner[c as usize][v];
        let mut visited = vec![false; g.n()];
        let mut out = Decomposition::default();
        for x in self.coloured().iter() {
            if visited[x] {
                continue;
            }
            let mut colour = if self.red.contains(x) { Colour::Red } else { Colour::Blue };
            let mut path = BicolouredPath { vertices: vec![x], edges: Vec::new() };
            let mut v = x;
            visited[x] = true;
            while let Some(e) = pick(colour, v) {
                v = g.edge(e).other(v);
                visited[v] = true;
                path.vertices.push(v);
                path.edges.push((e, colour));
                colour = colour.flip();
            }
            out.paths.push(path);
        }
        for s in 0..g.n() {
            // vertices outside both matchings (deleted from a host graph) are skipped
            if visited[s] || pick(Colour::Red, s).is_none() || pick(Colour::Blue, s).is_none() {
                continue;
            }
            let mut cycle = BicolouredCycle { vertices: Vec::new(), edges: Vec::new() };
            let (mut v, mut colour) = (s, Colour::Red);
            loop {
                visited[v] = true;
                cycle.vertices.push(v);
                let e = pick(colour, v).expect("white vertices are covered twice");
                cycle.edges.push((e, colour));
                v = g.edge(e).other(v);
                colour = colour.flip();
                if v == s {
                    break;
                }
            }
            out.cycles.push(cycle);
        }
        out
    }

    /// Swaps colours along the path ending at the coloured vertex `x`; both endpoints change class.
    pub fn swap<R: Ring>(&self, g: &OrderedGraph<R>, x: usize) -> Result<Swap> {
        if !self.red.contains(x) && !self.blue.contains(x) {
            let label = if x < g.n() { g.label(x).to_string() } else { x.to_string() };
            return Err(Error::NotColoured(label));
        }
        let d = self.decompose(g);
        let path = d
            .paths
            .iter()
            .find(|p| p.start() == x || p.end() == x)
            .expect("every coloured vertex ends a path");
        let y = if path.start() == x { path.end() } else { path.start() };
        let mut mu: Vec<usize> = self.red_matching.edges().to_vec();
        let mut nu: Vec<usize> = self.blue_matching.edges().to_vec();
        for &(e, c) in &path.edges {
            let (from, to) = match c {
                Colour::Red => (&mut mu, &mut nu),
                Colour::Blue => (&mut nu, &mut mu),
            };
            let pos = from.iter().position(|&f| f == e).expect("path edge belongs to its matching");
            from.remove(pos);
            to.push(e);
        }
        let same_class = self.red.contains(x) == self.red.contains(y);
        let (mut red, mut blue) = (self.red.clone(), self.blue.clone());
        for z in [x, y] {
            if self.red.contains(z) {
                red = red.without(z);
                blue = blue.with(z);
            } else {
                blue = blue.without(z);
                red = red.with(z);
            }
        }
        Ok(Swap {
            superposition: Superposition {
                red,
                blue,
                red_matching: Matching::from_sorted(mu),
                blue_matching: Matching::from_sorted(nu),
            },
            partner: y,
            same_class,
        })
    }
}

/// Sign relating a superposition to its swap at `x` with partner `y`:
/// `(-1)^(pos(y) - pos(x) + 1)` with positions taken in the coloured set.
pub fn swap_sign(coloured: &VertexSubset, x: usize, y: usize) -> Result<Sign> {
    let px = coloured.position(x).ok_or_else(|| Error::NotColoured(x.to_string()))?;
    let py = coloured.position(y).ok_or_else(|| Error::NotColoured(y.to_string()))?;
    Ok(Sign::from_parity(px.abs_diff(py) + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pfaffian::SkewArray;
    use num_bigint::BigInt;

    fn k(n: usize) -> OrderedGraph<BigInt> {
        SkewArray::from_fn(n, |i, j| BigInt::from((i * n + j) as i64 + 1)).to_complete_graph()
    }

    #[test]
    fn decomposition_and_swap_on_k6() {
        let g = k(6);
        let red = VertexSubset::new(vec![0]);
        let blue = VertexSubset::new(vec![5]);
        let bg = build_bicoloured(&g, &red, &blue).unwrap();
        let all: Vec<Superposition> = bg.superpositions().collect();
        // red side has 5 vertices: no matchings
        assert!(all.is_empty());
        let red = VertexSubset::new(vec![0, 1]);
        let blue = VertexSubset::new(vec![4, 5]);
        let bg = build_bicoloured(&g, &red, &blue).unwrap();
        let all: Vec<Superposition> = bg.superpositions().collect();
        assert_eq!(all.len(), 9);
        for s in &all {
            let d = s.decompose(&g);
            assert_eq!(d.paths.len(), 2);
            for x in s.coloured().iter() {
                let sw = s.swap(&g, x).unwrap();
                let back = sw.superposition.swap(&g, sw.partner).unwrap();
                assert_eq!(back.superposition, *s);
                assert_eq!(sw.superposition.weight(&g), s.weight(&g));
                let law = swap_sign(&s.coloured(), x, sw.partner).unwrap();
                assert_eq!(s.sign(&g), law * sw.superposition.sign(&g));
            }
        }
        assert!(all[0].swap(&g, 2).is_err());
    }

    #[test]
    fn doubled_edge_is_a_two_cycle() {
        let g = k(4);
        let e01 = g.edges_between(0, 1).next().unwrap();
        let e23 = g.edges_between(2, 3).next().unwrap();
        let s = Superposition::new(&g, VertexSubset::empty(), VertexSubset::empty(), vec![e01, e23], vec![e01, e23]).unwrap();
        let d = s.decompose(&g);
        assert!(d.paths.is_empty());
        assert_eq!(d.cycles.len(), 2);
        assert!(d.cycles.iter().all(|c| c.vertices.len() == 2));
        assert!(Superposition::new(&g, VertexSubset::new(vec![0]), VertexSubset::empty(), vec![e01], vec![]).is_err());
    }
}
