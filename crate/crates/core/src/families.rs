//! Built-in graph families with straight-line embeddings, and edge weight assignment.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{OrderedGraph, OrderedVertexSet};
use crate::kasteleyn::Embedding;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Grid { rows: usize, cols: usize },
    Aztec { order: usize },
    Cycle { n: usize },
    Path { n: usize },
    Complete { n: usize },
}

impl FromStr for FamilySpec {
    type Err = Error;

    /// `grid:R,C`, `aztec:N`, `cycle:N`, `path:N`, `complete:N`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Precondition(format!("unknown family `{s}`"));
        let (kind, params) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<usize> = params
            .split(',')
            .map(|p| p.trim().parse::<usize>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| bad())?;
        let spec = match (kind, nums.as_slice()) {
            ("grid", &[rows, cols]) if rows > 0 && cols > 0 => FamilySpec::Grid { rows, cols },
            ("aztec", &[order]) if order > 0 => FamilySpec::Aztec { order },
            ("cycle", &[n]) if n >= 3 => FamilySpec::Cycle { n },
            ("path", &[n]) if n >= 1 => FamilySpec::Path { n },
            ("complete", &[n]) if n >= 1 => FamilySpec::Complete { n },
            _ => return Err(bad()),
        };
        Ok(spec)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Grid { rows, cols } => write!(f, "grid:{rows},{cols}"),
            FamilySpec::Aztec { order } => write!(f, "aztec:{order}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:{n}"),
            FamilySpec::Path { n } => write!(f, "path:{n}"),
            FamilySpec::Complete { n } => write!(f, "complete:{n}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum WeightMode {
    Unit,
    /// Uniform nonzero integers in `lo..=hi`.
    Random { lo: i64, hi: i64 },
}

impl FromStr for WeightMode {
    type Err = Error;

    /// `unit` or `random:LO,HI`.
    fn from_str(s: &str) -> Result<Self> {
        if s == "unit" {
            return Ok(WeightMode::Unit);
        }
        let bad = || Error::Precondition(format!("unknown weight mode `{s}`"));
        let params = s.strip_prefix("random:").ok_or_else(bad)?;
        let (lo, hi) = params.split_once(',').ok_or_else(bad)?;
        let lo: i64 = lo.trim().parse().map_err(|_| bad())?;
        let hi: i64 = hi.trim().parse().map_err(|_| bad())?;
        if lo > hi || (lo == 0 && hi == 0) {
            return Err(bad());
        }
        Ok(WeightMode::Random { lo, hi })
    }
}

impl WeightMode {
    pub fn draw(&self, count: usize, seed: u64) -> Vec<BigInt> {
        match *self {
            WeightMode::Unit => vec![BigInt::from(1); count],
            WeightMode::Random { lo, hi } => {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                (0..count).map(|_| BigInt::from(nonzero_in(&mut rng, lo, hi))).collect()
            }
        }
    }
}

/// Uniform nonzero integer in `lo..=hi`; the range must contain a nonzero value.
pub fn nonzero_in<G: Rng>(rng: &mut G, lo: i64, hi: i64) -> i64 {
    loop {
        let x = rng.gen_range(lo..=hi);
        if x != 0 {
            return x;
        }
    }
}

#[derive(Clone, Debug)]
pub struct Family {
    pub spec: FamilySpec,
    pub graph: OrderedGraph<BigInt>,
    pub embedding: Option<Embedding>,
}

pub fn generate(spec: &FamilySpec, weights: &WeightMode, seed: u64) -> Result<Family> {
    let (labels, pairs, xy) = skeleton(spec);
    let ws = weights.draw(pairs.len(), seed);
    let vs = OrderedVertexSet::new(labels)?;
    let graph = OrderedGraph::new(vs, pairs.into_iter().zip(ws).map(|((u, v), w)| (u, v, w)).collect())?;
    let embedding = xy.map(|xy| Embedding::from_coordinates(&graph, &xy)).transpose()?;
    Ok(Family { spec: *spec, graph, embedding })
}

type Skeleton = (Vec<String>, Vec<(usize, usize)>, Option<Vec<(f64, f64)>>);

fn skeleton(spec: &FamilySpec) -> Skeleton {
    match *spec {
        FamilySpec::Grid { rows, cols } => {
            let id = |i: usize, j: usize| i * cols + j;
            let mut labels = Vec::new();
            let mut xy = Vec::new();
            for i in 0..rows {
                for j in 0..cols {
                    labels.push(format!("r{}c{}", i + 1, j + 1));
                    xy.push((j as f64, -(i as f64)));
                }
            }
            let mut edges = Vec::new();
            for i in 0..rows {
                for j in 0..cols {
                    if j + 1 < cols {
                        edges.push((id(i, j), id(i, j + 1)));
                    }
                    if i + 1 < rows {
                        edges.push((id(i, j), id(i + 1, j)));
                    }
                }
            }
            (labels, edges, Some(xy))
        }
        FamilySpec::Aztec { order } => {
            let n = order as i64;
            let mut cells: Vec<(i64, i64)> = Vec::new();
            for x in -n..n {
                for y in -n..n {
                    // cell [x, x+1] x [y, y+1]; centre distance |x+1/2| + |y+1/2| <= n
                    if (2 * x + 1).abs() + (2 * y + 1).abs() <= 2 * n {
                        cells.push((x, y));
                    }
                }
            }
            cells.sort_by_key(|&(x, y)| (x + y, x));
            let labels = cells.iter().map(|(x, y)| format!("{x},{y}")).collect();
            let mut edges = Vec::new();
            for a in 0..cells.len() {
                for b in a + 1..cells.len() {
                    let (p, q) = (cells[a], cells[b]);
                    if (p.0 - q.0).abs() + (p.1 - q.1).abs() == 1 {
                        edges.push((a, b));
                    }
                }
            }
            let xy = cells.iter().map(|&(x, y)| (x as f64, y as f64)).collect();
            (labels, edges, Some(xy))
        }
        FamilySpec::Cycle { n } => {
            let labels = (1..=n).map(|i| format!("v{i}")).collect();
            let edges = (0..n).map(|i| if i + 1 < n { (i, i + 1) } else { (0, n - 1) }).collect();
            (labels, edges, Some(circle(n)))
        }
        FamilySpec::Path { n } => {
            let labels = (1..=n).map(|i| format!("v{i}")).collect();
            let edges = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
            (labels, edges, Some((0..n).map(|i| (i as f64, 0.0)).collect()))
        }
        FamilySpec::Complete { n } => {
            let labels = (1..=n).map(|i| format!("v{i}")).collect();
            let mut edges = Vec::new();
            for i in 0..n {
                for j in i + 1..n {
                    edges.push((i, j));
                }
            }
            let xy = match n {
                1..=3 => Some(circle(n)),
                4 => {
                    let mut c = circle(3);
                    c.push((0.0, 0.0));
                    Some(c)
                }
                _ => None,
            };
            (labels, edges, xy)
        }
    }
}

fn circle(n: usize) -> Vec<(f64, f64)> {
    (0..n)
        .map(|i| {
            let t = std::f64::consts::TAU * i as f64 / n as f64;
            (t.cos(), t.sin())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchings::matching_count;

    #[test]
    fn parse_and_display_round_trip() {
        for s in ["grid:2,3", "aztec:2", "cycle:6", "path:4", "complete:4"] {
            assert_eq!(s.parse::<FamilySpec>().unwrap().to_string(), s);
        }
        assert!("grid:2".parse::<FamilySpec>().is_err());
        assert!("cycle:2".parse::<FamilySpec>().is_err());
        assert_eq!("random:1,9".parse::<WeightMode>().unwrap(), WeightMode::Random { lo: 1, hi: 9 });
        assert!("random:0,0".parse::<WeightMode>().is_err());
    }

    #[test]
    fn sizes_and_matching_counts() {
        let count = |s: &str| {
            let f = generate(&s.parse().unwrap(), &WeightMode::Unit, 0).unwrap();
            (f.graph.n(), matching_count(&f.graph))
        };
        assert_eq!(count("grid:2,2"), (4, 2));
        assert_eq!(count("grid:4,4"), (16, 36));
        assert_eq!(count("aztec:1"), (4, 2));
        assert_eq!(count("aztec:2"), (12, 8));
        assert_eq!(count("aztec:3"), (24, 64));
        assert_eq!(count("cycle:8"), (8, 2));
        assert_eq!(count("complete:4"), (4, 3));
        assert_eq!(count("path:4"), (4, 1));
    }

    #[test]
    fn embeddings_exist_where_planar() {
        let emb = |s: &str| generate(&s.parse().unwrap(), &WeightMode::Unit, 0).unwrap().embedding;
        assert_eq!(emb("complete:4").unwrap().faces().len(), 4);
        assert!(emb("complete:5").is_none());
        assert_eq!(emb("path:5").unwrap().faces().len(), 1);
        assert_eq!(emb("aztec:2").unwrap().faces().len(), 2 + 16 - 12);
    }

    #[test]
    fn random_weights_are_nonzero_and_seeded() {
        let m = WeightMode::Random { lo: -2, hi: 2 };
        let a = m.draw(50, 7);
        assert_eq!(a, m.draw(50, 7));
        assert!(a.iter().all(|w| *w != BigInt::from(0)));
    }
}
