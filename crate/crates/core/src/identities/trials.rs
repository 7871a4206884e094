//! Seeded random trials for every identity; each seed fixes the instance completely.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{
    check_ciucu, check_ciucu1996, check_edge_condensation, check_general_srinivasan, check_krattenthaler, check_kuo,
    check_lemma_yyz, check_ohta, check_sign_preserving, check_srinivasan, check_tanner, witness_ohta, witness_tanner,
    IdentityReport, InvolutionWitness, KrattVariant,
};
use crate::error::{precondition, Error, Result};
use crate::families::{generate, nonzero_in, Family, FamilySpec, WeightMode};
use crate::graph::{OrderedGraph, VertexSubset};
use crate::kasteleyn::PlaneGraph;
use crate::pfaffian::{PfMethod, SkewArray};

const LO: i64 = -99;
const HI: i64 = 99;
/// Largest `n` for which the superposition witness is attached to Tanner and Ohta trials.
const WITNESS_MAX: usize = 8;
/// Attempts at drawing an instance with a nonzero side.
const REDRAWS: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IdentityKind {
    Kuo,
    Tanner,
    Ohta,
    Kratt,
    Srinivasan,
    GenSrinivasan,
    SignPreserving,
    Ciucu,
    EdgeCondensation,
}

impl IdentityKind {
    pub const ALL: [IdentityKind; 9] = [
        IdentityKind::Kuo,
        IdentityKind::Tanner,
        IdentityKind::Ohta,
        IdentityKind::Kratt,
        IdentityKind::Srinivasan,
        IdentityKind::GenSrinivasan,
        IdentityKind::SignPreserving,
        IdentityKind::Ciucu,
        IdentityKind::EdgeCondensation,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdentityKind::Kuo => "kuo",
            IdentityKind::Tanner => "tanner",
            IdentityKind::Ohta => "ohta",
            IdentityKind::Kratt => "kratt",
            IdentityKind::Srinivasan => "srinivasan",
            IdentityKind::GenSrinivasan => "gen-srinivasan",
            IdentityKind::SignPreserving => "sign-preserving",
            IdentityKind::Ciucu => "ciucu",
            IdentityKind::EdgeCondensation => "edge-condensation",
        }
    }

    /// Planar kinds take `size` as a vertex budget for the graph pool.
    pub fn is_planar(self) -> bool {
        matches!(self, IdentityKind::Kuo | IdentityKind::SignPreserving | IdentityKind::Ciucu | IdentityKind::EdgeCondensation)
    }

    pub fn default_size(self) -> usize {
        if self.is_planar() {
            16
        } else {
            8
        }
    }
}

impl fmt::Display for IdentityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdentityKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        IdentityKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::Precondition(format!("unknown identity `{s}`")))
    }
}

#[derive(Clone, Debug)]
pub struct TrialOutcome {
    pub kind: IdentityKind,
    pub seed: u64,
    pub report: IdentityReport,
}

impl TrialOutcome {
    pub fn pass(&self) -> bool {
        self.report.pass()
    }
}

impl fmt::Display for TrialOutcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let r = &self.report;
        let verdict = if r.pass() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} {} {} {} {}", r.identity, self.seed, r.descriptor, r.lhs, r.rhs)?;
        if r.sign_flipped() {
            write!(f, " sign-flip")?;
        }
        for p in r.failing_parts() {
            write!(f, " [{}: {} != {}]", p.label, p.lhs, p.rhs)?;
        }
        Ok(())
    }
}

fn random_array(rng: &mut ChaCha8Rng, n: usize) -> SkewArray<BigInt> {
    SkewArray::from_fn(n, |_, _| BigInt::from(nonzero_in(rng, LO, HI)))
}

fn witness_part(report: IdentityReport, w: InvolutionWitness) -> IdentityReport {
    let bad = w.failures.len() + w.fixed_points;
    report.part(format!("involution[{}]", w.objects), BigInt::from(bad), BigInt::from(0))
}

fn tanner(rng: &mut ChaCha8Rng, n: usize) -> Result<IdentityReport> {
    if n < 2 {
        return precondition("tanner needs n >= 2");
    }
    // |alpha| of the parity of n keeps both sides generically nonzero
    let m = rng.gen_range(0..=(n - 2) / 2) * 2 + n % 2;
    let m = m.min(n - 1);
    let a = random_array(rng, n);
    let alpha = VertexSubset::range(m);
    let beta: VertexSubset = (m..n).collect();
    let k = rng.gen_range(1..=beta.len());
    let report = check_tanner(&a, &alpha, &beta, k, PfMethod::Definition)?;
    if n <= WITNESS_MAX {
        return Ok(witness_part(report, witness_tanner(&a, &alpha, &beta, k)?));
    }
    Ok(report)
}

/// Random `alpha`, `beta` from per-index labels: only alpha, only beta, both, neither.
fn random_overlap(rng: &mut ChaCha8Rng, n: usize) -> (VertexSubset, VertexSubset) {
    let labels: Vec<u8> = (0..n).map(|_| rng.gen_range(0..4)).collect();
    let alpha = (0..n).filter(|&i| labels[i] == 0 || labels[i] == 2).collect();
    let beta = (0..n).filter(|&i| labels[i] == 1 || labels[i] == 2).collect();
    (alpha, beta)
}

fn ohta(rng: &mut ChaCha8Rng, n: usize) -> Result<IdentityReport> {
    let a = random_array(rng, n);
    // odd |alpha| and |beta| make every term generically nonzero
    let (mut alpha, mut beta) = random_overlap(rng, n);
    for _ in 0..1000 {
        if alpha.len() % 2 == 1 && beta.len() % 2 == 1 {
            break;
        }
        (alpha, beta) = random_overlap(rng, n);
    }
    let report = check_ohta(&a, &alpha, &beta, PfMethod::Definition)?;
    if n <= WITNESS_MAX {
        return Ok(witness_part(report, witness_ohta(&a, &alpha, &beta)?));
    }
    Ok(report)
}

fn kratt(rng: &mut ChaCha8Rng, n: usize) -> Result<IdentityReport> {
    let variant = *[KrattVariant::OddS, KrattVariant::EvenWeak, KrattVariant::Uniform].choose(rng).expect("nonempty");
    let a = random_array(rng, n);
    for _ in 0..1000 {
        let (alpha, beta) = random_overlap(rng, n);
        let odd = alpha.len() % 2 == 1;
        let ok = match variant {
            KrattVariant::OddS => odd,
            KrattVariant::EvenWeak => !odd && alpha != beta,
            KrattVariant::Uniform => odd || alpha != beta,
        };
        if ok {
            return check_krattenthaler(&a, &alpha, &beta, variant, PfMethod::Eliminate);
        }
    }
    precondition("no admissible alpha, beta found")
}

fn srinivasan(rng: &mut ChaCha8Rng, n: usize) -> Result<IdentityReport> {
    let n = n - n % 2;
    let m = rng.gen_range(0..=n);
    let a = random_array(rng, n);
    check_srinivasan(&a, &VertexSubset::range(m), &(m..n).collect())
}

fn gen_srinivasan(rng: &mut ChaCha8Rng, n: usize) -> Result<IdentityReport> {
    let n = n.min(8);
    let a = random_array(rng, n);
    let labels: Vec<u8> = (0..n).map(|_| rng.gen_range(0..3)).collect();
    let part = |l: u8| (0..n).filter(|&i| labels[i] == l).collect::<VertexSubset>();
    check_general_srinivasan(&a, &part(0), &part(1), &part(2))
}

fn planar_pool(size: usize) -> Vec<FamilySpec> {
    let mut pool = Vec::new();
    for rows in 2..=size {
        for cols in rows..=size {
            if rows * cols <= size && rows * cols % 2 == 0 {
                pool.push(FamilySpec::Grid { rows, cols });
            }
        }
    }
    for order in 1..=size {
        if 2 * order * (order + 1) <= size {
            pool.push(FamilySpec::Aztec { order });
        }
    }
    for n in (4..=size).step_by(2) {
        pool.push(FamilySpec::Cycle { n });
    }
    pool
}

/// A random family instance together with a face walk of at least `need` distinct vertices.
fn planar_instance(rng: &mut ChaCha8Rng, size: usize, need: usize) -> Result<(Family, Vec<usize>)> {
    let pool = planar_pool(size);
    let mut order: Vec<usize> = (0..pool.len()).collect();
    order.shuffle(rng);
    for i in order {
        let fam = generate(&pool[i], &WeightMode::Random { lo: LO, hi: HI }, rng.gen())?;
        let emb = fam.embedding.as_ref().expect("planar families carry embeddings");
        let walks: Vec<Vec<usize>> = (0..emb.faces().len())
            .map(|f| {
                let mut seen = Vec::new();
                for v in emb.face_vertices(f) {
                    if !seen.contains(&v) {
                        seen.push(v);
                    }
                }
                seen
            })
            .filter(|w| w.len() >= need)
            .collect();
        if let Some(walk) = walks.choose(rng) {
            let mut walk = walk.clone();
            let shift = rng.gen_range(0..walk.len());
            walk.rotate_left(shift);
            if rng.gen() {
                walk.reverse();
            }
            return Ok((fam, walk));
        }
    }
    precondition(format!("no planar instance with a face of {need} vertices within {size} vertices"))
}

/// `count` walk vertices in cyclic order.
fn on_walk(rng: &mut ChaCha8Rng, walk: &[usize], count: usize) -> Vec<usize> {
    let mut idx = rand::seq::index::sample(rng, walk.len(), count).into_vec();
    idx.sort_unstable();
    idx.into_iter().map(|i| walk[i]).collect()
}

fn split(cyc: &[usize]) -> (Vec<usize>, Vec<usize>) {
    (cyc.iter().step_by(2).copied().collect(), cyc.iter().skip(1).step_by(2).copied().collect())
}

fn with_family(fam: &Family, report: IdentityReport) -> IdentityReport {
    IdentityReport { descriptor: format!("{};{}", fam.spec, report.descriptor), ..report }
}

fn kuo(rng: &mut ChaCha8Rng, size: usize) -> Result<IdentityReport> {
    let (fam, walk) = planar_instance(rng, size, 4)?;
    let emb = fam.embedding.as_ref().expect("embedding");
    let pg = PlaneGraph::new(&fam.graph, emb)?;
    let v = on_walk(rng, &walk, 4);
    Ok(with_family(&fam, check_kuo(&pg, [v[0], v[1], v[2], v[3]])?))
}

fn sign_preserving(rng: &mut ChaCha8Rng, size: usize) -> Result<IdentityReport> {
    let k = rng.gen_range(1..=3);
    let (fam, walk) = planar_instance(rng, size, 2 * k)?;
    let emb = fam.embedding.as_ref().expect("embedding");
    let pg = PlaneGraph::new(&fam.graph, emb)?;
    let (red, blue) = split(&on_walk(rng, &walk, 2 * k));
    let x: VertexSubset = red.iter().copied().filter(|_| rng.gen()).collect();
    Ok(with_family(&fam, check_sign_preserving(&pg, &red, &blue, &x)?))
}

fn ciucu(rng: &mut ChaCha8Rng, size: usize) -> Result<IdentityReport> {
    for _ in 0..100 {
        let k = rng.gen_range(1..=2);
        let (fam, walk) = planar_instance(rng, size, 2 * k)?;
        let colour = fam.graph.two_colouring().expect("pool graphs are bipartite");
        let cyc = on_walk(rng, &walk, 2 * k);
        if cyc.iter().filter(|&&v| colour[v]).count() != k {
            continue;
        }
        let emb = fam.embedding.as_ref().expect("embedding");
        let pg = PlaneGraph::new(&fam.graph, emb)?;
        let (red, blue) = split(&cyc);
        return Ok(with_family(&fam, check_ciucu(&pg, &red, &blue)?));
    }
    precondition("no balanced colouring found")
}

/// Random complete graph with `k` pairs adjacent in the vertex order and `white` other vertices.
fn adjacent_pairs(rng: &mut ChaCha8Rng, k: usize, white: usize) -> (OrderedGraph<BigInt>, Vec<(usize, usize)>) {
    let mut slots = vec![false; white];
    for _ in 0..k {
        let at = rng.gen_range(0..=slots.len());
        slots.insert(at, true);
    }
    let mut pairs = Vec::new();
    let mut pos = 0;
    for is_pair in slots {
        if is_pair {
            pairs.push((pos, pos + 1));
            pos += 2;
        } else {
            pos += 1;
        }
    }
    (random_array(rng, pos).to_complete_graph(), pairs)
}

/// Random complete graph with `k` vertex-disjoint pairs that do not cross in the vertex order.
fn noncrossing_pairs(rng: &mut ChaCha8Rng, n: usize, k: usize) -> (OrderedGraph<BigInt>, Vec<(usize, usize)>) {
    let g = random_array(rng, n).to_complete_graph();
    loop {
        let pick = rand::seq::index::sample(rng, n, 2 * k).into_vec();
        let pairs: Vec<(usize, usize)> = pick.chunks(2).map(|c| (c[0].min(c[1]), c[0].max(c[1]))).collect();
        let crossing = pairs.iter().any(|&(a, b)| pairs.iter().any(|&(c, d)| a < c && c < b && b < d));
        if !crossing {
            return (g, pairs);
        }
    }
}

fn edge_condensation(rng: &mut ChaCha8Rng, size: usize) -> Result<IdentityReport> {
    let k = rng.gen_range(1..=2);
    let (fam, walk) = planar_instance(rng, size, 2 * k)?;
    let len = walk.len();
    // edges walk[p] - walk[p + 1]; starts at least two apart around the face
    let starts = loop {
        let mut p = rand::seq::index::sample(rng, len, k).into_vec();
        p.sort_unstable();
        let apart = p.windows(2).all(|w| w[1] - w[0] >= 2) && (k == 1 || p[0] + len - p[k - 1] >= 2);
        if apart {
            break p;
        }
    };
    let pairs: Vec<(usize, usize)> = starts.iter().map(|&p| (walk[p], walk[(p + 1) % len])).collect();
    let in_b: Vec<bool> = (0..k).map(|_| rng.gen()).collect();
    let emb = fam.embedding.as_ref().expect("embedding");
    let pg = PlaneGraph::new(&fam.graph, emb)?;
    let report = with_family(&fam, check_edge_condensation(&pg, &pairs, &in_b)?);

    let yyz_k = rng.gen_range(1..=2);
    let white = *[0, 2, 4].choose(rng).expect("nonempty");
    let (g, yyz_pairs) = adjacent_pairs(rng, yyz_k, white);
    let yyz = check_lemma_yyz(&g, &yyz_pairs)?.to_report();
    let n = *[4, 6].choose(rng).expect("nonempty");
    let sub_k = rng.gen_range(1..=n / 2);
    let (g, sub_pairs) = noncrossing_pairs(rng, n, sub_k);
    let sub = check_ciucu1996(&g, &sub_pairs)?;
    Ok(report.part("lemma-yyz", yyz.lhs, yyz.rhs).part("ciucu1996", sub.lhs, sub.rhs))
}

/// One trial of `kind`; `size` is the ambient `n` for Pfaffian identities and the vertex budget
/// of the graph pool for planar ones.
pub fn run_trial(kind: IdentityKind, seed: u64, size: usize) -> Result<TrialOutcome> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut draw = || match kind {
        IdentityKind::Tanner => tanner(&mut rng, size),
        IdentityKind::Ohta => ohta(&mut rng, size),
        IdentityKind::Kratt => kratt(&mut rng, size),
        IdentityKind::Srinivasan => srinivasan(&mut rng, size),
        IdentityKind::GenSrinivasan => gen_srinivasan(&mut rng, size),
        IdentityKind::Kuo => kuo(&mut rng, size),
        IdentityKind::SignPreserving => sign_preserving(&mut rng, size),
        IdentityKind::Ciucu => ciucu(&mut rng, size),
        IdentityKind::EdgeCondensation => edge_condensation(&mut rng, size),
    };
    // redraw instances where both sides vanish, unless the identity is a vanishing sum
    let mut report = draw()?;
    if !matches!(kind, IdentityKind::Ohta | IdentityKind::Kratt) {
        for _ in 1..REDRAWS {
            if !(report.lhs.is_zero() && report.rhs.is_zero()) {
                break;
            }
            report = draw()?;
        }
    }
    Ok(TrialOutcome { kind, seed, report })
}

/// Trials for seeds `seed, seed + 1, ...`, run in parallel and returned in seed order.
pub fn run_trials(kind: IdentityKind, seed: u64, trials: usize, size: usize) -> Vec<Result<TrialOutcome>> {
    (0..trials as u64)
        .into_par_iter()
        .map(|i| run_trial(kind, seed.wrapping_add(i), size))
        .collect()
}
