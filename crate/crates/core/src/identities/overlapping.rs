//! Tanner, Ohta, Krattenthaler and Srinivasan identities on skew arrays.

use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{fmt_indices, IdentityReport, PfCache};
use crate::error::{precondition, Error, Result};
use crate::graph::{setsum, VertexSubset};
use crate::pfaffian::{pf_bipartite, PfMethod, SkewArray};
use crate::ring::Sign;
use crate::superposition::build_bicoloured;

pub(crate) fn check_range(a: &SkewArray<BigInt>, sets: &[&VertexSubset]) -> Result<()> {
    if a.n() > 64 {
        return precondition("identity checks support at most 64 indices");
    }
    for s in sets {
        if let Some(m) = s.largest().filter(|&m| m >= a.n()) {
            return Err(Error::VertexOutOfRange { index: m, len: a.n() });
        }
    }
    Ok(())
}

/// `Pf(a)Pf(a+b) = (-1)^k sum_{j != k} (-1)^(j-1) Pf(a+{b_k,b_j}) Pf((a+b)-{b_k,b_j})`,
/// with `b_j` the `j`-th element of `beta` in the inherited order.
pub fn check_tanner(
    a: &SkewArray<BigInt>,
    alpha: &VertexSubset,
    beta: &VertexSubset,
    k: usize,
    method: PfMethod,
) -> Result<IdentityReport> {
    check_range(a, &[alpha, beta])?;
    if !alpha.is_disjoint(beta) {
        return precondition("alpha and beta must be disjoint");
    }
    if k == 0 || k > beta.len() {
        return precondition(format!("k = {k} outside 1..={}", beta.len()));
    }
    let mut pf = PfCache::new(a, method);
    let all = alpha.union(beta);
    let bk = beta.members()[k - 1];
    let lhs = pf.pf(alpha) * pf.pf(&all);
    let mut sum = BigInt::zero();
    for (j, bj) in beta.iter().enumerate().map(|(j, b)| (j + 1, b)) {
        if j == k {
            continue;
        }
        let pair = VertexSubset::new(vec![bk, bj]);
        let term = pf.pf(&alpha.union(&pair)) * pf.pf(&all.difference(&pair));
        sum += Sign::from_parity(j - 1).apply(term);
    }
    let rhs = Sign::from_parity(k).apply(sum);
    let desc = format!("n={};alpha={};beta={};k={k}", a.n(), fmt_indices(alpha), fmt_indices(beta));
    Ok(IdentityReport::new("tanner", desc, lhs, rhs))
}

/// `sum_tau (-1)^tau Pf(alpha xor {v_tau}) Pf(beta xor {v_tau}) = 0` over `v_tau` in `alpha xor beta`.
pub fn check_ohta(a: &SkewArray<BigInt>, alpha: &VertexSubset, beta: &VertexSubset, method: PfMethod) -> Result<IdentityReport> {
    check_range(a, &[alpha, beta])?;
    let mut pf = PfCache::new(a, method);
    let delta = alpha.sym_diff(beta);
    let mut lhs = BigInt::zero();
    for (tau, v) in delta.iter().enumerate().map(|(t, v)| (t + 1, v)) {
        let one = VertexSubset::new(vec![v]);
        let term = pf.pf(&alpha.sym_diff(&one)) * pf.pf(&beta.sym_diff(&one));
        lhs += Sign::from_parity(tau).apply(term);
    }
    let desc = format!("n={};alpha={};beta={};t={}", a.n(), fmt_indices(alpha), fmt_indices(beta), delta.len());
    Ok(IdentityReport::new("ohta", desc, lhs, BigInt::zero()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KrattVariant {
    /// `|alpha|` odd: every odd layer `|Y| = 2s + 1` sums to zero.
    OddS,
    /// `|alpha|` even: the sum over all even layers vanishes.
    EvenWeak,
    /// Sum over all subsets of `M`.
    Uniform,
}

impl FromStr for KrattVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "odd_s" => Ok(KrattVariant::OddS),
            "even_weak" => Ok(KrattVariant::EvenWeak),
            "uniform" => Ok(KrattVariant::Uniform),
            _ => Err(Error::Precondition(format!("unknown variant `{s}`"))),
        }
    }
}

impl KrattVariant {
    pub fn name(self) -> &'static str {
        match self {
            KrattVariant::OddS => "odd_s",
            KrattVariant::EvenWeak => "even_weak",
            KrattVariant::Uniform => "uniform",
        }
    }
}

/// Sums of `(-1)^SETSUM(Y, M) Pf(alpha xor Y) Pf(beta xor Y)` over `Y` in `M = alpha xor beta`.
pub fn check_krattenthaler(
    a: &SkewArray<BigInt>,
    alpha: &VertexSubset,
    beta: &VertexSubset,
    variant: KrattVariant,
    method: PfMethod,
) -> Result<IdentityReport> {
    check_range(a, &[alpha, beta])?;
    let m = alpha.sym_diff(beta);
    let odd = alpha.len() % 2 == 1;
    match variant {
        KrattVariant::OddS if !odd => return precondition("odd_s needs |alpha| odd"),
        KrattVariant::EvenWeak if odd => return precondition("even_weak needs |alpha| even"),
        KrattVariant::EvenWeak | KrattVariant::Uniform if !odd && m.is_empty() => {
            return precondition("with |alpha| even the symmetric difference must be nonempty");
        }
        _ => {}
    }
    let mut pf = PfCache::new(a, method);
    let mut layers = vec![BigInt::zero(); m.len() + 1];
    for y in m.subsets() {
        let term = pf.pf(&alpha.sym_diff(&y)) * pf.pf(&beta.sym_diff(&y));
        if term.is_zero() {
            continue;
        }
        layers[y.len()] += Sign::from_parity(setsum(&y, &m)?).apply(term);
    }
    let desc = format!("n={};alpha={};beta={};t={}", a.n(), fmt_indices(alpha), fmt_indices(beta), m.len());
    let name = format!("kratt[{}]", variant.name());
    let report = match variant {
        KrattVariant::OddS => {
            let total: BigInt = layers.iter().skip(1).step_by(2).sum();
            let mut r = IdentityReport::new(name, desc, total, BigInt::zero());
            for (s, layer) in layers.iter().enumerate().skip(1).step_by(2) {
                r = r.part(format!("s={}", s / 2), layer.clone(), BigInt::zero());
            }
            r
        }
        // even layers up to 2 * floor(t / 2) with t = |M|
        KrattVariant::EvenWeak => IdentityReport::new(name, desc, layers.iter().step_by(2).sum(), BigInt::zero()),
        KrattVariant::Uniform => IdentityReport::new(name, desc, layers.iter().sum(), BigInt::zero()),
    };
    Ok(report)
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Bipartite Pfaffian of the principal subarray on `p + q`, keeping only entries across.
fn pf_across(a: &SkewArray<BigInt>, p: &VertexSubset, q: &VertexSubset) -> Result<BigInt> {
    let all = p.union(q);
    let sub = SkewArray::from_fn(all.len(), |i, j| {
        let (x, y) = (all.members()[i], all.members()[j]);
        if p.contains(x) != p.contains(y) {
            a.get(x, y)
        } else {
            BigInt::zero()
        }
    });
    let local = |s: &VertexSubset| s.iter().map(|v| all.position(v).expect("member") - 1).collect::<VertexSubset>();
    pf_bipartite(&sub, &local(p), &local(q))
}

/// Expansion of `Pf(V)` for `V = A then B` in the three cases `m < n`, `m = n`, `m > n`.
pub fn check_srinivasan(a: &SkewArray<BigInt>, part_a: &VertexSubset, part_b: &VertexSubset) -> Result<IdentityReport> {
    check_range(a, &[part_a, part_b])?;
    let (m, n) = (part_a.len(), part_b.len());
    if part_a != &VertexSubset::range(m) || part_b != &VertexSubset::new((m..m + n).collect()) || m + n != a.n() {
        return precondition("vertex set must be A followed by B");
    }
    if (m + n) % 2 == 1 {
        return precondition("|A| + |B| must be even");
    }
    let v = VertexSubset::range(a.n());
    let mut pf = PfCache::new(a, PfMethod::Eliminate);
    let lhs = pf.pf(&v);
    let mut sum = BigInt::zero();
    for x in part_b.subsets().filter(|x| x.len() < n) {
        let bx = part_b.difference(&x);
        let term = pf.pf(&part_a.union(&x)) * pf.pf(&bx);
        sum += Sign::from_parity(setsum(&bx, &v)?).apply(term);
    }
    let mut rhs = -sum;
    let case = match m.cmp(&n) {
        std::cmp::Ordering::Less => "m<n",
        std::cmp::Ordering::Equal => {
            rhs += pf_across(a, part_a, part_b)?;
            "m=n"
        }
        std::cmp::Ordering::Greater => {
            let mut extra = BigInt::zero();
            for y in part_a.subsets_of_size(n) {
                let term = pf.pf(&part_a.difference(&y)) * pf_across(a, part_b, &y)?;
                extra += Sign::from_parity(setsum(&y, part_a)?).apply(term);
            }
            rhs += Sign::from_parity(binom2(n + 1)).apply(extra);
            "m>n"
        }
    };
    let desc = format!("n={};m={m};case={case}", a.n());
    Ok(IdentityReport::new(format!("srinivasan[{case}]"), desc, lhs, rhs))
}

/// Generating function of superpositions where no bicoloured path joins two vertices of `B`,
/// against the Pfaffian sum over `X` in `B`.
pub fn check_general_srinivasan(
    a: &SkewArray<BigInt>,
    red: &VertexSubset,
    blue: &VertexSubset,
    white: &VertexSubset,
) -> Result<IdentityReport> {
    check_range(a, &[red, blue, white])?;
    if !red.is_disjoint(blue) || !red.is_disjoint(white) || !blue.is_disjoint(white) {
        return precondition("R, B and w must be disjoint");
    }
    if red.union(blue).union(white) != VertexSubset::range(a.n()) {
        return precondition("R, B and w must cover the index set");
    }
    let g = a.to_complete_graph();
    let c = red.union(blue);
    let mut f = BigInt::zero();
    for x in blue.subsets() {
        let r = red.union(&x);
        let b = blue.difference(&x);
        let sign_x = Sign::from_parity(setsum(&b, &c)?);
        let bg = build_bicoloured(&g, &r, &b)?;
        for s in bg.superpositions() {
            let ok = s
                .decompose(&g)
                .paths
                .iter()
                .all(|p| !(blue.contains(p.start()) && blue.contains(p.end())));
            if ok {
                f += (sign_x * s.sign(&g)).apply(s.weight(&g));
            }
        }
    }
    let mut pf = PfCache::new(a, PfMethod::Eliminate);
    let mut sum = BigInt::zero();
    for x in blue.subsets() {
        let term = pf.pf(&red.union(white).union(&x)) * pf.pf(&blue.union(white).difference(&x));
        sum += Sign::from_parity(setsum(&x, &c)?).apply(term);
    }
    let rhs = Sign::from_parity(setsum(blue, &c)?).apply(sum);
    let desc = format!("n={};R={};B={};w={}", a.n(), fmt_indices(red), fmt_indices(blue), fmt_indices(white));
    Ok(IdentityReport::new("gen-srinivasan", desc, f, rhs))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pfaffian::pf_definition;

    fn arr(n: usize, seed: i64) -> SkewArray<BigInt> {
        SkewArray::from_fn(n, |i, j| BigInt::from(((i * 31 + j * 17 + 3) as i64 * seed) % 23 - 11))
    }

    fn set(v: &[usize]) -> VertexSubset {
        VertexSubset::new(v.to_vec())
    }

    #[test]
    fn tanner_four_term_form() {
        let a = arr(6, 5);
        let alpha = set(&[0, 1]);
        let pf = |extra: &[usize]| {
            let mut v = alpha.members().to_vec();
            v.extend_from_slice(extra);
            v.sort();
            pf_definition(&a.principal(&v)).unwrap()
        };
        let lhs = pf(&[]) * pf(&[2, 3, 4, 5]) + pf(&[2, 4]) * pf(&[3, 5]);
        let rhs = pf(&[2, 3]) * pf(&[4, 5]) + pf(&[2, 5]) * pf(&[3, 4]);
        assert_eq!(lhs, rhs);
        for k in 1..=4 {
            assert!(check_tanner(&a, &alpha, &set(&[2, 3, 4, 5]), k, PfMethod::Definition).unwrap().pass());
        }
        assert!(check_tanner(&a, &alpha, &set(&[2, 3, 4, 5]), 5, PfMethod::Definition).is_err());
    }

    #[test]
    fn ohta_trivial_and_overlapping() {
        let a = arr(6, 3);
        let r = check_ohta(&a, &set(&[0, 1, 2]), &set(&[0, 1, 2]), PfMethod::Definition).unwrap();
        assert!(r.pass());
        let r = check_ohta(&a, &set(&[0, 1, 2, 3]), &set(&[2, 3, 4, 5]), PfMethod::Definition).unwrap();
        assert!(r.pass(), "{r}");
    }

    #[test]
    fn krattenthaler_variants() {
        let a = arr(7, 13);
        let odd = check_krattenthaler(&a, &set(&[0, 1, 2]), &set(&[2, 3, 4, 5, 6]), KrattVariant::OddS, PfMethod::Eliminate);
        assert!(odd.unwrap().pass());
        let even = check_krattenthaler(&a, &set(&[0, 1]), &set(&[1, 2, 3]), KrattVariant::EvenWeak, PfMethod::Eliminate);
        assert!(even.unwrap().pass());
        assert!(check_krattenthaler(&a, &set(&[0, 1]), &set(&[0, 1]), KrattVariant::Uniform, PfMethod::Eliminate).is_err());
        let same = check_krattenthaler(&a, &set(&[0, 1, 2]), &set(&[0, 1, 2]), KrattVariant::Uniform, PfMethod::Eliminate);
        assert!(same.unwrap().pass());
    }

    #[test]
    fn srinivasan_cases() {
        let a = arr(6, 7);
        for m in 0..=6 {
            let r = check_srinivasan(&a, &VertexSubset::range(m), &VertexSubset::new((m..6).collect())).unwrap();
            assert!(r.pass(), "{r}");
        }
        assert!(check_srinivasan(&a, &set(&[1, 2]), &set(&[0, 3, 4, 5])).is_err());
    }

    #[test]
    fn general_srinivasan_without_white_is_semibipartite() {
        let a = arr(6, 19);
        let red = set(&[0, 1, 2]);
        let blue = set(&[3, 4, 5]);
        let r = check_general_srinivasan(&a, &red, &blue, &VertexSubset::empty()).unwrap();
        assert!(r.pass(), "{r}");
        let semi = SkewArray::from_fn(6, |i, j| if blue.contains(i) && blue.contains(j) { BigInt::zero() } else { a.get(i, j) });
        assert_eq!(r.lhs, pf_definition(&semi).unwrap());
        let r = check_general_srinivasan(&a, &set(&[0, 2]), &set(&[3, 5]), &set(&[1, 4])).unwrap();
        assert!(r.pass(), "{r}");
    }
}
