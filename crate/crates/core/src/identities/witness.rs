//! Sign-reversing involution behind the Ohta and Tanner identities: every superposition is
//! paired with its swap along the path through the pivot vertex of its term.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::overlapping::check_range;
use crate::error::{precondition, Result};
use crate::graph::{OrderedGraph, VertexSubset};
use crate::pfaffian::SkewArray;
use crate::ring::Sign;
use crate::superposition::build_bicoloured;

/// One product `coefficient * Pf(red_side) * Pf(blue_side)` with its pivot vertex.
struct Term {
    coefficient: Sign,
    red_side: VertexSubset,
    blue_side: VertexSubset,
    pivot: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct InvolutionWitness {
    /// Superpositions across all terms.
    pub objects: usize,
    pub fixed_points: usize,
    /// Descriptions of objects whose image is missing, not an involution, or not sign-reversing.
    pub failures: Vec<String>,
    /// Signed total, zero for a valid witness.
    pub total: BigInt,
}

impl InvolutionWitness {
    pub fn holds(&self) -> bool {
        self.fixed_points == 0 && self.failures.is_empty() && self.total.is_zero()
    }
}

fn run(g: &OrderedGraph<BigInt>, terms: &[Term]) -> Result<InvolutionWitness> {
    let all = g.vertices().all();
    let by_pivot: HashMap<usize, usize> = terms.iter().enumerate().map(|(i, t)| (t.pivot, i)).collect();
    let mut out = InvolutionWitness::default();
    for term in terms {
        let red = all.difference(&term.blue_side);
        let blue = all.difference(&term.red_side);
        let bg = build_bicoloured(g, &red, &blue)?;
        for s in bg.superpositions() {
            out.objects += 1;
            let signed = (term.coefficient * s.sign(g)).apply(s.weight(g));
            out.total += signed.clone();
            let swap = s.swap(g, term.pivot)?;
            if swap.partner == term.pivot {
                out.fixed_points += 1;
                continue;
            }
            let Some(&j) = by_pivot.get(&swap.partner) else {
                out.failures.push(format!("no term pivots at {}", swap.partner + 1));
                continue;
            };
            let image = &swap.superposition;
            let target = &terms[j];
            if all.difference(&image.blue) != target.red_side || all.difference(&image.red) != target.blue_side {
                out.failures.push(format!("image of a pivot-{} object leaves its term", term.pivot + 1));
                continue;
            }
            if image.swap(g, swap.partner)?.superposition != s {
                out.failures.push(format!("swap at {} is not an involution", term.pivot + 1));
            }
            let back = (target.coefficient * image.sign(g)).apply(image.weight(g));
            if !(signed + back).is_zero() {
                out.failures.push(format!("pivot {} to {} is not sign-reversing", term.pivot + 1, swap.partner + 1));
            }
        }
    }
    Ok(out)
}

/// Restricts `a` to `gamma` and maps global index sets into local positions.
fn localize<'g>(a: &SkewArray<BigInt>, gamma: &'g VertexSubset) -> (OrderedGraph<BigInt>, impl Fn(&VertexSubset) -> VertexSubset + 'g) {
    let g = a.restrict(gamma).to_complete_graph();
    let map = move |s: &VertexSubset| s.iter().map(|v| gamma.position(v).expect("member") - 1).collect();
    (g, map)
}

/// Witness for `sum_tau (-1)^tau Pf(alpha xor {v_tau}) Pf(beta xor {v_tau}) = 0`.
pub fn witness_ohta(a: &SkewArray<BigInt>, alpha: &VertexSubset, beta: &VertexSubset) -> Result<InvolutionWitness> {
    check_range(a, &[alpha, beta])?;
    let gamma = alpha.union(beta);
    let (g, local) = localize(a, &gamma);
    let (la, lb) = (local(alpha), local(beta));
    let terms: Vec<Term> = la
        .sym_diff(&lb)
        .iter()
        .enumerate()
        .map(|(t, v)| {
            let one = VertexSubset::new(vec![v]);
            Term { coefficient: Sign::from_parity(t + 1), red_side: la.sym_diff(&one), blue_side: lb.sym_diff(&one), pivot: v }
        })
        .collect();
    run(&g, &terms)
}

/// Tanner at index `k` read as the Ohta sum for `alpha + {b_k}` and `(alpha + beta) - {b_k}`.
pub fn witness_tanner(a: &SkewArray<BigInt>, alpha: &VertexSubset, beta: &VertexSubset, k: usize) -> Result<InvolutionWitness> {
    if !alpha.is_disjoint(beta) || k == 0 || k > beta.len() {
        return precondition("alpha and beta must be disjoint and 1 <= k <= |beta|");
    }
    let bk = beta.members()[k - 1];
    witness_ohta(a, &alpha.with(bk), &alpha.union(beta).without(bk))
}
