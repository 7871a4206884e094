//! Exact checks of overlapping-Pfaffian and graphical-condensation identities on random
//! integer weights, with reports that carry both sides and the witness instance.

mod condensation;
mod overlapping;
mod trials;
mod witness;

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::graph::{OrderedGraph, VertexSubset};
use crate::pfaffian::{pfaffian, PfMethod, SkewArray};
use crate::ring::Ring;

pub use condensation::{
    check_ciucu, check_ciucu1996, check_edge_condensation, check_kuo, check_lemma_yyz, check_planar_weight,
    check_sign_preserving, subdivide_edges, LemmaYyzReport, Subdivision,
};
pub use overlapping::{
    check_general_srinivasan, check_krattenthaler, check_ohta, check_srinivasan, check_tanner, KrattVariant,
};
pub use trials::{run_trial, run_trials, IdentityKind, TrialOutcome};
pub use witness::{witness_ohta, witness_tanner, InvolutionWitness};

/// A secondary equality checked alongside the main one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub label: String,
    pub lhs: BigInt,
    pub rhs: BigInt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: String,
    pub descriptor: String,
    pub lhs: BigInt,
    pub rhs: BigInt,
    pub parts: Vec<Part>,
}

impl IdentityReport {
    pub fn new(identity: impl Into<String>, descriptor: impl Into<String>, lhs: BigInt, rhs: BigInt) -> Self {
        IdentityReport { identity: identity.into(), descriptor: descriptor.into(), lhs, rhs, parts: Vec::new() }
    }

    pub fn part(mut self, label: impl Into<String>, lhs: BigInt, rhs: BigInt) -> Self {
        self.parts.push(Part { label: label.into(), lhs, rhs });
        self
    }

    /// Exact equality of the main sides and of every part.
    pub fn pass(&self) -> bool {
        self.lhs == self.rhs && self.parts.iter().all(|p| p.lhs == p.rhs)
    }

    /// Failure where the main sides agree up to a global sign.
    pub fn sign_flipped(&self) -> bool {
        !self.pass() && !self.lhs.is_zero() && self.lhs == -self.rhs.clone()
    }

    pub fn failing_parts(&self) -> impl Iterator<Item = &Part> {
        self.parts.iter().filter(|p| p.lhs != p.rhs)
    }
}

impl fmt::Display for IdentityReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.pass() { "PASS" } else { "FAIL" };
        write!(f, "{verdict} {} {} {} {}", self.identity, self.descriptor, self.lhs, self.rhs)?;
        if self.sign_flipped() {
            write!(f, " sign-flip")?;
        }
        for p in self.failing_parts() {
            write!(f, " [{}: {} != {}]", p.label, p.lhs, p.rhs)?;
        }
        Ok(())
    }
}

/// Memoized principal Pfaffians of one array, keyed by index bit mask.
pub struct PfCache<'a> {
    array: &'a SkewArray<BigInt>,
    method: PfMethod,
    memo: HashMap<u64, BigInt>,
}

impl<'a> PfCache<'a> {
    pub fn new(array: &'a SkewArray<BigInt>, method: PfMethod) -> Self {
        assert!(array.n() <= 64, "bit-mask cache holds at most 64 indices");
        PfCache { array, method, memo: HashMap::new() }
    }

    pub fn pf(&mut self, s: &VertexSubset) -> BigInt {
        if s.len() % 2 == 1 {
            return BigInt::zero();
        }
        let key = s.bits();
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let v = pfaffian(&self.array.restrict(s), self.method).expect("subset sizes stay within the method's cap");
        self.memo.insert(key, v.clone());
        v
    }
}

/// `1,3,4` style listing of 1-based indices.
pub(crate) fn fmt_indices(s: &VertexSubset) -> String {
    s.iter().map(|v| (v + 1).to_string()).collect::<Vec<_>>().join(",")
}

/// Labels joined by `|`, since labels may contain commas.
pub(crate) fn fmt_labels<R: Ring>(g: &OrderedGraph<R>, vs: impl IntoIterator<Item = usize>) -> String {
    vs.into_iter().map(|v| g.label(v).to_string()).collect::<Vec<_>>().join("|")
}
