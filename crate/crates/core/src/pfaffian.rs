//! Skew-symmetric arrays and Pfaffians: by definition, by word, by elimination, and the
//! bipartite and semibipartite closed forms.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{precondition, Error, Result};
use crate::graph::{setsum, OrderedGraph, OrderedVertexSet, VertexSubset};
use crate::ring::{Ring, Sign};

/// Largest size accepted by [`pf_definition`] and [`pf_word`].
pub const DEFINITION_MAX: usize = 14;

/// Skew-symmetric array `(a_ij)` with zero diagonal; only the upper triangle is stored.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewArray<R> {
    n: usize,
    upper: Vec<R>,
}

impl<R: Ring> SkewArray<R> {
    pub fn zero(n: usize) -> Self {
        SkewArray { n, upper: vec![R::zero(); n * n.saturating_sub(1) / 2] }
    }

    /// Builds the array from `f(i, j)` for `i < j`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut upper = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for i in 0..n {
            for j in i + 1..n {
                upper.push(f(i, j));
            }
        }
        SkewArray { n, upper }
    }

    /// Entries `a_ij = sum of weights of edges between i and j` for `i < j`.
    pub fn from_graph(g: &OrderedGraph<R>) -> Self {
        let mut a = Self::zero(g.n());
        for e in g.edges() {
            let (i, j) = e.ordered();
            let cur = a.get(i, j);
            a.set(i, j, cur + e.weight.clone());
        }
        a
    }

    /// Checks a full square matrix for skew-symmetry.
    pub fn from_matrix(m: &[Vec<R>]) -> Result<Self> {
        let n = m.len();
        if m.iter().any(|row| row.len() != n) {
            return Err(Error::Dimension("matrix is not square".into()));
        }
        for i in 0..n {
            if !m[i][i].is_zero() {
                return precondition(format!("diagonal entry {} is nonzero", i + 1));
            }
            for j in i + 1..n {
                if m[i][j] != -m[j][i].clone() {
                    return precondition(format!("entries ({},{}) and ({},{}) are not skew", i + 1, j + 1, j + 1, i + 1));
                }
            }
        }
        Ok(Self::from_fn(n, |i, j| m[i][j].clone()))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < j && j < self.n);
        i * self.n - i * (i + 1) / 2 + (j - i - 1)
    }

    pub fn get(&self, i: usize, j: usize) -> R {
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.upper[self.slot(i, j)].clone(),
            std::cmp::Ordering::Greater => -self.upper[self.slot(j, i)].clone(),
            std::cmp::Ordering::Equal => R::zero(),
        }
    }

    /// Sets `a_ij` and implicitly `a_ji = -a_ij`.
    pub fn set(&mut self, i: usize, j: usize, v: R) {
        assert!(i != j, "diagonal of a skew array is zero");
        if i < j {
            let s = self.slot(i, j);
            self.upper[s] = v;
        } else {
            let s = self.slot(j, i);
            self.upper[s] = -v;
        }
    }

    /// Principal subarray on the given indices, in the order given.
    pub fn principal(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), |k, l| self.get(idx[k], idx[l]))
    }

    pub fn restrict(&self, s: &VertexSubset) -> Self {
        self.principal(s.members())
    }

    pub fn to_matrix(&self) -> Vec<Vec<R>> {
        (0..self.n).map(|i| (0..self.n).map(|j| self.get(i, j)).collect()).collect()
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SkewArray<S> {
        SkewArray { n: self.n, upper: self.upper.iter().map(f).collect() }
    }

    /// Complete graph on `1..=n` carrying the nonzero entries as edge weights (edge `i-j`, `i < j`).
    pub fn to_complete_graph(&self) -> OrderedGraph<R> {
        let mut edges = Vec::new();
        for i in 0..self.n {
            for j in i + 1..self.n {
                let w = self.get(i, j);
                if !w.is_zero() {
                    edges.push((i, j, w));
                }
            }
        }
        OrderedGraph::new(OrderedVertexSet::numbered(self.n), edges).expect("indices in range")
    }
}

impl<R: Ring> fmt::Display for SkewArray<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for i in 0..self.n {
            for j in i + 1..self.n {
                let v = self.get(i, j);
                if !v.is_zero() {
                    writeln!(f, "{} {} {}", i + 1, j + 1, v)?;
                }
            }
        }
        Ok(())
    }
}

fn check_pairing(pairs: &[(usize, usize)], support: &VertexSubset) -> Result<Vec<(usize, usize)>> {
    let mut seen = Vec::with_capacity(2 * pairs.len());
    let mut norm = Vec::with_capacity(pairs.len());
    for &(i, j) in pairs {
        if i == j {
            return Err(Error::InvalidPairing(format!("{i} paired with itself")));
        }
        seen.push(i);
        seen.push(j);
        norm.push((i.min(j), i.max(j)));
    }
    let covered = VertexSubset::new(seen.clone());
    if covered.len() != seen.len() {
        return Err(Error::InvalidPairing("an index is used twice".into()));
    }
    if &covered != support {
        return Err(Error::InvalidPairing(format!("pairs cover {covered}, support is {support}")));
    }
    Ok(norm)
}

/// Number of crossing pairs `i < k < j < l` among the blocks `{i,j}`, `{k,l}`.
pub fn crossings(pairs: &[(usize, usize)]) -> usize {
    let norm: Vec<(usize, usize)> = pairs.iter().map(|&(i, j)| (i.min(j), i.max(j))).collect();
    let mut c = 0;
    for (a, &(i, j)) in norm.iter().enumerate() {
        for &(k, l) in &norm[a + 1..] {
            if (i < k && k < j && j < l) || (k < i && i < l && l < j) {
                c += 1;
            }
        }
    }
    c
}

/// `(-1)^crossings` of a perfect matching of `support` (ambient order).
pub fn crossing_sign(pairs: &[(usize, usize)], support: &VertexSubset) -> Result<Sign> {
    let norm = check_pairing(pairs, support)?;
    Ok(Sign::from_parity(crossings(&norm)))
}

/// Sign of the permutation `(i_1, j_1, ..., i_k, j_k)` obtained by listing the pairs
/// `i < j` sorted by first element.
pub fn canonical_sign(pairs: &[(usize, usize)], support: &VertexSubset) -> Result<Sign> {
    let mut norm = check_pairing(pairs, support)?;
    norm.sort_unstable();
    let word: Vec<usize> = norm.iter().flat_map(|&(i, j)| [i, j]).collect();
    Ok(permutation_sign(&word))
}

/// Sign of a sequence of distinct integers as a permutation of its sorted order.
pub fn permutation_sign(word: &[usize]) -> Sign {
    let mut inv = 0;
    for a in 0..word.len() {
        for b in a + 1..word.len() {
            if word[a] > word[b] {
                inv += 1;
            }
        }
    }
    Sign::from_parity(inv)
}

/// Pfaffian as the signed sum over the perfect matchings of `K_n`, `sign = (-1)^crossings`.
///
/// Zero entries prune the search. Capped at [`DEFINITION_MAX`].
pub fn pf_definition<R: Ring>(a: &SkewArray<R>) -> Result<R> {
    if a.n() > DEFINITION_MAX {
        return Err(Error::TooLarge { n: a.n(), max: DEFINITION_MAX });
    }
    if a.n() % 2 == 1 {
        return Ok(R::zero());
    }
    let mut free: Vec<usize> = (0..a.n()).collect();
    Ok(expand(a, &mut free))
}

// Pairing the first free index with the p-th remaining one adds p crossings mod 2.
fn expand<R: Ring>(a: &SkewArray<R>, free: &mut Vec<usize>) -> R {
    if free.is_empty() {
        return R::one();
    }
    let i = free.remove(0);
    let mut total = R::zero();
    for p in 0..free.len() {
        let w = a.get(i, free[p]);
        if w.is_zero() {
            continue;
        }
        let j = free.remove(p);
        let sub = expand(a, free);
        free.insert(p, j);
        if !sub.is_zero() {
            total = total + Sign::from_parity(p).apply(w * sub);
        }
    }
    free.insert(0, i);
    total
}

/// `Pf(a_{w_k w_l})` for a word `w` of indices; repeated letters give zero.
pub fn pf_word<R: Ring>(a: &SkewArray<R>, word: &[usize]) -> Result<R> {
    if let Some(&bad) = word.iter().find(|&&x| x >= a.n()) {
        return Err(Error::VertexOutOfRange { index: bad, len: a.n() });
    }
    pf_definition(&a.principal(word))
}

/// Pfaffian by skew Gaussian elimination over the rationals.
pub fn pf_eliminate<R: Ring>(a: &SkewArray<R>) -> R {
    let q = pf_eliminate_rational(&a.map(Ring::to_rational));
    R::from_rational(&q).expect("Pfaffian of an array over a ring lies in that ring")
}

fn pf_eliminate_rational(a: &SkewArray<BigRational>) -> BigRational {
    let n = a.n();
    if n % 2 == 1 {
        return BigRational::zero();
    }
    let mut m = a.to_matrix();
    let mut result = BigRational::one();
    for k in (0..n).step_by(2) {
        let Some(j) = (k + 1..n).find(|&j| !m[k][j].is_zero()) else {
            return BigRational::zero();
        };
        if j != k + 1 {
            m.swap(k + 1, j);
            for row in m.iter_mut() {
                row.swap(k + 1, j);
            }
            result = -result;
        }
        let p = m[k][k + 1].clone();
        result *= &p;
        for i in k + 2..n {
            for l in i + 1..n {
                let num = &m[k][i] * &m[k + 1][l] - &m[k + 1][i] * &m[k][l];
                if num.is_zero() {
                    continue;
                }
                let v = &m[i][l] - num / &p;
                m[l][i] = -v.clone();
                m[i][l] = v;
            }
        }
    }
    result
}

/// Determinant by Gaussian elimination over the rationals.
pub fn determinant<R: Ring>(m: &[Vec<R>]) -> Result<R> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(Error::Dimension("matrix is not square".into()));
    }
    let mut a: Vec<Vec<BigRational>> = m.iter().map(|r| r.iter().map(Ring::to_rational).collect()).collect();
    let mut det = BigRational::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
            return Ok(R::zero());
        };
        if p != c {
            a.swap(p, c);
            det = -det;
        }
        let piv = a[c][c].clone();
        det *= &piv;
        for r in c + 1..n {
            if a[r][c].is_zero() {
                continue;
            }
            let f = &a[r][c] / &piv;
            for k in c..n {
                let d = &f * &a[c][k];
                a[r][k] -= d;
            }
        }
    }
    Ok(R::from_rational(&det).expect("determinant of a ring matrix lies in that ring"))
}

/// Determinant of a skew array, computed independently of any Pfaffian routine.
pub fn det_skew<R: Ring>(a: &SkewArray<R>) -> R {
    determinant(&a.to_matrix()).expect("square")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PfMethod {
    Definition,
    Eliminate,
}

impl std::str::FromStr for PfMethod {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "definition" => Ok(PfMethod::Definition),
            "eliminate" => Ok(PfMethod::Eliminate),
            _ => Err(Error::Precondition(format!("unknown Pfaffian method `{s}`"))),
        }
    }
}

pub fn pfaffian<R: Ring>(a: &SkewArray<R>, method: PfMethod) -> Result<R> {
    match method {
        PfMethod::Definition => pf_definition(a),
        PfMethod::Eliminate => Ok(pf_eliminate(a)),
    }
}

fn check_partition<R: Ring>(a: &SkewArray<R>, part_a: &VertexSubset, part_b: &VertexSubset) -> Result<()> {
    if !part_a.is_disjoint(part_b) || part_a.union(part_b) != VertexSubset::range(a.n()) {
        return precondition(format!("{part_a} and {part_b} do not partition the index set"));
    }
    for i in part_a.iter() {
        for j in part_a.iter().filter(|&j| j > i) {
            if !a.get(i, j).is_zero() {
                return precondition(format!("entry ({},{}) inside the first part is nonzero", i + 1, j + 1));
            }
        }
    }
    Ok(())
}

fn binom2(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Pfaffian of an array vanishing on `A x A` and `B x B`, for any interleaving of `A` and `B`:
/// `(-1)^(SETSUM(A) - C(m+1,2) + C(m,2)) det(a_{A,B})` when `|A| = |B| = m`, else zero.
pub fn pf_bipartite<R: Ring>(a: &SkewArray<R>, part_a: &VertexSubset, part_b: &VertexSubset) -> Result<R> {
    check_partition(a, part_a, part_b)?;
    check_partition(a, part_b, part_a)?;
    let (m, n) = (part_a.len(), part_b.len());
    if m != n {
        return Ok(R::zero());
    }
    let all = VertexSubset::range(a.n());
    let parity = setsum(part_a, &all)? + binom2(m) + binom2(m + 1);
    let mat: Vec<Vec<R>> = part_a.iter().map(|i| part_b.iter().map(|j| a.get(i, j)).collect()).collect();
    Ok(Sign::from_parity(parity).apply(determinant(&mat)?))
}

/// Pfaffian of an array vanishing on `A x A`, where `A = {1..m}` precedes `B`:
/// `(-1)^m sum over |Y| = m of (-1)^SETSUM(Y, B) Pf(B - Y) det(a_{A,Y})`.
pub fn pf_semibipartite<R: Ring>(a: &SkewArray<R>, part_a: &VertexSubset, part_b: &VertexSubset) -> Result<R> {
    check_partition(a, part_a, part_b)?;
    let m = part_a.len();
    if part_a != &VertexSubset::range(m) {
        return precondition("semibipartite expansion needs the first part to precede the second");
    }
    let mut total = R::zero();
    for y in part_b.subsets_of_size(m) {
        let rest = part_b.difference(&y);
        if rest.len() % 2 == 1 {
            continue;
        }
        let pf_rest = pf_eliminate(&a.restrict(&rest));
        if pf_rest.is_zero() {
            continue;
        }
        let mat: Vec<Vec<R>> = part_a.iter().map(|i| y.iter().map(|j| a.get(i, j)).collect()).collect();
        let sign = Sign::from_parity(m + setsum(&y, part_b)?);
        total = total + sign.apply(pf_rest * determinant(&mat)?);
    }
    Ok(total)
}

/// Integer convenience: skew array from a full integer matrix.
pub fn skew_from_i64(m: &[Vec<i64>]) -> Result<SkewArray<BigInt>> {
    SkewArray::from_matrix(&m.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>()).collect::<Vec<_>>())
}
