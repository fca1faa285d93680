//! X-reduced elements of the infinite-rank affine Weyl group, labelled by slices.
//!
//! An X-reduced element `w` is determined by its inversion set `I(w)`, a finite
//! downward-closed subset of the positive roots with δ-coefficient 1. In the GL
//! case that poset is `Z_{>0}²` via `(i, j) ↦ δ + ε_{1−j} − εᵢ`, so slices are
//! partitions. For O the poset is `{(i, j) : i < j}` and for Sp it is
//! `{(i, j) : i ≤ j}`, both via `(i, j) ↦ δ − εᵢ − εⱼ`; slices there are strictly
//! decreasing sequences.

use std::collections::HashSet;

use crate::affine_roots::{
    is_positive_root, is_root, pair_coroot, simple_root, CaseTag, SimpleRootIndex, Weight,
};
use crate::error::Result;
use crate::partitions::{enumerate_partitions, Partition};

/// A GL slice `S_λ`, labelling the X-reduced element `w_λ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SliceGL {
    pub shape: Partition,
}

impl SliceGL {
    pub fn new(shape: Partition) -> Self {
        SliceGL { shape }
    }

    /// Length of `w_λ`, equal to `|I(w_λ)| = |λ|`.
    pub fn length(&self) -> usize {
        self.shape.size()
    }
}

/// A finite set of affine roots.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RootSet {
    roots: HashSet<Weight>,
}

impl RootSet {
    pub fn new() -> Self {
        RootSet::default()
    }

    pub fn insert(&mut self, root: Weight) -> bool {
        self.roots.insert(root)
    }

    pub fn contains(&self, root: &Weight) -> bool {
        self.roots.contains(root)
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Weight> {
        self.roots.iter()
    }

    /// Sum of all members, in the given case's lattice.
    pub fn sum(&self, case: CaseTag) -> Weight {
        self.roots.iter().fold(Weight::zero(case), |acc, r| &acc + r)
    }
}

impl FromIterator<Weight> for RootSet {
    fn from_iter<I: IntoIterator<Item = Weight>>(iter: I) -> Self {
        RootSet { roots: iter.into_iter().collect() }
    }
}

/// `δ + ε_{1−j} − εᵢ`
fn gl_poset_root(i: usize, j: usize) -> Weight {
    Weight::from_eps(CaseTag::GL, [(1 - j as i64, 1), (i as i64, -1)], 0, 1)
}

/// `δ − εᵢ − εⱼ` (which is `δ − 2εᵢ` when `i = j`)
fn orthosymplectic_poset_root(case: CaseTag, i: usize, j: usize) -> Weight {
    Weight::from_eps(case, [(i as i64, -1), (j as i64, -1)], 0, 1)
}

/// `S_λ = { δ + ε_{1−j} − εᵢ : λᵢ ≥ j }`
pub fn inversion_set(s: &SliceGL) -> RootSet {
    s.shape.cells().map(|(i, j)| gl_poset_root(i, j)).collect()
}

/// Whether `r` is the inversion set of an X-reduced element: it contains no
/// root of the finite subsystem and is closed under subtracting positive
/// δ-coefficient-0 roots whenever the difference is again a root.
pub fn is_slice(r: &RootSet) -> bool {
    for alpha in r.iter() {
        if alpha.delta != 1 || !is_positive_root(alpha) {
            return false;
        }
        let Some((lo, hi)) = alpha.eps_range() else { return false };
        // In GL, a β with α − β a root lies inside α's ε-range. In O/Sp, β = εₐ − εᵦ
        // may lower an index of α, so every index from 1 is a candidate.
        let lo = if alpha.case == CaseTag::GL { lo } else { 1 };
        for a in lo..=hi {
            for b in (a + 1)..=hi {
                let beta = Weight::from_eps(alpha.case, [(a, 1), (b, -1)], 0, 0);
                if !is_positive_root(&beta) {
                    continue;
                }
                let diff = alpha - &beta;
                if is_root(&diff) && !r.contains(&diff) {
                    return false;
                }
            }
        }
    }
    true
}

/// `w_λ · 0 = Σ −λᵗᵢ ε_{1−i} + Σ λᵢ εᵢ − |λ| δ`
pub fn dot_zero(s: &SliceGL) -> Weight {
    let lambda = &s.shape;
    let conj = lambda.conjugate();
    let right = conj.parts().iter().enumerate().map(|(i, &c)| (-(i as i64), -(c as i64)));
    let left = lambda.parts().iter().enumerate().map(|(i, &c)| (i as i64 + 1, c as i64));
    Weight::from_eps(CaseTag::GL, left.chain(right), 0, -(lambda.size() as i64))
}

/// The increasing complement of `taken` in `Z_{≥0}`, first `count` entries.
fn complement(taken: &[usize], count: usize) -> Vec<usize> {
    (0..).filter(|x| !taken.contains(x)).take(count).collect()
}

/// Closed form of the dot action `w_λ · φ` for a GL weight `φ`.
///
/// With Frobenius coordinates `(p | q)` of rank `b` and complements `p̄`, `q̄`
/// in `Z_{≥0}`, for `φ = Σ βᵢεᵢ + kΛ₀ + aδ`:
///
/// * `ε_{1−c−b}` gets `β_{−p̄_c} + p̄_c − c − b + 1` for `c ≥ 1`,
/// * `ε_{1−i}` gets `β_{qᵢ+1} − k − i − qᵢ` for `i ≤ b`,
/// * `εᵢ` gets `k + β_{−pᵢ} + i + pᵢ` for `i ≤ b`,
/// * `ε_{b+c}` gets `β_{q̄_c+1} − q̄_c + b + c − 1` for `c ≥ 1`,
/// * `δ` gets `a − (k+1)b + Σᵢ (−β_{−pᵢ} + β_{qᵢ+1} − pᵢ − qᵢ)`.
pub fn dot_action(s: &SliceGL, phi: &Weight) -> Weight {
    debug_assert_eq!(phi.case, CaseTag::GL);
    let frob = s.shape.frobenius();
    let (p, q) = (&frob.arms, &frob.legs);
    let b = frob.rank() as i64;
    let k = phi.lambda0;
    let beta = |i: i64| phi.eps(i);

    // Past this many terms the tails contribute zero: every p̄_c (q̄_c) lies
    // beyond both the Frobenius coordinates and the support of φ.
    let (lo, hi) = phi.eps_range().unwrap_or((0, 0));
    let tail = (b as usize)
        + p.first().copied().unwrap_or(0)
        + q.first().copied().unwrap_or(0)
        + lo.unsigned_abs() as usize
        + hi.unsigned_abs() as usize
        + 2;
    let p_bar = complement(p, tail);
    let q_bar = complement(q, tail);

    let mut out = Weight::zero(CaseTag::GL);
    for (c0, &pc) in p_bar.iter().enumerate() {
        let c = c0 as i64 + 1;
        let pc = pc as i64;
        out.add_eps(-c - b + 1, beta(-pc) + pc - c - b + 1);
    }
    let mut delta = phi.delta - (k + 1) * b;
    for (i0, (&pi, &qi)) in p.iter().zip(q).enumerate() {
        let i = i0 as i64 + 1;
        let (pi, qi) = (pi as i64, qi as i64);
        out.add_eps(1 - i, beta(qi + 1) - k - i - qi);
        out.add_eps(i, k + beta(-pi) + i + pi);
        delta += -beta(-pi) + beta(qi + 1) - pi - qi;
    }
    for (c0, &qc) in q_bar.iter().enumerate() {
        let c = c0 as i64 + 1;
        let qc = qc as i64;
        out.add_eps(b + c, beta(qc + 1) - qc + b + c - 1);
    }
    out.lambda0 = k;
    out.delta = delta;
    out
}

/// Reduced word `Π_{i=1..b} (s₀ s₋₁ ⋯ s₋ₚᵢ s₁ ⋯ s_{qᵢ})` of `w_λ`.
pub fn reduced_word(s: &SliceGL) -> Vec<SimpleRootIndex> {
    let frob = s.shape.frobenius();
    let mut word = Vec::with_capacity(s.length());
    for (&p, &q) in frob.arms.iter().zip(&frob.legs) {
        word.push(SimpleRootIndex(0));
        word.extend((1..=p as i64).map(|x| SimpleRootIndex(-x)));
        word.extend((1..=q as i64).map(SimpleRootIndex));
    }
    word
}

/// `s_x · φ = φ − (⟨φ, α_x^∨⟩ + 1) α_x`
pub fn simple_dot(x: SimpleRootIndex, phi: &Weight) -> Result<Weight> {
    let n = pair_coroot(phi.case, phi, x)? + 1;
    Ok(phi - &simple_root(phi.case, x)?.scale(n))
}

/// Dot action of the product `s_{x₁} s_{x₂} ⋯ s_{x_m}` (the rightmost letter acts first).
pub fn dot_action_by_word(word: &[SimpleRootIndex], phi: &Weight) -> Result<Weight> {
    word.iter().rev().try_fold(phi.clone(), |acc, &x| simple_dot(x, &acc))
}

/// A D∞ slice `S_p`: the set `{δ − εᵢ − εⱼ : i < j ≤ pᵢ + i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SliceO {
    rows: Vec<usize>,
}

/// A C∞ slice `S_q`: the set `{δ − εᵢ − εⱼ : i ≤ j < qᵢ + i}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SliceSp {
    rows: Vec<usize>,
}

fn check_strict(rows: &[usize]) -> Result<()> {
    if rows.contains(&0) || rows.windows(2).any(|w| w[0] <= w[1]) {
        return Err(crate::Error::InvalidPartition(format!(
            "slice rows {rows:?} must be strictly decreasing and positive"
        )));
    }
    Ok(())
}

impl SliceO {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        check_strict(&rows)?;
        Ok(SliceO { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Poset elements `(i, j)` of the slice.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i0, &p) in self.rows.iter().enumerate() {
            let i = i0 + 1;
            out.extend(((i + 1)..=(p + i)).map(|j| (i, j)));
        }
        out
    }

    pub fn inversion_set(&self) -> RootSet {
        self.cells().into_iter().map(|(i, j)| orthosymplectic_poset_root(CaseTag::O, i, j)).collect()
    }

    pub fn cardinality(&self) -> usize {
        self.cells().len()
    }
}

impl SliceSp {
    pub fn new(rows: Vec<usize>) -> Result<Self> {
        check_strict(&rows)?;
        Ok(SliceSp { rows })
    }

    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i0, &q) in self.rows.iter().enumerate() {
            let i = i0 + 1;
            out.extend((i..(q + i)).map(|j| (i, j)));
        }
        out
    }

    pub fn inversion_set(&self) -> RootSet {
        self.cells().into_iter().map(|(i, j)| orthosymplectic_poset_root(CaseTag::Sp, i, j)).collect()
    }

    pub fn cardinality(&self) -> usize {
        self.cells().len()
    }
}

/// Strictly decreasing positive sequences with sum at most `max`.
fn strict_sequences(max: usize) -> Vec<Vec<usize>> {
    fn go(remaining: usize, bound: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        for part in 1..=remaining.min(bound) {
            cur.push(part);
            go(remaining - part, part - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(max, max, &mut Vec::new(), &mut out);
    out.sort_by(|a, b| a.iter().sum::<usize>().cmp(&b.iter().sum()).then_with(|| b.cmp(a)));
    out
}

/// All D∞ slices with at most `max_weight` poset elements.
pub fn enumerate_slices_o(max_weight: usize) -> Vec<SliceO> {
    strict_sequences(max_weight)
        .into_iter()
        .map(|rows| SliceO { rows })
        .filter(|s| s.cardinality() <= max_weight)
        .collect()
}

/// All C∞ slices with at most `max_weight` poset elements.
pub fn enumerate_slices_sp(max_weight: usize) -> Vec<SliceSp> {
    strict_sequences(max_weight)
        .into_iter()
        .map(|rows| SliceSp { rows })
        .filter(|s| s.cardinality() <= max_weight)
        .collect()
}

/// Case-generic enumeration for O and Sp: `(rows, cardinality)` pairs.
/// Returns `None` for GL, whose slices are partitions (see [`enumerate_slices_gl`]).
pub fn enumerate_slices(case: CaseTag, max_weight: usize) -> Option<Vec<(Vec<usize>, usize)>> {
    match case {
        CaseTag::GL => None,
        CaseTag::O => Some(
            enumerate_slices_o(max_weight)
                .into_iter()
                .map(|s| {
                    let c = s.cardinality();
                    (s.rows, c)
                })
                .collect(),
        ),
        CaseTag::Sp => Some(
            enumerate_slices_sp(max_weight)
                .into_iter()
                .map(|s| {
                    let c = s.cardinality();
                    (s.rows, c)
                })
                .collect(),
        ),
    }
}

/// All GL slices of length exactly `n`.
pub fn enumerate_slices_gl(n: usize) -> Vec<SliceGL> {
    enumerate_partitions(n).into_iter().map(SliceGL::new).collect()
}
