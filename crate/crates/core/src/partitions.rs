//! Partitions, bipartitions and Frobenius coordinates.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An integer partition, stored as its nonzero parts in weakly decreasing order.
///
/// The representation is canonical (no trailing zeros), so derived equality is
/// equality of partitions. The derived order is lexicographic on the parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("parts {parts:?} are not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Sorts arbitrary parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        parts.retain(|&p| p > 0);
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `|λ|`
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `l(λ)`, the number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// The `i`-th part, 1-indexed; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// The largest part `λ₁` (zero for the empty partition).
    pub fn first(&self) -> usize {
        self.part(1)
    }

    /// The transposed partition `λᵗ` (column lengths of the Young diagram).
    pub fn conjugate(&self) -> Partition {
        let width = self.first();
        let parts = (1..=width).map(|col| self.parts.iter().take_while(|&&p| p >= col).count()).collect();
        Partition { parts }
    }

    /// The Durfee rank `b`: the largest `i` with `λ_i ≥ i`.
    pub fn durfee_rank(&self) -> usize {
        self.parts.iter().enumerate().take_while(|(i, &p)| p > *i).count()
    }

    /// Frobenius coordinates `(λ₁−1, …, λ_b−b | λᵗ₁−1, …, λᵗ_b−b)`.
    pub fn frobenius(&self) -> FrobeniusCoords {
        let b = self.durfee_rank();
        let conj = self.conjugate();
        FrobeniusCoords {
            arms: (1..=b).map(|i| self.part(i) - i).collect(),
            legs: (1..=b).map(|i| conj.part(i) - i).collect(),
        }
    }

    /// Inverse of [`Partition::frobenius`].
    pub fn from_frobenius(coords: &FrobeniusCoords) -> Result<Partition> {
        coords.validate()?;
        let b = coords.rank();
        if b == 0 {
            return Ok(Partition::empty());
        }
        // Rows 1..=b come from the arms; rows below the diagonal square are
        // read off the legs: row r > b has #{i : legs_i + i >= r} cells.
        let mut parts: Vec<usize> = coords.arms.iter().enumerate().map(|(i, a)| a + i + 1).collect();
        let depth = coords.legs[0] + 1;
        for r in (b + 1)..=depth {
            let cells = coords.legs.iter().enumerate().filter(|(i, &q)| q + i + 1 >= r).count();
            parts.push(cells);
        }
        Partition::new(parts)
    }

    /// Multiset of hook lengths `arm + leg + 1`, one per cell, row by row.
    pub fn hook_lengths(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut hooks = Vec::with_capacity(self.size());
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j] - i - 1;
                hooks.push(arm + leg + 1);
            }
        }
        hooks
    }

    /// Cells `(row, column)`, both 1-indexed.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.parts.iter().enumerate().flat_map(|(i, &row)| (1..=row).map(move |j| (i + 1, j)))
    }

    /// Part-wise sum `λ + μ`.
    pub fn add(&self, other: &Partition) -> Partition {
        let len = self.length().max(other.length());
        let parts = (1..=len).map(|i| self.part(i) + other.part(i)).collect();
        Partition { parts }
    }

    /// Multiplicity of each part size: entry `i` is the number of parts equal to `i`.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0; self.first() + 1];
        for &p in &self.parts {
            mult[p] += 1;
        }
        mult
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts; the empty partition prints as the empty string.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|tok| {
                tok.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::InvalidPartition(format!("bad part {tok:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{s:?} contains a zero part")));
        }
        Partition::new(parts)
    }
}

impl From<&[usize]> for Partition {
    fn from(parts: &[usize]) -> Self {
        Partition::from_unsorted(parts.to_vec())
    }
}

/// All partitions of `n`, each once, in reverse-lexicographic order
/// (`(n)` first, `(1,…,1)` last).
pub fn enumerate_partitions(n: usize) -> Vec<Partition> {
    fn go(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: current.clone() });
            return;
        }
        for part in (1..=remaining.min(max)).rev() {
            current.push(part);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// All partitions of size at most `n`, by increasing size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(enumerate_partitions).collect()
}

/// A pair of partitions `[μ, ν]`, labelling an indecomposable object of `rep(GL_t)`.
///
/// Ordered by total size, then lexicographically on `left`, then on `right`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub left: Partition,
    pub right: Partition,
}

impl Bipartition {
    pub fn new(left: Partition, right: Partition) -> Self {
        Bipartition { left, right }
    }

    /// `[∅, ∅]`, the tensor unit.
    pub fn trivial() -> Self {
        Bipartition::default()
    }

    pub fn is_trivial(&self) -> bool {
        self.left.is_empty() && self.right.is_empty()
    }

    /// `|μ| + |ν|`
    pub fn size(&self) -> usize {
        self.left.size() + self.right.size()
    }

    /// The dual object: `[μ, ν]* = [ν, μ]`.
    pub fn dual(&self) -> Bipartition {
        Bipartition::new(self.right.clone(), self.left.clone())
    }
}

impl Ord for Bipartition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| self.left.cmp(&other.left))
            .then_with(|| self.right.cmp(&other.right))
    }
}

impl PartialOrd for Bipartition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[({}),({})]", self.left, self.right)
    }
}

/// Frobenius coordinates `(p₁, …, p_b | q₁, …, q_b)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct FrobeniusCoords {
    pub arms: Vec<usize>,
    pub legs: Vec<usize>,
}

impl FrobeniusCoords {
    pub fn new(arms: Vec<usize>, legs: Vec<usize>) -> Result<Self> {
        let coords = FrobeniusCoords { arms, legs };
        coords.validate()?;
        Ok(coords)
    }

    /// `b`, the number of diagonal cells.
    pub fn rank(&self) -> usize {
        self.arms.len()
    }

    /// Swapping arms and legs transposes the partition.
    pub fn transpose(&self) -> FrobeniusCoords {
        FrobeniusCoords { arms: self.legs.clone(), legs: self.arms.clone() }
    }

    fn validate(&self) -> Result<()> {
        if self.arms.len() != self.legs.len() {
            return Err(Error::InvalidFrobenius(format!(
                "{} arms but {} legs",
                self.arms.len(),
                self.legs.len()
            )));
        }
        for (name, seq) in [("arms", &self.arms), ("legs", &self.legs)] {
            if seq.windows(2).any(|w| w[0] <= w[1]) {
                return Err(Error::InvalidFrobenius(format!("{name} {seq:?} are not strictly decreasing")));
            }
        }
        Ok(())
    }
}

impl fmt::Display for FrobeniusCoords {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({} | {})", join(&self.arms), join(&self.legs))
    }
}
