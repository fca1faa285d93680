//! Infinite-rank affine weight lattices and root data.
//!
//! The lattice is `⊕_{i∈B} Z·εᵢ ⊕ Z·Λ₀ ⊕ Z·δ` with `B = Z` for `GL` (diagram
//! `A∞`) and `B = Z_{>0}` for `O` (`D∞`) and `Sp` (`C∞`). Simple roots:
//!
//! | case | `α₀`          | `α₀^∨`          | `αᵢ`, `i ≠ 0`   |
//! |------|---------------|-----------------|-----------------|
//! | GL   | `ε₀ − ε₁ + δ` | `E₀ − E₁ + c`   | `εᵢ − εᵢ₊₁`     |
//! | O    | `δ − ε₁ − ε₂` | `c − E₁ − E₂`   | `εᵢ − εᵢ₊₁`, `i ≥ 1` |
//! | Sp   | `δ − 2ε₁`     | `c/2 − E₁`      | `εᵢ − εᵢ₊₁`, `i ≥ 1` |
//!
//! where `Eᵢ` reads the `εᵢ` coefficient and `c(Λ₀)` is 1 for GL and O, 2 for Sp.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::partitions::{Bipartition, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum CaseTag {
    GL,
    O,
    Sp,
}

impl CaseTag {
    pub fn name(self) -> &'static str {
        match self {
            CaseTag::GL => "GL",
            CaseTag::O => "O",
            CaseTag::Sp => "Sp",
        }
    }

    /// Whether `i` belongs to the index set `B` of the ε's.
    pub fn has_eps_index(self, i: i64) -> bool {
        match self {
            CaseTag::GL => true,
            CaseTag::O | CaseTag::Sp => i >= 1,
        }
    }

    pub fn is_valid_root_index(self, x: SimpleRootIndex) -> bool {
        match self {
            CaseTag::GL => true,
            CaseTag::O | CaseTag::Sp => x.0 >= 0,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Vertex of the affine Dynkin diagram; 0 is the affine vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimpleRootIndex(pub i64);

impl fmt::Display for SimpleRootIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "s{}", self.0)
    }
}

/// A finitely supported affine weight `Σ cᵢεᵢ + k·Λ₀ + a·δ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Weight {
    eps: BTreeMap<i64, i64>,
    pub lambda0: i64,
    pub delta: i64,
    pub case: CaseTag,
}

impl Weight {
    pub fn zero(case: CaseTag) -> Self {
        Weight { eps: BTreeMap::new(), lambda0: 0, delta: 0, case }
    }

    /// `Λ₀`
    pub fn fundamental(case: CaseTag) -> Self {
        Weight { lambda0: 1, ..Weight::zero(case) }
    }

    /// `δ`
    pub fn null_root(case: CaseTag) -> Self {
        Weight { delta: 1, ..Weight::zero(case) }
    }

    pub fn from_eps<I: IntoIterator<Item = (i64, i64)>>(
        case: CaseTag,
        eps: I,
        lambda0: i64,
        delta: i64,
    ) -> Self {
        let mut w = Weight { lambda0, delta, ..Weight::zero(case) };
        for (i, c) in eps {
            w.add_eps(i, c);
        }
        w
    }

    /// Coefficient of `εᵢ`.
    pub fn eps(&self, i: i64) -> i64 {
        self.eps.get(&i).copied().unwrap_or(0)
    }

    pub fn add_eps(&mut self, i: i64, c: i64) {
        debug_assert!(self.case.has_eps_index(i), "ε{i} outside the index set of {}", self.case);
        let entry = self.eps.entry(i).or_insert(0);
        *entry += c;
        if *entry == 0 {
            self.eps.remove(&i);
        }
    }

    /// Nonzero `(index, coefficient)` pairs in increasing index order.
    pub fn eps_support(&self) -> impl Iterator<Item = (i64, i64)> + '_ {
        self.eps.iter().map(|(&i, &c)| (i, c))
    }

    /// Smallest and largest index carrying a nonzero ε coefficient.
    pub fn eps_range(&self) -> Option<(i64, i64)> {
        Some((*self.eps.keys().next()?, *self.eps.keys().next_back()?))
    }

    /// The level `k` (coefficient of `Λ₀`).
    pub fn level(&self) -> i64 {
        self.lambda0
    }

    pub fn scale(&self, factor: i64) -> Weight {
        Weight::from_eps(
            self.case,
            self.eps.iter().map(|(&i, &c)| (i, c * factor)),
            self.lambda0 * factor,
            self.delta * factor,
        )
    }

    /// `c(φ)` for the canonical central element.
    fn central_charge(&self) -> i64 {
        match self.case {
            CaseTag::GL | CaseTag::O => self.lambda0,
            CaseTag::Sp => 2 * self.lambda0,
        }
    }
}

impl Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        debug_assert_eq!(self.case, rhs.case);
        let mut out = self.clone();
        for (&i, &c) in &rhs.eps {
            out.add_eps(i, c);
        }
        out.lambda0 += rhs.lambda0;
        out.delta += rhs.delta;
        out
    }
}

impl Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self + &rhs.scale(-1)
    }
}

impl Neg for &Weight {
    type Output = Weight;
    fn neg(self) -> Weight {
        self.scale(-1)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(i64, String)> =
            self.eps.iter().rev().map(|(&i, &c)| (c, format!("ε{i}"))).collect();
        terms.push((self.lambda0, "Λ0".to_string()));
        terms.push((self.delta, "δ".to_string()));
        let mut first = true;
        for (c, sym) in terms.into_iter().filter(|(c, _)| *c != 0) {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            if c.abs() != 1 {
                write!(f, "{}", c.abs())?;
            }
            f.write_str(&sym)?;
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// The simple root `α_x` as a weight (level 0).
pub fn simple_root(case: CaseTag, x: SimpleRootIndex) -> Result<Weight> {
    if !case.is_valid_root_index(x) {
        return Err(Error::InvalidRootIndex { case: case.name(), index: x.0 });
    }
    let i = x.0;
    let w = match (case, i) {
        (CaseTag::GL, 0) => Weight::from_eps(case, [(0, 1), (1, -1)], 0, 1),
        (CaseTag::O, 0) => Weight::from_eps(case, [(1, -1), (2, -1)], 0, 1),
        (CaseTag::Sp, 0) => Weight::from_eps(case, [(1, -2)], 0, 1),
        _ => Weight::from_eps(case, [(i, 1), (i + 1, -1)], 0, 0),
    };
    Ok(w)
}

/// `⟨φ, α_x^∨⟩`
pub fn pair_coroot(case: CaseTag, phi: &Weight, x: SimpleRootIndex) -> Result<i64> {
    if !case.is_valid_root_index(x) {
        return Err(Error::InvalidRootIndex { case: case.name(), index: x.0 });
    }
    let i = x.0;
    let value = match (case, i) {
        (CaseTag::GL, 0) => phi.eps(0) - phi.eps(1) + phi.central_charge(),
        (CaseTag::O, 0) => phi.central_charge() - phi.eps(1) - phi.eps(2),
        (CaseTag::Sp, 0) => phi.central_charge() / 2 - phi.eps(1),
        _ => phi.eps(i) - phi.eps(i + 1),
    };
    Ok(value)
}

/// Whether `w` is a positive root of the limit affine root system.
///
/// Only δ-coefficients 0 and 1 occur among positive roots.
pub fn is_positive_root(w: &Weight) -> bool {
    if w.lambda0 != 0 {
        return false;
    }
    let support: Vec<(i64, i64)> = w.eps_support().collect();
    match (w.case, w.delta) {
        (CaseTag::GL, d) if d == 0 || d == 1 => {
            let [(a, ca), (b, cb)] = support[..] else { return false };
            // a < b by construction of the sorted support
            let (plus, minus) = match (ca, cb) {
                (1, -1) => (a, b),
                (-1, 1) => (b, a),
                _ => return false,
            };
            if d == 1 {
                plus <= 0 && minus >= 1
            } else {
                plus < minus && (minus <= 0 || plus >= 1)
            }
        }
        (CaseTag::O | CaseTag::Sp, 0) => matches!(support[..], [(_, 1), (_, -1)]),
        (CaseTag::O | CaseTag::Sp, 1) => match support[..] {
            [(_, -1), (_, -1)] => true,
            [(_, -2)] => w.case == CaseTag::Sp,
            _ => false,
        },
        _ => false,
    }
}

pub fn is_root(w: &Weight) -> bool {
    is_positive_root(w) || is_positive_root(&-w)
}

/// GL embedding `[μ, ν] ↦ Σ μᵢεᵢ − Σ νⱼε_{1−j} + kΛ₀ + aδ`.
pub fn bipartition_to_weight(b: &Bipartition, k: i64, a: i64) -> Weight {
    let left = b.left.parts().iter().enumerate().map(|(i, &p)| (i as i64 + 1, p as i64));
    let right = b.right.parts().iter().enumerate().map(|(j, &p)| (-(j as i64), -(p as i64)));
    Weight::from_eps(CaseTag::GL, left.chain(right), k, a)
}

/// Inverse of [`bipartition_to_weight`]: returns `([μ, ν], level, δ-coefficient)`.
pub fn weight_to_bipartition(w: &Weight) -> Result<(Bipartition, i64, i64)> {
    if w.case != CaseTag::GL {
        return Err(Error::NonDominantWeight(format!("{} weight has no bipartition", w.case)));
    }
    let Some((lo, hi)) = w.eps_range() else {
        return Ok((Bipartition::trivial(), w.lambda0, w.delta));
    };
    let left: Vec<i64> = (1..=hi.max(0)).map(|i| w.eps(i)).collect();
    let right: Vec<i64> = (lo.min(1)..=0).rev().map(|i| -w.eps(i)).collect();
    let to_partition = |seq: &[i64]| -> Result<Partition> {
        if seq.iter().any(|&c| c < 0) || seq.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::NonDominantWeight(w.to_string()));
        }
        Partition::new(seq.iter().map(|&c| c as usize).collect())
            .map_err(|_| Error::NonDominantWeight(w.to_string()))
    };
    let b = Bipartition::new(to_partition(&left)?, to_partition(&right)?);
    Ok((b, w.lambda0, w.delta))
}

/// GL dominance at level `k`: `μ₁ + ν₁ ≤ k`.
pub fn is_dominant(b: &Bipartition, k: i64) -> bool {
    (b.left.first() + b.right.first()) as i64 <= k
}
