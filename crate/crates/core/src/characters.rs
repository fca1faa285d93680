//! q-series characters in `K(rep(GL_t)^a)`.
//!
//! `q` is the character of `z⁻¹`: the coefficient of `qʲ` collects the part of
//! a module whose δ-weight sits `j` steps below the highest weight.
//!
//! The simple module `L([μ,ν], k)` is computed by two independent routes, the
//! closed formula [`chr_l_explicit`] and the generic alternating sum over
//! X-reduced Weyl group elements [`chr_l_generic`]. Truncating at `q^order` only
//! needs slices with `|λ| ≤ order`, since the q-shift of the λ term is at
//! least `|λ|` for dominant weights.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Signed;

use crate::affine_roots::{bipartition_to_weight, is_dominant, weight_to_bipartition};
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, partitions_up_to, Bipartition, Partition};
use crate::stable_ring::{pbw_graded, KElement};
use crate::weyl_slices::{dot_action, SliceGL};

/// A q-series with `KElement` coefficients, truncated after `q^order`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterSeries {
    coeffs: Vec<KElement>,
    /// Level `k` of the highest weight. Informational only.
    pub level: i64,
    /// Absolute δ-coefficient of the `q⁰` term. Informational only.
    pub delta_offset: i64,
}

impl CharacterSeries {
    pub fn zero(order: usize) -> Self {
        CharacterSeries { coeffs: vec![KElement::zero(); order + 1], level: 0, delta_offset: 0 }
    }

    /// The constant series `1 = [∅,∅]`.
    pub fn one(order: usize) -> Self {
        let mut s = CharacterSeries::zero(order);
        s.coeffs[0] = KElement::one();
        s
    }

    pub fn from_coeffs(coeffs: Vec<KElement>) -> Self {
        assert!(!coeffs.is_empty(), "a series has at least the q^0 coefficient");
        CharacterSeries { coeffs, level: 0, delta_offset: 0 }
    }

    pub fn with_level(mut self, level: i64) -> Self {
        self.level = level;
        self
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^power` (zero past the truncation order).
    pub fn coeff(&self, power: usize) -> KElement {
        self.coeffs.get(power).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[KElement] {
        &self.coeffs
    }

    /// Adds `sign · element` at `q^power`; ignored past the truncation order.
    pub fn add_at(&mut self, power: usize, element: &KElement, negate: bool) {
        if let Some(slot) = self.coeffs.get_mut(power) {
            if negate {
                *slot -= element;
            } else {
                *slot += element;
            }
        }
    }

    pub fn add_series(&mut self, other: &CharacterSeries, negate: bool) {
        for (j, c) in other.coeffs.iter().enumerate() {
            self.add_at(j, c, negate);
        }
    }

    /// Every coefficient has nonnegative multiplicities.
    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(KElement::is_nonnegative)
    }

    /// Truncates (or zero-extends) to a new order.
    pub fn truncate(&self, order: usize) -> CharacterSeries {
        let mut coeffs = self.coeffs.clone();
        coeffs.resize(order + 1, KElement::zero());
        CharacterSeries { coeffs, ..*self }
    }
}

impl fmt::Display for CharacterSeries {
    /// One line per nonzero power: `q^j: <KElement>`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for (j, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            writeln!(f, "q^{j}: {c}")?;
            any = true;
        }
        if !any {
            writeln!(f, "0")?;
        }
        Ok(())
    }
}

fn check_dominant(mu: &Partition, nu: &Partition, k: i64) -> Result<()> {
    let b = Bipartition::new(mu.clone(), nu.clone());
    if !is_dominant(&b, k) {
        return Err(Error::NonDominant { mu1: mu.first(), nu1: nu.first(), level: k });
    }
    Ok(())
}

/// `δ(λ, μ, ν) = |λ| + Σ_{i ≤ b} (k − μ_{qᵢ+1} − ν_{pᵢ+1})` for Frobenius
/// coordinates `(p | q)` of `λ`.
pub fn delta_exponent(lambda: &Partition, mu: &Partition, nu: &Partition, k: i64) -> Result<usize> {
    check_dominant(mu, nu, k)?;
    let frob = lambda.frobenius();
    let mut total = lambda.size() as i64;
    for (&p, &q) in frob.arms.iter().zip(&frob.legs) {
        total += k - mu.part(q + 1) as i64 - nu.part(p + 1) as i64;
    }
    Ok(total as usize)
}

/// `λ · [μ, ν]`: the bipartition labelling the highest weight of the λ term.
///
/// The first component is `(k − ν_{p₁+1}, …, k − ν_{p_b+1})` followed by `μ`
/// with the entries `μ_{qᵢ+1}` removed, plus `λ`. The second is
/// `(k − μ_{q₁+1}, …, k − μ_{q_b+1})` followed by `ν` with the entries
/// `ν_{pᵢ+1}` removed, plus `λᵗ`.
pub fn lambda_dot(lambda: &Partition, mu: &Partition, nu: &Partition, k: i64) -> Result<Bipartition> {
    check_dominant(mu, nu, k)?;
    let frob = lambda.frobenius();
    let build = |heads: &[usize], other: &Partition, own: &Partition, removed: &[usize], add: &Partition| {
        let len = heads.len() + own.length().max(add.length()) + 1;
        let mut seq: Vec<i64> = heads.iter().map(|&h| k - other.part(h + 1) as i64).collect();
        seq.extend(
            (1..=own.length()).filter(|i| !removed.iter().any(|&r| r + 1 == *i)).map(|i| own.part(i) as i64),
        );
        seq.resize(len, 0);
        let parts: Vec<i64> = seq.iter().enumerate().map(|(i, &x)| x + add.part(i + 1) as i64).collect();
        if parts.iter().any(|&x| x < 0) {
            return Err(Error::InternalInconsistency(format!("negative part in λ·[μ,ν]: {parts:?}")));
        }
        Partition::new(parts.into_iter().map(|x| x as usize).collect())
            .map_err(|e| Error::InternalInconsistency(format!("λ·[μ,ν] is not a bipartition: {e}")))
    };
    let left = build(&frob.arms, nu, mu, &frob.legs, lambda)?;
    let right = build(&frob.legs, mu, nu, &frob.arms, &lambda.conjugate())?;
    Ok(Bipartition::new(left, right))
}

/// Character of the parabolic Verma module with top `L_b`, shifted to start at
/// `q^shift`: the coefficient of `q^{shift+j}` is `U(u⁻)_j ⊗ L_b`.
pub fn chr_verma(b: &Bipartition, shift: usize, order: usize) -> CharacterSeries {
    let mut out = CharacterSeries::zero(order);
    let top = KElement::from(b.clone());
    for j in 0..=order.saturating_sub(shift) {
        if shift + j > order {
            break;
        }
        out.coeffs[shift + j] = pbw_graded(j).tensor(&top);
    }
    out
}

fn sign_of(size: usize) -> bool {
    size % 2 == 1
}

/// `chr L([μ,ν] + kΛ₀) = Σ_λ (−1)^{|λ|} q^{δ(λ,μ,ν)} chr M(λ·[μ,ν] + kΛ₀)`.
pub fn chr_l_explicit(mu: &Partition, nu: &Partition, k: i64, order: usize) -> Result<CharacterSeries> {
    check_dominant(mu, nu, k)?;
    let mut out = CharacterSeries::zero(order).with_level(k);
    for lambda in partitions_up_to(order) {
        let shift = delta_exponent(&lambda, mu, nu, k)?;
        debug_assert!(shift >= lambda.size());
        if shift > order {
            continue;
        }
        let top = lambda_dot(&lambda, mu, nu, k)?;
        out.add_series(&chr_verma(&top, shift, order), sign_of(lambda.size()));
    }
    Ok(out)
}

/// The same character as [`chr_l_explicit`], through the generic alternating
/// sum `Σ_{w ∈ W^X} (−1)^{l(w)} chr M(w · φ)` with the closed-form dot action.
pub fn chr_l_generic(mu: &Partition, nu: &Partition, k: i64, order: usize) -> Result<CharacterSeries> {
    check_dominant(mu, nu, k)?;
    let phi = bipartition_to_weight(&Bipartition::new(mu.clone(), nu.clone()), k, 0);
    let mut out = CharacterSeries::zero(order).with_level(k);
    for lambda in partitions_up_to(order) {
        let slice = SliceGL::new(lambda.clone());
        let image = dot_action(&slice, &phi);
        let (top, level, delta) = weight_to_bipartition(&image)
            .map_err(|e| Error::InternalInconsistency(format!("w_{{{lambda}}}·φ is not X-dominant: {e}")))?;
        if level != k || delta > 0 {
            return Err(Error::InternalInconsistency(format!(
                "w_{{{lambda}}}·φ = {image} has level {level} and δ-coefficient {delta}"
            )));
        }
        let shift = (-delta) as usize;
        if shift < lambda.size() {
            return Err(Error::InternalInconsistency(format!(
                "q-shift {shift} of w_{{{lambda}}} is below |λ|"
            )));
        }
        if shift > order {
            continue;
        }
        out.add_series(&chr_verma(&top, shift, order), sign_of(slice.length()));
    }
    Ok(out)
}

/// `1 / chr M(0) = Σ_λ (−1)^{|λ|} q^{|λ|} [λ, λᵗ]`.
pub fn denominator_inverse(order: usize) -> CharacterSeries {
    let mut out = CharacterSeries::zero(order);
    for lambda in partitions_up_to(order) {
        let term = KElement::from(Bipartition::new(lambda.clone(), lambda.conjugate()));
        out.add_at(lambda.size(), &term, sign_of(lambda.size()));
    }
    out
}

/// Truncated Cauchy product; the result has the smaller of the two orders.
pub fn series_mul(a: &CharacterSeries, b: &CharacterSeries) -> CharacterSeries {
    let order = a.order().min(b.order());
    let mut out = CharacterSeries::zero(order).with_level(a.level + b.level);
    out.delta_offset = a.delta_offset + b.delta_offset;
    for i in 0..=order {
        if a.coeffs[i].is_zero() {
            continue;
        }
        for j in 0..=(order - i) {
            if b.coeffs[j].is_zero() {
                continue;
            }
            out.coeffs[i + j] += &a.coeffs[i].tensor(&b.coeffs[j]);
        }
    }
    out
}

/// `H^i(z⁻¹ sl_t[z⁻¹]) = ⊕_{|λ| = i} L_[λ, λᵗ]`.
pub fn garland(i: usize) -> KElement {
    KElement::from_terms(
        enumerate_partitions(i)
            .into_iter()
            .map(|l| (Bipartition::new(l.clone(), l.conjugate()), BigInt::from(1))),
    )
}

/// The terms of [`garland`] in partition enumeration order.
pub fn garland_terms(i: usize) -> Vec<Bipartition> {
    enumerate_partitions(i).into_iter().map(|l| Bipartition::new(l.clone(), l.conjugate())).collect()
}

/// Smallest multiplicity across a series, if any term is negative.
pub fn most_negative(s: &CharacterSeries) -> Option<(usize, Bipartition, BigInt)> {
    s.coeffs
        .iter()
        .enumerate()
        .flat_map(|(j, c)| c.iter().map(move |(b, m)| (j, b.clone(), m.clone())))
        .filter(|(_, _, m)| m.is_negative())
        .min_by(|x, y| x.2.cmp(&y.2))
}
