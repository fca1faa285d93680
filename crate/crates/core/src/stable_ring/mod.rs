//! The stable Grothendieck ring of `rep(GL_t)`.
//!
//! Tensor products are evaluated at a finite rank `n` large enough that the
//! decomposition no longer depends on `n`. At such a rank a bipartition
//! `[μ, ν]` is the `GL_n` weight `(μ₁, μ₂, …, 0, …, 0, …, −ν₂, −ν₁)`.

pub mod lr;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Bipartition, Partition};

pub use lr::{lr_coeff, lr_product};

/// A finite integer combination of bipartitions: a class in `K(rep(GL_t))`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct KElement {
    terms: BTreeMap<Bipartition, BigInt>,
}

impl KElement {
    pub fn zero() -> Self {
        KElement::default()
    }

    /// The class of the tensor unit `[∅, ∅]`.
    pub fn one() -> Self {
        KElement::from(Bipartition::trivial())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn from_terms<I: IntoIterator<Item = (Bipartition, BigInt)>>(terms: I) -> Self {
        let mut out = KElement::zero();
        for (b, c) in terms {
            out.add_term(b, c);
        }
        out
    }

    pub fn add_term(&mut self, b: Bipartition, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(b.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&b);
        }
    }

    /// Multiplicity of `b` (zero when absent).
    pub fn coeff(&self, b: &Bipartition) -> BigInt {
        self.terms.get(b).cloned().unwrap_or_else(BigInt::zero)
    }

    /// Terms in bipartition order (size, then left, then right).
    pub fn iter(&self) -> impl Iterator<Item = (&Bipartition, &BigInt)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, factor: &BigInt) -> KElement {
        if factor.is_zero() {
            return KElement::zero();
        }
        KElement { terms: self.terms.iter().map(|(b, c)| (b.clone(), c * factor)).collect() }
    }

    /// True when every multiplicity is nonnegative.
    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }

    /// Largest `|μ|+|ν|` in the support.
    pub fn max_size(&self) -> usize {
        self.terms.keys().map(Bipartition::size).max().unwrap_or(0)
    }

    /// Stable tensor product extended bilinearly.
    pub fn tensor(&self, other: &KElement) -> KElement {
        let mut out = KElement::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let prod = stable_tensor(a, b);
                let c = ca * cb;
                for (t, m) in prod.terms {
                    out.add_term(t, m * &c);
                }
            }
        }
        out
    }

    /// `self ⊗ L_b`
    pub fn tensor_bipartition(&self, b: &Bipartition) -> KElement {
        self.tensor(&KElement::from(b.clone()))
    }
}

impl From<Bipartition> for KElement {
    fn from(b: Bipartition) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(b, BigInt::one());
        KElement { terms }
    }
}

impl AddAssign<&KElement> for KElement {
    fn add_assign(&mut self, rhs: &KElement) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), c.clone());
        }
    }
}

impl SubAssign<&KElement> for KElement {
    fn sub_assign(&mut self, rhs: &KElement) {
        for (b, c) in &rhs.terms {
            self.add_term(b.clone(), -c);
        }
    }
}

impl Add for &KElement {
    type Output = KElement;
    fn add(self, rhs: &KElement) -> KElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &KElement {
    type Output = KElement;
    fn sub(self, rhs: &KElement) -> KElement {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &KElement {
    type Output = KElement;
    fn neg(self) -> KElement {
        self.scale(&BigInt::from(-1))
    }
}

impl Mul for &KElement {
    type Output = KElement;
    fn mul(self, rhs: &KElement) -> KElement {
        self.tensor(rhs)
    }
}

impl fmt::Display for KElement {
    /// `[(),()] + 2[(1),(1)] - [(2),(1,1)]`; the zero element prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (b, c)) in self.terms.iter().enumerate() {
            let abs = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}")?;
            }
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

/// The rank-`n` weight of a bipartition, or `None` if `l(μ)+l(ν) > n`.
pub fn rank_weight(b: &Bipartition, n: usize) -> Option<Vec<i64>> {
    if b.left.length() + b.right.length() > n {
        return None;
    }
    let mut w = vec![0i64; n];
    for (i, &p) in b.left.parts().iter().enumerate() {
        w[i] = p as i64;
    }
    for (j, &p) in b.right.parts().iter().enumerate() {
        w[n - 1 - j] = -(p as i64);
    }
    Some(w)
}

/// Reads a weakly decreasing rank-`n` weight back as a bipartition.
pub fn weight_bipartition(w: &[i64]) -> Bipartition {
    let left = w.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect();
    let right = w.iter().rev().filter(|&&x| x < 0).map(|&x| (-x) as usize).collect();
    Bipartition::new(
        Partition::new(left).expect("decreasing weight"),
        Partition::new(right).expect("decreasing weight"),
    )
}

fn dual_weight(w: &[i64]) -> Vec<i64> {
    w.iter().rev().map(|x| -x).collect()
}

/// `V_w ⊗ S^μ(V) ⊗ S^ν(V*)` at rank `w.len()`, where `S^μ` is the Schur functor.
fn rank_product_with_schur_pair(w: &[i64], mu: &Partition, nu: &Partition) -> BTreeMap<Vec<i64>, BigInt> {
    let mut out: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    for (mid, m1) in lr::add_boxes(w, mu) {
        if nu.is_empty() {
            *out.entry(mid).or_insert_with(BigInt::zero) += m1;
            continue;
        }
        for (dual_end, m2) in lr::add_boxes(&dual_weight(&mid), nu) {
            *out.entry(dual_weight(&dual_end)).or_insert_with(BigInt::zero) += &m1 * m2;
        }
    }
    out
}

/// The evaluation rank used by [`stable_tensor`].
pub fn default_rank(a: &Bipartition, b: &Bipartition) -> usize {
    a.size() + b.size() + 1
}

static TENSOR_CACHE: LazyLock<Mutex<HashMap<(Bipartition, Bipartition), KElement>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Decomposition of `L_a ⊗ L_b` in `rep(GL_t)` for formal `t`.
///
/// Evaluated at rank `size(a)+size(b)+1`: the factor `L_b = L_[μ,ν]` is
/// replaced by `S^μ(V) ⊗ S^ν(V*)`, whose product with `L_a` is pure LR
/// box-adding, and the correction `S^μ(V) ⊗ S^ν(V*) − L_b` (strictly smaller
/// bipartitions) is subtracted recursively. Results are memoized.
pub fn stable_tensor(a: &Bipartition, b: &Bipartition) -> KElement {
    if a.is_trivial() {
        return KElement::from(b.clone());
    }
    if b.is_trivial() {
        return KElement::from(a.clone());
    }
    let key = if a <= b { (a.clone(), b.clone()) } else { (b.clone(), a.clone()) };
    if let Some(v) = TENSOR_CACHE.lock().unwrap().get(&key) {
        return v.clone();
    }
    let n = default_rank(a, b);
    let value = tensor_at_rank(&key.0, &key.1, n, &mut |x, y| stable_tensor(x, y));
    TENSOR_CACHE.lock().unwrap().insert(key, value.clone());
    value
}

/// [`stable_tensor`] evaluated entirely at an explicit rank `n`, without
/// memoization. Requires `n ≥ size(a) + size(b)`.
pub fn stable_tensor_at_rank(a: &Bipartition, b: &Bipartition, n: usize) -> Result<KElement> {
    let needed = (a.size() + b.size()).max(1);
    if n < needed {
        return Err(Error::RankTooSmall { rank: n, needed });
    }
    fn go(a: &Bipartition, b: &Bipartition, n: usize) -> KElement {
        tensor_at_rank(a, b, n, &mut |x, y| go(x, y, n))
    }
    Ok(go(a, b, n))
}

fn tensor_at_rank(
    a: &Bipartition,
    b: &Bipartition,
    n: usize,
    recurse: &mut dyn FnMut(&Bipartition, &Bipartition) -> KElement,
) -> KElement {
    // Expand the factor whose mixed part is cheapest to correct.
    let cost = |x: &Bipartition| x.left.size().min(x.right.size());
    let (fixed, expanded) = if cost(b) <= cost(a) { (a, b) } else { (b, a) };

    let base = rank_weight(fixed, n).expect("rank exceeds bipartition length");
    let mut result = KElement::zero();
    for (w, m) in rank_product_with_schur_pair(&base, &expanded.left, &expanded.right) {
        result.add_term(weight_bipartition(&w), m);
    }
    if cost(expanded) == 0 {
        return result;
    }

    // S^μ(V) ⊗ S^ν(V*) = L_[μ,ν] + (smaller terms)
    let zero = vec![0i64; n];
    let mut correction = KElement::zero();
    for (w, m) in rank_product_with_schur_pair(&zero, &expanded.left, &expanded.right) {
        correction.add_term(weight_bipartition(&w), m);
    }
    debug_assert!(correction.coeff(expanded).is_one());
    for (c, m) in correction.iter() {
        if c == expanded {
            continue;
        }
        let sub = recurse(fixed, c);
        for (t, k) in sub.terms {
            result.add_term(t, -(k * m));
        }
    }
    result
}

/// `[λ, ∅]`
fn covariant(lambda: &Partition) -> Bipartition {
    Bipartition::new(lambda.clone(), Partition::empty())
}

/// `[∅, λ]`
fn contravariant(lambda: &Partition) -> Bipartition {
    Bipartition::new(Partition::empty(), lambda.clone())
}

static SYM_G_CACHE: LazyLock<Mutex<HashMap<usize, KElement>>> = LazyLock::new(|| Mutex::new(HashMap::new()));
static PBW_CACHE: LazyLock<Mutex<HashMap<usize, KElement>>> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// Class of `Symᵐ(g_t)` for `g_t = V ⊗ V*`, via the Cauchy identity
/// `Sym(V ⊗ V*) = ⊕_λ S^λ V ⊗ S^λ V*`.
pub fn sym_g(m: usize) -> KElement {
    if let Some(v) = SYM_G_CACHE.lock().unwrap().get(&m) {
        return v.clone();
    }
    let mut out = KElement::zero();
    for lambda in enumerate_partitions(m) {
        out += &stable_tensor(&covariant(&lambda), &contravariant(&lambda));
    }
    SYM_G_CACHE.lock().unwrap().insert(m, out.clone());
    out
}

/// Class of `Symᵐ(g'_t)` where `g_t = g'_t ⊕ 1` and `g'_t ≅ L_[(1),(1)]`.
pub fn sym_gprime(m: usize) -> KElement {
    if m == 0 {
        return KElement::one();
    }
    &sym_g(m) - &sym_g(m - 1)
}

/// Degree-`j` component of `U(u⁻)` for `u⁻ = ⊕_{i≥1} g'·z⁻ⁱ`:
/// `Σ_{π ⊢ j} ⊗_i Sym^{m_i(π)}(g')`.
pub fn pbw_graded(j: usize) -> KElement {
    if let Some(v) = PBW_CACHE.lock().unwrap().get(&j) {
        return v.clone();
    }
    let mut out = KElement::zero();
    for pi in enumerate_partitions(j) {
        let mut term = KElement::one();
        for &mult in pi.multiplicities().iter().skip(1) {
            if mult > 0 {
                term = term.tensor(&sym_gprime(mult));
            }
        }
        out += &term;
    }
    PBW_CACHE.lock().unwrap().insert(j, out.clone());
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn bp(l: &[usize], r: &[usize]) -> Bipartition {
        Bipartition::new(p(l), p(r))
    }

    fn k(terms: &[(i64, Bipartition)]) -> KElement {
        KElement::from_terms(terms.iter().map(|(c, b)| (b.clone(), BigInt::from(*c))))
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(
            stable_tensor(&bp(&[1], &[]), &bp(&[], &[1])),
            k(&[(1, bp(&[1], &[1])), (1, bp(&[], &[]))])
        );
        assert_eq!(
            stable_tensor(&bp(&[1], &[]), &bp(&[1], &[])),
            k(&[(1, bp(&[2], &[])), (1, bp(&[1, 1], &[]))])
        );
        let x = bp(&[2, 1], &[1]);
        assert_eq!(stable_tensor(&Bipartition::trivial(), &x), KElement::from(x.clone()));
    }

    #[test]
    fn adjoint_square() {
        let adj = bp(&[1], &[1]);
        let expected = k(&[
            (1, bp(&[2], &[2])),
            (1, bp(&[2], &[1, 1])),
            (1, bp(&[1, 1], &[2])),
            (1, bp(&[1, 1], &[1, 1])),
            (2, bp(&[1], &[1])),
            (1, bp(&[], &[])),
        ]);
        assert_eq!(stable_tensor(&adj, &adj), expected);
    }

    #[test]
    fn sym_examples() {
        assert_eq!(sym_g(0), KElement::one());
        assert_eq!(sym_g(1), k(&[(1, bp(&[1], &[1])), (1, bp(&[], &[]))]));
        assert_eq!(
            sym_g(2),
            k(&[(1, bp(&[2], &[2])), (1, bp(&[1, 1], &[1, 1])), (2, bp(&[1], &[1])), (2, bp(&[], &[]))])
        );
        assert_eq!(sym_gprime(0), KElement::one());
        assert_eq!(sym_gprime(1), k(&[(1, bp(&[1], &[1]))]));
        assert_eq!(
            sym_gprime(2),
            k(&[(1, bp(&[2], &[2])), (1, bp(&[1, 1], &[1, 1])), (1, bp(&[1], &[1])), (1, bp(&[], &[]))])
        );
    }

    #[test]
    fn pbw_examples() {
        assert_eq!(pbw_graded(0), KElement::one());
        assert_eq!(pbw_graded(1), k(&[(1, bp(&[1], &[1]))]));
        assert_eq!(
            pbw_graded(2),
            k(&[(1, bp(&[2], &[2])), (1, bp(&[1, 1], &[1, 1])), (2, bp(&[1], &[1])), (1, bp(&[], &[]))])
        );
    }

    #[test]
    fn rank_too_small() {
        let a = bp(&[1], &[1]);
        assert!(matches!(stable_tensor_at_rank(&a, &a, 3), Err(Error::RankTooSmall { rank: 3, needed: 4 })));
    }

    #[test]
    fn display() {
        let e = k(&[(2, bp(&[1], &[1])), (1, bp(&[], &[])), (-1, bp(&[2], &[1, 1]))]);
        assert_eq!(e.to_string(), "[(),()] + 2[(1),(1)] - [(2),(1,1)]");
        assert_eq!(KElement::zero().to_string(), "0");
    }

    #[test]
    fn weight_round_trip() {
        let b = bp(&[2, 1], &[1]);
        let w = rank_weight(&b, 5).unwrap();
        assert_eq!(w, vec![2, 1, 0, 0, -1]);
        assert_eq!(weight_bipartition(&w), b);
        assert!(rank_weight(&b, 2).is_none());
    }
}
