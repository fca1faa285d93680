//! Finite-rank `GL_n` ground truth.
//!
//! Nothing here uses the Littlewood-Richardson rule. Weight multiplicities come
//! from Gelfand-Tsetlin branching, tensor products from the Brauer-Klimyk
//! formula, and decompositions from stripping highest weights. Agreement with
//! [`crate::stable_ring`] is therefore evidence rather than tautology.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::partitions::Bipartition;

/// Default oracle caps: ranks up to 8, bipartitions of size up to 4.
pub const MAX_RANK: usize = 8;
pub const MAX_SIZE: usize = 4;

/// A dominant integral `GL_n` weight: `n` weakly decreasing integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalWeight(Vec<i64>);

impl RationalWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NonDominantWeight(format!("{entries:?} is not weakly decreasing")));
        }
        Ok(RationalWeight(entries))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }
}

impl fmt::Display for RationalWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A multiset of `GL_n` weights (arbitrary integer vectors of length `n`).
pub type WeightMultiset = BTreeMap<Vec<i64>, BigInt>;

/// Weyl dimension formula `Π_{i<j} (wᵢ − wⱼ + j − i) / (j − i)`.
pub fn weyl_dim_gl(n: usize, w: &RationalWeight) -> Result<BigInt> {
    if w.rank() != n {
        return Err(Error::RankTooSmall { rank: w.rank(), needed: n });
    }
    let mut value = BigRational::one();
    let e = w.entries();
    for i in 0..n {
        for j in (i + 1)..n {
            let gap = (j - i) as i64;
            value *= BigRational::new(BigInt::from(e[i] - e[j] + gap), BigInt::from(gap));
        }
    }
    debug_assert!(value.is_integer());
    Ok(value.to_integer())
}

/// `[μ, ν] ↦ (μ₁, …, μ_l, 0, …, 0, −ν_m, …, −ν₁)` at rank `n`.
pub fn bipartition_to_rational_weight(b: &Bipartition, n: usize) -> Result<RationalWeight> {
    let needed = b.left.length() + b.right.length();
    if needed > n {
        return Err(Error::RankTooSmall { rank: n, needed });
    }
    let mut entries = vec![0i64; n];
    for i in 1..=b.left.length() {
        entries[i - 1] = b.left.part(i) as i64;
    }
    for j in 1..=b.right.length() {
        entries[n - j] = -(b.right.part(j) as i64);
    }
    RationalWeight::new(entries)
}

/// Reads a rational weight back as a bipartition.
pub fn rational_weight_to_bipartition(w: &RationalWeight) -> Bipartition {
    let left = w.0.iter().filter(|&&x| x > 0).map(|&x| x as usize).collect();
    let right = w.0.iter().rev().filter(|&&x| x < 0).map(|&x| (-x) as usize).collect();
    Bipartition::new(
        crate::Partition::new(left).expect("dominant weight"),
        crate::Partition::new(right).expect("dominant weight"),
    )
}

static GT_CACHE: LazyLock<Mutex<HashMap<Vec<i64>, Arc<WeightMultiset>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// Weight multiplicities of the irreducible `V_w`, by Gelfand-Tsetlin branching
/// `GL_n ↓ GL_{n−1}`: each interlacing `μ` contributes `V_μ` with last weight
/// coordinate `|w| − |μ|`.
pub fn weight_multiset(w: &RationalWeight) -> Arc<WeightMultiset> {
    gt_weights(w.entries())
}

fn gt_weights(top: &[i64]) -> Arc<WeightMultiset> {
    if let Some(v) = GT_CACHE.lock().unwrap().get(top) {
        return Arc::clone(v);
    }
    let mut out = WeightMultiset::new();
    if top.len() <= 1 {
        out.insert(top.to_vec(), BigInt::one());
    } else {
        let total: i64 = top.iter().sum();
        let mut mu = vec![0i64; top.len() - 1];
        interlacing(top, 0, &mut mu, &mut |mu| {
            let last = total - mu.iter().sum::<i64>();
            for (w, m) in gt_weights(mu).iter() {
                let mut key = w.clone();
                key.push(last);
                *out.entry(key).or_insert_with(BigInt::zero) += m;
            }
        });
    }
    let out = Arc::new(out);
    GT_CACHE.lock().unwrap().insert(top.to_vec(), Arc::clone(&out));
    out
}

fn interlacing(top: &[i64], i: usize, mu: &mut Vec<i64>, emit: &mut dyn FnMut(&[i64])) {
    if i == mu.len() {
        emit(mu);
        return;
    }
    for v in top[i + 1]..=top[i] {
        mu[i] = v;
        interlacing(top, i + 1, mu, emit);
    }
}

/// Sorts `v` into weakly decreasing order, returning `None` on a repeated
/// entry and otherwise the parity of the sorting permutation.
fn sort_with_sign(v: &mut [i64]) -> Option<bool> {
    let mut odd = false;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] < v[j] {
            v.swap(j - 1, j);
            odd = !odd;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        return None;
    }
    Some(odd)
}

/// Decomposition of `V_a ⊗ V_b` for `GL_n` by the Brauer-Klimyk formula
/// `Σ_{μ ∈ wt(V_a)} m(μ) · sign(σ) V_{σ(μ + b + ρ) − ρ}`.
pub fn finite_tensor(
    n: usize,
    a: &RationalWeight,
    b: &RationalWeight,
) -> Result<BTreeMap<RationalWeight, BigInt>> {
    if a.rank() != n || b.rank() != n {
        return Err(Error::RankTooSmall { rank: a.rank().min(b.rank()), needed: n });
    }
    // Take weights of the smaller factor.
    let (small, big) = if weyl_dim_gl(n, a)? <= weyl_dim_gl(n, b)? { (a, b) } else { (b, a) };
    let rho: Vec<i64> = (0..n).map(|i| (n - 1 - i) as i64).collect();
    let mut acc: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    for (mu, m) in weight_multiset(small).iter() {
        let mut v: Vec<i64> = (0..n).map(|i| mu[i] + big.0[i] + rho[i]).collect();
        let Some(odd) = sort_with_sign(&mut v) else { continue };
        for (x, r) in v.iter_mut().zip(&rho) {
            *x -= r;
        }
        let entry = acc.entry(v).or_insert_with(BigInt::zero);
        if odd {
            *entry -= m;
        } else {
            *entry += m;
        }
    }
    let mut out = BTreeMap::new();
    for (w, m) in acc {
        if m.is_zero() {
            continue;
        }
        if m.is_negative() {
            return Err(Error::InternalInconsistency(format!("negative multiplicity {m} for {w:?}")));
        }
        out.insert(RationalWeight::new(w)?, m);
    }
    Ok(out)
}

/// Weight multiset of a tensor product (convolution of the factors).
pub fn multiset_product(a: &WeightMultiset, b: &WeightMultiset) -> WeightMultiset {
    let mut out = WeightMultiset::new();
    for (wa, ma) in a {
        for (wb, mb) in b {
            let key: Vec<i64> = wa.iter().zip(wb).map(|(x, y)| x + y).collect();
            *out.entry(key).or_insert_with(BigInt::zero) += ma * mb;
        }
    }
    out
}

/// Weights of `Symᵐ(gl_n)`: sums of `m`-element multisets of the `n²`
/// weights `eᵢ − eⱼ` of the adjoint representation.
pub fn adjoint_sym_power_weights(n: usize, m: usize) -> WeightMultiset {
    let basis: Vec<(usize, usize)> = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect();
    let mut out = WeightMultiset::new();
    fn go(
        basis: &[(usize, usize)],
        start: usize,
        left: usize,
        current: &mut Vec<i64>,
        out: &mut WeightMultiset,
    ) {
        if left == 0 {
            *out.entry(current.clone()).or_insert_with(BigInt::zero) += 1;
            return;
        }
        for idx in start..basis.len() {
            let (i, j) = basis[idx];
            current[i] += 1;
            current[j] -= 1;
            go(basis, idx, left - 1, current, out);
            current[i] -= 1;
            current[j] += 1;
        }
    }
    go(&basis, 0, m, &mut vec![0; n], &mut out);
    out
}

/// Decomposes a weight multiset into irreducibles by repeatedly removing the
/// full weight system of the irreducible with the lexicographically largest
/// remaining weight.
pub fn decompose_by_weights(n: usize, weights: &WeightMultiset) -> Result<BTreeMap<RationalWeight, BigInt>> {
    let mut remaining: WeightMultiset =
        weights.iter().filter(|(_, m)| !m.is_zero()).map(|(w, m)| (w.clone(), m.clone())).collect();
    let mut out = BTreeMap::new();
    while let Some((top, mult)) = remaining.iter().next_back().map(|(w, m)| (w.clone(), m.clone())) {
        if top.len() != n {
            return Err(Error::NotARepresentation(format!("weight {top:?} has length != {n}")));
        }
        if mult.is_negative() {
            return Err(Error::NotARepresentation(format!("negative multiplicity at {top:?}")));
        }
        let highest = RationalWeight::new(top.clone())
            .map_err(|_| Error::NotARepresentation(format!("top weight {top:?} is not dominant")))?;
        for (w, m) in weight_multiset(&highest).iter() {
            let entry = remaining.entry(w.clone()).or_insert_with(BigInt::zero);
            *entry -= m * &mult;
            if entry.is_negative() {
                return Err(Error::NotARepresentation(format!(
                    "stripping {highest} leaves negative multiplicity at {w:?}"
                )));
            }
            if entry.is_zero() {
                remaining.remove(w);
            }
        }
        out.insert(highest, mult);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Partition;

    fn rw(v: &[i64]) -> RationalWeight {
        RationalWeight::new(v.to_vec()).unwrap()
    }

    fn bp(l: &[usize], r: &[usize]) -> Bipartition {
        Bipartition::new(Partition::new(l.to_vec()).unwrap(), Partition::new(r.to_vec()).unwrap())
    }

    #[test]
    fn weyl_dim_examples() {
        for n in 1..=8 {
            let mut v = vec![0; n];
            v[0] = 1;
            assert_eq!(weyl_dim_gl(n, &rw(&v)).unwrap(), BigInt::from(n));
        }
        assert_eq!(weyl_dim_gl(3, &rw(&[1, 0, -1])).unwrap(), BigInt::from(8));
        assert_eq!(weyl_dim_gl(4, &rw(&[2, 0, 0, -2])).unwrap(), BigInt::from(84));
    }

    #[test]
    fn embedding_examples() {
        assert_eq!(bipartition_to_rational_weight(&bp(&[1], &[1]), 4).unwrap(), rw(&[1, 0, 0, -1]));
        assert_eq!(bipartition_to_rational_weight(&bp(&[], &[]), 3).unwrap(), rw(&[0, 0, 0]));
        assert_eq!(bipartition_to_rational_weight(&bp(&[2, 1], &[1]), 5).unwrap(), rw(&[2, 1, 0, 0, -1]));
        assert!(matches!(
            bipartition_to_rational_weight(&bp(&[1, 1], &[1]), 2),
            Err(Error::RankTooSmall { rank: 2, needed: 3 })
        ));
    }

    #[test]
    fn gt_weights_have_weyl_dimension() {
        for w in [rw(&[2, 1, 0]), rw(&[1, 0, -1]), rw(&[3, 0, 0, -2]), rw(&[2, 2, 1, 0, -1])] {
            let total: BigInt = weight_multiset(&w).values().sum();
            assert_eq!(total, weyl_dim_gl(w.rank(), &w).unwrap(), "{w}");
        }
    }

    #[test]
    fn tensor_examples() {
        for n in 2..=6 {
            let v = bipartition_to_rational_weight(&bp(&[1], &[]), n).unwrap();
            let dual = bipartition_to_rational_weight(&bp(&[], &[1]), n).unwrap();
            let out = finite_tensor(n, &v, &dual).unwrap();
            let adj = bipartition_to_rational_weight(&bp(&[1], &[1]), n).unwrap();
            let zero = rw(&vec![0; n]);
            assert_eq!(out, BTreeMap::from([(adj, BigInt::one()), (zero, BigInt::one())]));
        }
        let w = rw(&[2, 1, 0, -3]);
        assert_eq!(finite_tensor(4, &w, &rw(&[0; 4])).unwrap(), BTreeMap::from([(w.clone(), BigInt::one())]));
        let v = bipartition_to_rational_weight(&bp(&[1], &[]), 6).unwrap();
        let out = finite_tensor(6, &v, &v).unwrap();
        let expected = BTreeMap::from([
            (bipartition_to_rational_weight(&bp(&[2], &[]), 6).unwrap(), BigInt::one()),
            (bipartition_to_rational_weight(&bp(&[1, 1], &[]), 6).unwrap(), BigInt::one()),
        ]);
        assert_eq!(out, expected);
    }

    #[test]
    fn tensor_dimensions_multiply() {
        let weights =
            [rw(&[1, 0, 0, 0, -1]), rw(&[2, 1, 0, 0, 0]), rw(&[0, 0, 0, -1, -1]), rw(&[1, 1, 0, -1, -2])];
        for a in &weights {
            for b in &weights {
                let out = finite_tensor(5, a, b).unwrap();
                let total: BigInt = out.iter().map(|(w, m)| weyl_dim_gl(5, w).unwrap() * m).sum();
                assert_eq!(total, weyl_dim_gl(5, a).unwrap() * weyl_dim_gl(5, b).unwrap());
            }
        }
    }

    #[test]
    fn decompose_examples() {
        assert!(decompose_by_weights(3, &WeightMultiset::new()).unwrap().is_empty());
        let v = weight_multiset(&rw(&[1, 0, 0]));
        let dual = weight_multiset(&rw(&[0, 0, -1]));
        let out = decompose_by_weights(3, &multiset_product(&v, &dual)).unwrap();
        assert_eq!(out, BTreeMap::from([(rw(&[1, 0, -1]), BigInt::one()), (rw(&[0, 0, 0]), BigInt::one())]));
    }

    #[test]
    fn decompose_rejects_non_representations() {
        let mut bogus = WeightMultiset::new();
        bogus.insert(vec![1, 0], BigInt::one());
        assert!(matches!(decompose_by_weights(2, &bogus), Err(Error::NotARepresentation(_))));
        let mut not_dominant = WeightMultiset::new();
        not_dominant.insert(vec![0, 1], BigInt::one());
        // lexicographically largest weight (0,1) is not dominant
        assert!(decompose_by_weights(2, &not_dominant).is_err());
    }

    #[test]
    fn adjoint_square_weights() {
        let w = adjoint_sym_power_weights(3, 1);
        assert_eq!(w.values().sum::<BigInt>(), BigInt::from(9));
        assert_eq!(w[&vec![0, 0, 0]], BigInt::from(3));
        // Sym² of a 16-dimensional space
        assert_eq!(adjoint_sym_power_weights(4, 2).values().sum::<BigInt>(), BigInt::from(136));
    }
}
