//! Categorical dimensions in `rep(GL_t)` and the Nekrasov-Okounkov identity.
//!
//! `dim L_[λ,μ] = Π_k (t − k)^{m_k} / (Π hooks(λ) · Π hooks(μ))`, where `m_k`
//! counts pairs `(i, j)` with `(i − λᵢ) + (j − μⱼ) = k + 1`, measured against
//! the same count for empty `λ, μ`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::characters::CharacterSeries;
use crate::error::{Error, Result};
use crate::partitions::{enumerate_partitions, Partition};

/// Regularized exponent of `(t − k)` in `dim L_[λ,μ]`.
///
/// Both counts range over `[1..N]²` for an `N` past every index where `λ` or
/// `μ` can matter; their difference does not depend on `N`.
pub fn m_exponent(lambda: &Partition, mu: &Partition, k: i64) -> i64 {
    let n = (lambda.length() + mu.length() + lambda.first() + mu.first()) as i64 + k.abs() + 2;
    let target = k + 1;
    let shifted = |p: &Partition, i: i64| i - p.part(i as usize) as i64;
    let mut count = 0i64;
    for i in 1..=n {
        let a = shifted(lambda, i);
        for j in 1..=n {
            if a + shifted(mu, j) == target {
                count += 1;
            }
        }
    }
    // #{(i, j) ∈ [1..N]² : i + j = k + 1}
    let baseline = if target < 2 { 0 } else { (target - 1).min(2 * n + 1 - target).max(0) };
    count - baseline
}

/// `Π_k (t − k)^{m_k} / hook_denominator`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DimensionExpr {
    pub numerator_exponents: BTreeMap<i64, u32>,
    pub hook_denominator: BigInt,
}

impl DimensionExpr {
    /// Degree in `t`.
    pub fn degree(&self) -> u32 {
        self.numerator_exponents.values().sum()
    }
}

impl fmt::Display for DimensionExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator_exponents.is_empty() {
            f.write_str("1")?;
        }
        for (&k, &m) in &self.numerator_exponents {
            let factor = match k {
                0 => "t".to_string(),
                k if k > 0 => format!("(t-{k})"),
                k => format!("(t+{})", -k),
            };
            f.write_str(&factor)?;
            if m > 1 {
                write!(f, "^{m}")?;
            }
        }
        if !self.hook_denominator.is_one() {
            write!(f, " / {}", self.hook_denominator)?;
        }
        Ok(())
    }
}

/// The dimension of `L_[λ,μ]` as a rational function of `t`.
pub fn dim_expr(lambda: &Partition, mu: &Partition) -> Result<DimensionExpr> {
    let reach = (lambda.length() + mu.length() + lambda.first() + mu.first()) as i64 + 2;
    let mut numerator_exponents = BTreeMap::new();
    for k in -reach..=reach {
        let m = m_exponent(lambda, mu, k);
        if m < 0 {
            return Err(Error::InternalInconsistency(format!(
                "negative exponent {m} of (t-{k}) in dim L[{lambda}; {mu}]"
            )));
        }
        if m > 0 {
            numerator_exponents.insert(k, m as u32);
        }
    }
    let hook_denominator =
        lambda.hook_lengths().into_iter().chain(mu.hook_lengths()).map(BigInt::from).product();
    Ok(DimensionExpr { numerator_exponents, hook_denominator })
}

/// Exact value of a dimension expression at `t`.
pub fn evaluate_dim(e: &DimensionExpr, t: &BigRational) -> BigRational {
    let mut value = BigRational::one();
    for (&k, &m) in &e.numerator_exponents {
        let factor = t - BigRational::from_integer(BigInt::from(k));
        for _ in 0..m {
            value *= &factor;
        }
    }
    value / BigRational::from_integer(e.hook_denominator.clone())
}

/// Categorical dimension of every coefficient of a series at `t`.
pub fn series_dimension(s: &CharacterSeries, t: &BigRational) -> Result<Vec<BigRational>> {
    s.coeffs()
        .iter()
        .map(|c| {
            let mut total = BigRational::zero();
            for (b, mult) in c.iter() {
                let d = evaluate_dim(&dim_expr(&b.left, &b.right)?, t);
                total += d * BigRational::from_integer(mult.clone());
            }
            Ok(total)
        })
        .collect()
}

/// A polynomial in `x` with rational coefficients, stored densely by degree.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XPolynomial {
    coeffs: Vec<BigRational>,
}

impl XPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        XPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        XPolynomial::default()
    }

    pub fn constant(c: BigRational) -> Self {
        XPolynomial::new(vec![c])
    }

    pub fn from_integer(c: i64) -> Self {
        XPolynomial::constant(BigRational::from_integer(BigInt::from(c)))
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        XPolynomial::new(vec![BigRational::zero(), BigRational::one()])
    }

    /// `1 − x/h²`
    pub fn hook_factor(h: usize) -> Self {
        let h2 = BigInt::from(h) * BigInt::from(h);
        XPolynomial::new(vec![BigRational::one(), -BigRational::new(BigInt::one(), h2)])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        XPolynomial::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }
}

impl Add for &XPolynomial {
    type Output = XPolynomial;
    fn add(self, rhs: &XPolynomial) -> XPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        let get = |p: &XPolynomial, i: usize| p.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero);
        XPolynomial::new((0..len).map(|i| get(self, i) + get(rhs, i)).collect())
    }
}

impl Neg for &XPolynomial {
    type Output = XPolynomial;
    fn neg(self) -> XPolynomial {
        XPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &XPolynomial {
    type Output = XPolynomial;
    fn sub(self, rhs: &XPolynomial) -> XPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &XPolynomial {
    type Output = XPolynomial;
    fn mul(self, rhs: &XPolynomial) -> XPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return XPolynomial::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        XPolynomial::new(out)
    }
}

impl fmt::Display for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            }
            first = false;
            match d {
                0 => write!(f, "{abs}")?,
                _ => {
                    if !abs.is_one() {
                        write!(f, "{abs}*")?;
                    }
                    f.write_str("x")?;
                    if d > 1 {
                        write!(f, "^{d}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn divisor_sum(n: usize) -> BigInt {
    (1..=n).filter(|&d| n.is_multiple_of(d)).map(BigInt::from).sum()
}

/// Coefficients of `q⁰ … q^order` in `Π_{i≥1} (1 − qⁱ)^{x−1}`.
///
/// The logarithm is `(1 − x) Σ_n σ(n)/n · qⁿ`; exponentiating with
/// `n·fₙ = Σ_{k=1..n} k·gₖ·f_{n−k}` stays in exact arithmetic.
pub fn nekrasov_okounkov_lhs(order: usize) -> Vec<XPolynomial> {
    let one_minus_x = &XPolynomial::from_integer(1) - &XPolynomial::x();
    let mut f = vec![XPolynomial::from_integer(1)];
    for n in 1..=order {
        let mut acc = XPolynomial::zero();
        for k in 1..=n {
            let kg = one_minus_x.scale(&BigRational::from_integer(divisor_sum(k)));
            acc = &acc + &(&kg * &f[n - k]);
        }
        f.push(acc.scale(&BigRational::new(BigInt::one(), BigInt::from(n))));
    }
    f
}

/// Coefficients of `q⁰ … q^order` in `Σ_λ q^{|λ|} Π_{h} (1 − x/h²)`.
pub fn nekrasov_okounkov_rhs(order: usize) -> Vec<XPolynomial> {
    (0..=order)
        .map(|n| {
            enumerate_partitions(n).iter().fold(XPolynomial::zero(), |acc, lambda| {
                let term = lambda
                    .hook_lengths()
                    .into_iter()
                    .fold(XPolynomial::from_integer(1), |p, h| &p * &XPolynomial::hook_factor(h));
                &acc + &term
            })
        })
        .collect()
}

/// Per-power comparison of both sides of the hook-length identity.
pub fn nekrasov_okounkov_check(order: usize) -> Vec<(usize, XPolynomial, XPolynomial)> {
    nekrasov_okounkov_lhs(order)
        .into_iter()
        .zip(nekrasov_okounkov_rhs(order))
        .enumerate()
        .map(|(n, (l, r))| (n, l, r))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn m_exponent_examples() {
        assert_eq!(m_exponent(&p(&[1]), &p(&[1]), 1), 1);
        assert_eq!(m_exponent(&p(&[1]), &p(&[1]), -1), 1);
        assert_eq!(m_exponent(&p(&[1]), &p(&[1]), 0), 0);
        for k in -6..=6 {
            assert_eq!(m_exponent(&p(&[]), &p(&[]), k), 0);
        }
    }

    #[test]
    fn dim_expr_examples() {
        let trivial = dim_expr(&p(&[]), &p(&[])).unwrap();
        assert!(trivial.numerator_exponents.is_empty());
        assert_eq!(trivial.hook_denominator, BigInt::one());
        let v = dim_expr(&p(&[1]), &p(&[])).unwrap();
        assert_eq!(v.numerator_exponents, BTreeMap::from([(0, 1)]));
        assert_eq!(v.to_string(), "t");
        let adj = dim_expr(&p(&[1]), &p(&[1])).unwrap();
        assert_eq!(adj.numerator_exponents, BTreeMap::from([(-1, 1), (1, 1)]));
        assert_eq!(adj.to_string(), "(t+1)(t-1)");
    }

    #[test]
    fn evaluate_examples() {
        let adj = dim_expr(&p(&[1]), &p(&[1])).unwrap();
        assert_eq!(evaluate_dim(&adj, &rat(5)), rat(24));
        let trivial = dim_expr(&p(&[]), &p(&[])).unwrap();
        assert_eq!(evaluate_dim(&trivial, &BigRational::new(7.into(), 3.into())), rat(1));
        assert_eq!(evaluate_dim(&dim_expr(&p(&[2]), &p(&[2])).unwrap(), &rat(4)), rat(84));
    }

    #[test]
    fn hook_denominator_divides_at_integers() {
        let e = dim_expr(&p(&[2, 1]), &p(&[3])).unwrap();
        assert_eq!(e.hook_denominator, BigInt::from(3 * 3 * 2));
        for t in 8..14 {
            assert!(evaluate_dim(&e, &rat(t)).is_integer());
        }
    }

    #[test]
    fn no_lhs_examples() {
        let lhs = nekrasov_okounkov_lhs(2);
        assert_eq!(lhs[0], XPolynomial::from_integer(1));
        assert_eq!(lhs[1], &XPolynomial::from_integer(1) - &XPolynomial::x());
        assert_eq!(lhs[2], nekrasov_okounkov_rhs(2)[2]);
    }

    #[test]
    fn no_rhs_examples() {
        let rhs = nekrasov_okounkov_rhs(2);
        assert_eq!(rhs[0], XPolynomial::from_integer(1));
        assert_eq!(rhs[1], &XPolynomial::from_integer(1) - &XPolynomial::x());
        let expected = &(&XPolynomial::hook_factor(1) * &XPolynomial::hook_factor(2)).scale(&rat(2))
            * &XPolynomial::from_integer(1);
        assert_eq!(rhs[2], expected);
    }

    #[test]
    fn polynomial_display() {
        let p = XPolynomial::new(vec![
            rat(2),
            BigRational::new((-5).into(), 2.into()),
            BigRational::new(1.into(), 2.into()),
        ]);
        assert_eq!(p.to_string(), "2 - 5/2*x + 1/2*x^2");
        assert_eq!(XPolynomial::zero().to_string(), "0");
    }
}
