use deligne_core::affine_roots::{bipartition_to_weight, weight_to_bipartition};
use deligne_core::characters::{
    chr_l_explicit, chr_l_generic, chr_verma, delta_exponent, denominator_inverse, garland, lambda_dot,
    series_mul,
};
use deligne_core::partitions::{enumerate_partitions, partitions_up_to};
use deligne_core::stable_ring::sym_gprime;
use deligne_core::weyl_slices::dot_action;
use deligne_core::{Bipartition, CharacterSeries, Error, KElement, Partition, SliceGL};
use num_bigint::BigInt;

/// Dominant `(μ, ν, k)` with `|μ| + |ν| ≤ size` and `k ≤ max_level`.
fn dominant_triples(size: usize, max_level: i64) -> Vec<(Partition, Partition, i64)> {
    let mut out = Vec::new();
    for mu in partitions_up_to(size) {
        for nu in partitions_up_to(size - mu.size()) {
            for k in 0..=max_level {
                if (mu.first() + nu.first()) as i64 <= k {
                    out.push((mu.clone(), nu.clone(), k));
                }
            }
        }
    }
    out
}

#[test]
fn explicit_and_generic_paths_agree() {
    let triples = dominant_triples(3, 4);
    assert!(triples.len() > 40);
    for (mu, nu, k) in triples {
        let a = chr_l_explicit(&mu, &nu, k, 4).unwrap();
        let b = chr_l_generic(&mu, &nu, k, 4).unwrap();
        assert_eq!(a, b, "μ={mu} ν={nu} k={k}");
    }
}

#[test]
fn characters_are_nonnegative() {
    for (mu, nu, k) in dominant_triples(2, 3) {
        let s = chr_l_explicit(&mu, &nu, k, 5).unwrap();
        assert!(s.is_nonnegative(), "μ={mu} ν={nu} k={k}:\n{s}");
    }
}

#[test]
fn character_starts_with_the_top() {
    for (mu, nu, k) in dominant_triples(4, 5) {
        let s = chr_l_explicit(&mu, &nu, k, 0).unwrap();
        assert_eq!(s.coeffs(), &[KElement::from(Bipartition::new(mu.clone(), nu.clone()))]);
    }
}

#[test]
fn closed_forms_match_the_dot_action() {
    for (mu, nu, k) in dominant_triples(3, 4) {
        for lambda in partitions_up_to(6) {
            let d = delta_exponent(&lambda, &mu, &nu, k).unwrap();
            assert!(d >= lambda.size(), "λ={lambda} μ={mu} ν={nu} k={k}");
            let phi = bipartition_to_weight(&Bipartition::new(mu.clone(), nu.clone()), k, 0);
            let image = dot_action(&SliceGL::new(lambda.clone()), &phi);
            let expected = (lambda_dot(&lambda, &mu, &nu, k).unwrap(), k, -(d as i64));
            assert_eq!(weight_to_bipartition(&image).unwrap(), expected);
        }
    }
}

#[test]
fn non_dominant_input_is_rejected() {
    let two = Partition::new(vec![2]).unwrap();
    let one = Partition::new(vec![1]).unwrap();
    let err = chr_l_explicit(&two, &one, 2, 3).unwrap_err();
    assert!(matches!(err, Error::NonDominant { mu1: 2, nu1: 1, level: 2 }));
    assert_eq!(err.to_string(), "non-dominant: 2+1 > 2");
    assert!(chr_l_generic(&two, &one, 2, 3).is_err());
}

#[test]
fn denominator_identity() {
    for order in 0..=5 {
        let product = series_mul(&chr_verma(&Bipartition::trivial(), 0, order), &denominator_inverse(order));
        assert_eq!(product, CharacterSeries::one(order), "order {order}");
    }
}

#[test]
fn trivial_module_has_trivial_character() {
    let empty = Partition::empty();
    assert_eq!(chr_l_explicit(&empty, &empty, 0, 5).unwrap(), CharacterSeries::one(5));
    assert_eq!(chr_l_generic(&empty, &empty, 0, 5).unwrap(), CharacterSeries::one(5));
}

#[test]
fn verma_low_degrees() {
    let m = chr_verma(&Bipartition::trivial(), 0, 2);
    assert_eq!(m.coeff(1), sym_gprime(1));
    // U(u⁻)₂ = Sym²(g') ⊕ g'
    assert_eq!(m.coeff(2), &sym_gprime(2) + &sym_gprime(1));
}

#[test]
fn garland_terms_are_multiplicity_free() {
    for i in 0..=7 {
        let g = garland(i);
        assert_eq!(g.len(), enumerate_partitions(i).len());
        assert!(g.iter().all(|(b, m)| *m == BigInt::from(1) && b.right == b.left.conjugate()));
    }
}
