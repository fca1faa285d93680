use std::collections::BTreeSet;

use deligne_core::affine_roots::bipartition_to_weight;
use deligne_core::partitions::{enumerate_partitions, partitions_up_to};
use deligne_core::weyl_slices::{
    dot_action, dot_action_by_word, dot_zero, enumerate_slices_gl, enumerate_slices_o, enumerate_slices_sp,
    inversion_set, is_slice, reduced_word,
};
use deligne_core::{Bipartition, CaseTag, RootSet, SliceGL, Weight};

/// Every `k`-subset of `items`.
fn subsets<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if items.len() < k {
        return Vec::new();
    }
    let mut out = subsets(&items[1..], k);
    for mut rest in subsets(&items[1..], k - 1) {
        rest.insert(0, items[0].clone());
        out.push(rest);
    }
    out
}

fn gl_root(i: usize, j: usize) -> Weight {
    Weight::from_eps(CaseTag::GL, [(1 - j as i64, 1), (i as i64, -1)], 0, 1)
}

fn os_root(case: CaseTag, i: usize, j: usize) -> Weight {
    Weight::from_eps(case, [(i as i64, -1), (j as i64, -1)], 0, 1)
}

fn sorted_cells(cells: impl IntoIterator<Item = (usize, usize)>) -> BTreeSet<(usize, usize)> {
    cells.into_iter().collect()
}

#[test]
fn gl_slices_are_exactly_the_partitions() {
    for n in 0..=5 {
        let box_cells: Vec<(usize, usize)> = (1..=n).flat_map(|i| (1..=n).map(move |j| (i, j))).collect();
        let accepted: BTreeSet<BTreeSet<(usize, usize)>> = subsets(&box_cells, n)
            .into_iter()
            .filter(|cells| is_slice(&cells.iter().map(|&(i, j)| gl_root(i, j)).collect()))
            .map(sorted_cells)
            .collect();
        let expected: BTreeSet<BTreeSet<(usize, usize)>> =
            enumerate_partitions(n).iter().map(|l| sorted_cells(l.cells())).collect();
        assert_eq!(accepted, expected, "n={n}");
    }
}

#[test]
fn orthosymplectic_slices_are_exactly_the_downsets() {
    for c in 0..=4 {
        let m = c + 1;
        let o_cells: Vec<(usize, usize)> = (1..=m).flat_map(|i| ((i + 1)..=m).map(move |j| (i, j))).collect();
        let accepted: BTreeSet<_> = subsets(&o_cells, c)
            .into_iter()
            .filter(|cells| is_slice(&cells.iter().map(|&(i, j)| os_root(CaseTag::O, i, j)).collect()))
            .map(sorted_cells)
            .collect();
        let expected: BTreeSet<_> = enumerate_slices_o(c)
            .into_iter()
            .filter(|s| s.cardinality() == c)
            .map(|s| sorted_cells(s.cells()))
            .collect();
        assert_eq!(accepted, expected, "O, c={c}");

        let sp_cells: Vec<(usize, usize)> = (1..=m).flat_map(|i| (i..=m).map(move |j| (i, j))).collect();
        let accepted: BTreeSet<_> = subsets(&sp_cells, c)
            .into_iter()
            .filter(|cells| is_slice(&cells.iter().map(|&(i, j)| os_root(CaseTag::Sp, i, j)).collect()))
            .map(sorted_cells)
            .collect();
        let expected: BTreeSet<_> = enumerate_slices_sp(c)
            .into_iter()
            .filter(|s| s.cardinality() == c)
            .map(|s| sorted_cells(s.cells()))
            .collect();
        assert_eq!(accepted, expected, "Sp, c={c}");
    }
}

#[test]
fn orthosymplectic_slice_counts() {
    // D∞: strict partitions p ↦ Σ pᵢ cells. C∞: Σ qᵢ cells too.
    for c in 0..=8 {
        let strict = partitions_up_to(c)
            .into_iter()
            .filter(|l| l.size() == c && l.parts().windows(2).all(|w| w[0] > w[1]))
            .count();
        assert_eq!(enumerate_slices_o(c).iter().filter(|s| s.cardinality() == c).count(), strict);
        assert_eq!(enumerate_slices_sp(c).iter().filter(|s| s.cardinality() == c).count(), strict);
        for s in enumerate_slices_o(c) {
            assert!(is_slice(&s.inversion_set()));
        }
        for s in enumerate_slices_sp(c) {
            assert!(is_slice(&s.inversion_set()));
        }
    }
}

#[test]
fn gl_slice_axioms() {
    for n in 0..=8 {
        for s in enumerate_slices_gl(n) {
            let inv = inversion_set(&s);
            assert!(is_slice(&inv));
            assert_eq!(inv.len(), n);
            assert_eq!(s.length(), n);
            assert_eq!(reduced_word(&s).len(), n);
            assert_eq!(dot_zero(&s), -&inv.sum(CaseTag::GL));
        }
    }
}

#[test]
fn removing_a_non_corner_breaks_the_slice() {
    for l in enumerate_partitions(6) {
        let s = SliceGL::new(l.clone());
        for (i, j) in l.cells() {
            let corner = l.part(i) == j && l.part(i + 1) < j;
            let reduced: RootSet =
                inversion_set(&s).iter().filter(|r| **r != gl_root(i, j)).cloned().collect();
            assert_eq!(is_slice(&reduced), corner, "{l} without ({i},{j})");
        }
    }
}

#[test]
fn closed_form_dot_action_matches_word() {
    let mut battery = Vec::new();
    for mu in partitions_up_to(3) {
        for nu in partitions_up_to(3 - mu.size()) {
            for k in [0, 1, 3, 5] {
                for a in [-2, 0, 3] {
                    battery.push(bipartition_to_weight(&Bipartition::new(mu.clone(), nu.clone()), k, a));
                }
            }
        }
    }
    for n in 0..=8 {
        for s in enumerate_slices_gl(n) {
            let w = reduced_word(&s);
            for phi in &battery {
                assert_eq!(dot_action(&s, phi), dot_action_by_word(&w, phi).unwrap(), "{} on {phi}", s.shape);
            }
        }
    }
}
