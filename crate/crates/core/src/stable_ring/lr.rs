//! Littlewood-Richardson rule.
//!
//! Two independent enumerations live here: [`add_boxes`] grows a (possibly
//! non-partition) dominant integer weight by an LR skew tableau of a given
//! content, producing a whole product at once; [`lr_coeff`] counts LR
//! tableaux of one fixed skew shape. They are cross-checked in tests.

use std::collections::{BTreeMap, HashMap};
use std::sync::{LazyLock, Mutex};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::partitions::Partition;

/// Decomposition of `V_base ⊗ V_content` at rank `base.len()`.
///
/// `base` must be weakly decreasing (entries may be negative). Each output key is
/// a weakly decreasing vector of the same length; rows past `base.len()` are
/// never used, which is exactly the rank-`n` truncation of the LR rule.
pub fn add_boxes(base: &[i64], content: &Partition) -> BTreeMap<Vec<i64>, BigInt> {
    debug_assert!(base.windows(2).all(|w| w[0] >= w[1]));
    let n = base.len();
    // state: (shape, boxes carrying the previous label per row) -> number of tableaux
    let mut states: HashMap<(Vec<i64>, Vec<usize>), BigInt> = HashMap::new();
    states.insert((base.to_vec(), vec![0; n]), BigInt::one());

    for (label_idx, &count) in content.parts().iter().enumerate() {
        let first_label = label_idx == 0;
        let mut next: HashMap<(Vec<i64>, Vec<usize>), BigInt> = HashMap::new();
        for ((shape, prev), mult) in &states {
            let mut added = vec![0usize; n];
            place_strip(shape, prev, first_label, 0, count, 0, 0, &mut added, &mut |added| {
                let new_shape: Vec<i64> = shape.iter().zip(added).map(|(&s, &a)| s + a as i64).collect();
                *next.entry((new_shape, added.to_vec())).or_insert_with(BigInt::zero) += mult;
            });
        }
        states = next;
        if states.is_empty() {
            break;
        }
    }

    let mut out: BTreeMap<Vec<i64>, BigInt> = BTreeMap::new();
    for ((shape, _), mult) in states {
        *out.entry(shape).or_insert_with(BigInt::zero) += mult;
    }
    out
}

/// Distributes `remaining` boxes of one label as a horizontal strip over rows
/// `row..`, subject to the lattice-word condition against the previous label.
#[allow(clippy::too_many_arguments)]
fn place_strip(
    shape: &[i64],
    prev: &[usize],
    first_label: bool,
    row: usize,
    remaining: usize,
    placed_so_far: usize,
    prev_before_row: usize,
    added: &mut [usize],
    emit: &mut dyn FnMut(&[usize]),
) {
    if remaining == 0 {
        for a in added[row..].iter_mut() {
            *a = 0;
        }
        emit(added);
        return;
    }
    if row == shape.len() {
        return;
    }
    let mut cap = if row == 0 { remaining } else { ((shape[row - 1] - shape[row]) as usize).min(remaining) };
    if !first_label {
        // boxes of this label in rows <= row may not outnumber boxes of the
        // previous label in rows < row
        cap = cap.min(prev_before_row.saturating_sub(placed_so_far));
    }
    for a in (0..=cap).rev() {
        added[row] = a;
        place_strip(
            shape,
            prev,
            first_label,
            row + 1,
            remaining - a,
            placed_so_far + a,
            prev_before_row + prev[row],
            added,
            emit,
        );
    }
    added[row] = 0;
}

/// Product `s_λ · s_μ` expanded in Schur functions (no rank truncation).
pub fn lr_product(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, BigInt> {
    let rows = lambda.length() + mu.length();
    let base: Vec<i64> = (1..=rows).map(|i| lambda.part(i) as i64).collect();
    add_boxes(&base, mu)
        .into_iter()
        .map(|(shape, m)| {
            let parts = shape.into_iter().map(|x| x as usize).collect();
            (Partition::new(parts).expect("LR output is a partition"), m)
        })
        .collect()
}

type LrKey = (Partition, Partition, Partition);

static LR_CACHE: LazyLock<Mutex<HashMap<LrKey, BigInt>>> = LazyLock::new(|| Mutex::new(HashMap::new()));

/// The Littlewood-Richardson coefficient `c^ν_{λμ}`.
///
/// Counts semistandard fillings of the skew shape `ν/λ` with content `μ`
/// whose reverse reading word is a lattice word. Results are memoized.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> BigInt {
    if nu.size() != lambda.size() + mu.size() || (1..=lambda.length()).any(|i| lambda.part(i) > nu.part(i)) {
        return BigInt::zero();
    }
    let key = (lambda.clone(), mu.clone(), nu.clone());
    if let Some(v) = LR_CACHE.lock().unwrap().get(&key) {
        return v.clone();
    }
    let value = BigInt::from(count_lr_tableaux(lambda, mu, nu));
    LR_CACHE.lock().unwrap().insert(key, value.clone());
    value
}

fn count_lr_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let rows = nu.length();
    let labels = mu.length();
    // rows[r] holds the entries of row r+1 of the skew shape, left to right
    let mut filling: Vec<Vec<usize>> = (1..=rows).map(|r| vec![0; nu.part(r) - lambda.part(r)]).collect();
    let mut used = vec![0usize; labels + 1];
    let mut count = 0u64;
    fill_row(lambda, mu, nu, 0, &mut filling, &mut used, &mut count);
    count
}

fn fill_row(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    row: usize,
    filling: &mut Vec<Vec<usize>>,
    used: &mut Vec<usize>,
    count: &mut u64,
) {
    if row == filling.len() {
        if (1..used.len()).all(|k| used[k] == mu.part(k)) {
            *count += 1;
        }
        return;
    }
    let width = filling[row].len();
    fill_cell(lambda, mu, nu, row, 0, width, 1, filling, used, count);
}

#[allow(clippy::too_many_arguments)]
fn fill_cell(
    lambda: &Partition,
    mu: &Partition,
    nu: &Partition,
    row: usize,
    pos: usize,
    width: usize,
    min_label: usize,
    filling: &mut Vec<Vec<usize>>,
    used: &mut Vec<usize>,
    count: &mut u64,
) {
    if pos == width {
        if row_is_lattice(filling, row, used.len() - 1) {
            fill_row(lambda, mu, nu, row + 1, filling, used, count);
        }
        return;
    }
    let col = lambda.part(row + 1) + pos + 1;
    // column strictness against the cell above, when it belongs to the skew shape
    let mut lower = min_label;
    if row > 0 && col > lambda.part(row) && col <= nu.part(row) {
        let above = filling[row - 1][col - lambda.part(row) - 1];
        lower = lower.max(above + 1);
    }
    for label in lower..used.len() {
        if used[label] == mu.part(label) {
            continue;
        }
        filling[row][pos] = label;
        used[label] += 1;
        fill_cell(lambda, mu, nu, row, pos + 1, width, label, filling, used, count);
        used[label] -= 1;
    }
    filling[row][pos] = 0;
}

/// Checks the lattice condition after appending `row` to the reading word
/// (rows top to bottom, each read right to left).
fn row_is_lattice(filling: &[Vec<usize>], row: usize, labels: usize) -> bool {
    let mut seen = vec![0usize; labels + 2];
    for r in filling.iter().take(row) {
        for &x in r {
            seen[x] += 1;
        }
    }
    for &x in filling[row].iter().rev() {
        seen[x] += 1;
        if x > 1 && seen[x] > seen[x - 1] {
            return false;
        }
    }
    true
}
