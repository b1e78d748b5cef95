//! Reference computations that share no code with the main implementations.
//! The `verify` suites and the tests compare against these.

use std::collections::BTreeMap;

use crate::series::{LabeledLetter, LabeledWord, StepKind};

/// Distinct rearrangements of `1^k 2^k … n^k`, in lexicographic order.
pub fn multiset_permutations(n: usize, k: usize) -> Vec<Vec<u32>> {
    let mut w: Vec<u32> = (1..=n as u32)
        .flat_map(|x| std::iter::repeat_n(x, k))
        .collect();
    let mut out = vec![w.clone()];
    while next_permutation(&mut w) {
        out.push(w.clone());
    }
    out
}

fn next_permutation(w: &mut [u32]) -> bool {
    let Some(i) = (1..w.len()).rev().find(|&i| w[i - 1] < w[i]) else {
        return false;
    };
    let j = (i..w.len())
        .rev()
        .find(|&j| w[j] > w[i - 1])
        .expect("w[i] qualifies");
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Every letter strictly between two copies of `x` is at least `x`.
pub fn is_stirling_word(w: &[u32]) -> bool {
    let mut first: BTreeMap<u32, usize> = BTreeMap::new();
    let mut last: BTreeMap<u32, usize> = BTreeMap::new();
    for (p, &x) in w.iter().enumerate() {
        first.entry(x).or_insert(p);
        last.insert(x, p);
    }
    first
        .iter()
        .all(|(&x, &a)| w[a..=last[&x]].iter().all(|&y| y >= x))
}

/// Stirling words obtained by filtering all rearrangements.
pub fn stirling_words_by_filter(n: usize, k: usize) -> Vec<Vec<u32>> {
    multiset_permutations(n, k)
        .into_iter()
        .filter(|w| is_stirling_word(w))
        .collect()
}

/// Number of rearrangements of `1^k … n^k`, saturating.
pub fn multinomial(n: usize, k: usize) -> u128 {
    let mut r: u128 = 1;
    let mut m: u128 = 0;
    for _ in 0..n {
        for j in 1..=k as u128 {
            m += 1;
            r = r.saturating_mul(m) / j;
        }
    }
    r
}

/// Peaks, valleys, double rises and double falls of an ordinary permutation
/// padded with `0` on both ends, indexed by letter (`out[x - 1]`).
/// Codes: 0 peak, 1 valley, 2 double rise, 3 double fall.
pub fn ordinary_shapes(pi: &[u32]) -> Vec<u8> {
    let mut out = vec![0u8; pi.len()];
    for (p, &x) in pi.iter().enumerate() {
        let left = if p == 0 { 0 } else { pi[p - 1] };
        let right = pi.get(p + 1).copied().unwrap_or(0);
        out[x as usize - 1] = match (left > x, right > x) {
            (false, false) => 0,
            (true, true) => 1,
            (false, true) => 2,
            (true, false) => 3,
        };
    }
    out
}

/// Lattice paths of length `≤ max_len` from 0 to 0 that never leave
/// `[0, h]`, over the steps rise by `1..=k`, fall by one and level, each
/// letter labeled with the height it starts from.
pub fn positive_paths(k: usize, h: usize, max_len: usize) -> Vec<LabeledWord> {
    let mut out = Vec::new();
    let mut path: Vec<LabeledLetter> = Vec::new();
    walk(k as u32, h as u32, max_len, 0, &mut path, &mut out);
    out.sort();
    out
}

fn walk(
    k: u32,
    h: u32,
    max_len: usize,
    height: u32,
    path: &mut Vec<LabeledLetter>,
    out: &mut Vec<LabeledWord>,
) {
    if height == 0 {
        out.push(LabeledWord(path.clone()));
    }
    if path.len() == max_len || height as usize > max_len - path.len() {
        return;
    }
    let mut steps = vec![(StepKind::Level, height)];
    if height > 0 {
        steps.push((StepKind::Fall, height - 1));
    }
    for l in 1..=k {
        if height + l <= h {
            steps.push((StepKind::Rise(l), height + l));
        }
    }
    for (kind, next) in steps {
        path.push(LabeledLetter { kind, height });
        walk(k, h, max_len, next, path, out);
        path.pop();
    }
}
