//! Word-level expansion of the continued fraction.
//!
//! The same recursion as [`super::cf`], but over sets of labeled words
//! instead of commutative series. Every union, concatenation and star checks
//! that no word is produced twice, so a successful expansion certifies that
//! the translation from word sets to series is unambiguous up to the given
//! length.

use std::collections::HashSet;
use std::fmt;

use super::poly::{MarkerLayout, TruncatedSeries};
use crate::bijections::VariantMap;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StepKind {
    Rise(u32),
    Fall,
    Level,
}

/// A step together with the height it starts from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledLetter {
    pub kind: StepKind,
    pub height: u32,
}

impl fmt::Display for LabeledLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            StepKind::Rise(l) => write!(f, "a{l}@{}", self.height),
            StepKind::Fall => write!(f, "b@{}", self.height),
            StepKind::Level => write!(f, "c@{}", self.height),
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LabeledWord(pub Vec<LabeledLetter>);

impl LabeledWord {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn concat(&self, other: &LabeledWord) -> LabeledWord {
        let mut v = Vec::with_capacity(self.len() + other.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&other.0);
        LabeledWord(v)
    }
}

impl fmt::Display for LabeledWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("ε");
        }
        for (i, l) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// Word set that refuses to hold the same word twice.
#[derive(Default)]
struct UniqueWords {
    seen: HashSet<LabeledWord>,
    list: Vec<LabeledWord>,
}

impl UniqueWords {
    fn insert(&mut self, w: LabeledWord) -> Result<()> {
        if !self.seen.insert(w.clone()) {
            return Err(Error::Ambiguous(w.to_string()));
        }
        self.list.push(w);
        Ok(())
    }
}

fn concat_sets(a: &[LabeledWord], b: &[LabeledWord], max_len: usize) -> Result<Vec<LabeledWord>> {
    let mut out = UniqueWords::default();
    for x in a {
        for y in b {
            if x.len() + y.len() <= max_len {
                out.insert(x.concat(y))?;
            }
        }
    }
    Ok(out.list)
}

fn star(e: &[LabeledWord], max_len: usize) -> Result<Vec<LabeledWord>> {
    debug_assert!(e.iter().all(|w| !w.is_empty()));
    let mut all = UniqueWords::default();
    all.insert(LabeledWord::default())?;
    let mut frontier = vec![LabeledWord::default()];
    while !frontier.is_empty() {
        let next = concat_sets(&frontier, e, max_len)?;
        for w in &next {
            all.insert(w.clone())?;
        }
        frontier = next;
    }
    Ok(all.list)
}

fn single(kind: StepKind, height: usize) -> Vec<LabeledWord> {
    vec![LabeledWord(vec![LabeledLetter {
        kind,
        height: height as u32,
    }])]
}

/// All labeled paths of length `≤ max_len` from height 0 back to 0 that stay
/// within `[0, h]`, produced by the continued-fraction recursion. Fails with
/// [`Error::Ambiguous`] if any word is produced twice.
pub fn expand_words(k: usize, h: usize, max_len: usize) -> Result<Vec<LabeledWord>> {
    if k == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let mut levels: Vec<Option<Vec<LabeledWord>>> = vec![None; h + 1];
    for i in (0..=h).rev() {
        let spent = i + i.div_ceil(k);
        let Some(budget) = max_len.checked_sub(spent) else {
            continue;
        };
        let mut kernel = UniqueWords::default();
        if budget >= 1 {
            for w in single(StepKind::Level, i) {
                kernel.insert(w)?;
            }
        }
        for l in 1..=k {
            if i + l > h {
                break;
            }
            // a_{i,l} P_{i+l} b_{i+l} P_{i+l-1} b_{i+l-1} … P_{i+1} b_{i+1}
            let mut term = single(StepKind::Rise(l as u32), i);
            for m in (1..=l).rev() {
                let Some(inner) = &levels[i + m] else {
                    term.clear();
                    break;
                };
                term = concat_sets(&term, inner, budget)?;
                term = concat_sets(&term, &single(StepKind::Fall, i + m), budget)?;
            }
            for w in term {
                kernel.insert(w)?;
            }
        }
        levels[i] = Some(star(&kernel.list, budget)?);
    }
    let mut words = levels[0].take().expect("level 0 has a budget");
    words.sort();
    Ok(words)
}

/// Commutative image of a word set: a step from height `j` maps to
/// `(j+1) t` times the sum of the markers of its class (rise by `l`: class
/// `l + 1`; level: class 1; fall: `z[0,1]`).
pub fn words_image(k: usize, words: &[LabeledWord], max_deg: u32) -> TruncatedSeries {
    let layout = MarkerLayout::full(k);
    let map = VariantMap::new(k);
    let mut total = TruncatedSeries::zero(layout.clone(), max_deg);
    for w in words.iter().filter(|w| w.len() <= max_deg as usize) {
        let mut s = TruncatedSeries::one(layout.clone(), max_deg);
        for letter in &w.0 {
            let weight = letter.height as u64 + 1;
            let (class, variants) = match letter.kind {
                StepKind::Rise(l) => (l as usize + 1, map.variant_count(l as usize)),
                StepKind::Level => (1, map.variant_count(0)),
                StepKind::Fall => (0, 1),
            };
            let step =
                TruncatedSeries::weighted_marker_sum(&layout, max_deg, weight, class, variants);
            s = s.mul(&step);
        }
        total = total.add(&s);
    }
    total
}
