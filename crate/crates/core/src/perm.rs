//! k-Stirling permutations: words over `1..=n` in which every letter occurs
//! exactly `k` times and every letter strictly between two copies of `i` is
//! at least `i`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// First constraint a candidate word breaks.
///
/// Checks run in a fixed order (arity, length, label range, then letters in
/// increasing order), so the reported violation is deterministic: the
/// smallest violating letter, and within that letter the smallest position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Violation {
    ZeroMultiplicity,
    /// Word length is not a multiple of `k`.
    Length {
        len: usize,
        k: usize,
    },
    /// A letter outside `1..=n` (0-based `position`).
    LabelOutOfRange {
        position: usize,
        letter: u32,
        n: usize,
    },
    /// Letter occurs a number of times different from `k`.
    Multiplicity {
        letter: u32,
        count: usize,
    },
    /// `found < letter` sits at `position`, between two copies of `letter`.
    Betweenness {
        letter: u32,
        position: usize,
        found: u32,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::ZeroMultiplicity => write!(f, "k must be positive"),
            Violation::Length { len, k } => {
                write!(f, "length {len} is not a multiple of k = {k}")
            }
            Violation::LabelOutOfRange {
                position,
                letter,
                n,
            } => {
                write!(
                    f,
                    "letter {letter} at position {position} is outside 1..={n}"
                )
            }
            Violation::Multiplicity { letter, count } => {
                write!(f, "letter {letter} occurs {count} times")
            }
            Violation::Betweenness {
                letter,
                position,
                found,
            } => write!(
                f,
                "letter {found} at position {position} lies between two copies of {letter}"
            ),
        }
    }
}

/// Outcome of [`validate_stirling`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validity {
    Valid,
    Invalid(Violation),
}

impl Validity {
    pub fn is_valid(&self) -> bool {
        matches!(self, Validity::Valid)
    }
}

/// Checks `word` against every k-Stirling invariant and reports the first
/// violation.
pub fn validate_stirling(word: &[u32], k: usize) -> Validity {
    match check(word, k) {
        Ok(()) => Validity::Valid,
        Err(v) => Validity::Invalid(v),
    }
}

fn check(word: &[u32], k: usize) -> std::result::Result<(), Violation> {
    if k == 0 {
        return Err(Violation::ZeroMultiplicity);
    }
    if !word.len().is_multiple_of(k) {
        return Err(Violation::Length { len: word.len(), k });
    }
    let n = word.len() / k;
    if let Some((position, &letter)) = word
        .iter()
        .enumerate()
        .find(|(_, &x)| x == 0 || x as usize > n)
    {
        return Err(Violation::LabelOutOfRange {
            position,
            letter,
            n,
        });
    }

    let mut occurrences = vec![Vec::with_capacity(k); n + 1];
    for (pos, &x) in word.iter().enumerate() {
        occurrences[x as usize].push(pos);
    }
    for (letter, occ) in occurrences.iter().enumerate().skip(1) {
        if occ.len() != k {
            return Err(Violation::Multiplicity {
                letter: letter as u32,
                count: occ.len(),
            });
        }
        let (first, last) = (occ[0], occ[k - 1]);
        if let Some(position) = (first + 1..last).find(|&p| (word[p] as usize) < letter) {
            return Err(Violation::Betweenness {
                letter: letter as u32,
                position,
                found: word[position],
            });
        }
    }
    Ok(())
}

/// A validated k-Stirling permutation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KStirlingPermutation {
    k: usize,
    word: Vec<u32>,
}

impl KStirlingPermutation {
    pub fn new(word: Vec<u32>, k: usize) -> Result<Self> {
        match check(&word, k) {
            Ok(()) => Ok(Self { k, word }),
            Err(Violation::ZeroMultiplicity) => Err(Error::ZeroMultiplicity),
            Err(v) => Err(Error::InvalidPermutation(v)),
        }
    }

    /// The empty permutation of size 0.
    pub fn empty(k: usize) -> Result<Self> {
        Self::new(Vec::new(), k)
    }

    pub(crate) fn new_unchecked(word: Vec<u32>, k: usize) -> Self {
        debug_assert!(check(&word, k).is_ok(), "{word:?} is not {k}-Stirling");
        Self { k, word }
    }

    /// Replays an insertion history: label `m` is inserted as the block `m^k`
    /// into gap `choices[m - 1]` of the current word (gaps numbered from the
    /// left, `0..=k(m-1)`).
    pub fn from_insertions(k: usize, choices: &[usize]) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        let mut word = Vec::with_capacity(k * choices.len());
        for (idx, &gap) in choices.iter().enumerate() {
            if gap > word.len() {
                return Err(Error::InsertionOutOfRange {
                    label: idx + 1,
                    position: gap,
                    available: word.len() + 1,
                });
            }
            let label = idx as u32 + 1;
            word.splice(gap..gap, std::iter::repeat_n(label, k));
        }
        Ok(Self::new_unchecked(word, k))
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Number of distinct letters.
    pub fn size(&self) -> usize {
        self.word.len() / self.k
    }

    pub fn word(&self) -> &[u32] {
        &self.word
    }

    pub fn into_word(self) -> Vec<u32> {
        self.word
    }

    /// Occurrence positions (0-based) of every letter; entry `i - 1` lists the
    /// `k` positions of letter `i` in increasing order.
    pub fn occurrences(&self) -> Vec<Vec<usize>> {
        let mut occ = vec![Vec::with_capacity(self.k); self.size()];
        for (pos, &x) in self.word.iter().enumerate() {
            occ[x as usize - 1].push(pos);
        }
        occ
    }

    /// Inserts `(n+1)^k` into gap `gap` (`0..=kn`).
    pub fn insert_block(&self, gap: usize) -> Self {
        assert!(gap <= self.word.len(), "gap {gap} out of range");
        let label = self.size() as u32 + 1;
        let mut word = self.word.clone();
        word.splice(gap..gap, std::iter::repeat_n(label, self.k));
        Self::new_unchecked(word, self.k)
    }
}

impl fmt::Display for KStirlingPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.word.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}
