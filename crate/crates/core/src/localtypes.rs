//! Local order types of permutation letters and slot-occupancy types of tree
//! nodes. Both are bit strings of length `k + 1`; under the depth-first code
//! they coincide letter by letter.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::KStirlingPermutation;
use crate::tree::KaryIncreasingTree;

/// Bit string `b_1 … b_{k+1}` stored with `b_1` as the most significant bit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LocalType {
    len: u8,
    value: u32,
}

impl LocalType {
    /// Builds a type from its bits, leftmost first.
    pub fn from_bits(bits: &[bool]) -> Self {
        assert!(
            !bits.is_empty() && bits.len() <= 32,
            "bad local type length"
        );
        let value = bits.iter().fold(0u32, |acc, &b| (acc << 1) | b as u32);
        Self {
            len: bits.len() as u8,
            value,
        }
    }

    /// `value` read as a binary number of `len` digits.
    pub fn from_value(len: usize, value: u32) -> Self {
        assert!((1..=32).contains(&len), "bad local type length");
        assert!(
            len == 32 || value >> len == 0,
            "value wider than {len} bits"
        );
        Self {
            len: len as u8,
            value,
        }
    }

    pub fn zeros(len: usize) -> Self {
        Self::from_value(len, 0)
    }

    pub fn len(&self) -> usize {
        self.len as usize
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn value(&self) -> u32 {
        self.value
    }

    /// Bit `h`, 1-based from the left.
    pub fn bit(&self, h: usize) -> bool {
        assert!((1..=self.len()).contains(&h), "bit index {h} out of range");
        (self.value >> (self.len() - h)) & 1 == 1
    }

    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        (1..=self.len()).map(move |h| self.bit(h))
    }

    /// Number of ones (occupied slots).
    pub fn ones(&self) -> usize {
        self.value.count_ones() as usize
    }
}

impl fmt::Display for LocalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in self.bits() {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for LocalType {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let bits = s
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(format!("unexpected character `{other}` in local type")),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        if bits.is_empty() || bits.len() > 32 {
            return Err(format!("local type length {} out of range", bits.len()));
        }
        Ok(Self::from_bits(&bits))
    }
}

impl Serialize for LocalType {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Local types `L_1 … L_n` of a k-Stirling permutation.
///
/// With `j_1 < … < j_k` the positions of letter `i` and `-∞` outside the word:
/// bit 1 is set iff the left neighbour of the first copy is larger, bit `k+1`
/// iff the right neighbour of the last copy is larger, and bit `h` for
/// `2 ≤ h ≤ k` iff copies `h-1` and `h` are not adjacent.
pub fn local_types(sigma: &KStirlingPermutation) -> Vec<LocalType> {
    let k = sigma.k();
    let word = sigma.word();
    // None plays the role of -∞ and orders below every Some(label)
    let at = |p: isize| -> Option<u32> {
        if p < 0 {
            None
        } else {
            word.get(p as usize).copied()
        }
    };
    sigma
        .occurrences()
        .into_iter()
        .enumerate()
        .map(|(idx, occ)| {
            let me = Some(idx as u32 + 1);
            let mut bits = vec![false; k + 1];
            let first = occ[0] as isize;
            let last = occ[k - 1] as isize;
            bits[0] = at(first - 1) > me;
            for h in 2..=k {
                bits[h - 1] = at(occ[h - 1] as isize - 1) != me;
            }
            bits[k] = at(last + 1) > me;
            LocalType::from_bits(&bits)
        })
        .collect()
}

/// Slot-occupancy types `G_1 … G_n` of a (k+1)-ary increasing tree.
pub fn node_types(tree: &KaryIncreasingTree) -> Vec<LocalType> {
    (1..=tree.size() as u32)
        .map(|v| tree.node_type(v))
        .collect()
}

/// The four classical local types of ordinary permutations (`k = 1`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClassicType {
    /// `00`, a leaf.
    Peak,
    /// `11`, a double node.
    Valley,
    /// `01`, a right-branching node.
    DoubleRise,
    /// `10`, a left-branching node.
    DoubleFall,
}

impl ClassicType {
    pub fn name(self) -> &'static str {
        match self {
            ClassicType::Peak => "peak",
            ClassicType::Valley => "valley",
            ClassicType::DoubleRise => "double rise",
            ClassicType::DoubleFall => "double fall",
        }
    }

    pub fn node_name(self) -> &'static str {
        match self {
            ClassicType::Peak => "leaf",
            ClassicType::Valley => "double node",
            ClassicType::DoubleRise => "right-branching node",
            ClassicType::DoubleFall => "left-branching node",
        }
    }
}

impl fmt::Display for ClassicType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

pub fn classic_name(ty: LocalType) -> Result<ClassicType> {
    if ty.len() != 2 {
        return Err(Error::WrongArity {
            expected: 1,
            found: ty.len().saturating_sub(1),
        });
    }
    Ok(match ty.value() {
        0b00 => ClassicType::Peak,
        0b11 => ClassicType::Valley,
        0b01 => ClassicType::DoubleRise,
        _ => ClassicType::DoubleFall,
    })
}

/// Number of letters (or nodes) of each local type.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeHistogram {
    pub k: usize,
    pub counts: BTreeMap<LocalType, usize>,
}

impl TypeHistogram {
    pub fn from_types(k: usize, types: &[LocalType]) -> Self {
        let mut counts = BTreeMap::new();
        for &t in types {
            *counts.entry(t).or_insert(0) += 1;
        }
        Self { k, counts }
    }

    pub fn of_permutation(sigma: &KStirlingPermutation) -> Self {
        Self::from_types(sigma.k(), &local_types(sigma))
    }

    pub fn of_tree(tree: &KaryIncreasingTree) -> Self {
        Self::from_types(tree.k(), &node_types(tree))
    }

    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }

    pub fn get(&self, ty: LocalType) -> usize {
        self.counts.get(&ty).copied().unwrap_or(0)
    }
}

impl fmt::Display for TypeHistogram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (ty, c)) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{ty}:{c}")?;
        }
        Ok(())
    }
}

/// Anything whose letters/nodes carry local types.
pub trait Typed {
    fn types(&self) -> Vec<LocalType>;
    fn arity_k(&self) -> usize;
}

impl Typed for KStirlingPermutation {
    fn types(&self) -> Vec<LocalType> {
        local_types(self)
    }
    fn arity_k(&self) -> usize {
        self.k()
    }
}

impl Typed for KaryIncreasingTree {
    fn types(&self) -> Vec<LocalType> {
        node_types(self)
    }
    fn arity_k(&self) -> usize {
        self.k()
    }
}

pub fn type_histogram<T: Typed>(object: &T) -> TypeHistogram {
    TypeHistogram::from_types(object.arity_k(), &object.types())
}
