use std::fmt::Debug;
use std::hash::Hash;

use super::variant::VariantMap;
use crate::error::{Error, Result};
use crate::tree::{KaryIncreasingTree, PortTree, SlotRef};

/// A step of a lattice path that also fixes the outdegree of one tree node.
pub trait DiagramLetter: Copy + Eq + Hash + Ord + Debug {
    /// Vertical displacement of the step.
    fn step(&self) -> i64;

    fn is_rise(&self) -> bool;
}

/// Refined letters for (k+1)-ary trees. `variant` indexes [`VariantMap`]
/// (1-based): `Rise { up: l, .. }` is a node with `l + 1` occupied slots,
/// `Level` a node with one occupied slot and `Fall` a leaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum KaryLetter {
    Rise { up: u32, variant: u32 },
    Fall,
    Level { variant: u32 },
}

impl DiagramLetter for KaryLetter {
    fn step(&self) -> i64 {
        match self {
            KaryLetter::Rise { up, .. } => *up as i64,
            KaryLetter::Fall => -1,
            KaryLetter::Level { .. } => 0,
        }
    }

    fn is_rise(&self) -> bool {
        matches!(self, KaryLetter::Rise { .. })
    }
}

/// PORT letters: `Rise(l)` is a node of outdegree `l + 1`, `Level` outdegree
/// one, `Fall` a leaf.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PortLetter {
    Rise(u32),
    Fall,
    Level,
}

impl DiagramLetter for PortLetter {
    fn step(&self) -> i64 {
        match self {
            PortLetter::Rise(up) => *up as i64,
            PortLetter::Fall => -1,
            PortLetter::Level => 0,
        }
    }

    fn is_rise(&self) -> bool {
        matches!(self, PortLetter::Rise(_))
    }
}

/// A nonnegative lattice path from height 0 back to height 0 together with
/// its possibility sequence: the choice at a step starting from height `h`
/// lies in `0..=h`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PathDiagram<L> {
    word: Vec<L>,
    choices: Vec<u32>,
}

pub type KaryPathDiagram = PathDiagram<KaryLetter>;
pub type PortPathDiagram = PathDiagram<PortLetter>;

impl<L: DiagramLetter> PathDiagram<L> {
    pub fn new(word: Vec<L>, choices: Vec<u32>) -> Result<Self> {
        if word.len() != choices.len() {
            return Err(Error::InvalidDiagram {
                step: word.len().min(choices.len()) + 1,
                reason: format!(
                    "{} letters but {} possibility entries",
                    word.len(),
                    choices.len()
                ),
            });
        }
        let mut height = 0i64;
        for (j, (letter, &s)) in word.iter().zip(&choices).enumerate() {
            let step = j + 1;
            if letter.is_rise() && letter.step() < 1 {
                return Err(Error::InvalidDiagram {
                    step,
                    reason: "rise of height 0".into(),
                });
            }
            if s as i64 > height {
                return Err(Error::InvalidDiagram {
                    step,
                    reason: format!("choice {s} exceeds {height} at height {height}"),
                });
            }
            height += letter.step();
            if height < 0 {
                return Err(Error::InvalidDiagram {
                    step,
                    reason: "path goes below height 0".into(),
                });
            }
        }
        if height != 0 {
            return Err(Error::InvalidDiagram {
                step: word.len(),
                reason: format!("path ends at height {height}, not 0"),
            });
        }
        Ok(Self { word, choices })
    }

    pub fn empty() -> Self {
        Self {
            word: Vec::new(),
            choices: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn word(&self) -> &[L] {
        &self.word
    }

    pub fn choices(&self) -> &[u32] {
        &self.choices
    }

    /// Heights `y_0 = 0, y_1, …, y_n`; never stored, always recomputed.
    pub fn heights(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.word.len() + 1);
        let mut h = 0i64;
        out.push(0);
        for l in &self.word {
            h += l.step();
            out.push(h as u32);
        }
        out
    }
}

/// Insertion schedule shared by both codecs: node `j` fills the
/// `choices[j-1]`-th open position (left to right) and opens the positions
/// listed by `layout`, each a `(row width, occupied indices)` pair. The final
/// node `n + 1` is a leaf with `leaf_width` empty slots.
fn assemble<L: DiagramLetter>(
    d: &PathDiagram<L>,
    leaf_width: usize,
    mut layout: impl FnMut(usize, &L) -> Result<(usize, Vec<usize>)>,
) -> Result<Vec<Vec<Option<u32>>>> {
    let n = d.len();
    let mut rows: Vec<Vec<Option<u32>>> = Vec::with_capacity(n + 1);
    let mut open: Vec<Option<SlotRef>> = vec![None];
    for (j, (letter, &s)) in d.word.iter().zip(&d.choices).enumerate() {
        let label = j as u32 + 1;
        let (width, occupied) = layout(j + 1, letter)?;
        debug_assert_eq!(occupied.len() as i64, letter.step() + 1);
        let s = s as usize;
        if s >= open.len() {
            return Err(Error::InvalidDiagram {
                step: j + 1,
                reason: format!("choice {s} but only {} open positions", open.len()),
            });
        }
        if let Some(slot) = open[s] {
            rows[slot.parent as usize - 1][slot.index] = Some(label);
        }
        rows.push(vec![None; width]);
        let fresh = occupied.into_iter().map(|index| {
            Some(SlotRef {
                parent: label,
                index,
            })
        });
        open.splice(s..=s, fresh);
    }
    debug_assert_eq!(open.len(), 1, "height returns to 0");
    if let Some(slot) = open[0] {
        rows[slot.parent as usize - 1][slot.index] = Some(n as u32 + 1);
    }
    rows.push(vec![None; leaf_width]);
    Ok(rows)
}

/// Inverse schedule: for nodes `1..n` (the tree has `n + 1` nodes), the rank
/// of each node's position among the open positions just before it is placed.
fn disassemble(parents: &[Option<SlotRef>], occupied: impl Fn(u32) -> Vec<usize>) -> Vec<u32> {
    let n = parents.len() - 1;
    let mut open: Vec<Option<SlotRef>> = vec![None];
    let mut choices = Vec::with_capacity(n);
    for label in 1..=n as u32 {
        let at = parents[label as usize - 1];
        let s = open
            .iter()
            .position(|&o| o == at)
            .expect("parent slot opened before its child is placed");
        choices.push(s as u32);
        let fresh = occupied(label).into_iter().map(|index| {
            Some(SlotRef {
                parent: label,
                index,
            })
        });
        open.splice(s..=s, fresh);
    }
    choices
}

/// Builds the (k+1)-ary increasing tree of size `n + 1` encoded by a diagram of
/// length `n`.
pub fn pathdiagram_to_tree(d: &KaryPathDiagram, k: usize) -> Result<KaryIncreasingTree> {
    if k == 0 {
        return Err(Error::ZeroMultiplicity);
    }
    let map = VariantMap::new(k);
    let rows = assemble(d, k + 1, |step, letter| {
        let ty = match *letter {
            KaryLetter::Fall => return Ok((k + 1, Vec::new())),
            KaryLetter::Rise { up, variant } => map.pattern(up as usize, variant as usize),
            KaryLetter::Level { variant } => map.pattern(0, variant as usize),
        }
        .ok_or_else(|| Error::InvalidDiagram {
            step,
            reason: format!("letter {letter:?} is not in the alphabet for k = {k}"),
        })?;
        let occupied = (0..=k).filter(|&h| ty.bit(h + 1)).collect();
        Ok((k + 1, occupied))
    })?;
    KaryIncreasingTree::from_slots(k, rows)
}

/// Encodes a (k+1)-ary increasing tree of size `n + 1 ≥ 1` as a diagram of
/// length `n`.
pub fn tree_to_pathdiagram(tree: &KaryIncreasingTree) -> Result<KaryPathDiagram> {
    if tree.is_empty() {
        return Err(Error::InvalidTree(
            "the empty tree has no path diagram".into(),
        ));
    }
    let k = tree.k();
    let map = VariantMap::new(k);
    let n = tree.size() - 1;
    let word = (1..=n as u32)
        .map(|v| {
            let ty = tree.node_type(v);
            match map.index_of(ty) {
                None => KaryLetter::Fall,
                Some((0, i)) => KaryLetter::Level { variant: i as u32 },
                Some((l, i)) => KaryLetter::Rise {
                    up: l as u32,
                    variant: i as u32,
                },
            }
        })
        .collect();
    let choices = disassemble(&tree.parents(), |v| {
        tree.slots(v)
            .iter()
            .enumerate()
            .filter_map(|(h, c)| c.map(|_| h))
            .collect()
    });
    Ok(PathDiagram { word, choices })
}

/// Builds the PORT of size `n + 1` encoded by a diagram of length `n`.
pub fn port_pathdiagram_to_tree(d: &PortPathDiagram) -> Result<PortTree> {
    let rows = assemble(d, 0, |_, letter| {
        let deg = (letter.step() + 1) as usize;
        Ok((deg, (0..deg).collect()))
    })?;
    let children = rows
        .into_iter()
        .map(|row| {
            row.into_iter()
                .map(|c| c.expect("every PORT slot filled"))
                .collect()
        })
        .collect();
    PortTree::from_children(children)
}

pub fn port_tree_to_pathdiagram(tree: &PortTree) -> PortPathDiagram {
    let n = tree.size() - 1;
    let word = (1..=n as u32)
        .map(|v| match tree.outdegree(v) {
            0 => PortLetter::Fall,
            1 => PortLetter::Level,
            d => PortLetter::Rise(d as u32 - 1),
        })
        .collect();
    let choices = disassemble(&tree.parents(), |v| (0..tree.outdegree(v)).collect());
    PathDiagram { word, choices }
}

fn enumerate_diagrams<L: DiagramLetter>(n: usize, letters: &[L]) -> Vec<PathDiagram<L>> {
    fn walk<L: DiagramLetter>(
        n: usize,
        letters: &[L],
        height: i64,
        word: &mut Vec<L>,
        choices: &mut Vec<u32>,
        out: &mut Vec<PathDiagram<L>>,
    ) {
        let remaining = (n - word.len()) as i64;
        if remaining == 0 {
            if height == 0 {
                out.push(PathDiagram {
                    word: word.clone(),
                    choices: choices.clone(),
                });
            }
            return;
        }
        for &l in letters {
            let next = height + l.step();
            // each later step falls by at most one
            if next < 0 || next > remaining - 1 {
                continue;
            }
            word.push(l);
            for s in 0..=height as u32 {
                choices.push(s);
                walk(n, letters, next, word, choices, out);
                choices.pop();
            }
            word.pop();
        }
    }
    let mut out = Vec::new();
    walk(n, letters, 0, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Every valid (k+1)-ary diagram of length `n`.
pub fn enum_kary_diagrams(n: usize, k: usize) -> Vec<KaryPathDiagram> {
    let map = VariantMap::new(k);
    let mut letters = vec![KaryLetter::Fall];
    letters.extend((1..=map.variant_count(0)).map(|i| KaryLetter::Level { variant: i as u32 }));
    for up in 1..=k {
        letters.extend((1..=map.variant_count(up)).map(|i| KaryLetter::Rise {
            up: up as u32,
            variant: i as u32,
        }));
    }
    enumerate_diagrams(n, &letters)
}

/// Every valid PORT diagram of length `n`; rises are capped at `n`.
pub fn enum_port_diagrams(n: usize) -> Vec<PortPathDiagram> {
    let mut letters = vec![PortLetter::Fall, PortLetter::Level];
    letters.extend((1..=n.max(1) as u32).map(PortLetter::Rise));
    enumerate_diagrams(n, &letters)
}
