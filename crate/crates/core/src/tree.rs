//! Increasing trees: (k+1)-ary trees with ordered child slots and
//! plane-oriented recursive trees (PORTs) with unbounded ordered outdegree.
//!
//! Nodes are addressed by label; the root is label 1. Labels increase along
//! every root path.

use crate::error::{Error, Result};
use crate::localtypes::LocalType;

/// A child slot of a (k+1)-ary tree, or a child position of a PORT node.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SlotRef {
    pub parent: u32,
    pub index: usize,
}

/// A (k+1)-ary increasing tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KaryIncreasingTree {
    k: usize,
    /// `slots[v - 1]` holds the `k + 1` child slots of node `v`.
    slots: Vec<Vec<Option<u32>>>,
}

impl KaryIncreasingTree {
    pub fn empty(k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        Ok(Self {
            k,
            slots: Vec::new(),
        })
    }

    pub fn singleton(k: usize) -> Result<Self> {
        let mut t = Self::empty(k)?;
        t.slots.push(vec![None; k + 1]);
        Ok(t)
    }

    /// Validates a slot table: `slots[v - 1]` lists node `v`'s children.
    pub fn from_slots(k: usize, slots: Vec<Vec<Option<u32>>>) -> Result<Self> {
        if k == 0 {
            return Err(Error::ZeroMultiplicity);
        }
        let n = slots.len();
        let mut parent_seen = vec![false; n + 1];
        for (idx, row) in slots.iter().enumerate() {
            let v = idx as u32 + 1;
            if row.len() != k + 1 {
                return Err(Error::InvalidTree(format!(
                    "node {v} has {} slots, expected {}",
                    row.len(),
                    k + 1
                )));
            }
            for &c in row.iter().flatten() {
                if c as usize > n || c <= v {
                    return Err(Error::InvalidTree(format!(
                        "node {v} has child {c}; children must be larger labels in 1..={n}"
                    )));
                }
                if std::mem::replace(&mut parent_seen[c as usize], true) {
                    return Err(Error::InvalidTree(format!("node {c} has two parents")));
                }
            }
        }
        // every child label exceeds its parent, so reachability from 1 follows
        // once each non-root label has exactly one parent
        if let Some(orphan) = (2..=n).find(|&v| !parent_seen[v]) {
            return Err(Error::InvalidTree(format!("node {orphan} has no parent")));
        }
        Ok(Self { k, slots })
    }

    /// Replays an evolution history: label `m` goes into vacant slot
    /// `choices[m - 1]`, vacancies counted left to right.
    pub fn from_insertions(k: usize, choices: &[usize]) -> Result<Self> {
        let mut tree = Self::empty(k)?;
        for &g in choices {
            tree.insert_at_vacancy(g)?;
        }
        Ok(tree)
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn size(&self) -> usize {
        self.slots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.slots.is_empty()
    }

    pub fn slots(&self, v: u32) -> &[Option<u32>] {
        &self.slots[v as usize - 1]
    }

    pub fn slot_table(&self) -> &[Vec<Option<u32>>] {
        &self.slots
    }

    pub fn child(&self, v: u32, h: usize) -> Option<u32> {
        self.slots[v as usize - 1][h]
    }

    pub fn outdegree(&self, v: u32) -> usize {
        self.slots(v).iter().flatten().count()
    }

    pub fn is_leaf(&self, v: u32) -> bool {
        self.outdegree(v) == 0
    }

    /// `G_v`: bit `h` set iff slot `h` of `v` is occupied.
    pub fn node_type(&self, v: u32) -> LocalType {
        let bits: Vec<bool> = self.slots(v).iter().map(Option::is_some).collect();
        LocalType::from_bits(&bits)
    }

    /// Parent and slot index of every node; entry 0 (the root) is `None`.
    pub fn parents(&self) -> Vec<Option<SlotRef>> {
        let mut parents = vec![None; self.size()];
        for (idx, row) in self.slots.iter().enumerate() {
            for (h, &c) in row.iter().enumerate() {
                if let Some(c) = c {
                    parents[c as usize - 1] = Some(SlotRef {
                        parent: idx as u32 + 1,
                        index: h,
                    });
                }
            }
        }
        parents
    }

    /// Vacant slots in planar left-to-right order (`k·n + 1` of them).
    pub fn vacant_slots(&self) -> Vec<SlotRef> {
        let mut out = Vec::with_capacity(self.k * self.size() + 1);
        if self.is_empty() {
            return out;
        }
        let mut stack: Vec<(u32, usize)> = vec![(1, 0)];
        while let Some((v, h)) = stack.pop() {
            if h > self.k {
                continue;
            }
            stack.push((v, h + 1));
            match self.child(v, h) {
                None => out.push(SlotRef {
                    parent: v,
                    index: h,
                }),
                Some(c) => stack.push((c, 0)),
            }
        }
        out
    }

    /// Number of vacancies offered to the next label.
    pub fn vacancy_count(&self) -> usize {
        if self.is_empty() {
            1
        } else {
            self.k * self.size() + 1
        }
    }

    /// Adds label `n + 1` at the `g`-th vacant slot (0-based, planar order).
    pub fn insert_at_vacancy(&mut self, g: usize) -> Result<()> {
        let label = self.size() + 1;
        let available = self.vacancy_count();
        if g >= available {
            return Err(Error::InsertionOutOfRange {
                label,
                position: g,
                available,
            });
        }
        if !self.is_empty() {
            let slot = self.vacant_slots()[g];
            self.slots[slot.parent as usize - 1][slot.index] = Some(label as u32);
        }
        self.slots.push(vec![None; self.k + 1]);
        Ok(())
    }

    pub fn with_vacancy_filled(&self, g: usize) -> Result<Self> {
        let mut t = self.clone();
        t.insert_at_vacancy(g)?;
        Ok(t)
    }
}

/// A plane-oriented recursive tree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PortTree {
    /// `children[v - 1]`: ordered children of node `v`.
    children: Vec<Vec<u32>>,
}

impl PortTree {
    pub fn singleton() -> Self {
        Self {
            children: vec![Vec::new()],
        }
    }

    pub fn from_children(children: Vec<Vec<u32>>) -> Result<Self> {
        let n = children.len();
        if n == 0 {
            return Err(Error::UndefinedSize(0));
        }
        let mut parent_seen = vec![false; n + 1];
        for (idx, row) in children.iter().enumerate() {
            let v = idx as u32 + 1;
            for &c in row {
                if c as usize > n || c <= v {
                    return Err(Error::InvalidTree(format!(
                        "node {v} has child {c}; children must be larger labels in 1..={n}"
                    )));
                }
                if std::mem::replace(&mut parent_seen[c as usize], true) {
                    return Err(Error::InvalidTree(format!("node {c} has two parents")));
                }
            }
        }
        if let Some(orphan) = (2..=n).find(|&v| !parent_seen[v]) {
            return Err(Error::InvalidTree(format!("node {orphan} has no parent")));
        }
        Ok(Self { children })
    }

    /// Replays an evolution history. `choices[0]` must be 0 (the root); label
    /// `m ≥ 2` is attached at insertion position `choices[m - 1]` among the
    /// `2m - 3` positions in planar order.
    pub fn from_insertions(choices: &[usize]) -> Result<Self> {
        match choices.first() {
            None => Err(Error::UndefinedSize(0)),
            Some(&c) if c != 0 => Err(Error::InsertionOutOfRange {
                label: 1,
                position: c,
                available: 1,
            }),
            Some(_) => {
                let mut tree = Self::singleton();
                for &g in &choices[1..] {
                    tree.insert_at_position(g)?;
                }
                Ok(tree)
            }
        }
    }

    pub fn size(&self) -> usize {
        self.children.len()
    }

    pub fn children(&self, v: u32) -> &[u32] {
        &self.children[v as usize - 1]
    }

    pub fn child_table(&self) -> &[Vec<u32>] {
        &self.children
    }

    pub fn outdegree(&self, v: u32) -> usize {
        self.children(v).len()
    }

    pub fn parents(&self) -> Vec<Option<SlotRef>> {
        let mut parents = vec![None; self.size()];
        for (idx, row) in self.children.iter().enumerate() {
            for (h, &c) in row.iter().enumerate() {
                parents[c as usize - 1] = Some(SlotRef {
                    parent: idx as u32 + 1,
                    index: h,
                });
            }
        }
        parents
    }

    /// The `2n - 1` insertion positions in planar order: for each node, the
    /// gap before its first child, then that child's subtree, then the next
    /// gap, and so on.
    pub fn insertion_positions(&self) -> Vec<SlotRef> {
        let mut out = Vec::with_capacity(2 * self.size() - 1);
        let mut stack: Vec<(u32, usize)> = vec![(1, 0)];
        while let Some((v, i)) = stack.pop() {
            let kids = self.children(v);
            if i > kids.len() {
                continue;
            }
            out.push(SlotRef {
                parent: v,
                index: i,
            });
            stack.push((v, i + 1));
            if let Some(&c) = kids.get(i) {
                stack.push((c, 0));
            }
        }
        out
    }

    /// Attaches label `n + 1` at insertion position `g` (0-based).
    pub fn insert_at_position(&mut self, g: usize) -> Result<()> {
        let label = self.size() + 1;
        let available = 2 * self.size() - 1;
        if g >= available {
            return Err(Error::InsertionOutOfRange {
                label,
                position: g,
                available,
            });
        }
        let pos = self.insertion_positions()[g];
        self.children[pos.parent as usize - 1].insert(pos.index, label as u32);
        self.children.push(Vec::new());
        Ok(())
    }
}
