//! Outdegree profile of PORTs, left-right decomposition of ternary trees and
//! the recursive block statistic of 2-Stirling permutations, plus the
//! exhaustive comparison of their distributions.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::bijections::perm_to_tree;
use crate::enumerate::{
    enum_kary_trees_with_prefix, enum_ports_with_prefix, enum_stirling_with_prefix,
    history_prefixes, insertion_capacities, ObjectClass,
};
use crate::error::{Error, Result};
use crate::parallel::{map_reduce, Execution};
use crate::perm::KStirlingPermutation;
use crate::tree::{KaryIncreasingTree, PortTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum StatClass {
    Outdeg,
    Lr,
    Block,
}

/// `j ↦ count` for one object. Only nonzero counts are stored.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatProfile {
    pub class: StatClass,
    pub n: usize,
    pub counts: BTreeMap<usize, usize>,
}

impl StatProfile {
    fn new(class: StatClass, n: usize) -> Self {
        Self {
            class,
            n,
            counts: BTreeMap::new(),
        }
    }

    fn bump(&mut self, j: usize) {
        *self.counts.entry(j).or_insert(0) += 1;
    }

    pub fn get(&self, j: usize) -> usize {
        self.counts.get(&j).copied().unwrap_or(0)
    }

    /// `Σ count_j` and `Σ j · count_j`.
    pub fn sums(&self) -> (usize, usize) {
        self.counts
            .iter()
            .fold((0, 0), |(a, b), (&j, &c)| (a + c, b + j * c))
    }
}

/// Sorted `j:count` pairs separated by spaces.
impl fmt::Display for StatProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (j, c)) in self.counts.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{j}:{c}")?;
        }
        Ok(())
    }
}

/// Component sizes after deleting centre edges, plus the number of nodes
/// whose only child hangs from the centre slot and is a leaf.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LrProfile {
    pub profile: StatProfile,
    pub center_leaf_nodes: usize,
}

pub fn outdegree_profile(tree: &PortTree) -> StatProfile {
    let mut p = StatProfile::new(StatClass::Outdeg, tree.size());
    for v in 1..=tree.size() as u32 {
        p.bump(tree.outdegree(v));
    }
    p
}

pub fn lr_profile(tree: &KaryIncreasingTree) -> Result<LrProfile> {
    if tree.k() != 2 {
        return Err(Error::WrongArity {
            expected: 2,
            found: tree.k(),
        });
    }
    let n = tree.size();
    let mut profile = StatProfile::new(StatClass::Lr, n);
    let mut center_leaf_nodes = 0;
    // roots of left-right components: the tree root and every centre child
    let mut roots: Vec<u32> = if n > 0 { vec![1] } else { Vec::new() };
    for v in 1..=n as u32 {
        if let Some(c) = tree.child(v, 1) {
            roots.push(c);
            if tree.outdegree(v) == 1 && tree.is_leaf(c) {
                center_leaf_nodes += 1;
            }
        }
    }
    for r in roots {
        let mut size = 0;
        let mut stack = vec![r];
        while let Some(v) = stack.pop() {
            size += 1;
            stack.extend([tree.child(v, 0), tree.child(v, 2)].into_iter().flatten());
        }
        profile.bump(size);
    }
    Ok(LrProfile {
        profile,
        center_leaf_nodes,
    })
}

/// Records the number of maximal blocks of `σ`, strips the outer pair of each
/// block, relabels every nonempty interior onto `1..m` and recurses.
pub fn block_profile(sigma: &KStirlingPermutation) -> Result<StatProfile> {
    if sigma.k() != 2 {
        return Err(Error::WrongArity {
            expected: 2,
            found: sigma.k(),
        });
    }
    let mut profile = StatProfile::new(StatClass::Block, sigma.size());
    let word = sigma.word();
    // last occurrence of each label, shared by every sub-permutation since
    // interiors are contiguous ranges of the original word
    let mut last = vec![0usize; sigma.size() + 1];
    for (p, &x) in word.iter().enumerate() {
        last[x as usize] = p;
    }
    let mut work = vec![(0usize, word.len())];
    while let Some((lo, hi)) = work.pop() {
        if lo == hi {
            continue;
        }
        let mut blocks = 0;
        let mut p = lo;
        while p < hi {
            let q = last[word[p] as usize];
            blocks += 1;
            work.push((p + 1, q));
            p = q + 1;
        }
        profile.bump(blocks);
    }
    Ok(profile)
}

/// `j ↦ (value ↦ number of objects whose statistic at j equals value)`.
pub type Distribution = BTreeMap<usize, BTreeMap<usize, u64>>;

fn merge(mut a: Distribution, b: Distribution) -> Distribution {
    for (j, inner) in b {
        let row = a.entry(j).or_default();
        for (v, c) in inner {
            *row.entry(v).or_insert(0) += c;
        }
    }
    a
}

fn record(
    dist: &mut Distribution,
    js: std::ops::RangeInclusive<usize>,
    at: impl Fn(usize) -> usize,
) {
    for j in js {
        *dist.entry(j).or_default().entry(at(j)).or_insert(0) += 1;
    }
}

/// Distributions of every statistic involved, over the full classes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassDistributions {
    pub n: usize,
    /// `X^{[B]}_{n,j}` over 2-Stirling permutations of size `n`.
    pub block: Distribution,
    /// Left-right components with `j` nodes over ternary trees of size `n`.
    pub lr: Distribution,
    /// Centre-leaf node count (stored under key 0).
    pub center_leaf: Distribution,
    /// `X_{n+1,j}` over PORTs of size `n + 1`.
    pub outdeg: Distribution,
}

pub fn class_distributions(n: usize, exec: Execution) -> Result<ClassDistributions> {
    if n == 0 {
        return Err(Error::UndefinedSize(0));
    }
    let js = 0..=n + 1;
    let depth = 3;

    let caps = insertion_capacities(ObjectClass::Stirling, n, 2)?;
    let block = map_reduce(
        &history_prefixes(&caps, depth),
        exec,
        Distribution::new,
        |prefix| {
            let mut d = Distribution::new();
            for sigma in enum_stirling_with_prefix(n, 2, prefix).expect("k = 2") {
                let p = block_profile(&sigma).expect("k = 2");
                record(&mut d, js.clone(), |j| p.get(j));
            }
            d
        },
        merge,
    );

    let caps = insertion_capacities(ObjectClass::Kary, n, 2)?;
    let (lr, center_leaf) = map_reduce(
        &history_prefixes(&caps, depth),
        exec,
        || (Distribution::new(), Distribution::new()),
        |prefix| {
            let mut d = Distribution::new();
            let mut c = Distribution::new();
            for tree in enum_kary_trees_with_prefix(n, 2, prefix).expect("k = 2") {
                let p = lr_profile(&tree).expect("k = 2");
                record(&mut d, js.clone(), |j| p.profile.get(j));
                record(&mut c, 0..=0, |_| p.center_leaf_nodes);
            }
            (d, c)
        },
        |a, b| (merge(a.0, b.0), merge(a.1, b.1)),
    );

    let caps = insertion_capacities(ObjectClass::Port, n + 1, 0)?;
    let outdeg = map_reduce(
        &history_prefixes(&caps, depth + 1),
        exec,
        Distribution::new,
        |prefix| {
            let mut d = Distribution::new();
            for tree in enum_ports_with_prefix(n + 1, prefix).expect("n + 1 ≥ 1") {
                let p = outdegree_profile(&tree);
                record(&mut d, js.clone(), |j| p.get(j));
            }
            d
        },
        merge,
    );

    Ok(ClassDistributions {
        n,
        block,
        lr,
        center_leaf,
        outdeg,
    })
}

/// One multiset comparison `left(j_left)` vs `right(j_right)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistributionCheck {
    pub name: &'static str,
    pub j_left: usize,
    pub j_right: usize,
    pub left: BTreeMap<usize, u64>,
    pub right: BTreeMap<usize, u64>,
}

impl DistributionCheck {
    pub fn equal(&self) -> bool {
        self.left == self.right
    }

    /// First value whose object counts differ: `(value, left, right)`.
    pub fn counterexample(&self) -> Option<(usize, u64, u64)> {
        let keys: std::collections::BTreeSet<_> =
            self.left.keys().chain(self.right.keys()).copied().collect();
        keys.into_iter().find_map(|v| {
            let l = self.left.get(&v).copied().unwrap_or(0);
            let r = self.right.get(&v).copied().unwrap_or(0);
            (l != r).then_some((v, l, r))
        })
    }
}

impl fmt::Display for DistributionCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} j={}/{}: ", self.name, self.j_left, self.j_right)?;
        match self.counterexample() {
            None => write!(f, "equal"),
            Some((v, l, r)) => write!(f, "differ at value {v}: {l} vs {r} objects"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquidistributionReport {
    pub n: usize,
    pub j_min: usize,
    /// The stated identities: blocks with `j` vs outdegree `j`, left-right
    /// components of size `j - 1` vs outdegree `j` (both for `j ≥ j_min`),
    /// and centre-leaf nodes vs outdegree 2.
    pub claimed: Vec<DistributionCheck>,
    /// Left-right components with `j` nodes vs outdegree `j`, all `j ≥ 1`.
    /// Reported for reference; does not affect [`Self::passed`].
    pub supplementary: Vec<DistributionCheck>,
}

impl EquidistributionReport {
    pub fn passed(&self) -> bool {
        self.claimed.iter().all(DistributionCheck::equal)
    }

    pub fn failures(&self) -> impl Iterator<Item = &DistributionCheck> {
        self.claimed.iter().filter(|c| !c.equal())
    }
}

fn column(d: &Distribution, j: usize) -> BTreeMap<usize, u64> {
    d.get(&j).cloned().unwrap_or_default()
}

pub fn equidistribution_report(n: usize, j_min: usize) -> Result<EquidistributionReport> {
    equidistribution_report_with(n, j_min, Execution::best())
}

pub fn equidistribution_report_with(
    n: usize,
    j_min: usize,
    exec: Execution,
) -> Result<EquidistributionReport> {
    let d = class_distributions(n, exec)?;
    let top = n + 1;
    let mut claimed = Vec::new();
    for j in j_min..=top {
        claimed.push(DistributionCheck {
            name: "block_vs_outdeg",
            j_left: j,
            j_right: j,
            left: column(&d.block, j),
            right: column(&d.outdeg, j),
        });
    }
    for j in j_min.max(1)..=top {
        claimed.push(DistributionCheck {
            name: "lr_shifted_vs_outdeg",
            j_left: j - 1,
            j_right: j,
            left: column(&d.lr, j - 1),
            right: column(&d.outdeg, j),
        });
    }
    claimed.push(DistributionCheck {
        name: "center_leaf_vs_outdeg2",
        j_left: 0,
        j_right: 2,
        left: column(&d.center_leaf, 0),
        right: column(&d.outdeg, 2),
    });
    let supplementary = (1..=top)
        .map(|j| DistributionCheck {
            name: "lr_vs_outdeg",
            j_left: j,
            j_right: j,
            left: column(&d.lr, j),
            right: column(&d.outdeg, j),
        })
        .collect();
    Ok(EquidistributionReport {
        n,
        j_min,
        claimed,
        supplementary,
    })
}

/// How many 2-Stirling permutations of size `n` have the same block profile
/// as the left-right profile of their depth-first tree. Returns
/// `(agreeing, total)`.
pub fn pointwise_block_lr_agreement(n: usize) -> Result<(u64, u64)> {
    let mut agree = 0;
    let mut total = 0;
    for sigma in enum_stirling_with_prefix(n, 2, &[])? {
        let b = block_profile(&sigma)?;
        let lr = lr_profile(&perm_to_tree(&sigma))?;
        total += 1;
        if b.counts == lr.profile.counts {
            agree += 1;
        }
    }
    Ok((agree, total))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str) -> KStirlingPermutation {
        KStirlingPermutation::new(s.chars().map(|c| c.to_digit(10).unwrap()).collect(), 2).unwrap()
    }

    fn pairs(p: &StatProfile) -> Vec<(usize, usize)> {
        p.counts.iter().map(|(&a, &b)| (a, b)).collect()
    }

    #[test]
    fn block_examples() {
        assert_eq!(
            pairs(&block_profile(&perm("221553367788614499")).unwrap()),
            [(2, 1), (3, 1), (4, 1)]
        );
        assert_eq!(pairs(&block_profile(&perm("11")).unwrap()), [(1, 1)]);
        assert_eq!(pairs(&block_profile(&perm("1122")).unwrap()), [(2, 1)]);
        assert!(block_profile(&KStirlingPermutation::new(vec![1, 1, 1], 3).unwrap()).is_err());
    }

    #[test]
    fn outdegree_examples() {
        assert_eq!(pairs(&outdegree_profile(&PortTree::singleton())), [(0, 1)]);
        let path = PortTree::from_children(vec![vec![2], vec![3], vec![]]).unwrap();
        assert_eq!(pairs(&outdegree_profile(&path)), [(0, 1), (1, 2)]);
        let star = PortTree::from_children(vec![vec![2, 3, 4], vec![], vec![], vec![]]).unwrap();
        let p = outdegree_profile(&star);
        assert_eq!(pairs(&p), [(0, 3), (3, 1)]);
        assert_eq!(p.to_string(), "0:3 3:1");
    }

    #[test]
    fn lr_examples() {
        let single = KaryIncreasingTree::singleton(2).unwrap();
        let p = lr_profile(&single).unwrap();
        assert_eq!((pairs(&p.profile), p.center_leaf_nodes), (vec![(1, 1)], 0));

        let center = KaryIncreasingTree::from_insertions(2, &[0, 1]).unwrap();
        let p = lr_profile(&center).unwrap();
        assert_eq!((pairs(&p.profile), p.center_leaf_nodes), (vec![(1, 2)], 1));

        let left = KaryIncreasingTree::from_insertions(2, &[0, 0]).unwrap();
        let p = lr_profile(&left).unwrap();
        assert_eq!((pairs(&p.profile), p.center_leaf_nodes), (vec![(2, 1)], 0));

        assert!(lr_profile(&KaryIncreasingTree::singleton(1).unwrap()).is_err());
    }

    #[test]
    fn block_statistic_matches_outdegree_for_size_three() {
        let r = equidistribution_report_with(3, 3, Execution::Sequential).unwrap();
        let c = r
            .claimed
            .iter()
            .find(|c| c.name == "block_vs_outdeg" && c.j_left == 3)
            .unwrap();
        assert!(c.equal());
        assert_eq!(c.left.values().sum::<u64>(), 15);
    }

    #[test]
    fn size_one_is_trivial() {
        assert!(equidistribution_report(1, 3).unwrap().passed());
    }
}
