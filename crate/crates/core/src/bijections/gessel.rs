use crate::perm::KStirlingPermutation;
use crate::tree::{KaryIncreasingTree, SlotRef};

/// Depth-first contour code: node `v` with slots `s_1 … s_{k+1}` is written
/// as `code(s_1) v code(s_2) v … v code(s_{k+1})`, vacant slots contributing
/// nothing.
pub fn tree_to_perm(tree: &KaryIncreasingTree) -> KStirlingPermutation {
    let k = tree.k();
    let mut word = Vec::with_capacity(k * tree.size());
    if !tree.is_empty() {
        let mut stack: Vec<(u32, usize)> = vec![(1, 0)];
        while let Some((v, h)) = stack.pop() {
            if h > k {
                continue;
            }
            if h > 0 {
                word.push(v);
            }
            stack.push((v, h + 1));
            if let Some(c) = tree.child(v, h) {
                stack.push((c, 0));
            }
        }
    }
    KStirlingPermutation::new_unchecked(word, k)
}

/// Inverse of [`tree_to_perm`]: split `σ = σ_1 m σ_2 m … m σ_{k+1}` at the
/// copies of its minimum `m` and hang the tree of `σ_h` in slot `h` of `m`.
pub fn perm_to_tree(sigma: &KStirlingPermutation) -> KaryIncreasingTree {
    let k = sigma.k();
    let word = sigma.word();
    let mut slots = vec![vec![None; k + 1]; sigma.size()];
    let mut work: Vec<(usize, usize, Option<SlotRef>)> = vec![(0, word.len(), None)];
    while let Some((lo, hi, attach)) = work.pop() {
        if lo == hi {
            continue;
        }
        let part = &word[lo..hi];
        let root = *part.iter().min().expect("nonempty part");
        if let Some(at) = attach {
            slots[at.parent as usize - 1][at.index] = Some(root);
        }
        let mut start = lo;
        let mut h = 0;
        for (off, &x) in part.iter().enumerate() {
            if x == root {
                work.push((
                    start,
                    lo + off,
                    Some(SlotRef {
                        parent: root,
                        index: h,
                    }),
                ));
                start = lo + off + 1;
                h += 1;
            }
        }
        work.push((
            start,
            hi,
            Some(SlotRef {
                parent: root,
                index: h,
            }),
        ));
    }
    KaryIncreasingTree::from_slots(k, slots).expect("decomposition of a valid word is a tree")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn perm(s: &str, k: usize) -> KStirlingPermutation {
        KStirlingPermutation::new(s.chars().map(|c| c.to_digit(10).unwrap()).collect(), k).unwrap()
    }

    fn golden_tree() -> KaryIncreasingTree {
        // 1:(2,5,3)  2:(4,_,7)  5:(_,_,6)
        let mut s = vec![vec![None; 3]; 7];
        s[0] = vec![Some(2), Some(5), Some(3)];
        s[1] = vec![Some(4), None, Some(7)];
        s[4] = vec![None, None, Some(6)];
        KaryIncreasingTree::from_slots(2, s).unwrap()
    }

    #[test]
    fn contour_code_of_golden_tree() {
        assert_eq!(tree_to_perm(&golden_tree()), perm("44227715566133", 2));
        assert_eq!(perm_to_tree(&perm("44227715566133", 2)), golden_tree());
    }

    #[test]
    fn singleton_codes_as_block() {
        for k in 1..=4 {
            let t = KaryIncreasingTree::singleton(k).unwrap();
            assert_eq!(tree_to_perm(&t).word(), vec![1; k].as_slice());
            assert_eq!(perm_to_tree(&tree_to_perm(&t)), t);
        }
        let e = KaryIncreasingTree::empty(2).unwrap();
        assert!(tree_to_perm(&e).word().is_empty());
        assert_eq!(perm_to_tree(&tree_to_perm(&e)), e);
    }

    #[test]
    fn rightmost_slot_decomposition() {
        let t = perm_to_tree(&perm("111222", 3));
        assert_eq!(t.slots(1), &[None, None, None, Some(2)]);
    }
}
