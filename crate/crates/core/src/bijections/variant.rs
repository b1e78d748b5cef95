use crate::localtypes::LocalType;

/// Fixed numbering of slot-occupancy patterns.
///
/// List `l` (for `0 ≤ l ≤ k`) holds every bit string of length `k + 1` with
/// exactly `l + 1` ones, sorted by decreasing binary value. For `k = 2` this
/// gives `110, 101, 011` for `l = 1` and `100, 010, 001` for `l = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariantMap {
    k: usize,
    lists: Vec<Vec<LocalType>>,
}

impl VariantMap {
    pub fn new(k: usize) -> Self {
        assert!((1..32).contains(&k), "unsupported arity k = {k}");
        let width = k + 1;
        let mut lists = vec![Vec::new(); k + 1];
        for value in (1u32..(1u32 << width)).rev() {
            let ones = value.count_ones() as usize;
            lists[ones - 1].push(LocalType::from_value(width, value));
        }
        Self { k, lists }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Patterns with `l + 1` occupied slots.
    pub fn list(&self, l: usize) -> &[LocalType] {
        &self.lists[l]
    }

    /// Number of variants `C(k+1, l+1)` for `l + 1` occupied slots.
    pub fn variant_count(&self, l: usize) -> usize {
        self.lists.get(l).map_or(0, Vec::len)
    }

    /// Pattern of variant `i` (1-based) with `l + 1` occupied slots.
    pub fn pattern(&self, l: usize, i: usize) -> Option<LocalType> {
        self.lists.get(l)?.get(i.checked_sub(1)?).copied()
    }

    /// `(l, i)` such that `pattern(l, i) == ty`; `None` for the all-zero type.
    pub fn index_of(&self, ty: LocalType) -> Option<(usize, usize)> {
        if ty.len() != self.k + 1 || ty.ones() == 0 {
            return None;
        }
        let l = ty.ones() - 1;
        let i = self.lists[l].iter().position(|&t| t == ty)? + 1;
        Some((l, i))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(v: &[LocalType]) -> Vec<String> {
        v.iter().map(|t| t.to_string()).collect()
    }

    #[test]
    fn ternary_numbering() {
        let m = VariantMap::new(2);
        assert_eq!(strs(m.list(0)), ["100", "010", "001"]);
        assert_eq!(strs(m.list(1)), ["110", "101", "011"]);
        assert_eq!(strs(m.list(2)), ["111"]);
        assert_eq!(m.index_of("101".parse().unwrap()), Some((1, 2)));
        assert_eq!(m.index_of("000".parse().unwrap()), None);
        assert_eq!(m.pattern(0, 3).unwrap().to_string(), "001");
        assert_eq!(m.pattern(0, 4), None);
        assert_eq!(m.pattern(0, 0), None);
    }

    #[test]
    fn list_sizes_are_binomials() {
        let m = VariantMap::new(4);
        let sizes: Vec<_> = (0..=4).map(|l| m.variant_count(l)).collect();
        assert_eq!(sizes, [5, 10, 10, 5, 1]);
    }
}
