//! Exhaustive generation and uniform sampling through insertion histories.
//!
//! Every object of size `n` has exactly one insertion history `(g_1, …, g_n)`,
//! where `g_m` picks where label `m` enters. Enumeration walks the histories
//! in lexicographic order, so the earliest insertion varies slowest; sampling
//! draws each `g_m` uniformly, which makes the resulting object uniform.
//!
//! Sampling uses ChaCha8 seeded with the 64-bit seed through
//! `SeedableRng::seed_from_u64`; the same seed always yields the same object.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::perm::KStirlingPermutation;
use crate::tree::{KaryIncreasingTree, PortTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ObjectClass {
    Stirling,
    Kary,
    Port,
}

impl FromStr for ObjectClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stirling" | "perm" => Ok(ObjectClass::Stirling),
            "kary" | "tree" => Ok(ObjectClass::Kary),
            "port" => Ok(ObjectClass::Port),
            other => Err(Error::UnknownClass(other.to_string())),
        }
    }
}

impl fmt::Display for ObjectClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObjectClass::Stirling => "stirling",
            ObjectClass::Kary => "kary",
            ObjectClass::Port => "port",
        })
    }
}

/// One object of any of the three classes.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CombinatorialObject {
    Stirling(KStirlingPermutation),
    Kary(KaryIncreasingTree),
    Port(PortTree),
}

impl fmt::Display for CombinatorialObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CombinatorialObject::Stirling(p) => write!(f, "{p}"),
            CombinatorialObject::Kary(t) => write!(f, "{t}"),
            CombinatorialObject::Port(t) => write!(f, "{t}"),
        }
    }
}

/// Number of choices for each label `1..=n`: `k(m-1) + 1` gaps or vacant slots
/// for Stirling words and (k+1)-ary trees, `2m - 3` positions for PORTs.
pub fn insertion_capacities(class: ObjectClass, n: usize, k: usize) -> Result<Vec<usize>> {
    match class {
        ObjectClass::Stirling | ObjectClass::Kary => {
            if k == 0 {
                return Err(Error::ZeroMultiplicity);
            }
            Ok((1..=n).map(|m| k * (m - 1) + 1).collect())
        }
        ObjectClass::Port => {
            if n == 0 {
                return Err(Error::UndefinedSize(0));
            }
            Ok((1..=n)
                .map(|m| if m == 1 { 1 } else { 2 * m - 3 })
                .collect())
        }
    }
}

/// Lexicographic odometer over insertion histories sharing a fixed prefix.
#[derive(Debug, Clone)]
pub struct Histories {
    caps: Vec<usize>,
    fixed: usize,
    next: Option<Vec<usize>>,
}

impl Histories {
    pub fn new(caps: Vec<usize>, prefix: &[usize]) -> Self {
        let valid = prefix.len() <= caps.len()
            && prefix.iter().zip(&caps).all(|(&g, &c)| g < c)
            && caps.iter().all(|&c| c > 0);
        let next = valid.then(|| {
            let mut v = prefix.to_vec();
            v.resize(caps.len(), 0);
            v
        });
        Self {
            caps,
            fixed: prefix.len(),
            next,
        }
    }
}

impl Iterator for Histories {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Vec<usize>> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut pos = succ.len();
        while pos > self.fixed {
            pos -= 1;
            succ[pos] += 1;
            if succ[pos] < self.caps[pos] {
                self.next = Some(succ);
                break;
            }
            succ[pos] = 0;
        }
        Some(current)
    }
}

/// All history prefixes of length `min(depth, n)`, in enumeration order.
/// Streaming each prefix in turn reproduces the full enumeration order.
pub fn history_prefixes(caps: &[usize], depth: usize) -> Vec<Vec<usize>> {
    let depth = depth.min(caps.len());
    Histories::new(caps[..depth].to_vec(), &[]).collect()
}

fn stirling_stream(
    k: usize,
    caps: Vec<usize>,
    prefix: &[usize],
) -> impl Iterator<Item = KStirlingPermutation> + Send + 'static {
    Histories::new(caps, prefix).map(move |h| {
        KStirlingPermutation::from_insertions(k, &h).expect("history within capacities")
    })
}

/// Every k-Stirling permutation of size `n`, each exactly once.
pub fn enum_stirling(
    n: usize,
    k: usize,
) -> Result<impl Iterator<Item = KStirlingPermutation> + Send + 'static> {
    enum_stirling_with_prefix(n, k, &[])
}

/// The part of [`enum_stirling`] whose history starts with `prefix`.
pub fn enum_stirling_with_prefix(
    n: usize,
    k: usize,
    prefix: &[usize],
) -> Result<impl Iterator<Item = KStirlingPermutation> + Send + 'static> {
    let caps = insertion_capacities(ObjectClass::Stirling, n, k)?;
    Ok(stirling_stream(k, caps, prefix))
}

/// Every (k+1)-ary increasing tree of size `n`, each exactly once.
pub fn enum_kary_trees(
    n: usize,
    k: usize,
) -> Result<impl Iterator<Item = KaryIncreasingTree> + Send + 'static> {
    enum_kary_trees_with_prefix(n, k, &[])
}

pub fn enum_kary_trees_with_prefix(
    n: usize,
    k: usize,
    prefix: &[usize],
) -> Result<impl Iterator<Item = KaryIncreasingTree> + Send + 'static> {
    let caps = insertion_capacities(ObjectClass::Kary, n, k)?;
    Ok(Histories::new(caps, prefix).map(move |h| {
        KaryIncreasingTree::from_insertions(k, &h).expect("history within capacities")
    }))
}

/// Every plane-oriented recursive tree of size `n ≥ 1`, each exactly once.
pub fn enum_ports(n: usize) -> Result<impl Iterator<Item = PortTree> + Send + 'static> {
    enum_ports_with_prefix(n, &[])
}

pub fn enum_ports_with_prefix(
    n: usize,
    prefix: &[usize],
) -> Result<impl Iterator<Item = PortTree> + Send + 'static> {
    let caps = insertion_capacities(ObjectClass::Port, n, 0)?;
    Ok(Histories::new(caps, prefix)
        .map(|h| PortTree::from_insertions(&h).expect("history within capacities")))
}

/// Builds the object with the given insertion history.
pub fn object_from_history(
    class: ObjectClass,
    k: usize,
    history: &[usize],
) -> Result<CombinatorialObject> {
    Ok(match class {
        ObjectClass::Stirling => {
            CombinatorialObject::Stirling(KStirlingPermutation::from_insertions(k, history)?)
        }
        ObjectClass::Kary => {
            CombinatorialObject::Kary(KaryIncreasingTree::from_insertions(k, history)?)
        }
        ObjectClass::Port => CombinatorialObject::Port(PortTree::from_insertions(history)?),
    })
}

/// Runs the evolution process with a seeded generator.
#[derive(Debug, Clone)]
pub struct RandomSampler {
    rng: ChaCha8Rng,
}

impl RandomSampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn history(&mut self, class: ObjectClass, n: usize, k: usize) -> Result<Vec<usize>> {
        let caps = insertion_capacities(class, n, k)?;
        Ok(caps
            .into_iter()
            .map(|c| self.rng.random_range(0..c))
            .collect())
    }

    pub fn sample(
        &mut self,
        class: ObjectClass,
        n: usize,
        k: usize,
    ) -> Result<CombinatorialObject> {
        let h = self.history(class, n, k)?;
        object_from_history(class, k, &h)
    }
}

/// A uniformly random object of the class, fully determined by `seed`.
pub fn random_object(
    class: ObjectClass,
    n: usize,
    k: usize,
    seed: u64,
) -> Result<CombinatorialObject> {
    RandomSampler::new(seed).sample(class, n, k)
}

#[cfg(test)]
mod tests {
    use std::collections::HashSet;

    use super::*;
    use crate::count::{count_kary_trees, count_port, count_stirling};

    fn words(n: usize, k: usize) -> Vec<String> {
        enum_stirling(n, k)
            .unwrap()
            .map(|p| p.word().iter().map(|d| d.to_string()).collect())
            .collect()
    }

    #[test]
    fn size_two_three_stirling() {
        let got: HashSet<_> = words(2, 3).into_iter().collect();
        let want: HashSet<String> = ["111222", "112221", "122211", "222111"]
            .iter()
            .map(|s| s.to_string())
            .collect();
        assert_eq!(got, want);
        assert_eq!(words(1, 2), ["11"]);
        assert_eq!(words(0, 2), [""]);
    }

    #[test]
    fn enumeration_order_is_insertion_order() {
        // outer recursion over size-1 words, inner over gaps ascending
        assert_eq!(words(2, 2), ["2211", "1221", "1122"]);
    }

    #[test]
    fn stream_lengths() {
        for k in 1..=3 {
            for n in 0..=5 {
                let expect = count_stirling(n, k);
                assert_eq!(enum_stirling(n, k).unwrap().count().into_biguint(), expect);
                assert_eq!(
                    enum_kary_trees(n, k).unwrap().count().into_biguint(),
                    count_kary_trees(n, k)
                );
            }
        }
        for n in 1..=6 {
            assert_eq!(
                enum_ports(n).unwrap().count().into_biguint(),
                count_port(n).unwrap()
            );
        }
        assert_eq!(enum_kary_trees(4, 1).unwrap().count(), 24);
        assert_eq!(enum_ports(5).unwrap().count(), 105);
        assert!(enum_ports(0).is_err());
        assert!(enum_stirling(2, 0).is_err());
    }

    #[test]
    fn prefixes_partition_the_stream() {
        let caps = insertion_capacities(ObjectClass::Stirling, 4, 2).unwrap();
        let whole: Vec<_> = enum_stirling(4, 2).unwrap().collect();
        let joined: Vec<_> = history_prefixes(&caps, 3)
            .iter()
            .flat_map(|p| enum_stirling_with_prefix(4, 2, p).unwrap())
            .collect();
        assert_eq!(whole, joined);
    }

    #[test]
    fn sampling_is_deterministic() {
        for class in [ObjectClass::Stirling, ObjectClass::Kary, ObjectClass::Port] {
            let a = random_object(class, 7, 2, 42).unwrap();
            let b = random_object(class, 7, 2, 42).unwrap();
            assert_eq!(a, b);
        }
        assert_eq!(
            random_object(ObjectClass::Stirling, 1, 3, 99)
                .unwrap()
                .to_string(),
            "1 1 1"
        );
        assert!("oak".parse::<ObjectClass>().is_err());
    }

    trait IntoBig {
        fn into_biguint(self) -> num_bigint::BigUint;
    }
    impl IntoBig for usize {
        fn into_biguint(self) -> num_bigint::BigUint {
            self.into()
        }
    }
}
