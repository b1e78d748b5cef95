//! Exact class sizes.

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{Error, Result};

pub type BigCount = BigUint;

/// Number of k-Stirling permutations of size `n`: `∏_{i=1}^{n-1} (k·i + 1)`.
pub fn count_stirling(n: usize, k: usize) -> BigCount {
    (1..n).fold(BigCount::one(), |acc, i| acc * BigCount::from(k * i + 1))
}

/// Number of (k+1)-ary increasing trees of size `n`: `∏_{l=1}^{n} (k(l-1) + 1)`.
pub fn count_kary_trees(n: usize, k: usize) -> BigCount {
    (1..=n).fold(BigCount::one(), |acc, l| {
        acc * BigCount::from(k * (l - 1) + 1)
    })
}

/// Number of plane-oriented recursive trees of size `n ≥ 1`: `(2n - 3)!!`.
pub fn count_port(n: usize) -> Result<BigCount> {
    if n == 0 {
        return Err(Error::UndefinedSize(0));
    }
    Ok(double_factorial(2 * n as isize - 3))
}

/// `m!! = m (m-2) (m-4) …`, with `m!! = 1` for `m ≤ 0`.
pub fn double_factorial(m: isize) -> BigCount {
    let mut acc = BigCount::one();
    let mut x = m;
    while x > 1 {
        acc *= BigCount::from(x as usize);
        x -= 2;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        assert_eq!(count_stirling(1, 5), 1u32.into());
        assert_eq!(count_stirling(2, 3), 4u32.into());
        assert_eq!(count_stirling(5, 2), 945u32.into());
        assert_eq!(count_stirling(0, 2), 1u32.into());
        assert_eq!(count_kary_trees(1, 2), 1u32.into());
        assert_eq!(count_kary_trees(2, 2), 3u32.into());
        assert_eq!(count_kary_trees(4, 2), 105u32.into());
        assert_eq!(count_kary_trees(0, 3), 1u32.into());
        assert_eq!(count_port(1).unwrap(), 1u32.into());
        assert_eq!(count_port(2).unwrap(), 1u32.into());
        assert_eq!(count_port(4).unwrap(), 15u32.into());
        assert!(count_port(0).is_err());
    }

    #[test]
    fn families_agree() {
        for k in 1..=3 {
            for n in 0..=7 {
                assert_eq!(count_stirling(n, k), count_kary_trees(n, k));
            }
        }
        for n in 0..=8 {
            assert_eq!(count_port(n + 1).unwrap(), count_stirling(n, 2));
        }
    }

    #[test]
    fn factorial_for_binary_trees() {
        let mut f = BigCount::one();
        for n in 1..=12usize {
            f *= BigCount::from(n);
            assert_eq!(count_stirling(n, 1), f);
        }
    }
}
