//! Data-parallel helpers with a sequential fallback.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] runs on
//! the rayon global pool; without it every call runs sequentially. Callers
//! may also ask for sequential execution explicitly, which is what the
//! benchmarks compare against.

/// How a batch of independent work items is executed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Execution {
    Sequential,
    #[default]
    Parallel,
}

impl Execution {
    /// `Parallel` when the crate was built with rayon, else `Sequential`.
    pub fn best() -> Self {
        if is_parallel_available() {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

pub fn is_parallel_available() -> bool {
    cfg!(feature = "parallel")
}

/// Maps every item and folds the results with an associative `reduce`.
pub fn map_reduce<T, R, M, I, F>(items: &[T], exec: Execution, identity: I, map: M, reduce: F) -> R
where
    T: Sync,
    R: Send,
    M: Fn(&T) -> R + Sync + Send,
    I: Fn() -> R + Sync + Send,
    F: Fn(R, R) -> R + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(map).reduce(identity, reduce)
        }
        _ => items.iter().map(map).fold(identity(), reduce),
    }
}

/// Maps every item, keeping input order.
pub fn map_collect<T, U, M>(items: &[T], exec: Execution, map: M) -> Vec<U>
where
    T: Sync,
    U: Send,
    M: Fn(&T) -> U + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            items.par_iter().map(map).collect()
        }
        _ => items.iter().map(map).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn both_modes_agree() {
        let xs: Vec<u64> = (1..=1000).collect();
        for exec in [Execution::Sequential, Execution::Parallel] {
            let s = map_reduce(&xs, exec, || 0u64, |&x| x * x, |a, b| a + b);
            assert_eq!(s, 333_833_500);
            assert_eq!(map_collect(&xs[..3], exec, |&x| x + 1), [2, 3, 4]);
        }
    }
}
