//! k-Stirling permutations, (k+1)-ary increasing trees and plane-oriented
//! recursive trees: counting, exhaustive and random generation, local types,
//! the bijections between them, the continued-fraction type generating
//! function and tree statistics.
//!
//! ```
//! use kstirling::{perm_to_tree, local_types, KStirlingPermutation};
//!
//! let sigma: KStirlingPermutation = kstirling::io::parse_permutation("1 1 2 2", 2).unwrap();
//! let tree = perm_to_tree(&sigma);
//! assert_eq!(tree.to_string(), "(1 _ _ (2 _ _ _))");
//! assert_eq!(local_types(&sigma).len(), 2);
//! ```

pub mod bijections;
pub mod count;
pub mod enumerate;
pub mod error;
pub mod io;
pub mod localtypes;
pub mod oracle;
pub mod parallel;
pub mod perm;
pub mod series;
pub mod stats;
pub mod tree;
pub mod verify;

pub use bijections::{perm_to_tree, tree_to_perm, VariantMap};
pub use count::{count_kary_trees, count_port, count_stirling, BigCount};
pub use enumerate::{
    enum_kary_trees, enum_ports, enum_stirling, random_object, CombinatorialObject, ObjectClass,
    RandomSampler,
};
pub use error::{Error, Result};
pub use localtypes::{local_types, node_types, type_histogram, LocalType, TypeHistogram};
pub use parallel::Execution;
pub use perm::{validate_stirling, KStirlingPermutation, Validity, Violation};
pub use tree::{KaryIncreasingTree, PortTree};
