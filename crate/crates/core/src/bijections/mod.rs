//! Codecs between k-Stirling permutations, (k+1)-ary increasing trees,
//! plane-oriented recursive trees and path diagrams.

mod gessel;
mod pathdiagram;
mod variant;

pub use gessel::{perm_to_tree, tree_to_perm};
pub use pathdiagram::{
    enum_kary_diagrams, enum_port_diagrams, pathdiagram_to_tree, port_pathdiagram_to_tree,
    port_tree_to_pathdiagram, tree_to_pathdiagram, DiagramLetter, KaryLetter, KaryPathDiagram,
    PathDiagram, PortLetter, PortPathDiagram,
};
pub use variant::VariantMap;
