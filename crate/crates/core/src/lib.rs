//! Distance-unbalancedness of finite connected graphs.
//!
//! For an edge-free pair of vertices `u != v`, `n_{u,v}` counts the vertices
//! strictly closer to `u` than to `v`. The Mostar-type indices sum
//! `|n_{u,v} - n_{v,u}|` over pairs at a fixed distance; the
//! distance-unbalancedness `uB` sums it over all unordered pairs.
//!
//! ```
//! use ubgraph::{families, distance_unbalancedness};
//!
//! let p4 = families::path(4).unwrap();
//! assert_eq!(distance_unbalancedness(&p4).unwrap(), 6);
//! ```

pub mod canon;
pub mod enumerate;
mod error;
pub mod families;
mod graph;
pub mod graph6;
pub mod invariants;
pub mod partitions;
pub mod survey;
pub mod trees;
pub mod verify;

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonicalForm};
pub use enumerate::{enumerate_connected_graphs, GraphSource, GraphStream, MAX_BUILTIN_ORDER};
pub use error::{Error, Result};
pub use families::{FamilyDescriptor, GluedMode};
pub use graph::{DistanceRow, DistanceTable, Graph, PairBalance, UNREACHABLE};
pub use invariants::{
    average_unbalancedness, distance_unbalancedness, is_ell_distance_balanced,
    is_highly_distance_balanced, mostar, mostar_ell, profile, InvariantProfile,
};
pub use trees::{enumerate_trees, FreeTrees};
