//! Graph symmetry toolkit centred on the co-normal product.
//!
//! The crate is `no_std` and only needs `alloc`. Everything here is a pure
//! function over immutable [`Graph`] values:
//!
//! * [`graph`]: the bit-matrix graph, neighbourhoods, twins, distances.
//! * [`families`]: paths, cycles, stars, complete multipartite graphs and
//!   the exhaustively searched rigid graphs.
//! * [`products`]: co-normal (binary and k-ary), lexicographic, strong and
//!   join constructions plus fibers and the structural oracles.
//! * [`symmetry`]: automorphism groups, orbits, stabilizers and the
//!   structured product automorphisms (pairs, flips, rotations,
//!   interchanges).
//! * [`fixing`]: fixing sets and exact fixing numbers.
//! * [`claims`]: closed-form predictions for product fixing numbers and
//!   automorphism groups, checked against brute force.
#![no_std]

extern crate alloc;

pub mod claims;
mod error;
pub mod families;
pub mod fixing;
pub mod graph;
mod perm;
pub mod products;
mod search;
pub mod symmetry;

pub use error::{Error, Result};
pub use graph::{Diameter, Graph, TwinKind, TwinPartition, VertexSet};
pub use perm::Permutation;
pub use products::ProductIndex;

/// Resource limits shared by every search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest vertex count a product constructor may produce.
    pub max_product_vertices: usize,
    /// Largest group that may be enumerated element by element.
    pub max_group_order: u128,
    /// Backtracking nodes allowed in one top-level search.
    pub max_search_nodes: u64,
}

impl Limits {
    pub const DEFAULT_MAX_PRODUCT_VERTICES: usize = 4096;
    pub const DEFAULT_MAX_GROUP_ORDER: u128 = 1_000_000;
    pub const DEFAULT_MAX_SEARCH_NODES: u64 = 100_000_000;
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_product_vertices: Self::DEFAULT_MAX_PRODUCT_VERTICES,
            max_group_order: Self::DEFAULT_MAX_GROUP_ORDER,
            max_search_nodes: Self::DEFAULT_MAX_SEARCH_NODES,
        }
    }
}
