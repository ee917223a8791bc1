//! Exact computation of P3-convexity invariants on finite simple graphs.
//!
//! A set `U` of vertices is convex when every vertex outside `U` has at most
//! one neighbor inside `U`; the hull of a set is the smallest convex superset,
//! obtained by repeatedly absorbing vertices with two or more neighbors
//! already present. On top of the hull operator the crate computes:
//!
//! - Radon partitions of vertex multisets into `k` parts whose hulls share a
//!   vertex, the anti-Radon numbers `r~_k` (largest multiset admitting no such
//!   partition) and their rooted variants `r~_k*`,
//! - free sets (every vertex of the graph has at most one neighbor in the
//!   set) and the free number `alpha~`,
//! - linear-time tree recursions for `alpha~`, `alpha~*` and `r~_k*`, plus
//!   the constructive exchange argument producing a maximum free set that
//!   covers all endvertices of a tree,
//! - the graph families used as extremal witnesses, and exhaustive streams of
//!   all trees of a given order for verification sweeps.
//!
//! Everything is exact integer combinatorics over bitset-encoded vertex sets.
//! The crate is `no_std` (with `alloc`); IO, file formats and the CLI live in
//! the companion `p3c` crate.

#![cfg_attr(not(any(test, feature = "std")), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

mod bitset;
mod error;

pub mod canon;
pub mod convexity;
pub mod families;
pub mod graph;
pub mod radon;
pub mod tree_dp;

pub use bitset::VertexSet;
pub use error::Error;
pub use graph::{Graph, RootedComponent};
