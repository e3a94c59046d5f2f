#![forbid(unsafe_code)]

//! Clustered-planarity testing toolkit.
//!
//! A clustered graph is a multigraph together with a rooted tree whose leaves
//! are the vertices; internal tree nodes are clusters. This crate decides or
//! bounds clustered planarity along three routes:
//!
//! * a parity test: place the vertices on a circle in cluster order, read off
//!   the crossing parities of independent edge pairs, and solve a GF(2)
//!   system over the allowed parity switches ([`ht`]);
//! * winding-number analysis of cyclic-clustered cycles, including a
//!   generator for even-drawable but non-clustered-planar instances
//!   ([`cycles`]);
//! * saturator search on embedded flat instances whose faces see at most
//!   five vertices, by normalization plus matroid intersection
//!   ([`saturator`]).
//!
//! Brute-force oracles ([`oracle`]) reproduce both decision routes by
//! exhaustive enumeration at desk scale and back every nontrivial result in
//! the test suite.

pub mod bits;
pub mod corpus;
pub mod cycles;
pub mod drawing;
pub mod format;
pub mod graph;
pub mod ht;
pub mod map;
pub mod matroid;
pub mod oracle;
pub mod saturator;
pub mod switch;
mod uf;

pub use graph::{ClusterTree, ClusteredGraph, EdgeId, NodeId, VertexId};
