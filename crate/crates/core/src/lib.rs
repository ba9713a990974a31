//! Reconfiguration of vertex-disjoint path systems (linkages) in graphs.
//!
//! A linkage is a tuple of pairwise vertex-disjoint paths joining terminal
//! pairs; two linkages are adjacent when exactly one path differs. This crate
//! decides whether one linkage can be transformed into another through
//! adjacent linkages, builds explicit reconfiguration sequences for plane
//! graphs with terminals on one or two faces and for planar s-t instances,
//! computes the topological invariants (algebraic intersection numbers,
//! free-group crossing words) that certify non-reconfigurability, and
//! generates hard instances from constraint-logic gadget reductions.
//!
//! The crate is `no_std` (alloc only); IO, file formats and the CLI live in
//! the companion `relink-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod error;
pub mod plane_graph;
pub mod linkage;
pub mod words;
pub mod crossings;
pub mod separators;
pub mod one_face;
pub mod two_face;
pub mod st_paths;
pub mod oracle;
pub mod generators;

pub use error::{Error, Result};
pub use plane_graph::{AdjGraph, Face, GraphData, Instance, InstanceKind, PlaneGraph, TerminalSpec};
pub use linkage::{Linkage, Path, StLinkage};

/// Vertex handle: dense index into a graph's vertex table.
pub type VertexId = u32;
