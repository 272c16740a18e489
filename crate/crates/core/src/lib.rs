//! Signed graphs up to switching equivalence and switching isomorphism.
//!
//! Sign vectors live in the edge space GF(2)^m of a [`Graph`]. Switching adds
//! an element of the cut space, so switching classes are the cosets of the cut
//! space and are named by a canonical reduced vector ([`signing`]). The
//! automorphism group of the underlying graph permutes those classes, and its
//! orbits are the switching-isomorphism classes ([`classify`]).
//!
//! ```
//! use sigswitch_core::{classify, complete_graph, symmetry};
//!
//! let k5 = complete_graph(5);
//! let aut = symmetry::closure(5, &symmetry::complete_graph_generators(5)).unwrap();
//! let orbits = classify::orbits(&k5, &aut).unwrap();
//! assert_eq!(orbits.len(), 7);
//! ```
#![no_std]
extern crate alloc;

pub mod classify;
pub mod error;
pub mod gf2;
pub mod graph;
pub mod signing;
pub mod symmetry;

pub use error::{Error, Graph6Error, Result};
pub use gf2::{BitVector, Gf2Basis};
pub use graph::{
    complete_graph, connected_components, generalized_petersen, parse_graph6, vertex_cut_edges, Components, GpVertex,
    Graph,
};
pub use signing::{SignedGraph, SwitchingClass, SwitchingFunction, SwitchingSpace};
pub use symmetry::{EdgePermutation, PermutationGroup, VertexPermutation};
