//! Construction and symmetry classification of distance-transitive graphs.
//!
//! The crate builds the classical graph families (Hamming, Johnson, Odd, Grassmann,
//! Paley, generalized triangles, AG(2, q) minus a parallel class, Cayley graphs of small
//! semidirect products), computes full automorphism groups by partition refinement, and
//! decides distance transitivity together with the exact s-arc and s-geodesic transitivity
//! levels.

pub mod autgroup;
pub mod classify;
pub mod families;
pub mod golden;
pub mod graph;
pub mod io;
pub mod permgroup;

pub use autgroup::{are_isomorphic, automorphism_group, AutResult};
pub use graph::{Graph, GraphError, IntersectionArray};
pub use num_bigint::BigUint;
pub use permgroup::{PermError, Permutation, PermutationGroup};
