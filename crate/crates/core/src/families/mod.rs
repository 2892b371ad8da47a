//! Constructors for the named graph families.
//!
//! Every constructor fixes its vertex order, so equal parameters give bit-identical graphs.
//! Enumerating constructors take a vertex cap and refuse to build anything larger.

mod classic;
mod examples;
mod field;
mod geometry;
mod group;

pub use classic::{
    binomial, complete, complete_bipartite, complete_multipartite, crown, cycle, doubled_odd,
    folded_cube, hamming, johnson, k_subsets, odd_graph, tutte_coxeter,
};
pub use examples::{ag2_cayley, ag2_cayley_connection, g22_6, g64_8};
pub use field::{gf, gf_order, is_prime, prime_power, FiniteField};
pub use geometry::{
    ag2_minus_parallel, doubled_grassmann, gaussian_binomial, grassmann, paley, pg2_incidence,
    subspaces,
};
pub use group::{cayley, signed_semidirect, CayleyError, ConcreteGroup, GroupError, SignedSemidirectSpec};

use thiserror::Error;

pub const DEFAULT_VERTEX_CAP: usize = 5000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("Paley graph needs q = 1 mod 4, got {0}")]
    PaleyResidue(u64),
    #[error("construction would have {vertices} vertices, above the cap of {cap}")]
    CapExceeded { vertices: u128, cap: usize },
    #[error(transparent)]
    Cayley(#[from] CayleyError),
    #[error(transparent)]
    Group(#[from] GroupError),
}
