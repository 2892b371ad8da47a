//! Permutations and permutation groups with a deterministic Schreier–Sims stabilizer chain.

mod group;
mod perm;

pub use group::{orbit_under, PermutationGroup, StabilizerTower};
pub use perm::Permutation;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("not a bijection: {point} maps to already used image {image}")]
    NotBijective { point: usize, image: usize },
    #[error("permutation group on zero points")]
    EmptyDegree,
    #[error("empty point set")]
    EmptySet,
}
