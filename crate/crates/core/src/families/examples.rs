//! Cayley graphs given by explicit connection sets over small signed semidirect products.
//!
//! Connection-set words are evaluated by multiplying generators inside the group, so `a^i b^j c`
//! lands on `(1; -i, -j)`. That differs from the naive coordinate reading `(1; i, j)` by the
//! automorphism `x ↦ -x` of the abelian part, which yields an isomorphic graph.

use super::group::{cayley, signed_semidirect, SignedSemidirectSpec};
use super::FamilyError;
use crate::graph::Graph;

/// Exponent pairs `(i, j)` of the connection words `a^i b^j c`.
const AG2_11: [(u64, u64); 11] = [
    (10, 10),
    (9, 10),
    (2, 2),
    (4, 1),
    (0, 5),
    (1, 6),
    (3, 4),
    (6, 2),
    (8, 5),
    (5, 4),
    (7, 6),
];

const AG2_13: [(u64, u64); 13] = [
    (0, 12),
    (12, 4),
    (9, 1),
    (4, 1),
    (1, 4),
    (10, 5),
    (11, 6),
    (3, 5),
    (2, 6),
    (7, 10),
    (6, 10),
    (8, 7),
    (5, 7),
];

/// Exponents `i` of the words `a^i b` in the dihedral group of order 22.
const G22_6: [u64; 6] = [0, 2, 6, 7, 8, 10];

/// Exponents `(i, j, k)` of the words `a b^i c^j d^k` in the group of order 64.
const G64_8: [(u64, u64, u64); 8] = [
    (0, 0, 0),
    (1, 0, 0),
    (1, 1, 0),
    (1, 0, 1),
    (3, 3, 1),
    (2, 3, 0),
    (0, 2, 1),
    (0, 3, 1),
];

/// The connection words `a^i b^j c` for `q ∈ {11, 13}`.
pub fn ag2_cayley_connection(q: u64) -> Result<&'static [(u64, u64)], FamilyError> {
    match q {
        11 => Ok(&AG2_11),
        13 => Ok(&AG2_13),
        _ => Err(FamilyError::InvalidParameter(format!(
            "Cayley model of AG(2, q) is only tabulated for q = 11, 13 (got {q})"
        ))),
    }
}

/// `Cay(G, S)` with `G = ⟨a, b, c | a^q = b^q = c² = [a, b] = 1, a^c = a⁻¹, b^c = b⁻¹⟩`.
pub fn ag2_cayley(q: u64) -> Result<Graph, FamilyError> {
    let words = ag2_cayley_connection(q)?;
    let spec = SignedSemidirectSpec::new(vec![q as u32, q as u32], vec![-1, -1])?;
    let g = signed_semidirect(&spec);
    let a = spec.encode(0, &[1, 0]);
    let b = spec.encode(0, &[0, 1]);
    let c = spec.encode(1, &[0, 0]);
    let set: Vec<usize> = words
        .iter()
        .map(|&(i, j)| g.word(&[(a, i), (b, j), (c, 1)]))
        .collect();
    Ok(cayley(&g, &set)?)
}

/// `Cay(D_22, {a^i b})`.
pub fn g22_6() -> Graph {
    let spec = SignedSemidirectSpec::new(vec![11], vec![-1]).expect("valid spec");
    let g = signed_semidirect(&spec);
    let a = spec.encode(0, &[1]);
    let b = spec.encode(1, &[0]);
    let set: Vec<usize> = G22_6.iter().map(|&i| g.word(&[(a, i), (b, 1)])).collect();
    cayley(&g, &set).expect("connection set generates D_22")
}

/// `Cay(G, S)` with `G = ⟨a, b, c, d⟩`, `a² = b⁴ = c⁴ = d² = 1`, `b^a = b⁻¹`, `c^a = c⁻¹`,
/// `d` central and `b, c` commuting.
pub fn g64_8() -> Graph {
    let spec = SignedSemidirectSpec::new(vec![4, 4, 2], vec![-1, -1, 1]).expect("valid spec");
    let g = signed_semidirect(&spec);
    let a = spec.encode(1, &[0, 0, 0]);
    let b = spec.encode(0, &[1, 0, 0]);
    let c = spec.encode(0, &[0, 1, 0]);
    let d = spec.encode(0, &[0, 0, 1]);
    let set: Vec<usize> = G64_8
        .iter()
        .map(|&(i, j, k)| g.word(&[(a, 1), (b, i), (c, j), (d, k)]))
        .collect();
    cayley(&g, &set).expect("connection set generates the group")
}
