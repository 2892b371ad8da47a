//! Automorphism groups and canonical forms by equitable refinement and backtracking.
//!
//! The search individualizes one vertex per level, taken from the non-singleton cell with the
//! most non-trivial joins to other non-singleton cells.
//! A node is cut when its refinement trace can neither reproduce the first leaf nor beat the
//! best leaf; siblings are cut when an automorphism fixing the path maps them onto an explored
//! child.

mod partition;
mod search;

pub use partition::{refine, OrderedPartition, PartitionError};

use crate::graph::Graph;
use crate::permgroup::{Permutation, PermutationGroup};
use search::{map_between, Search};

#[derive(Clone, Debug)]
pub struct AutResult {
    pub group: PermutationGroup,
    /// Vertex `v` goes to position `canonical_labeling(v)` in the canonical form.
    pub canonical_labeling: Permutation,
    /// `n` then the sorted canonical edges `(i, j)`, `i < j`, all as little-endian `u32`.
    pub canonical_certificate: Vec<u8>,
    /// Search-tree nodes visited.
    pub nodes: u64,
}

impl AutResult {
    pub fn order(&self) -> num_bigint::BigUint {
        self.group.order()
    }
}

/// Degree cells, further split by sphere-size profile when the graph is irregular.
fn initial_partition(g: &Graph) -> OrderedPartition {
    let n = g.order();
    if g.valency().is_some() {
        return OrderedPartition::unit(n);
    }
    let profile = |v: usize| {
        let dist = g.distances_from(v).expect("vertex in range");
        let mut sizes = vec![0usize; n + 1];
        for &d in dist {
            sizes[(d as usize).min(n)] += 1;
        }
        sizes
    };
    let mut keyed: Vec<(Vec<usize>, usize)> = (0..n).map(|v| (profile(v), v)).collect();
    keyed.sort();
    let mut cells: Vec<Vec<usize>> = Vec::new();
    for (i, (key, v)) in keyed.iter().enumerate() {
        if i == 0 || keyed[i - 1].0 != *key {
            cells.push(Vec::new());
        }
        cells.last_mut().unwrap().push(*v);
    }
    OrderedPartition::from_cells(n, &cells).expect("profile cells cover every vertex")
}

pub fn automorphism_group(g: &Graph) -> AutResult {
    let n = g.order();
    if n == 0 {
        return AutResult {
            group: PermutationGroup::trivial(0),
            canonical_labeling: Permutation::identity(0),
            canonical_certificate: 0u32.to_le_bytes().to_vec(),
            nodes: 0,
        };
    }
    let out = Search::new(g).run(initial_partition(g));
    let group = PermutationGroup::new(n, out.generators).expect("automorphisms share the degree");
    let identity: Vec<u32> = (0..n as u32).collect();
    // lab maps position -> vertex; the labelling is its inverse
    let canonical_labeling = map_between(&out.canonical_lab, &identity);
    let mut bytes = Vec::with_capacity(4 + 8 * out.certificate.len());
    bytes.extend_from_slice(&(n as u32).to_le_bytes());
    for e in &out.certificate {
        bytes.extend_from_slice(&((e >> 32) as u32).to_le_bytes());
        bytes.extend_from_slice(&(*e as u32).to_le_bytes());
    }
    AutResult {
        group,
        canonical_labeling,
        canonical_certificate: bytes,
        nodes: out.nodes,
    }
}

/// An isomorphism `φ` with `u ~ v` in `a` iff `φ(u) ~ φ(v)` in `b`, or `None`.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> Option<Permutation> {
    if a.order() != b.order() || a.size() != b.size() {
        return None;
    }
    let ra = automorphism_group(a);
    let rb = automorphism_group(b);
    if ra.canonical_certificate != rb.canonical_certificate {
        return None;
    }
    let phi = ra.canonical_labeling.then(&rb.canonical_labeling.inverse());
    let ok = a
        .edges()
        .all(|(u, v)| b.is_adjacent(phi.apply(u), phi.apply(v)));
    ok.then_some(phi)
}
