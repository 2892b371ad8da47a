//! Immutable simple undirected graphs and their distance structure.

mod distance;
mod ops;

pub use distance::{
    DistanceLayers, DistanceRegularity, Girth, IntersectionArray, LocalParameters,
    NotDistanceRegular,
};
pub use ops::Bipartiteness;

use std::sync::OnceLock;

use thiserror::Error;

use crate::permgroup::Permutation;

pub(crate) const UNREACHED: u32 = u32::MAX;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {target} is unreachable from {from}")]
    Unreachable { from: usize, target: usize },
    #[error("local parameters need two distinct vertices, got {0} twice")]
    SameVertex(usize),
    #[error("expected {expected} labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("malformed intersection array: {0}")]
    MalformedArray(String),
}

/// A simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Clone, Debug)]
pub struct Graph {
    adj: Vec<Vec<u32>>,
    labels: Option<Vec<String>>,
    distance_cache: Vec<OnceLock<Box<[u32]>>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.adj == other.adj
    }
}

impl Eq for Graph {}

impl Graph {
    /// Builds a graph from an edge list. Repeated edges collapse; loops are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            adj[u].push(v as u32);
            adj[v].push(u as u32);
        }
        Ok(Self::from_raw_adjacency(adj))
    }

    /// Builds a graph from a symmetric predicate evaluated on every pair `u < v`.
    pub fn from_adjacency_fn<F>(n: usize, mut adjacent: F) -> Graph
    where
        F: FnMut(usize, usize) -> bool,
    {
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in u + 1..n {
                if adjacent(u, v) {
                    adj[u].push(v as u32);
                    adj[v].push(u as u32);
                }
            }
        }
        Self::from_raw_adjacency(adj)
    }

    /// Takes neighbour lists that are already symmetric and loop free.
    pub(crate) fn from_raw_adjacency(mut adj: Vec<Vec<u32>>) -> Graph {
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        let n = adj.len();
        Graph {
            adj,
            labels: None,
            distance_cache: (0..n).map(|_| OnceLock::new()).collect(),
        }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.order() {
            return Err(GraphError::LabelCount {
                expected: self.order(),
                got: labels.len(),
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> String {
        match &self.labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, u: usize) -> &[u32] {
        &self.adj[u]
    }

    #[inline]
    pub fn degree(&self, u: usize) -> usize {
        self.adj[u].len()
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&(v as u32)).is_ok()
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| {
            list.iter()
                .map(|&v| v as usize)
                .filter(move |&v| u < v)
                .map(move |v| (u, v))
        })
    }

    /// The common degree if the graph is regular.
    pub fn valency(&self) -> Option<usize> {
        let k = self.adj.first().map_or(0, Vec::len);
        self.adj.iter().all(|l| l.len() == k).then_some(k)
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v >= self.order() {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    /// Image of the graph under `p`: vertex `v` becomes `p(v)`.
    pub fn relabel(&self, p: &Permutation) -> Graph {
        assert_eq!(p.degree(), self.order(), "relabelling degree mismatch");
        let mut adj = vec![Vec::new(); self.order()];
        for (u, list) in self.adj.iter().enumerate() {
            adj[p.apply(u)] = list.iter().map(|&v| p.apply(v as usize) as u32).collect();
        }
        let mut g = Self::from_raw_adjacency(adj);
        if let Some(labels) = &self.labels {
            let mut relabelled = vec![String::new(); labels.len()];
            for (v, l) in labels.iter().enumerate() {
                relabelled[p.apply(v)] = l.clone();
            }
            g.labels = Some(relabelled);
        }
        g
    }

    /// True iff `p` maps edges to edges (and hence non-edges to non-edges).
    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.order()
            && self.edges().all(|(u, v)| self.is_adjacent(p.apply(u), p.apply(v)))
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.order();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                let u = comp[i];
                for &v in &self.adj[u] {
                    if !seen[v as usize] {
                        seen[v as usize] = true;
                        comp.push(v as usize);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.components().len() == 1
    }

    /// Distances from `u` (`u32::MAX` for unreachable vertices), computed once and cached.
    pub fn distances_from(&self, u: usize) -> Result<&[u32], GraphError> {
        self.check_vertex(u)?;
        Ok(self.distance_cache[u].get_or_init(|| {
            let mut dist = vec![UNREACHED; self.order()];
            let mut queue = Vec::with_capacity(self.order());
            bfs_into(self, u, &mut dist, &mut queue);
            dist.into_boxed_slice()
        }))
    }
}

/// Breadth-first search from `source`, overwriting `dist` and reusing `queue` as scratch.
pub(crate) fn bfs_into(g: &Graph, source: usize, dist: &mut [u32], queue: &mut Vec<u32>) {
    dist.fill(UNREACHED);
    queue.clear();
    dist[source] = 0;
    queue.push(source as u32);
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head] as usize;
        head += 1;
        let dx = dist[x] + 1;
        for &y in g.neighbors(x) {
            if dist[y as usize] == UNREACHED {
                dist[y as usize] = dx;
                queue.push(y);
            }
        }
    }
}
