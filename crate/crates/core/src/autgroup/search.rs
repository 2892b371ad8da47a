use std::cmp::Ordering;

use super::partition::{mix, OrderedPartition, Refiner};
use crate::graph::Graph;
use crate::permgroup::Permutation;

struct Leaf {
    lab: Vec<u32>,
    cert: Vec<u64>,
    path: Vec<u32>,
    trace: Vec<u64>,
}

/// Union-find over vertices, merged along every automorphism found so far.
struct Orbits {
    parent: Vec<u32>,
}

impl Orbits {
    fn new(n: usize) -> Self {
        Orbits {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] as usize != x {
            let up = self.parent[self.parent[x] as usize];
            self.parent[x] = up;
            x = up as usize;
        }
        x
    }

    fn merge(&mut self, p: &Permutation) {
        for x in 0..p.degree() {
            let (a, b) = (self.find(x), self.find(p.apply(x)));
            if a != b {
                let (lo, hi) = (a.min(b), a.max(b));
                self.parent[hi] = lo as u32;
            }
        }
    }
}

pub(crate) struct SearchOutcome {
    pub generators: Vec<Permutation>,
    pub canonical_lab: Vec<u32>,
    pub certificate: Vec<u64>,
    pub nodes: u64,
}

pub(crate) struct Search<'g> {
    g: &'g Graph,
    refiner: Refiner,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Permutation>,
    orbits: Orbits,
    path: Vec<u32>,
    trace: Vec<u64>,
    nodes: u64,
}

/// Sorted edge codes `(i << 32) | j`, `i < j`, of the graph relabelled by `lab`.
fn certificate(g: &Graph, lab: &[u32]) -> Vec<u64> {
    let mut pos = vec![0u32; lab.len()];
    for (i, &v) in lab.iter().enumerate() {
        pos[v as usize] = i as u32;
    }
    let mut cert: Vec<u64> = g
        .edges()
        .map(|(u, v)| {
            let (a, b) = (pos[u].min(pos[v]), pos[u].max(pos[v]));
            (u64::from(a) << 32) | u64::from(b)
        })
        .collect();
    cert.sort_unstable();
    cert
}

fn common_prefix(a: &[u32], b: &[u32]) -> usize {
    a.iter().zip(b).take_while(|(x, y)| x == y).count()
}

impl<'g> Search<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        let n = g.order();
        Search {
            g,
            refiner: Refiner::new(n),
            first: None,
            best: None,
            generators: Vec::new(),
            orbits: Orbits::new(n),
            path: Vec::new(),
            trace: Vec::new(),
            nodes: 0,
        }
    }

    pub(crate) fn run(mut self, mut root: OrderedPartition) -> SearchOutcome {
        let starts: Vec<usize> = root.cell_starts().collect();
        let t = self.refiner.refine(self.g, &mut root, &starts);
        self.trace.push(t);
        self.visit(&root, true, Ordering::Equal);
        let best = self.best.expect("search reaches at least one leaf");
        SearchOutcome {
            generators: self.generators,
            canonical_lab: best.lab,
            certificate: best.cert,
            nodes: self.nodes,
        }
    }

    /// Explores the subtree at the current path. `Some(k)` asks every node deeper than `k` to
    /// return at once.
    fn visit(&mut self, part: &OrderedPartition, eq_first: bool, cmp_best: Ordering) -> Option<usize> {
        self.nodes += 1;
        let level = self.path.len();
        let Some(target) = part.target_cell(self.g, &mut self.refiner.count) else {
            return self.leaf(part, eq_first, cmp_best);
        };
        let mut candidates: Vec<u32> = part.cell_at(target).to_vec();
        candidates.sort_unstable();

        let on_first_path = self
            .first
            .as_ref()
            .is_some_and(|f| f.path.len() > level && f.path[..level] == self.path[..]);
        let mut tried: Vec<u32> = Vec::new();
        let mut local: Option<(usize, Orbits)> = None;

        for &v in &candidates {
            if !tried.is_empty() && self.equivalent_to_tried(v, &tried, on_first_path, &mut local) {
                continue;
            }
            let mut child = part.clone();
            let cell = child.individualize(v as usize);
            let t = mix(self.refiner.refine(self.g, &mut child, &[cell]), level as u64);

            let child_eq_first = match &self.first {
                None => true,
                Some(f) => eq_first && f.trace.get(level + 1) == Some(&t),
            };
            let child_cmp = match (&self.best, cmp_best) {
                (Some(b), Ordering::Equal) => match b.trace.get(level + 1) {
                    Some(bt) => t.cmp(bt),
                    None => Ordering::Greater,
                },
                (None, _) => Ordering::Equal,
                (_, c) => c,
            };
            tried.push(v);
            if !child_eq_first && child_cmp == Ordering::Less {
                continue;
            }
            self.path.push(v);
            self.trace.push(t);
            let r = self.visit(&child, child_eq_first, child_cmp);
            self.path.pop();
            self.trace.pop();
            if let Some(k) = r {
                if k < level {
                    return Some(k);
                }
            }
        }
        None
    }

    /// Whether `v` lies in the orbit of an already explored sibling under automorphisms
    /// fixing the current path pointwise.
    fn equivalent_to_tried(
        &mut self,
        v: u32,
        tried: &[u32],
        on_first_path: bool,
        local: &mut Option<(usize, Orbits)>,
    ) -> bool {
        if self.generators.is_empty() {
            return false;
        }
        if on_first_path {
            // every generator found so far fixes the first path up to here
            let r = self.orbits.find(v as usize);
            return tried.iter().any(|&t| self.orbits.find(t as usize) == r);
        }
        let stale = local.as_ref().is_none_or(|(k, _)| *k != self.generators.len());
        if stale {
            let mut o = Orbits::new(self.g.order());
            for gamma in &self.generators {
                if self.path.iter().all(|&x| gamma.fixes(x as usize)) {
                    o.merge(gamma);
                }
            }
            *local = Some((self.generators.len(), o));
        }
        let o = &mut local.as_mut().unwrap().1;
        let r = o.find(v as usize);
        tried.iter().any(|&t| o.find(t as usize) == r)
    }

    fn leaf(&mut self, part: &OrderedPartition, eq_first: bool, cmp_best: Ordering) -> Option<usize> {
        let lab = part.lab().to_vec();
        let cert = certificate(self.g, &lab);
        let Some(first) = &self.first else {
            let leaf = Leaf {
                lab,
                cert,
                path: self.path.clone(),
                trace: self.trace.clone(),
            };
            self.best = Some(Leaf {
                lab: leaf.lab.clone(),
                cert: leaf.cert.clone(),
                path: leaf.path.clone(),
                trace: leaf.trace.clone(),
            });
            self.first = Some(leaf);
            return None;
        };
        if eq_first && first.trace.len() == self.trace.len() && cert == first.cert {
            let k = common_prefix(&first.path, &self.path);
            let gamma = map_between(&first.lab, &lab);
            self.record(gamma);
            return Some(k);
        }
        let best = self.best.as_ref().unwrap();
        let cmp = cmp_best
            .then(self.trace.len().cmp(&best.trace.len()))
            .then_with(|| cert.cmp(&best.cert));
        match cmp {
            Ordering::Equal => {
                let k = common_prefix(&best.path, &self.path);
                let gamma = map_between(&best.lab, &lab);
                self.record(gamma);
                Some(k)
            }
            Ordering::Greater => {
                self.best = Some(Leaf {
                    lab,
                    cert,
                    path: self.path.clone(),
                    trace: self.trace.clone(),
                });
                None
            }
            Ordering::Less => None,
        }
    }

    fn record(&mut self, gamma: Permutation) {
        debug_assert!(self.g.is_automorphism(&gamma));
        self.orbits.merge(&gamma);
        self.generators.push(gamma);
    }
}

/// The vertex map sending `from[i]` to `to[i]`.
pub(crate) fn map_between(from: &[u32], to: &[u32]) -> Permutation {
    let mut images = vec![0u32; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        images[a as usize] = b;
    }
    Permutation::from_images_unchecked(images)
}
