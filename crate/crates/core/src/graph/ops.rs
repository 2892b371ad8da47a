use super::{Graph, UNREACHED};

/// A proper 2-colouring, or an odd cycle proving none exists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Bipartiteness {
    Bipartite(Vec<u8>),
    OddCycle(Vec<usize>),
}

impl Bipartiteness {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, Bipartiteness::Bipartite(_))
    }
}

impl Graph {
    pub fn complement(&self) -> Graph {
        Graph::from_adjacency_fn(self.order(), |u, v| !self.is_adjacent(u, v))
    }

    /// `G × K_2`: vertex `(u, i)` is `u + i·n`, adjacent to `(v, 1 - i)` whenever `u ~ v`.
    pub fn bipartite_double_cover(&self) -> Graph {
        let n = self.order();
        let mut adj = vec![Vec::new(); 2 * n];
        for u in 0..n {
            for &v in self.neighbors(u) {
                adj[u].push(v + n as u32);
                adj[u + n].push(v);
            }
        }
        let labels = (0..2 * n)
            .map(|x| format!("({},{})", self.label(x % n), x / n))
            .collect();
        Graph::from_raw_adjacency(adj)
            .with_labels(labels)
            .expect("label count matches")
    }

    pub fn bipartiteness(&self) -> Bipartiteness {
        let n = self.order();
        let mut color = vec![u8::MAX; n];
        let mut parent = vec![UNREACHED; n];
        for s in 0..n {
            if color[s] != u8::MAX {
                continue;
            }
            color[s] = 0;
            let mut queue = vec![s];
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head];
                head += 1;
                for &y in self.neighbors(x) {
                    let y = y as usize;
                    if color[y] == u8::MAX {
                        color[y] = 1 - color[x];
                        parent[y] = x as u32;
                        queue.push(y);
                    } else if color[y] == color[x] {
                        return Bipartiteness::OddCycle(odd_cycle(&parent, x, y));
                    }
                }
            }
        }
        Bipartiteness::Bipartite(color)
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartiteness().is_bipartite()
    }
}

/// Joins the BFS-tree paths from `x` and `y` at their lowest common ancestor.
fn odd_cycle(parent: &[u32], x: usize, y: usize) -> Vec<usize> {
    let root_path = |mut v: usize| {
        let mut p = vec![v];
        while parent[v] != UNREACHED {
            v = parent[v] as usize;
            p.push(v);
        }
        p
    };
    let px = root_path(x);
    let py = root_path(y);
    // same root; strip the shared suffix but keep the meeting vertex
    let mut common = 0;
    while common < px.len().min(py.len())
        && px[px.len() - 1 - common] == py[py.len() - 1 - common]
    {
        common += 1;
    }
    let mut cycle: Vec<usize> = px[..=px.len() - common].to_vec();
    cycle.extend(py[..py.len() - common].iter().rev());
    cycle
}
