use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionError {
    #[error("vertex {0} appears in more than one cell")]
    Repeated(usize),
    #[error("vertex {0} is not covered by any cell")]
    Uncovered(usize),
    #[error("vertex {vertex} out of range for {order} vertices")]
    OutOfRange { vertex: usize, order: usize },
    #[error("empty cell at index {0}")]
    EmptyCell(usize),
}

/// An ordered partition of `0..n` stored as one array of vertices cut into contiguous cells.
///
/// A cell is named by its first position. Splitting keeps every fragment inside the old cell's
/// range, so the cell order of the parent is preserved.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedPartition {
    lab: Vec<u32>,
    pos: Vec<u32>,
    /// position -> start of the cell holding it
    cell_of: Vec<u32>,
    /// start -> one past the end; meaningful at cell starts only
    end: Vec<u32>,
    cells: usize,
    singletons: usize,
}

impl OrderedPartition {
    pub fn unit(n: usize) -> Self {
        OrderedPartition {
            lab: (0..n as u32).collect(),
            pos: (0..n as u32).collect(),
            cell_of: vec![0; n],
            end: {
                let mut e = vec![0; n];
                if n > 0 {
                    e[0] = n as u32;
                }
                e
            },
            cells: usize::from(n > 0),
            singletons: usize::from(n == 1),
        }
    }

    pub fn from_cells(n: usize, cells: &[Vec<usize>]) -> Result<Self, PartitionError> {
        let mut seen = vec![false; n];
        let mut lab = Vec::with_capacity(n);
        let mut cell_of = vec![0; n];
        let mut end = vec![0; n];
        let mut singletons = 0;
        for (i, cell) in cells.iter().enumerate() {
            if cell.is_empty() {
                return Err(PartitionError::EmptyCell(i));
            }
            let start = lab.len();
            for &v in cell {
                if v >= n {
                    return Err(PartitionError::OutOfRange { vertex: v, order: n });
                }
                if seen[v] {
                    return Err(PartitionError::Repeated(v));
                }
                seen[v] = true;
                cell_of[lab.len()] = start as u32;
                lab.push(v as u32);
            }
            end[start] = lab.len() as u32;
            singletons += usize::from(cell.len() == 1);
        }
        if let Some(v) = seen.iter().position(|&s| !s) {
            return Err(PartitionError::Uncovered(v));
        }
        let mut pos = vec![0; n];
        for (p, &v) in lab.iter().enumerate() {
            pos[v as usize] = p as u32;
        }
        Ok(OrderedPartition {
            lab,
            pos,
            cell_of,
            end,
            cells: cells.len(),
            singletons,
        })
    }

    pub fn order(&self) -> usize {
        self.lab.len()
    }

    pub fn num_cells(&self) -> usize {
        self.cells
    }

    pub fn num_singletons(&self) -> usize {
        self.singletons
    }

    pub fn is_discrete(&self) -> bool {
        self.singletons == self.lab.len()
    }

    /// Cells in order, each sorted ascending.
    pub fn cells(&self) -> Vec<Vec<usize>> {
        self.cell_starts()
            .map(|s| {
                let mut c: Vec<usize> = self.cell_at(s).iter().map(|&v| v as usize).collect();
                c.sort_unstable();
                c
            })
            .collect()
    }

    /// Vertices in positional order; a discrete partition reads as a labelling.
    pub fn lab(&self) -> &[u32] {
        &self.lab
    }

    pub(crate) fn cell_starts(&self) -> impl Iterator<Item = usize> + '_ {
        let mut s = 0;
        std::iter::from_fn(move || {
            (s < self.lab.len()).then(|| {
                let cur = s;
                s = self.end[cur] as usize;
                cur
            })
        })
    }

    pub(crate) fn cell_at(&self, start: usize) -> &[u32] {
        &self.lab[start..self.end[start] as usize]
    }

    pub fn cell_index_of(&self, v: usize) -> usize {
        let start = self.cell_of[self.pos[v] as usize] as usize;
        self.cell_starts().position(|s| s == start).unwrap()
    }

    /// Start of the non-singleton cell joined non-trivially to the most non-singleton cells,
    /// the first such on ties. Assumes the partition is equitable, so one representative per
    /// cell sees the same counts as the rest.
    pub(crate) fn target_cell(&self, g: &Graph, count: &mut [u32]) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        let mut touched: Vec<usize> = Vec::new();
        for s in self.cell_starts() {
            let size = self.end[s] as usize - s;
            if size == 1 {
                continue;
            }
            let v = self.lab[s] as usize;
            for &u in g.neighbors(v) {
                let c = self.cell_of[self.pos[u as usize] as usize] as usize;
                if count[c] == 0 {
                    touched.push(c);
                }
                count[c] += 1;
            }
            let joins = touched
                .iter()
                .filter(|&&c| {
                    let len = self.end[c] as usize - c;
                    len > 1 && (count[c] as usize) < len
                })
                .count();
            for &c in &touched {
                count[c] = 0;
            }
            touched.clear();
            if best.is_none_or(|(_, j)| joins > j) {
                best = Some((s, joins));
            }
        }
        best.map(|(s, _)| s)
    }

    /// Splits `v` off the front of its cell. Returns the start of the new singleton cell.
    pub fn individualize(&mut self, v: usize) -> usize {
        let p = self.pos[v] as usize;
        let start = self.cell_of[p] as usize;
        let end = self.end[start] as usize;
        if end - start == 1 {
            return start;
        }
        let front = self.lab[start];
        self.lab.swap(start, p);
        self.pos[v] = start as u32;
        self.pos[front as usize] = p as u32;
        self.end[start] = start as u32 + 1;
        self.end[start + 1] = end as u32;
        for q in start + 1..end {
            self.cell_of[q] = start as u32 + 1;
        }
        self.cells += 1;
        self.singletons += 1 + usize::from(end - start == 2);
        start
    }

    /// True iff every vertex of a cell has the same number of neighbours in each cell.
    pub fn is_equitable(&self, g: &Graph) -> bool {
        let n = self.order();
        let mut count = vec![0u32; n];
        for w in self.cell_starts() {
            for &v in self.cell_at(w) {
                for &u in g.neighbors(v as usize) {
                    count[u as usize] += 1;
                }
            }
            for s in self.cell_starts() {
                let cell = self.cell_at(s);
                let k = count[cell[0] as usize];
                if cell.iter().any(|&u| count[u as usize] != k) {
                    return false;
                }
            }
            count.fill(0);
        }
        true
    }
}

/// Order-sensitive 64-bit mixing. Stable across builds, unlike the std hasher.
#[inline]
pub(crate) fn mix(h: u64, x: u64) -> u64 {
    let mut z = (h ^ x.wrapping_mul(0x9e37_79b9_7f4a_7c15)).wrapping_add(0x632b_e59b_d9b4_e019);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Scratch buffers reused across refinements of the same graph.
pub(crate) struct Refiner {
    pub(crate) count: Vec<u32>,
    touched: Vec<u32>,
    touched_cells: Vec<u32>,
    cell_mark: Vec<bool>,
    in_queue: Vec<bool>,
    queue: VecDeque<u32>,
    scratch: Vec<(u32, u32)>,
}

impl Refiner {
    pub(crate) fn new(n: usize) -> Self {
        Refiner {
            count: vec![0; n],
            touched: Vec::new(),
            touched_cells: Vec::new(),
            cell_mark: vec![false; n],
            in_queue: vec![false; n],
            queue: VecDeque::new(),
            scratch: Vec::new(),
        }
    }

    /// Refines `p` to the coarsest equitable partition finer than it, using the cells starting
    /// at `splitters` as the initial queue. Returns a trace hash that depends only on the
    /// isomorphism class of `(g, p)`.
    pub(crate) fn refine(&mut self, g: &Graph, p: &mut OrderedPartition, splitters: &[usize]) -> u64 {
        let mut trace = mix(0, p.cells as u64);
        for &s in splitters {
            if !self.in_queue[s] {
                self.in_queue[s] = true;
                self.queue.push_back(s as u32);
            }
        }
        while let Some(w) = self.queue.pop_front() {
            let w = w as usize;
            self.in_queue[w] = false;
            if p.is_discrete() {
                continue;
            }
            for i in w..p.end[w] as usize {
                let v = p.lab[i] as usize;
                for &u in g.neighbors(v) {
                    if self.count[u as usize] == 0 {
                        self.touched.push(u);
                    }
                    self.count[u as usize] += 1;
                }
            }
            for &u in &self.touched {
                let c = p.cell_of[p.pos[u as usize] as usize];
                if !self.cell_mark[c as usize] {
                    self.cell_mark[c as usize] = true;
                    self.touched_cells.push(c);
                }
            }
            self.touched_cells.sort_unstable();
            trace = mix(trace, w as u64);
            for ci in 0..self.touched_cells.len() {
                let c = self.touched_cells[ci] as usize;
                self.cell_mark[c] = false;
                trace = self.split(p, c, trace);
            }
            self.touched_cells.clear();
            for &u in &self.touched {
                self.count[u as usize] = 0;
            }
            self.touched.clear();
        }
        mix(trace, p.cells as u64)
    }

    fn split(&mut self, p: &mut OrderedPartition, c: usize, mut trace: u64) -> u64 {
        let end = p.end[c] as usize;
        if end - c == 1 {
            return mix(trace, self.count[p.lab[c] as usize] as u64);
        }
        self.scratch.clear();
        self.scratch
            .extend(p.lab[c..end].iter().map(|&v| (self.count[v as usize], v)));
        self.scratch.sort_unstable();
        let lo = self.scratch[0].0;
        let hi = self.scratch[self.scratch.len() - 1].0;
        trace = mix(trace, c as u64);
        if lo == hi {
            return mix(trace, lo as u64);
        }
        for (i, &(_, v)) in self.scratch.iter().enumerate() {
            p.lab[c + i] = v;
            p.pos[v as usize] = (c + i) as u32;
        }
        let was_queued = self.in_queue[c];
        // fragment boundaries
        let mut frags: Vec<(usize, usize)> = Vec::new();
        let mut s = c;
        for i in c + 1..=end {
            if i == end || self.scratch[i - c].0 != self.scratch[s - c].0 {
                frags.push((s, i));
                trace = mix(trace, ((self.scratch[s - c].0 as u64) << 32) | (i - s) as u64);
                s = i;
            }
        }
        let largest = frags
            .iter()
            .enumerate()
            .max_by_key(|&(i, &(a, b))| (b - a, std::cmp::Reverse(i)))
            .map(|(i, _)| i)
            .unwrap();
        for (fi, &(a, b)) in frags.iter().enumerate() {
            p.end[a] = b as u32;
            for q in a..b {
                p.cell_of[q] = a as u32;
            }
            if b - a == 1 {
                p.singletons += 1;
            }
            if (was_queued || fi != largest) && !self.in_queue[a] {
                self.in_queue[a] = true;
                self.queue.push_back(a as u32);
            }
        }
        p.cells += frags.len() - 1;
        trace
    }
}

/// Coarsest equitable refinement of `p`.
pub fn refine(g: &Graph, p: &OrderedPartition) -> OrderedPartition {
    let mut out = p.clone();
    let starts: Vec<usize> = out.cell_starts().collect();
    Refiner::new(g.order()).refine(g, &mut out, &starts);
    out
}
