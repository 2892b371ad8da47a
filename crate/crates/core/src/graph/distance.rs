use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::{bfs_into, Graph, GraphError, UNREACHED};

/// Spheres `Γ_0(u), Γ_1(u), …` around a source vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceLayers {
    pub source: usize,
    pub layers: Vec<Vec<usize>>,
}

impl DistanceLayers {
    pub fn eccentricity(&self) -> usize {
        self.layers.len() - 1
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.layers.iter().map(Vec::len).collect()
    }
}

/// Length of a shortest cycle; acyclic graphs have infinite girth.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(g) => write!(f, "{g}"),
            Girth::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(g) => s.serialize_u64(*g as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Girth {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(usize),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Num(g) => Ok(Girth::Finite(g)),
            Raw::Text(t) if t == "inf" => Ok(Girth::Infinite),
            Raw::Text(t) => Err(serde::de::Error::custom(format!("bad girth {t:?}"))),
        }
    }
}

/// Neighbour counts of `v` one layer closer to, in the same layer as, and one layer farther
/// from a base vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalParameters {
    pub c: usize,
    pub a: usize,
    pub b: usize,
}

/// `{b_0, …, b_{d-1}; c_1, …, c_d}` of a distance-regular graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IntersectionArray {
    b: Vec<usize>,
    c: Vec<usize>,
}

impl IntersectionArray {
    pub fn new(b: Vec<usize>, c: Vec<usize>) -> Result<Self, GraphError> {
        if b.is_empty() || b.len() != c.len() {
            return Err(GraphError::MalformedArray(format!(
                "need equally many b and c entries (got {} and {})",
                b.len(),
                c.len()
            )));
        }
        if c[0] != 1 {
            return Err(GraphError::MalformedArray("c_1 must be 1".into()));
        }
        let k = b[0];
        for i in 0..b.len() {
            let bi = b[i];
            let ci = if i == 0 { 0 } else { c[i - 1] };
            if bi + ci > k {
                return Err(GraphError::MalformedArray(format!("b_{i} + c_{i} exceeds b_0")));
            }
        }
        if c[c.len() - 1] > k {
            return Err(GraphError::MalformedArray("c_d exceeds b_0".into()));
        }
        Ok(IntersectionArray { b, c })
    }

    pub fn diameter(&self) -> usize {
        self.b.len()
    }

    pub fn valency(&self) -> usize {
        self.b[0]
    }

    /// `b_i`, with `b_d = 0`.
    pub fn b(&self, i: usize) -> usize {
        self.b.get(i).copied().unwrap_or(0)
    }

    /// `c_i`, with `c_0 = 0`.
    pub fn c(&self, i: usize) -> usize {
        if i == 0 {
            0
        } else {
            self.c[i - 1]
        }
    }

    pub fn a(&self, i: usize) -> usize {
        self.valency() - self.b(i) - self.c(i)
    }

    pub fn bs(&self) -> &[usize] {
        &self.b
    }

    pub fn cs(&self) -> &[usize] {
        &self.c
    }

    /// `|Γ_i(u)|` for `i = 0..=d`, from `k_{i+1} c_{i+1} = k_i b_i`.
    pub fn sphere_sizes(&self) -> Vec<usize> {
        let mut k = vec![1usize];
        for i in 0..self.diameter() {
            k.push(k[i] * self.b(i) / self.c(i + 1));
        }
        k
    }
}

impl fmt::Display for IntersectionArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[usize]| {
            v.iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(", ")
        };
        write!(f, "{{{}; {}}}", join(&self.b), join(&self.c))
    }
}

impl FromStr for IntersectionArray {
    type Err = GraphError;

    /// Parses `{6, 5, 3; 1, 3, 6}` (braces and spaces optional).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || GraphError::MalformedArray(s.to_string());
        let inner = s.trim().trim_start_matches('{').trim_end_matches('}');
        let (bs, cs) = inner.split_once(';').ok_or_else(bad)?;
        let parse = |part: &str| -> Result<Vec<usize>, GraphError> {
            part.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|_| bad()))
                .collect()
        };
        IntersectionArray::new(parse(bs)?, parse(cs)?)
    }
}

/// Two vertex pairs at the same distance whose local parameters differ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NotDistanceRegular {
    pub distance: usize,
    pub first: (usize, usize),
    pub first_params: LocalParameters,
    pub second: (usize, usize),
    pub second_params: LocalParameters,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DistanceRegularity {
    Regular(IntersectionArray),
    NotRegular(NotDistanceRegular),
}

impl DistanceRegularity {
    pub fn array(&self) -> Option<&IntersectionArray> {
        match self {
            DistanceRegularity::Regular(a) => Some(a),
            DistanceRegularity::NotRegular(_) => None,
        }
    }
}

fn local_parameters_with(g: &Graph, dist: &[u32], v: usize) -> LocalParameters {
    let i = dist[v];
    let mut p = LocalParameters { c: 0, a: 0, b: 0 };
    for &w in g.neighbors(v) {
        let dw = dist[w as usize];
        if dw == i {
            p.a += 1;
        } else if dw < i {
            p.c += 1;
        } else {
            p.b += 1;
        }
    }
    p
}

impl Graph {
    pub fn distance(&self, u: usize, v: usize) -> Result<Option<usize>, GraphError> {
        self.check_vertex(v)?;
        let d = self.distances_from(u)?[v];
        Ok((d != UNREACHED).then_some(d as usize))
    }

    /// BFS spheres from `u` covering its connected component.
    pub fn distance_layers(&self, u: usize) -> Result<DistanceLayers, GraphError> {
        let dist = self.distances_from(u)?;
        let ecc = dist
            .iter()
            .filter(|&&d| d != UNREACHED)
            .max()
            .copied()
            .unwrap_or(0) as usize;
        let mut layers = vec![Vec::new(); ecc + 1];
        for (v, &d) in dist.iter().enumerate() {
            if d != UNREACHED {
                layers[d as usize].push(v);
            }
        }
        Ok(DistanceLayers { source: u, layers })
    }

    /// `Γ_i(u)`, sorted.
    pub fn sphere(&self, u: usize, i: usize) -> Result<Vec<usize>, GraphError> {
        let dist = self.distances_from(u)?;
        Ok((0..self.order()).filter(|&v| dist[v] as usize == i).collect())
    }

    pub fn diameter(&self) -> Result<usize, GraphError> {
        if self.order() == 0 {
            return Ok(0);
        }
        let mut dist = vec![UNREACHED; self.order()];
        let mut queue = Vec::with_capacity(self.order());
        let mut diam = 0;
        for u in 0..self.order() {
            bfs_into(self, u, &mut dist, &mut queue);
            if queue.len() != self.order() {
                return Err(GraphError::Disconnected);
            }
            diam = diam.max(dist[*queue.last().unwrap() as usize] as usize);
        }
        Ok(diam)
    }

    pub fn girth(&self) -> Girth {
        let n = self.order();
        let mut best = usize::MAX;
        let mut dist = vec![UNREACHED; n];
        let mut parent = vec![UNREACHED; n];
        let mut queue: Vec<u32> = Vec::with_capacity(n);
        for s in 0..n {
            dist.fill(UNREACHED);
            queue.clear();
            dist[s] = 0;
            parent[s] = UNREACHED;
            queue.push(s as u32);
            let mut head = 0;
            while head < queue.len() {
                let x = queue[head] as usize;
                head += 1;
                if 2 * dist[x] as usize + 1 >= best {
                    break;
                }
                for &y in self.neighbors(x) {
                    let y = y as usize;
                    if dist[y] == UNREACHED {
                        dist[y] = dist[x] + 1;
                        parent[y] = x as u32;
                        queue.push(y as u32);
                    } else if parent[x] != y as u32 {
                        best = best.min(dist[x] as usize + dist[y] as usize + 1);
                    }
                }
            }
        }
        if best == usize::MAX {
            Girth::Infinite
        } else {
            Girth::Finite(best)
        }
    }

    /// A shortest path from `u` to `v`, built backwards from `v` through the smallest-index
    /// predecessor at each step.
    pub fn one_geodesic(&self, u: usize, v: usize) -> Result<Vec<usize>, GraphError> {
        self.check_vertex(v)?;
        let dist = self.distances_from(u)?;
        if dist[v] == UNREACHED {
            return Err(GraphError::Unreachable { from: u, target: v });
        }
        let mut path = vec![v];
        let mut x = v;
        while x != u {
            let want = dist[x] - 1;
            x = self
                .neighbors(x)
                .iter()
                .map(|&w| w as usize)
                .find(|&w| dist[w] == want)
                .expect("BFS predecessor exists");
            path.push(x);
        }
        path.reverse();
        Ok(path)
    }

    /// `(c, a, b)` of `v` relative to the base vertex `u`.
    pub fn local_parameters(&self, u: usize, v: usize) -> Result<LocalParameters, GraphError> {
        if u == v {
            return Err(GraphError::SameVertex(u));
        }
        self.check_vertex(v)?;
        let dist = self.distances_from(u)?;
        if dist[v] == UNREACHED {
            return Err(GraphError::Unreachable { from: u, target: v });
        }
        Ok(local_parameters_with(self, dist, v))
    }

    /// The intersection array, or a witness that the graph is not distance-regular.
    pub fn intersection_array(&self) -> Result<DistanceRegularity, GraphError> {
        let n = self.order();
        if n == 0 || !self.is_connected() {
            return Err(GraphError::Disconnected);
        }
        let mut dist = vec![UNREACHED; n];
        let mut queue = Vec::with_capacity(n);
        // per distance: first observed parameters and the pair that produced them
        let mut seen: Vec<Option<(LocalParameters, (usize, usize))>> = Vec::new();
        for u in 0..n {
            bfs_into(self, u, &mut dist, &mut queue);
            for v in 0..n {
                let i = dist[v] as usize;
                let params = local_parameters_with(self, &dist, v);
                if seen.len() <= i {
                    seen.resize(i + 1, None);
                }
                match seen[i] {
                    None => seen[i] = Some((params, (u, v))),
                    Some((p, pair)) if p != params => {
                        return Ok(DistanceRegularity::NotRegular(NotDistanceRegular {
                            distance: i,
                            first: pair,
                            first_params: p,
                            second: (u, v),
                            second_params: params,
                        }));
                    }
                    Some(_) => {}
                }
            }
        }
        let params: Vec<LocalParameters> = seen.into_iter().map(|p| p.unwrap().0).collect();
        let d = params.len() - 1;
        if d == 0 {
            return Err(GraphError::MalformedArray("single vertex has no array".into()));
        }
        let b = params[..d].iter().map(|p| p.b).collect();
        let c = params[1..].iter().map(|p| p.c).collect();
        IntersectionArray::new(b, c).map(DistanceRegularity::Regular)
    }
}
