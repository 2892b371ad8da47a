use super::FamilyError;
use crate::graph::Graph;

fn require(cond: bool, msg: impl FnOnce() -> String) -> Result<(), FamilyError> {
    if cond {
        Ok(())
    } else {
        Err(FamilyError::InvalidParameter(msg()))
    }
}

fn labelled(g: Graph, labels: Vec<String>) -> Graph {
    g.with_labels(labels).expect("one label per vertex")
}

fn set_label(s: &[usize]) -> String {
    let parts: Vec<String> = s.iter().map(usize::to_string).collect();
    format!("{{{}}}", parts.join(","))
}

/// All `k`-subsets of `0..n` in lexicographic order.
pub fn k_subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..k).rev().find(|&i| cur[i] < n - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * u128::from(n - i) / u128::from(i + 1))
}

fn mask(s: &[usize]) -> u64 {
    s.iter().fold(0, |m, &x| m | 1 << x)
}

fn cap_check(count: u128, cap: usize) -> Result<usize, FamilyError> {
    if count > cap as u128 {
        Err(FamilyError::CapExceeded {
            vertices: count,
            cap,
        })
    } else {
        Ok(count as usize)
    }
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    require(n >= 1, || "complete graph needs n >= 1".into())?;
    Ok(Graph::from_adjacency_fn(n, |_, _| true))
}

/// `K_{n,n}`: parts `0..n` and `n..2n`.
pub fn complete_bipartite(n: usize) -> Result<Graph, FamilyError> {
    require(n >= 1, || "complete bipartite graph needs n >= 1".into())?;
    Ok(Graph::from_adjacency_fn(2 * n, |u, v| (u < n) != (v < n)))
}

/// `K_{n,n}` minus the perfect matching `i -- n + i`.
pub fn crown(n: usize) -> Result<Graph, FamilyError> {
    require(n >= 2, || "crown graph needs n >= 2".into())?;
    Ok(Graph::from_adjacency_fn(2 * n, |u, v| {
        (u < n) != (v < n) && u % n != v % n
    }))
}

/// `K_{m[b]}`: `m` parts of size `b`, vertex `v` in part `v / b`.
pub fn complete_multipartite(m: usize, b: usize) -> Result<Graph, FamilyError> {
    require(m >= 3 && b >= 2, || format!("multipartite K_{m}[{b}] needs m >= 3, b >= 2"))?;
    Ok(Graph::from_adjacency_fn(m * b, |u, v| u / b != v / b))
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    require(n >= 3, || "cycle needs n >= 3".into())?;
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle"))
}

/// `H(d, n)`: `d`-tuples over `0..n` in lexicographic order, adjacent at Hamming distance 1.
pub fn hamming(d: usize, n: usize, cap: usize) -> Result<Graph, FamilyError> {
    require(d >= 1 && n >= 2, || format!("H({d},{n}) needs d >= 1, n >= 2"))?;
    let count = cap_check(
        (n as u128).checked_pow(d as u32).unwrap_or(u128::MAX),
        cap,
    )?;
    let tuple = |mut x: usize| {
        let mut t = vec![0usize; d];
        for slot in t.iter_mut().rev() {
            *slot = x % n;
            x /= n;
        }
        t
    };
    let mut adj = vec![Vec::new(); count];
    let mut place = 1;
    for _ in 0..d {
        for x in 0..count {
            let digit = (x / place) % n;
            let base = x - digit * place;
            for v in 0..n {
                if v != digit {
                    adj[x].push((base + v * place) as u32);
                }
            }
        }
        place *= n;
    }
    let labels = (0..count)
        .map(|x| tuple(x).iter().map(usize::to_string).collect::<String>())
        .collect();
    Ok(labelled(Graph::from_raw_adjacency(adj), labels))
}

/// The folded `d`-cube: `H(d, 2)` with antipodal words identified. Vertex `x < 2^{d-1}` is the
/// class of the `d`-bit word with leading bit 0.
pub fn folded_cube(d: usize, cap: usize) -> Result<Graph, FamilyError> {
    require(d >= 3, || "folded cube needs d >= 3".into())?;
    require(d < 40, || "folded cube dimension too large".into())?;
    let count = cap_check(1u128 << (d - 1), cap)?;
    let full = (1usize << (d - 1)) - 1;
    let adj = (0..count)
        .map(|x| {
            let mut l: Vec<u32> = (0..d - 1).map(|b| (x ^ (1 << b)) as u32).collect();
            l.push((x ^ full) as u32);
            l
        })
        .collect();
    let labels = (0..count)
        .map(|x| {
            (0..d)
                .rev()
                .map(|b| if b < d - 1 && x >> b & 1 == 1 { '1' } else { '0' })
                .collect::<String>()
        })
        .collect();
    Ok(labelled(Graph::from_raw_adjacency(adj), labels))
}

/// `J(n, k)`: `k`-subsets of `0..n` in lexicographic order, adjacent iff they share `k - 1`.
pub fn johnson(n: usize, k: usize, cap: usize) -> Result<Graph, FamilyError> {
    require(k >= 1 && k < n && n <= 64, || format!("J({n},{k}) needs 1 <= k <= n-1"))?;
    cap_check(binomial(n as u64, k as u64), cap)?;
    let sets = k_subsets(n, k);
    let masks: Vec<u64> = sets.iter().map(|s| mask(s)).collect();
    let g = Graph::from_adjacency_fn(sets.len(), |u, v| (masks[u] & masks[v]).count_ones() as usize == k - 1);
    Ok(labelled(g, sets.iter().map(|s| set_label(s)).collect()))
}

/// `O_{k+1}` in valency naming: `k`-subsets of a `(2k+1)`-set, adjacent iff disjoint.
/// `odd_graph(2)` is the Petersen graph.
pub fn odd_graph(k: usize, cap: usize) -> Result<Graph, FamilyError> {
    require(k >= 1 && 2 * k < 64, || format!("odd graph needs k >= 1, got {k}"))?;
    let n = 2 * k + 1;
    cap_check(binomial(n as u64, k as u64), cap)?;
    let sets = k_subsets(n, k);
    let masks: Vec<u64> = sets.iter().map(|s| mask(s)).collect();
    let g = Graph::from_adjacency_fn(sets.len(), |u, v| masks[u] & masks[v] == 0);
    Ok(labelled(g, sets.iter().map(|s| set_label(s)).collect()))
}

/// Bipartite double of `odd_graph(k)`: `k`- and `(k+1)`-subsets of a `(2k+1)`-set under
/// inclusion. The `k`-subsets come first.
pub fn doubled_odd(k: usize, cap: usize) -> Result<Graph, FamilyError> {
    require(k >= 1 && 2 * k < 64, || format!("doubled odd graph needs k >= 1, got {k}"))?;
    let n = 2 * k + 1;
    cap_check(2 * binomial(n as u64, k as u64), cap)?;
    let mut sets = k_subsets(n, k);
    let lower = sets.len();
    sets.extend(k_subsets(n, k + 1));
    let masks: Vec<u64> = sets.iter().map(|s| mask(s)).collect();
    let g = Graph::from_adjacency_fn(sets.len(), |u, v| {
        u < lower && v >= lower && masks[u] & masks[v] == masks[u]
    });
    Ok(labelled(g, sets.iter().map(|s| set_label(s)).collect()))
}

/// Tutte's 8-cage: duads and synthemes of a 6-set under inclusion.
pub fn tutte_coxeter() -> Graph {
    let duads = k_subsets(6, 2);
    let mut synthemes: Vec<[usize; 3]> = Vec::new();
    for a in 0..duads.len() {
        for b in a + 1..duads.len() {
            for c in b + 1..duads.len() {
                if mask(&duads[a]) | mask(&duads[b]) | mask(&duads[c]) == 0b11_1111 {
                    synthemes.push([a, b, c]);
                }
            }
        }
    }
    let nd = duads.len();
    let edges = synthemes
        .iter()
        .enumerate()
        .flat_map(|(s, t)| t.iter().map(move |&d| (d, nd + s)));
    let g = Graph::from_edges(nd + synthemes.len(), edges).expect("valid incidence");
    let mut labels: Vec<String> = duads.iter().map(|d| set_label(d)).collect();
    labels.extend(synthemes.iter().map(|t| {
        let parts: Vec<String> = t.iter().map(|&d| set_label(&duads[d])).collect();
        parts.join("")
    }));
    labelled(g, labels)
}

#[cfg(test)]
mod tests {
    use super::*;

    const CAP: usize = 5000;

    #[test]
    fn subsets_are_lexicographic() {
        assert_eq!(
            k_subsets(4, 2),
            vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]
        );
        assert_eq!(k_subsets(9, 4).len(), 126);
        assert_eq!(binomial(11, 5), 462);
    }

    #[test]
    fn hamming_sizes() {
        let h = hamming(3, 2, CAP).unwrap();
        assert_eq!((h.order(), h.valency()), (8, Some(3)));
        let h23 = hamming(2, 3, CAP).unwrap();
        assert_eq!((h23.order(), h23.valency()), (9, Some(4)));
        assert_eq!(h23.label(5), "12");
        assert_eq!(hamming(1, 5, CAP).unwrap(), complete(5).unwrap());
        assert!(matches!(hamming(10, 3, CAP), Err(FamilyError::CapExceeded { .. })));
    }

    #[test]
    fn folded_cube_sizes() {
        for d in 3..=7 {
            let g = folded_cube(d, CAP).unwrap();
            assert_eq!(g.order(), 1 << (d - 1));
            assert_eq!(g.valency(), Some(d));
        }
        assert_eq!(folded_cube(3, CAP).unwrap().size(), 6);
    }

    #[test]
    fn odd_graph_orders() {
        assert_eq!(odd_graph(4, CAP).unwrap().order(), 126);
        assert_eq!(odd_graph(5, CAP).unwrap().order(), 462);
        assert_eq!(odd_graph(3, CAP).unwrap().valency(), Some(4));
        let d = doubled_odd(2, CAP).unwrap();
        assert_eq!((d.order(), d.valency()), (20, Some(3)));
    }

    #[test]
    fn small_families() {
        assert_eq!(crown(5).unwrap().valency(), Some(4));
        assert_eq!(complete_multipartite(3, 2).unwrap().valency(), Some(4));
        assert_eq!(cycle(6).unwrap().diameter().unwrap(), 3);
        assert!(complete_multipartite(2, 2).is_err());
    }

    #[test]
    fn tutte_coxeter_shape() {
        let g = tutte_coxeter();
        assert_eq!((g.order(), g.valency()), (30, Some(3)));
        assert_eq!(g.girth(), crate::graph::Girth::Finite(8));
    }
}
