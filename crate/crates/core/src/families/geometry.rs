use super::field::{gf_order, FiniteField};
use super::FamilyError;
use crate::graph::Graph;

/// `[n choose k]_q`, the number of `k`-dimensional subspaces of `F_q^n`.
pub fn gaussian_binomial(n: u32, k: u32, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = u128::from(q);
    let mut num = 1u128;
    let mut den = 1u128;
    for i in 0..k {
        num = num.saturating_mul(q.pow(n - i) - 1);
        den = den.saturating_mul(q.pow(i + 1) - 1);
    }
    if num == u128::MAX {
        return u128::MAX;
    }
    num / den
}

type Matrix = Vec<Vec<u32>>;

/// Rank of the row space of `rows` over `f`.
pub(crate) fn rank(f: &FiniteField, rows: &[Vec<u32>]) -> usize {
    let mut m: Matrix = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..m.len()).find(|&i| m[i][c] != 0) else {
            continue;
        };
        m.swap(r, pivot);
        let inv = f.inv(m[r][c]).expect("pivot is nonzero");
        for x in m[r].iter_mut() {
            *x = f.mul(*x, inv);
        }
        for i in 0..m.len() {
            if i != r && m[i][c] != 0 {
                let factor = m[i][c];
                for j in 0..cols {
                    let sub = f.mul(factor, m[r][j]);
                    m[i][j] = f.sub(m[i][j], sub);
                }
            }
        }
        r += 1;
        if r == m.len() {
            break;
        }
    }
    r
}

/// All `k`-dimensional subspaces of `F_q^n` as reduced row echelon bases, sorted by their
/// row-major entries.
pub fn subspaces(f: &FiniteField, n: usize, k: usize) -> Vec<Matrix> {
    let q = f.order();
    let mut out = Vec::new();
    for pivots in super::classic::k_subsets(n, k) {
        let free: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| {
                let pv = &pivots;
                ((pv[i] + 1)..n).filter(move |j| !pv.contains(j)).map(move |j| (i, j))
            })
            .collect();
        let total = (q as u64).pow(free.len() as u32);
        for mut code in 0..total {
            let mut m = vec![vec![0u32; n]; k];
            for (i, &p) in pivots.iter().enumerate() {
                m[i][p] = 1;
            }
            for &(i, j) in &free {
                m[i][j] = (code % u64::from(q)) as u32;
                code /= u64::from(q);
            }
            out.push(m);
        }
    }
    out.sort();
    out
}

fn matrix_label(m: &Matrix, q: u32) -> String {
    let rows: Vec<String> = m
        .iter()
        .map(|r| {
            let cells: Vec<String> = r.iter().map(u32::to_string).collect();
            cells.join(if q > 10 { "," } else { "" })
        })
        .collect();
    format!("<{}>", rows.join("|"))
}

fn check_cap(count: u128, cap: usize) -> Result<(), FamilyError> {
    if count > cap as u128 {
        Err(FamilyError::CapExceeded { vertices: count, cap })
    } else {
        Ok(())
    }
}

/// `J_q(n, k)`: `k`-subspaces of `F_q^n`, adjacent iff they meet in dimension `k - 1`.
pub fn grassmann(q: u64, n: usize, k: usize, cap: usize) -> Result<Graph, FamilyError> {
    if k == 0 || k >= n {
        return Err(FamilyError::InvalidParameter(format!("Grassmann needs 1 <= k <= n-1, got n={n}, k={k}")));
    }
    let f = gf_order(q)?;
    check_cap(gaussian_binomial(n as u32, k as u32, q), cap)?;
    let spaces = subspaces(&f, n, k);
    let g = Graph::from_adjacency_fn(spaces.len(), |u, v| {
        let stacked: Matrix = spaces[u].iter().chain(&spaces[v]).cloned().collect();
        rank(&f, &stacked) == k + 1
    });
    let labels = spaces.iter().map(|m| matrix_label(m, f.order())).collect();
    Ok(g.with_labels(labels).expect("one label per subspace"))
}

/// Incidence graph of `m`- and `(m+1)`-subspaces of `F_q^{2m+1}`; the `m`-subspaces come first.
pub fn doubled_grassmann(q: u64, m: usize, cap: usize) -> Result<Graph, FamilyError> {
    if m == 0 {
        return Err(FamilyError::InvalidParameter("doubled Grassmann needs m >= 1".into()));
    }
    let f = gf_order(q)?;
    let n = 2 * m + 1;
    check_cap(
        gaussian_binomial(n as u32, m as u32, q).saturating_mul(2),
        cap,
    )?;
    let mut spaces = subspaces(&f, n, m);
    let lower = spaces.len();
    spaces.extend(subspaces(&f, n, m + 1));
    let g = Graph::from_adjacency_fn(spaces.len(), |u, v| {
        if u >= lower || v < lower {
            return false;
        }
        let stacked: Matrix = spaces[u].iter().chain(&spaces[v]).cloned().collect();
        rank(&f, &stacked) == m + 1
    });
    let labels = spaces.iter().map(|s| matrix_label(s, f.order())).collect();
    Ok(g.with_labels(labels).expect("one label per subspace"))
}

/// Point-line incidence graph of `PG(2, q)`.
pub fn pg2_incidence(q: u64, cap: usize) -> Result<Graph, FamilyError> {
    doubled_grassmann(q, 1, cap)
}

/// Points `(x, y)` (index `xq + y`) and lines `[m, k]` (index `q² + mq + k`) of `AG(2, q)`,
/// where `[m, k]` is `mx + y = k` for `m ≠ 0` and the vertical line `x = k` for `m = 0`.
pub fn ag2_minus_parallel(q: u64, cap: usize) -> Result<Graph, FamilyError> {
    let f = gf_order(q)?;
    let q = f.order() as usize;
    check_cap(2 * (q as u128) * (q as u128), cap)?;
    let mut edges = Vec::with_capacity(q * q * q);
    for x in 0..q {
        for y in 0..q {
            for m in 0..q {
                let k = if m == 0 {
                    x
                } else {
                    f.add(f.mul(m as u32, x as u32), y as u32) as usize
                };
                edges.push((x * q + y, q * q + m * q + k));
            }
        }
    }
    let g = Graph::from_edges(2 * q * q, edges).expect("valid incidence");
    let mut labels: Vec<String> = Vec::with_capacity(2 * q * q);
    for x in 0..q {
        for y in 0..q {
            labels.push(format!("({x},{y})"));
        }
    }
    for m in 0..q {
        for k in 0..q {
            labels.push(format!("[{m},{k}]"));
        }
    }
    Ok(g.with_labels(labels).expect("one label per vertex"))
}

/// `P(q)`: field elements, adjacent iff their difference is a nonzero square.
pub fn paley(q: u64, cap: usize) -> Result<Graph, FamilyError> {
    let f = gf_order(q)?;
    if q % 4 != 1 {
        return Err(FamilyError::PaleyResidue(q));
    }
    check_cap(u128::from(q), cap)?;
    let mut square = vec![false; q as usize];
    for s in f.nonzero_squares() {
        square[s as usize] = true;
    }
    Ok(Graph::from_adjacency_fn(q as usize, |u, v| {
        square[f.sub(u as u32, v as u32) as usize]
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::field::gf;
    use crate::graph::Girth;

    const CAP: usize = 5000;

    /// Counts subspaces by collecting the distinct spans of all `k`-tuples of vectors.
    fn brute_subspace_count(p: u64, n: usize, k: usize) -> usize {
        let f = gf(p, 1).unwrap();
        let q = p as usize;
        let vectors: Vec<Vec<u32>> = (0..q.pow(n as u32))
            .map(|mut x| {
                (0..n)
                    .map(|_| {
                        let d = (x % q) as u32;
                        x /= q;
                        d
                    })
                    .collect()
            })
            .collect();
        let mut spans = std::collections::BTreeSet::new();
        let mut idx = vec![0usize; k];
        loop {
            let rows: Vec<Vec<u32>> = idx.iter().map(|&i| vectors[i].clone()).collect();
            if rank(&f, &rows) == k {
                let mut span: Vec<usize> = (0..vectors.len())
                    .filter(|&v| {
                        let mut r = rows.clone();
                        r.push(vectors[v].clone());
                        rank(&f, &r) == k
                    })
                    .collect();
                span.sort_unstable();
                spans.insert(span);
            }
            let mut i = k;
            loop {
                if i == 0 {
                    return spans.len();
                }
                i -= 1;
                idx[i] += 1;
                if idx[i] < vectors.len() {
                    break;
                }
                idx[i] = 0;
            }
        }
    }

    #[test]
    fn gaussian_binomials_match_enumeration() {
        assert_eq!(gaussian_binomial(4, 2, 2), 35);
        assert_eq!(gaussian_binomial(5, 2, 2), 155);
        assert_eq!(brute_subspace_count(2, 4, 2), 35);
        assert_eq!(brute_subspace_count(2, 5, 2), 155);
        assert_eq!(brute_subspace_count(3, 3, 1), 13);
        let f = gf(2, 1).unwrap();
        assert_eq!(subspaces(&f, 5, 2).len(), 155);
    }

    #[test]
    fn grassmann_lines_are_complete() {
        let g = grassmann(3, 3, 1, CAP).unwrap();
        assert_eq!(g.order(), 13);
        assert_eq!(g.valency(), Some(12));
        assert!(grassmann(2, 4, 4, CAP).is_err());
    }

    #[test]
    fn heawood_from_fano_plane() {
        let g = pg2_incidence(2, CAP).unwrap();
        assert_eq!((g.order(), g.valency()), (14, Some(3)));
        assert_eq!(g.girth(), Girth::Finite(6));
        assert!(g.is_bipartite());
    }

    #[test]
    fn ag2_of_two_is_an_octagon() {
        let g = ag2_minus_parallel(2, CAP).unwrap();
        assert_eq!(g.order(), 8);
        assert_eq!(g.valency(), Some(2));
        assert!(g.is_connected());
        assert_eq!(g.girth(), Girth::Finite(8));
    }

    #[test]
    fn paley_shapes() {
        let p5 = paley(5, CAP).unwrap();
        assert_eq!(p5.valency(), Some(2));
        assert_eq!(paley(25, CAP).unwrap().valency(), Some(12));
        assert!(matches!(paley(7, CAP), Err(FamilyError::PaleyResidue(7))));
        assert!(matches!(paley(15, CAP), Err(FamilyError::NotPrimePower(15))));
    }
}
