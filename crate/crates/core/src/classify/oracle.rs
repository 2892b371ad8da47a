use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::Zero;

use super::ClassifyError;
use crate::graph::{Graph, IntersectionArray};
use crate::permgroup::PermutationGroup;

pub const DEFAULT_GEODESIC_BUDGET: usize = 200_000;

/// Every `i`-geodesic as a vertex sequence, found by walking outward one BFS layer at a time.
pub fn all_geodesics(g: &Graph, i: usize, budget: usize) -> Result<Vec<Vec<u32>>, ClassifyError> {
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(i + 1);
    for u in 0..g.order() {
        let dist = g.distances_from(u)?;
        path.clear();
        path.push(u as u32);
        extend(g, dist, i, &mut path, &mut out, budget)?;
    }
    Ok(out)
}

fn extend(
    g: &Graph,
    dist: &[u32],
    i: usize,
    path: &mut Vec<u32>,
    out: &mut Vec<Vec<u32>>,
    budget: usize,
) -> Result<(), ClassifyError> {
    if path.len() == i + 1 {
        if out.len() == budget {
            return Err(ClassifyError::BudgetExceeded { budget });
        }
        out.push(path.clone());
        return Ok(());
    }
    let last = *path.last().unwrap() as usize;
    let next_layer = path.len() as u32;
    for &w in g.neighbors(last) {
        if dist[w as usize] == next_layer {
            path.push(w);
            extend(g, dist, i, path, out, budget)?;
            path.pop();
        }
    }
    Ok(())
}

/// Number of `A`-orbits on the `i`-geodesics, by union-find closure under the generators.
pub fn brute_force_geodesic_orbit_count(
    g: &Graph,
    a: &PermutationGroup,
    i: usize,
    budget: usize,
) -> Result<usize, ClassifyError> {
    let geodesics = all_geodesics(g, i, budget)?;
    let index: HashMap<&[u32], usize> = geodesics
        .iter()
        .enumerate()
        .map(|(k, p)| (p.as_slice(), k))
        .collect();
    let mut parent: Vec<usize> = (0..geodesics.len()).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    let mut image = Vec::with_capacity(i + 1);
    for gamma in a.generators() {
        for (k, p) in geodesics.iter().enumerate() {
            image.clear();
            image.extend(p.iter().map(|&v| gamma.apply(v as usize) as u32));
            let j = *index
                .get(image.as_slice())
                .expect("automorphisms map geodesics to geodesics");
            let (rk, rj) = (find(&mut parent, k), find(&mut parent, j));
            if rk != rj {
                parent[rk.max(rj)] = rk.min(rj);
            }
        }
    }
    Ok((0..geodesics.len()).filter(|&k| find(&mut parent, k) == k).count())
}

/// Largest `s` such that the brute-force orbit count is 1 for every `i ≤ s` (0 if the group
/// is not even transitive on vertices).
pub fn brute_force_geodesic_level(
    g: &Graph,
    a: &PermutationGroup,
    diameter: usize,
    budget: usize,
) -> Result<usize, ClassifyError> {
    let mut level = 0;
    for i in 0..=diameter {
        if brute_force_geodesic_orbit_count(g, a, i, budget)? != 1 {
            break;
        }
        level = i;
    }
    Ok(level)
}

/// `b_0 ⋯ b_{s-1}` divides `|A_u|`.
pub fn divisibility_check(array: &IntersectionArray, s: usize, stabilizer_order: &BigUint) -> bool {
    let product = (0..s).fold(BigUint::from(1u32), |acc, i| acc * BigUint::from(array.b(i)));
    !product.is_zero() && (stabilizer_order % product).is_zero()
}

/// Largest order accepted by [`brute_force_automorphism_count`].
pub const BRUTE_FORCE_AUT_MAX_ORDER: usize = 10;

/// `|Aut(Γ)|` by extending partial bijections vertex by vertex, keeping adjacency to every
/// earlier vertex. `None` above [`BRUTE_FORCE_AUT_MAX_ORDER`] vertices.
pub fn brute_force_automorphism_count(g: &Graph) -> Option<u64> {
    let n = g.order();
    if n > BRUTE_FORCE_AUT_MAX_ORDER {
        return None;
    }
    fn go(g: &Graph, image: &mut Vec<usize>, used: &mut [bool]) -> u64 {
        let v = image.len();
        if v == g.order() {
            return 1;
        }
        let mut total = 0;
        for w in 0..g.order() {
            if used[w] || g.degree(w) != g.degree(v) {
                continue;
            }
            if (0..v).all(|u| g.is_adjacent(u, v) == g.is_adjacent(image[u], w)) {
                used[w] = true;
                image.push(w);
                total += go(g, image, used);
                image.pop();
                used[w] = false;
            }
        }
        total
    }
    Some(go(g, &mut Vec::with_capacity(n), &mut vec![false; n]))
}
