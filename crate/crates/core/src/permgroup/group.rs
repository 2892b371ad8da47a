use num_bigint::BigUint;
use num_traits::One;

use super::{PermError, Permutation};

const NOT_IN_ORBIT: u32 = u32::MAX;

/// One level of a stabilizer chain.
#[derive(Clone, Debug)]
struct Level {
    base_point: usize,
    /// Strong generators fixing every earlier base point.
    gens: Vec<Permutation>,
    /// Fundamental orbit in discovery order.
    orbit: Vec<u32>,
    /// Position of each point in `orbit`, or `NOT_IN_ORBIT`.
    position: Vec<u32>,
    /// `transversal[i]` maps `base_point` to `orbit[i]`.
    transversal: Vec<Permutation>,
    inverses: Vec<Permutation>,
    /// For each orbit position, how many of `gens` have had their Schreier generator sifted.
    checked: Vec<u32>,
}

impl Level {
    fn new(degree: usize, base_point: usize) -> Self {
        let mut position = vec![NOT_IN_ORBIT; degree];
        position[base_point] = 0;
        Level {
            base_point,
            gens: Vec::new(),
            orbit: vec![base_point as u32],
            position,
            transversal: vec![Permutation::identity(degree)],
            inverses: vec![Permutation::identity(degree)],
            checked: vec![0],
        }
    }

    #[inline]
    fn position_of(&self, x: usize) -> Option<usize> {
        match self.position[x] {
            NOT_IN_ORBIT => None,
            p => Some(p as usize),
        }
    }

    /// Adds a strong generator and closes the orbit. Existing transversal entries never change.
    fn push_generator(&mut self, g: Permutation) {
        self.gens.push(g);
        let old_len = self.orbit.len();
        let newest = self.gens.len() - 1;
        let mut idx = 0;
        while idx < self.orbit.len() {
            let x = self.orbit[idx] as usize;
            // old points are already closed under the earlier generators
            let first_gen = if idx < old_len { newest } else { 0 };
            for gi in first_gen..self.gens.len() {
                let y = self.gens[gi].apply(x);
                if self.position[y] == NOT_IN_ORBIT {
                    let u = self.transversal[idx].then(&self.gens[gi]);
                    self.position[y] = self.orbit.len() as u32;
                    self.orbit.push(y as u32);
                    self.inverses.push(u.inverse());
                    self.transversal.push(u);
                }
            }
            idx += 1;
        }
        self.checked.resize(self.orbit.len(), 0);
    }
}

/// A permutation group held as generators plus a base and strong generating set.
///
/// The chain is built by deterministic Schreier–Sims: the same generator list always yields
/// the same base, transversals and strong generators.
#[derive(Clone, Debug)]
pub struct PermutationGroup {
    degree: usize,
    generators: Vec<Permutation>,
    levels: Vec<Level>,
}

impl PermutationGroup {
    /// Builds the stabilizer chain of `⟨gens⟩` on `degree` points.
    pub fn new(degree: usize, gens: Vec<Permutation>) -> Result<Self, PermError> {
        Self::with_base_prefix(degree, gens, &[])
    }

    pub fn trivial(degree: usize) -> Self {
        PermutationGroup {
            degree,
            generators: Vec::new(),
            levels: Vec::new(),
        }
    }

    /// Builds the chain with `prefix` (duplicates dropped) as the leading base points.
    pub fn with_base_prefix(
        degree: usize,
        gens: Vec<Permutation>,
        prefix: &[usize],
    ) -> Result<Self, PermError> {
        Self::build(degree, gens, prefix, None)
    }

    fn build(
        degree: usize,
        gens: Vec<Permutation>,
        prefix: &[usize],
        known_order: Option<&BigUint>,
    ) -> Result<Self, PermError> {
        if degree == 0 {
            return Err(PermError::EmptyDegree);
        }
        for g in &gens {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        for &p in prefix {
            if p >= degree {
                return Err(PermError::PointOutOfRange { point: p, degree });
            }
        }
        let mut group = PermutationGroup {
            degree,
            generators: gens.clone(),
            levels: Vec::new(),
        };
        let strong: Vec<Permutation> = gens.into_iter().filter(|g| !g.is_identity()).collect();

        let mut base: Vec<usize> = Vec::new();
        for &p in prefix {
            if !base.contains(&p) {
                base.push(p);
            }
        }
        for g in &strong {
            if base.iter().all(|&b| g.fixes(b)) {
                base.push(g.first_moved().expect("non-identity generator"));
            }
        }
        group.levels = base.iter().map(|&b| Level::new(degree, b)).collect();
        for g in strong {
            for level in group.levels.iter_mut() {
                level.push_generator(g.clone());
                if !g.fixes(level.base_point) {
                    break;
                }
            }
        }
        group.schreier_sims(known_order);
        Ok(group)
    }

    fn product_of_orbits(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    fn schreier_sims(&mut self, known_order: Option<&BigUint>) {
        let mut i = self.levels.len();
        while i > 0 {
            if let Some(order) = known_order {
                if &self.product_of_orbits() == order {
                    return;
                }
            }
            let level_idx = i - 1;
            match self.check_level(level_idx) {
                None => i -= 1,
                Some(residue_level) => i = residue_level + 1,
            }
        }
    }

    /// Sifts the unchecked Schreier generators of one level. On the first failure the residue
    /// is installed as a new strong generator and the deepest touched level index is returned.
    fn check_level(&mut self, li: usize) -> Option<usize> {
        let mut b_idx = 0;
        while b_idx < self.levels[li].orbit.len() {
            loop {
                let level = &self.levels[li];
                let s_idx = level.checked[b_idx] as usize;
                if s_idx >= level.gens.len() {
                    break;
                }
                let b = level.orbit[b_idx] as usize;
                let s = &level.gens[s_idx];
                let u_b = &level.transversal[b_idx];
                let bs = s.apply(b);
                let bs_idx = level.position_of(bs).expect("orbit is closed");
                let u_bs = &level.transversal[bs_idx];
                let trivial = u_b
                    .images()
                    .iter()
                    .zip(u_bs.images())
                    .all(|(&x, &y)| s.apply(x as usize) == y as usize);
                if !trivial {
                    let g = u_b.then(s).then(&level.inverses[bs_idx]);
                    let (h, stop) = self.sift(g, li + 1);
                    if stop < self.levels.len() || !h.is_identity() {
                        self.install(h, li + 1, stop);
                        return Some(stop);
                    }
                }
                self.levels[li].checked[b_idx] += 1;
            }
            b_idx += 1;
        }
        None
    }

    fn install(&mut self, h: Permutation, from: usize, stop: usize) {
        if stop == self.levels.len() {
            let b = h.first_moved().expect("non-identity residue");
            self.levels.push(Level::new(self.degree, b));
        }
        for l in from..=stop {
            self.levels[l].push_generator(h.clone());
        }
    }

    /// Strips `g` through the chain starting at `start`; returns the residue and the level
    /// where stripping stopped (`levels.len()` if it went all the way through).
    fn sift(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (li, level) in self.levels.iter().enumerate().skip(start) {
            let b = g.apply(level.base_point);
            match level.position_of(b) {
                None => return (g, li),
                Some(p) => g = g.then(&level.inverses[p]),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Strong generators of the whole group (those attached to the first level).
    pub fn strong_generators(&self) -> &[Permutation] {
        self.levels.first().map(|l| l.gens.as_slice()).unwrap_or(&[])
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// Fundamental orbit of level `i` of the chain.
    pub fn fundamental_orbit(&self, i: usize) -> Vec<usize> {
        self.levels[i].orbit.iter().map(|&x| x as usize).collect()
    }

    /// Transversal witness taking base point `i` to `x`, if `x` lies in its fundamental orbit.
    pub fn transversal_element(&self, i: usize, x: usize) -> Option<&Permutation> {
        let level = &self.levels[i];
        level.position_of(x).map(|p| &level.transversal[p])
    }

    pub fn order(&self) -> BigUint {
        self.product_of_orbits()
    }

    pub fn is_trivial(&self) -> bool {
        self.levels.is_empty()
    }

    /// Orbit of `x` under the generators, sorted ascending.
    pub fn orbit(&self, x: usize) -> Result<Vec<usize>, PermError> {
        if x >= self.degree {
            return Err(PermError::PointOutOfRange {
                point: x,
                degree: self.degree,
            });
        }
        Ok(orbit_under(&self.generators, self.degree, x))
    }

    /// All orbits, each sorted, ordered by smallest element.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for x in 0..self.degree {
            if !seen[x] {
                let orb = orbit_under(&self.generators, self.degree, x);
                for &y in &orb {
                    seen[y] = true;
                }
                out.push(orb);
            }
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        orbit_under(&self.generators, self.degree, 0).len() == self.degree
    }

    /// True iff `set` is a single orbit of the group.
    pub fn is_transitive_on(&self, set: &[usize]) -> Result<bool, PermError> {
        let Some(&first) = set.iter().min() else {
            return Err(PermError::EmptySet);
        };
        if let Some(&bad) = set.iter().find(|&&x| x >= self.degree) {
            return Err(PermError::PointOutOfRange {
                point: bad,
                degree: self.degree,
            });
        }
        let mut wanted: Vec<usize> = set.to_vec();
        wanted.sort_unstable();
        wanted.dedup();
        Ok(self.orbit(first)? == wanted)
    }

    pub fn contains(&self, p: &Permutation) -> Result<bool, PermError> {
        if p.degree() != self.degree {
            return Err(PermError::DegreeMismatch {
                left: self.degree,
                right: p.degree(),
            });
        }
        let (h, stop) = self.sift(p.clone(), 0);
        Ok(stop == self.levels.len() && h.is_identity())
    }

    /// Same group, chain rebuilt so that `prefix` (duplicates dropped) leads the base.
    pub fn rebase(&self, prefix: &[usize]) -> Result<PermutationGroup, PermError> {
        let order = self.order();
        let mut g = Self::build(
            self.degree,
            self.strong_generators().to_vec(),
            prefix,
            Some(&order),
        )?;
        g.generators = self.generators.clone();
        Ok(g)
    }

    /// Subgroup given by the tail of the chain below the first `depth` levels.
    fn tail(&self, depth: usize) -> PermutationGroup {
        if depth == 0 {
            return self.clone();
        }
        let levels: Vec<Level> = self.levels.iter().skip(depth).cloned().collect();
        PermutationGroup {
            degree: self.degree,
            generators: levels.first().map(|l| l.gens.clone()).unwrap_or_default(),
            levels,
        }
    }

    /// Subgroup fixing each point of `pts`, obtained by a base change.
    pub fn pointwise_stabilizer(&self, pts: &[usize]) -> Result<PermutationGroup, PermError> {
        Ok(self.stabilizer_tower(pts)?.stabilizer(pts.len()))
    }

    /// Rebuilds the chain once for a point sequence so the pointwise stabilizer of every
    /// prefix can be read off without further base changes.
    pub fn stabilizer_tower(&self, pts: &[usize]) -> Result<StabilizerTower, PermError> {
        let chain = self.rebase(pts)?;
        let mut depth_of_prefix = Vec::with_capacity(pts.len() + 1);
        let mut distinct: Vec<usize> = Vec::new();
        depth_of_prefix.push(0);
        for &p in pts {
            if !distinct.contains(&p) {
                distinct.push(p);
            }
            depth_of_prefix.push(distinct.len());
        }
        Ok(StabilizerTower {
            chain,
            depth_of_prefix,
        })
    }
}

/// Pointwise stabilizers of all prefixes of a fixed point sequence.
#[derive(Clone, Debug)]
pub struct StabilizerTower {
    chain: PermutationGroup,
    depth_of_prefix: Vec<usize>,
}

impl StabilizerTower {
    /// Strong generators of the stabilizer of the first `k` points.
    pub fn generators(&self, k: usize) -> &[Permutation] {
        let depth = self.depth_of_prefix[k];
        if depth == 0 {
            return self.chain.generators();
        }
        self.chain
            .levels
            .get(depth)
            .map(|l| l.gens.as_slice())
            .unwrap_or(&[])
    }

    pub fn stabilizer(&self, k: usize) -> PermutationGroup {
        self.chain.tail(self.depth_of_prefix[k])
    }

    pub fn order(&self, k: usize) -> BigUint {
        self.chain.levels[self.depth_of_prefix[k].min(self.chain.levels.len())..]
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    /// Orbit of `x` under the stabilizer of the first `k` points, sorted.
    pub fn orbit(&self, k: usize, x: usize) -> Vec<usize> {
        orbit_under(self.generators(k), self.chain.degree, x)
    }
}

/// Orbit of `x` under a generator list, sorted ascending.
pub fn orbit_under(gens: &[Permutation], degree: usize, x: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[x] = true;
    let mut orbit = vec![x];
    let mut idx = 0;
    while idx < orbit.len() {
        let y = orbit[idx];
        for g in gens {
            let z = g.apply(y);
            if !seen[z] {
                seen[z] = true;
                orbit.push(z);
            }
        }
        idx += 1;
    }
    orbit.sort_unstable();
    orbit
}
