use std::fmt;

use super::PermError;

/// A bijection on `{0, .., n-1}` stored as its image table.
///
/// Composition is applied left to right: `p.then(&q)` maps `x` to `q(p(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from its image table, rejecting anything that is not a bijection.
    pub fn from_images<I>(images: I) -> Result<Self, PermError>
    where
        I: IntoIterator<Item = usize>,
    {
        let images: Vec<u32> = images.into_iter().map(|x| x as u32).collect();
        let n = images.len();
        let mut seen = vec![false; n];
        for (x, &y) in images.iter().enumerate() {
            let y = y as usize;
            if y >= n {
                return Err(PermError::PointOutOfRange { point: y, degree: n });
            }
            if seen[y] {
                return Err(PermError::NotBijective { point: x, image: y });
            }
            seen[y] = true;
        }
        Ok(Permutation { images })
    }

    /// Trusted constructor for internal callers that already hold a bijection.
    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!({
            let mut s = images.clone();
            s.sort_unstable();
            s.iter().enumerate().all(|(i, &v)| i as u32 == v)
        });
        Permutation { images }
    }

    /// Builds a permutation from disjoint cycles, e.g. `&[&[0, 1, 2]]` for `(0 1 2)`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, PermError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= degree {
                    return Err(PermError::PointOutOfRange { point: x, degree });
                }
                if touched[x] {
                    return Err(PermError::NotBijective { point: x, image: x });
                }
                touched[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &y)| i as u32 == y)
    }

    /// `x ↦ other(self(x))`, checking degrees.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(self.then(other))
    }

    /// Unchecked left-to-right product. Panics on degree mismatch.
    #[inline]
    pub fn then(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "permutation degree mismatch");
        Permutation {
            images: self
                .images
                .iter()
                .map(|&y| other.images[y as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (x, &y) in self.images.iter().enumerate() {
            inv[y as usize] = x as u32;
        }
        Permutation { images: inv }
    }

    /// Smallest point moved, if any.
    pub fn first_moved(&self) -> Option<usize> {
        self.images
            .iter()
            .enumerate()
            .find(|&(i, &y)| i as u32 != y)
            .map(|(i, _)| i)
    }

    pub fn fixes(&self, x: usize) -> bool {
        self.images[x] as usize == x
    }

    /// Disjoint cycle decomposition, omitting fixed points.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.fixes(start) {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}]{}", self.degree(), self)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for c in cycles {
            f.write_str("(")?;
            for (i, x) in c.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, cycles).unwrap()
    }

    #[test]
    fn compose_with_identity() {
        let p = cyc(5, &[&[0, 3], &[1, 4, 2]]);
        let e = Permutation::identity(5);
        assert_eq!(e.compose(&p).unwrap(), p);
        assert_eq!(p.compose(&e).unwrap(), p);
    }

    #[test]
    fn compose_with_inverse_is_identity() {
        let p = cyc(6, &[&[0, 5, 2], &[1, 3]]);
        assert!(p.compose(&p.inverse()).unwrap().is_identity());
        assert!(p.inverse().compose(&p).unwrap().is_identity());
    }

    #[test]
    fn compose_is_left_to_right() {
        // x -> q(p(x)) pointwise: 0 -> q(1) = 0, 1 -> q(2) = 2, 2 -> q(0) = 1
        let p = cyc(3, &[&[0, 1, 2]]);
        let q = cyc(3, &[&[0, 1]]);
        let r = p.compose(&q).unwrap();
        assert_eq!(r.images(), &[0, 2, 1]);
        assert_eq!(r, cyc(3, &[&[1, 2]]));
    }

    #[test]
    fn compose_rejects_degree_mismatch() {
        let err = Permutation::identity(3)
            .compose(&Permutation::identity(4))
            .unwrap_err();
        assert_eq!(err, PermError::DegreeMismatch { left: 3, right: 4 });
    }

    #[test]
    fn inverse_examples() {
        assert!(Permutation::identity(4).inverse().is_identity());
        let t = cyc(4, &[&[0, 1]]);
        assert_eq!(t.inverse(), t);
        let c = cyc(4, &[&[0, 1, 2, 3]]);
        assert_eq!(c.inverse(), cyc(4, &[&[0, 3, 2, 1]]));
    }

    #[test]
    fn from_images_rejects_non_bijection() {
        assert!(matches!(
            Permutation::from_images([0, 0, 1]),
            Err(PermError::NotBijective { .. })
        ));
        assert!(matches!(
            Permutation::from_images([0, 3]),
            Err(PermError::PointOutOfRange { .. })
        ));
    }

    #[test]
    fn display_cycles() {
        assert_eq!(cyc(5, &[&[1, 2], &[0, 4, 3]]).to_string(), "(0 4 3)(1 2)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
    }
}
