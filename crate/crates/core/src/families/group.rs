use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use thiserror::Error;

use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GroupError {
    #[error("multiplication table must be {order}x{order}, got {len} entries")]
    TableShape { order: usize, len: usize },
    #[error("product {a}*{b} = {value} is not an element")]
    NotClosed { a: usize, b: usize, value: usize },
    #[error("no two-sided identity")]
    NoIdentity,
    #[error("element {0} has no inverse")]
    NoInverse(usize),
    #[error("associativity fails on ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("moduli and signs differ in length ({moduli} vs {signs})")]
    SpecShape { moduli: usize, signs: usize },
    #[error("modulus must be at least 1, sign must be +1 or -1")]
    SpecValue,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CayleyError {
    #[error("the identity lies in the connection set")]
    IdentityInSet,
    #[error("connection set is not inverse closed: {element} lacks its inverse {inverse}")]
    NotInverseClosed { element: usize, inverse: usize },
    #[error("connection set generates a subgroup of order {reached}, not {order}")]
    NotGenerating { reached: usize, order: usize },
    #[error("element {element} out of range for a group of order {order}")]
    ElementOutOfRange { element: usize, order: usize },
}

/// A finite group given by its full multiplication table on indices `0..order`.
#[derive(Clone, Debug)]
pub struct ConcreteGroup {
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<u32>,
    labels: Vec<String>,
}

const ASSOCIATIVITY_SAMPLES: usize = 2000;

impl ConcreteGroup {
    /// Validates closure, identity and inverses exhaustively and associativity on a seeded
    /// random sample of triples.
    pub fn from_table(order: usize, table: Vec<u32>, labels: Vec<String>) -> Result<Self, GroupError> {
        if order == 0 || table.len() != order * order || labels.len() != order {
            return Err(GroupError::TableShape {
                order,
                len: table.len(),
            });
        }
        for (i, &v) in table.iter().enumerate() {
            if v as usize >= order {
                return Err(GroupError::NotClosed {
                    a: i / order,
                    b: i % order,
                    value: v as usize,
                });
            }
        }
        let mul = |a: usize, b: usize| table[a * order + b] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or(GroupError::NoIdentity)?;
        let mut inverse = vec![0u32; order];
        for a in 0..order {
            let b = (0..order)
                .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                .ok_or(GroupError::NoInverse(a))?;
            inverse[a] = b as u32;
        }
        let mut rng = StdRng::seed_from_u64(0x5eed_0001);
        for _ in 0..ASSOCIATIVITY_SAMPLES {
            let (a, b, c) = (
                rng.gen_range(0..order),
                rng.gen_range(0..order),
                rng.gen_range(0..order),
            );
            if mul(mul(a, b), c) != mul(a, mul(b, c)) {
                return Err(GroupError::NotAssociative(a, b, c));
            }
        }
        Ok(ConcreteGroup {
            order,
            table,
            identity,
            inverse,
            labels,
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a] as usize
    }

    pub fn pow(&self, a: usize, e: u64) -> usize {
        (0..e).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    /// Product of `(element, exponent)` factors, left to right.
    pub fn word(&self, factors: &[(usize, u64)]) -> usize {
        factors
            .iter()
            .fold(self.identity, |acc, &(g, e)| self.mul(acc, self.pow(g, e)))
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    /// Size of the subgroup generated by `gens`.
    pub fn generated_order(&self, gens: &[usize]) -> usize {
        let mut seen = vec![false; self.order];
        seen[self.identity] = true;
        let mut queue = vec![self.identity];
        let mut i = 0;
        while i < queue.len() {
            let x = queue[i];
            i += 1;
            for &s in gens {
                let y = self.mul(s, x);
                if !seen[y] {
                    seen[y] = true;
                    queue.push(y);
                }
            }
        }
        queue.len()
    }
}

/// `A ⋊ ⟨c⟩` with `A = Z_{n_1} × … × Z_{n_r}` and `c` acting by `x_i ↦ s_i x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SignedSemidirectSpec {
    moduli: Vec<u32>,
    signs: Vec<i8>,
}

impl SignedSemidirectSpec {
    pub fn new(moduli: Vec<u32>, signs: Vec<i8>) -> Result<Self, GroupError> {
        if moduli.len() != signs.len() {
            return Err(GroupError::SpecShape {
                moduli: moduli.len(),
                signs: signs.len(),
            });
        }
        if moduli.contains(&0) || signs.iter().any(|&s| s != 1 && s != -1) {
            return Err(GroupError::SpecValue);
        }
        Ok(SignedSemidirectSpec { moduli, signs })
    }

    pub fn moduli(&self) -> &[u32] {
        &self.moduli
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    fn abelian_order(&self) -> usize {
        self.moduli.iter().map(|&m| m as usize).product()
    }

    /// Index of `(eps; x)`: `eps` selects the coset, coordinates are mixed radix with the first
    /// coordinate most significant. Coordinates are reduced modulo their moduli.
    pub fn encode(&self, eps: u8, coords: &[i64]) -> usize {
        assert_eq!(coords.len(), self.moduli.len(), "coordinate count");
        let x = coords
            .iter()
            .zip(&self.moduli)
            .fold(0usize, |acc, (&c, &m)| acc * m as usize + c.rem_euclid(i64::from(m)) as usize);
        usize::from(eps & 1) * self.abelian_order() + x
    }

    pub fn decode(&self, idx: usize) -> (u8, Vec<u32>) {
        let a = self.abelian_order();
        let eps = (idx / a) as u8;
        let mut x = idx % a;
        let mut coords = vec![0u32; self.moduli.len()];
        for (slot, &m) in coords.iter_mut().zip(&self.moduli).rev() {
            *slot = (x % m as usize) as u32;
            x /= m as usize;
        }
        (eps, coords)
    }
}

/// `(e1; x)(e2; y) = (e1 + e2; σ^{e2}(x) + y)`.
pub fn signed_semidirect(spec: &SignedSemidirectSpec) -> ConcreteGroup {
    let order = 2 * spec.abelian_order();
    let decoded: Vec<(u8, Vec<u32>)> = (0..order).map(|i| spec.decode(i)).collect();
    let mut table = Vec::with_capacity(order * order);
    let mut coords = vec![0i64; spec.moduli.len()];
    for (e1, x) in &decoded {
        for (e2, y) in &decoded {
            for i in 0..coords.len() {
                let xi = i64::from(x[i]);
                let twisted = if *e2 == 1 { xi * i64::from(spec.signs[i]) } else { xi };
                coords[i] = twisted + i64::from(y[i]);
            }
            table.push(spec.encode(e1 ^ e2, &coords) as u32);
        }
    }
    let labels = decoded
        .iter()
        .map(|(e, x)| {
            let xs: Vec<String> = x.iter().map(u32::to_string).collect();
            format!("({e};{})", xs.join(","))
        })
        .collect();
    ConcreteGroup::from_table(order, table, labels).expect("signed semidirect product is a group")
}

/// `Cay(G, S)`: `x ~ y` iff `y x⁻¹ ∈ S`.
pub fn cayley(group: &ConcreteGroup, connection: &[usize]) -> Result<Graph, CayleyError> {
    let order = group.order();
    let mut in_s = vec![false; order];
    for &s in connection {
        if s >= order {
            return Err(CayleyError::ElementOutOfRange { element: s, order });
        }
        in_s[s] = true;
    }
    if in_s[group.identity()] {
        return Err(CayleyError::IdentityInSet);
    }
    for &s in connection {
        if !in_s[group.inv(s)] {
            return Err(CayleyError::NotInverseClosed {
                element: s,
                inverse: group.inv(s),
            });
        }
    }
    let set: Vec<usize> = (0..order).filter(|&s| in_s[s]).collect();
    let reached = group.generated_order(&set);
    if reached != order {
        return Err(CayleyError::NotGenerating { reached, order });
    }
    let adj = (0..order)
        .map(|x| set.iter().map(|&s| group.mul(s, x) as u32).collect())
        .collect();
    let labels = (0..order).map(|x| group.label(x).to_string()).collect();
    Ok(Graph::from_raw_adjacency(adj)
        .with_labels(labels)
        .expect("one label per element"))
}
