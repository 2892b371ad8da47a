use super::FamilyError;

/// Largest field order this crate will tabulate.
const MAX_FIELD_ORDER: u64 = 1 << 12;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `(p, f)` with `q = p^f`, or `None` if `q` is not a prime power.
pub fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q.is_multiple_of(*d))?;
    let mut rest = q;
    let mut f = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        f += 1;
    }
    (rest == 1).then_some((p, f))
}

/// `GF(p^f)`. Elements are the integers `0..q`; the base-`p` digits of an element are its
/// polynomial coefficients, lowest degree in the least significant digit.
#[derive(Clone, Debug)]
pub struct FiniteField {
    p: u32,
    f: u32,
    q: u32,
    /// monic, low-to-high, length `f + 1`
    modulus: Vec<u32>,
    primitive: u32,
    exp: Vec<u32>,
    log: Vec<u32>,
}

fn digits(mut x: u32, p: u32, f: u32) -> Vec<u32> {
    (0..f)
        .map(|_| {
            let d = x % p;
            x /= p;
            d
        })
        .collect()
}

fn undigits(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Remainder of `a` modulo the monic polynomial `m`, coefficients low-to-high.
fn poly_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    let dm = m.len() - 1;
    while r.len() > dm {
        let lead = *r.last().unwrap();
        let shift = r.len() - 1 - dm;
        if lead != 0 {
            for (i, &c) in m.iter().enumerate() {
                r[shift + i] = (r[shift + i] + p - (lead * c) % p) % p;
            }
        }
        r.pop();
    }
    r
}

fn poly_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

/// Irreducible iff no monic polynomial of degree `1..=f/2` divides it.
fn is_irreducible(m: &[u32], p: u32) -> bool {
    let f = m.len() as u32 - 1;
    for deg in 1..=f / 2 {
        for low in 0..p.pow(deg) {
            let mut d = digits(low, p, deg);
            d.push(1);
            if poly_rem(m, &d, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

impl FiniteField {
    pub fn new(p: u64, f: u32) -> Result<Self, FamilyError> {
        if !is_prime(p) {
            return Err(FamilyError::NotPrime(p));
        }
        if f == 0 {
            return Err(FamilyError::InvalidParameter("extension degree must be at least 1".into()));
        }
        let q = p.checked_pow(f).filter(|&q| q <= MAX_FIELD_ORDER).ok_or_else(|| {
            FamilyError::InvalidParameter(format!("field order {p}^{f} is too large"))
        })?;
        let (p, q) = (p as u32, q as u32);
        let modulus = (0..q)
            .map(|low| {
                let mut m = digits(low, p, f);
                m.push(1);
                m
            })
            .find(|m| is_irreducible(m, p))
            .expect("an irreducible polynomial of every degree exists");
        let mut field = FiniteField {
            p,
            f,
            q,
            modulus,
            primitive: 0,
            exp: Vec::new(),
            log: Vec::new(),
        };
        let (g, powers) = (1..q)
            .find_map(|g| {
                let powers = field.powers_slow(g);
                (powers.len() == (q - 1) as usize).then_some((g, powers))
            })
            .expect("the multiplicative group is cyclic");
        field.primitive = g;
        field.log = vec![0; q as usize];
        for (i, &x) in powers.iter().enumerate() {
            field.log[x as usize] = i as u32;
        }
        field.exp = powers.iter().chain(powers.iter()).copied().collect();
        Ok(field)
    }

    /// `1, g, g², …` up to the first repeat of 1.
    fn powers_slow(&self, g: u32) -> Vec<u32> {
        let mut out = vec![1u32];
        let mut x = g;
        while x != 1 {
            out.push(x);
            if out.len() > self.q as usize {
                break;
            }
            x = self.mul_slow(x, g);
        }
        out
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        let prod = poly_mul(&digits(a, self.p, self.f), &digits(b, self.p, self.f), self.p);
        undigits(&poly_rem(&prod, &self.modulus, self.p), self.p)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.f
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// The smallest element of multiplicative order `q - 1`.
    pub fn primitive_element(&self) -> u32 {
        self.primitive
    }

    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.q
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.f == 1 {
            return (a + b) % self.p;
        }
        let (mut a, mut b, mut out, mut place) = (a, b, 0, 1);
        while a > 0 || b > 0 {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.f == 1 {
            return (self.p - a) % self.p;
        }
        let (mut a, mut out, mut place) = (a, 0, 1);
        while a > 0 {
            out += ((self.p - a % self.p) % self.p) * place;
            a /= self.p;
            place *= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        self.exp[(self.log[a as usize] + self.log[b as usize]) as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.exp[((self.q - 1 - self.log[a as usize]) % (self.q - 1)) as usize])
    }

    /// `λ^e` for the primitive element `λ`.
    pub fn pow_primitive(&self, e: u64) -> u32 {
        self.exp[(e % u64::from(self.q - 1)) as usize]
    }

    pub fn multiplicative_order(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        let l = self.log[a as usize];
        Some(n / gcd(n, l))
    }

    /// Nonzero squares, i.e. the even powers of the primitive element.
    pub fn nonzero_squares(&self) -> Vec<u32> {
        let mut s: Vec<u32> = (0..u64::from(self.q - 1))
            .map(|i| self.pow_primitive(2 * i))
            .collect();
        s.sort_unstable();
        s.dedup();
        s
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// The field of order `p^f` with the lexicographically smallest monic irreducible modulus.
pub fn gf(p: u64, f: u32) -> Result<FiniteField, FamilyError> {
    FiniteField::new(p, f)
}

/// The field of order `q`.
pub fn gf_order(q: u64) -> Result<FiniteField, FamilyError> {
    let (p, f) = prime_power(q).ok_or(FamilyError::NotPrimePower(q))?;
    gf(p, f)
}
