//! Small finite fields `GF(p^k)` with full addition and multiplication tables.

use super::PermError;

/// Elements are encoded as integers `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
/// standing for `c_0 + c_1 x + ...` modulo a fixed irreducible polynomial.
#[derive(Clone, Debug)]
pub struct SmallField {
    q: u32,
    p: u32,
    k: u32,
    add: Vec<u32>,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut r, mut k) = (q, 0);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

fn digits(mut a: u32, p: u32, k: u32) -> Vec<u32> {
    (0..k)
        .map(|_| {
            let d = a % p;
            a /= p;
            d
        })
        .collect()
}

fn encode(d: &[u32], p: u32) -> u32 {
    d.iter().rev().fold(0, |acc, &c| acc * p + c)
}

/// Monic irreducible of degree `k <= 3` over `F_p`, as low-to-high
/// coefficients without the leading 1: the first (in encoding order) with no root.
fn irreducible(p: u32, k: u32) -> Vec<u32> {
    for code in 0..p.pow(k) {
        let c = digits(code, p, k);
        let has_root = (0..p).any(|x| {
            let mut v = 1u32;
            for &ci in c.iter().rev() {
                v = (v * x + ci) % p;
            }
            v == 0
        });
        if !has_root {
            return c;
        }
    }
    unreachable!("irreducible polynomials exist in every degree")
}

impl SmallField {
    /// `GF(q)` for a prime power `q` with exponent at most 3.
    pub fn new(q: u32) -> Result<Self, PermError> {
        let (p, k) = prime_power(q).ok_or_else(|| PermError::Unsupported(format!("q = {q} is not a prime power")))?;
        if k > 3 || q > 1024 {
            return Err(PermError::Unsupported(format!("GF({q})")));
        }
        let modulus = if k > 1 { irreducible(p, k) } else { Vec::new() };
        let n = q as usize;
        let mut add = vec![0u32; n * n];
        let mut mul = vec![0u32; n * n];
        for a in 0..q {
            let da = digits(a, p, k);
            for b in 0..q {
                let db = digits(b, p, k);
                let s: Vec<u32> = da.iter().zip(&db).map(|(x, y)| (x + y) % p).collect();
                add[(a * q + b) as usize] = encode(&s, p);
                let mut prod = vec![0u32; (2 * k - 1) as usize];
                for (i, x) in da.iter().enumerate() {
                    for (j, y) in db.iter().enumerate() {
                        prod[i + j] = (prod[i + j] + x * y) % p;
                    }
                }
                // x^k = -(m_0 + m_1 x + ... + m_{k-1} x^{k-1})
                for top in (k as usize..prod.len()).rev() {
                    let c = prod[top];
                    prod[top] = 0;
                    for (i, m) in modulus.iter().enumerate() {
                        let t = top - k as usize + i;
                        prod[t] = (prod[t] + (p - c) * m) % p;
                    }
                }
                mul[(a * q + b) as usize] = encode(&prod[..k as usize], p);
            }
        }
        let mut inv = vec![0u32; n];
        for a in 1..q {
            inv[a as usize] = (1..q).find(|&b| mul[(a * q + b) as usize] == 1).expect("field");
        }
        Ok(SmallField { q, p, k, add, mul, inv })
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        self.add[(a * self.q + b) as usize]
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.mul[(a * self.q + b) as usize]
    }

    pub fn neg(&self, a: u32) -> u32 {
        (0..self.q).find(|&b| self.add(a, b) == 0).expect("additive inverse")
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.inv[a as usize])
    }

    /// Least element generating the multiplicative group.
    pub fn primitive_element(&self) -> u32 {
        (1..self.q)
            .find(|&g| {
                let mut x = g;
                let mut ord = 1;
                while x != 1 {
                    x = self.mul(x, g);
                    ord += 1;
                }
                ord == self.q - 1
            })
            .expect("cyclic multiplicative group")
    }
}
