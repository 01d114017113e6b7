//! Sparse multivariate polynomials with cyclotomic coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::PolyError;
use crate::exactnum::{rat, Cyclotomic};

/// Map from exponent vectors to nonzero coefficients over `n` variables.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Cyclotomic>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Cyclotomic) -> Self {
        Self::monomial(c, vec![0; nvars])
    }

    /// The variable `x_i`, zero-based.
    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(Cyclotomic::one(), e)
    }

    pub fn monomial(c: Cyclotomic, exponents: Vec<u32>) -> Self {
        let mut p = Self::zero(exponents.len());
        if !c.is_zero() {
            p.terms.insert(exponents, c);
        }
        p
    }

    /// Builds from `(coefficient, exponents)` pairs, combining repeats.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Cyclotomic, Vec<u32>)>) -> Self {
        let mut p = Self::zero(nvars);
        for (c, e) in terms {
            assert_eq!(e.len(), nvars, "exponent vector length");
            p.add_term(e, c);
        }
        p
    }

    fn add_term(&mut self, e: Vec<u32>, c: Cyclotomic) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `k`-th elementary symmetric polynomial in `nvars` variables.
    pub fn elementary_symmetric(nvars: usize, k: usize) -> Self {
        let mut p = Self::zero(nvars);
        let mut idx: Vec<usize> = (0..k).collect();
        if k > nvars {
            return p;
        }
        loop {
            let mut e = vec![0; nvars];
            for &i in &idx {
                e[i] = 1;
            }
            p.add_term(e, Cyclotomic::one());
            // Next k-subset in lexicographic order.
            let Some(pos) = (0..k).rev().find(|&j| idx[j] < nvars - k + j) else { break };
            idx[pos] += 1;
            for j in pos + 1..k {
                idx[j] = idx[j - 1] + 1;
            }
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, Cyclotomic> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|e| e.iter().sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, v)| (e.clone(), v * c)).collect() }
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::constant(self.nvars, Cyclotomic::one());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn derivative(&self, i: usize) -> Self {
        let mut p = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            if e[i] > 0 {
                let mut f = e.clone();
                f[i] -= 1;
                p.add_term(f, c.scale(&rat(e[i] as i64, 1)));
            }
        }
        p
    }

    /// Value at a point; panics on a length mismatch.
    pub fn eval(&self, point: &[Cyclotomic]) -> Cyclotomic {
        assert_eq!(point.len(), self.nvars, "point dimension");
        self.terms
            .iter()
            .map(|(e, c)| {
                e.iter().zip(point).fold(c.clone(), |acc, (&k, x)| if k == 0 { acc } else { &acc * &x.pow(k) })
            })
            .sum()
    }

    /// Substitutes a polynomial for every variable.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<Self, PolyError> {
        if images.len() != self.nvars {
            return Err(PolyError::DimensionMismatch { expected: self.nvars, found: images.len() });
        }
        let target = images.first().map_or(0, MultiPoly::nvars);
        let mut powers: Vec<Vec<MultiPoly>> = images.iter().map(|p| vec![Self::constant(target, Cyclotomic::one()), p.clone()]).collect();
        let mut out = Self::zero(target);
        for (e, c) in &self.terms {
            let mut term = Self::constant(target, c.clone());
            for (i, &k) in e.iter().enumerate() {
                while powers[i].len() <= k as usize {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if k > 0 {
                    term = &term * &powers[i][k as usize];
                }
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Parses the text form; variables are `x1 .. xn` (one-based).
    pub fn parse(nvars: usize, s: &str) -> Result<Self, PolyError> {
        let err = |m: &str| PolyError::Parse(format!("{m} in `{s}`"));
        let mut p = Self::zero(nvars);
        for term in split_terms(s) {
            let term = term.trim();
            if term.is_empty() {
                return Err(err("empty term"));
            }
            let (negate, body) = match term.strip_prefix('-') {
                Some(rest) => (true, rest.trim_start()),
                None => (false, term),
            };
            let mut coeff = Cyclotomic::one();
            let mut e = vec![0u32; nvars];
            for factor in split_depth0(body, '*') {
                let factor = factor.trim();
                if let Some(v) = factor.strip_prefix('x') {
                    let (idx, exp) = match v.split_once('^') {
                        Some((i, k)) => (i, k.trim().parse::<u32>().map_err(|_| err("bad exponent"))?),
                        None => (v, 1),
                    };
                    let i: usize = idx.trim().parse().map_err(|_| err("bad variable"))?;
                    if i == 0 || i > nvars {
                        return Err(err("variable out of range"));
                    }
                    e[i - 1] += exp;
                } else {
                    let c: Cyclotomic = factor.parse().map_err(|_| err("bad coefficient"))?;
                    coeff = &coeff * &c;
                }
            }
            if negate {
                coeff = -coeff;
            }
            p.add_term(e, coeff);
        }
        Ok(p)
    }
}

/// Splits at `sep` outside brackets and parentheses.
fn split_depth0(s: &str, sep: char) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push(&s[start..i]);
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push(&s[start..]);
    out
}

/// Splits a sum into signed terms; a binary `-` starts a negated term.
fn split_terms(s: &str) -> Vec<String> {
    let mut normalized = String::with_capacity(s.len() + 8);
    let mut depth = 0i32;
    let mut prev: Option<char> = None;
    for ch in s.chars() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            _ => {}
        }
        let binary = matches!(prev, Some(c) if !matches!(c, '+' | '-' | '*' | '^' | '/' | '[' | '(' | ','));
        if ch == '-' && depth == 0 && binary {
            normalized.push('+');
        }
        normalized.push(ch);
        if !ch.is_whitespace() {
            prev = Some(ch);
        }
    }
    split_depth0(&normalized, '+').into_iter().map(str::to_string).collect()
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms.iter().rev().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, p)?,
                }
            }
        }
        Ok(())
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = self.clone();
        for (e, c) in &rhs.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly { nvars: self.nvars, terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self + &(-rhs)
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "variable count");
        let mut out = MultiPoly::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                let e: Vec<u32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(e, c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);
