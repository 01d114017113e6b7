//! Exact square matrices and enumerated matrix groups.

use std::collections::HashSet;
use std::fmt::Debug;
use std::hash::Hash;

use super::PolyError;
use crate::exactnum::{int, rank, determinant, Cyclotomic, Rational};

/// Exact ring elements usable as matrix entries.
pub trait Scalar: Clone + Eq + Hash + Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn to_cyclotomic(&self) -> Cyclotomic;
    /// Rank of a dense matrix over the fraction field.
    fn rank_of(rows: Vec<Vec<Self>>) -> usize;
}

impl Scalar for i64 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn add(&self, other: &Self) -> Self {
        self.checked_add(*other).expect("integer overflow")
    }
    fn mul(&self, other: &Self) -> Self {
        self.checked_mul(*other).expect("integer overflow")
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn to_cyclotomic(&self) -> Cyclotomic {
        Cyclotomic::from_int(*self)
    }
    fn rank_of(rows: Vec<Vec<Self>>) -> usize {
        let q: Vec<Vec<Rational>> = rows.into_iter().map(|r| r.into_iter().map(int).collect()).collect();
        rank(q)
    }
}

impl Scalar for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
    }
    fn to_cyclotomic(&self) -> Cyclotomic {
        self.clone()
    }
    fn rank_of(rows: Vec<Vec<Self>>) -> usize {
        rank(rows)
    }
}

/// Square matrix, row-major.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ExactMatrix<T> {
    n: usize,
    entries: Vec<T>,
}

impl<T: Scalar> ExactMatrix<T> {
    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self, PolyError> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != n) {
            return Err(PolyError::DimensionMismatch { expected: n, found: r.len() });
        }
        Ok(ExactMatrix { n, entries: rows.into_iter().flatten().collect() })
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![T::zero(); n * n];
        for i in 0..n {
            entries[i * n + i] = T::one();
        }
        ExactMatrix { n, entries }
    }

    pub fn diagonal(d: Vec<T>) -> Self {
        let n = d.len();
        let mut m = Self::identity(n);
        for (i, x) in d.into_iter().enumerate() {
            m.entries[i * n + i] = x;
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, r: usize, c: usize) -> &T {
        &self.entries[r * self.n + c]
    }

    pub fn rows(&self) -> Vec<Vec<T>> {
        self.entries.chunks(self.n).map(<[T]>::to_vec).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "matrix dimension");
        let n = self.n;
        let mut entries = vec![T::zero(); n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self.entries[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &other.entries[k * n + j];
                    if !b.is_zero() {
                        entries[i * n + j] = entries[i * n + j].add(&a.mul(b));
                    }
                }
            }
        }
        ExactMatrix { n, entries }
    }

    pub fn trace(&self) -> T {
        (0..self.n).fold(T::zero(), |acc, i| acc.add(&self.entries[i * self.n + i]))
    }

    pub fn to_cyclotomic(&self) -> ExactMatrix<Cyclotomic> {
        ExactMatrix { n: self.n, entries: self.entries.iter().map(Scalar::to_cyclotomic).collect() }
    }

    pub fn determinant(&self) -> Cyclotomic {
        determinant(self.to_cyclotomic().rows())
    }

    /// Inverse by powering up to the order; `None` if no power up to `bound` is the identity.
    pub fn inverse_of_finite_order(&self, bound: usize) -> Option<Self> {
        let mut prev = Self::identity(self.n);
        let mut cur = self.clone();
        for _ in 0..bound {
            if cur.is_identity() {
                return Some(prev);
            }
            prev = cur.clone();
            cur = cur.mul(self);
        }
        None
    }
}

/// A finite matrix group, optionally with every element listed.
#[derive(Clone, Debug)]
pub struct MatrixGroup<T> {
    dim: usize,
    generators: Vec<ExactMatrix<T>>,
    elements: Option<Vec<ExactMatrix<T>>>,
}

impl<T: Scalar> MatrixGroup<T> {
    /// Group generators without enumeration. Each generator must have
    /// nonzero determinant.
    pub fn new(dim: usize, generators: Vec<ExactMatrix<T>>) -> Result<Self, PolyError> {
        for g in &generators {
            if g.dim() != dim {
                return Err(PolyError::DimensionMismatch { expected: dim, found: g.dim() });
            }
            if g.determinant().is_zero() {
                return Err(PolyError::NotInvertible);
            }
        }
        Ok(MatrixGroup { dim, generators, elements: None })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[ExactMatrix<T>] {
        &self.generators
    }

    pub fn elements(&self) -> Option<&[ExactMatrix<T>]> {
        self.elements.as_deref()
    }

    pub fn order(&self) -> Option<usize> {
        self.elements.as_ref().map(Vec::len)
    }

    pub fn is_enumerated(&self) -> bool {
        self.elements.is_some()
    }

    /// Enumerates the group by breadth-first closure under right
    /// multiplication by generators.
    pub fn enumerate(mut self, budget: usize) -> Result<Self, PolyError> {
        let id = ExactMatrix::identity(self.dim);
        let mut seen: HashSet<ExactMatrix<T>> = HashSet::new();
        seen.insert(id.clone());
        let mut list = vec![id];
        let mut head = 0;
        while head < list.len() {
            let x = list[head].clone();
            for g in &self.generators {
                let y = x.mul(g);
                if !seen.contains(&y) {
                    if list.len() >= budget {
                        return Err(PolyError::BudgetExceeded { budget });
                    }
                    seen.insert(y.clone());
                    list.push(y);
                }
            }
            head += 1;
        }
        self.elements = Some(list);
        Ok(self)
    }

    pub fn contains(&self, g: &ExactMatrix<T>) -> Result<bool, PolyError> {
        let elems = self.elements.as_ref().ok_or(PolyError::NotEnumerated)?;
        Ok(elems.contains(g))
    }

    /// Normal closure of the generator commutators, enumerated.
    pub fn derived_subgroup(&self, budget: usize) -> Result<Self, PolyError> {
        let order_bound = 10_000;
        let inv: Vec<ExactMatrix<T>> = self
            .generators
            .iter()
            .map(|g| g.inverse_of_finite_order(order_bound).ok_or(PolyError::NotInvertible))
            .collect::<Result<_, _>>()?;
        let mut gens: Vec<ExactMatrix<T>> = Vec::new();
        for i in 0..self.generators.len() {
            for j in i + 1..self.generators.len() {
                let c = inv[i].mul(&inv[j]).mul(&self.generators[i]).mul(&self.generators[j]);
                if !c.is_identity() && !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        let mut sub = MatrixGroup { dim: self.dim, generators: gens.clone(), elements: None }.enumerate(budget)?;
        loop {
            let mut extra = Vec::new();
            {
                let members: HashSet<&ExactMatrix<T>> = sub.elements.as_ref().expect("enumerated").iter().collect();
                for x in &gens {
                    for (g, gi) in self.generators.iter().zip(&inv) {
                        let c = gi.mul(x).mul(g);
                        if !members.contains(&c) && !extra.contains(&c) {
                            extra.push(c);
                        }
                    }
                }
            }
            if extra.is_empty() {
                return Ok(sub);
            }
            gens.extend(extra);
            sub = MatrixGroup { dim: self.dim, generators: gens.clone(), elements: None }.enumerate(budget)?;
        }
    }
}

/// Enumerated group generated by `gens`.
pub fn group_closure<T: Scalar>(dim: usize, gens: Vec<ExactMatrix<T>>, budget: usize) -> Result<MatrixGroup<T>, PolyError> {
    MatrixGroup::new(dim, gens)?.enumerate(budget)
}
