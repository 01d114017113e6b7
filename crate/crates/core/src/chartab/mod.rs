//! Character tables computed by the Dixon-Schneider method, class
//! functions, symmetric powers, invariant counts and restriction.

mod dixon;
mod export;
mod fusion;
mod matching;
pub mod reference;

pub use dixon::{dixon_character_table, dixon_prime};
pub use export::TableExport;
pub use fusion::FusionMap;
pub use matching::{match_printed_table, PrintedTable, TableMatch};

use std::ops::{Add, Mul, Sub};
use std::sync::Arc;

use num_traits::ToPrimitive;
use thiserror::Error;

use crate::exactnum::{Cyclotomic, Rational};
use crate::permgrp::{ConjClasses, PermError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CharError {
    #[error("class functions belong to different groups")]
    GroupMismatch,
    #[error("no prime p = 1 mod {exponent} with p > 2 sqrt({order}) below {bound}")]
    NoPrime { exponent: u64, order: usize, bound: u64 },
    #[error("eigenspace of dimension {dim} did not split")]
    SplitFailure { dim: usize },
    #[error("computed table fails orthogonality at rows ({0}, {1})")]
    NotOrthogonal(usize, usize),
    #[error("inner product with row {row} is {value}, not an integer")]
    NotIntegral { row: usize, value: String },
    #[error("invariant count {0} is not a non-negative integer")]
    BadInvariantCount(String),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// A function on the conjugacy classes of a group.
#[derive(Clone, Debug)]
pub struct ClassFunction {
    classes: Arc<ConjClasses>,
    values: Vec<Cyclotomic>,
}

impl PartialEq for ClassFunction {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.classes, &other.classes) && self.values == other.values
    }
}

impl ClassFunction {
    /// Panics if the number of values differs from the number of classes.
    pub fn new(classes: Arc<ConjClasses>, values: Vec<Cyclotomic>) -> Self {
        assert_eq!(values.len(), classes.len(), "one value per class");
        ClassFunction { classes, values }
    }

    pub fn trivial(classes: Arc<ConjClasses>) -> Self {
        let n = classes.len();
        ClassFunction::new(classes, vec![Cyclotomic::one(); n])
    }

    /// Number of fixed points of each class representative.
    pub fn permutation_character(classes: Arc<ConjClasses>) -> Self {
        let values = classes.reps().iter().map(|g| Cyclotomic::from_int(g.fixed_points() as i64)).collect();
        ClassFunction::new(classes, values)
    }

    pub fn classes(&self) -> &Arc<ConjClasses> {
        &self.classes
    }

    pub fn values(&self) -> &[Cyclotomic] {
        &self.values
    }

    pub fn value(&self, c: usize) -> &Cyclotomic {
        &self.values[c]
    }

    /// Value at the identity class.
    pub fn degree(&self) -> &Cyclotomic {
        &self.values[0]
    }

    pub fn same_group(&self, other: &ClassFunction) -> bool {
        Arc::ptr_eq(&self.classes, &other.classes)
    }

    fn zip_with(&self, other: &ClassFunction, f: impl Fn(&Cyclotomic, &Cyclotomic) -> Cyclotomic) -> Result<Self, CharError> {
        if !self.same_group(other) {
            return Err(CharError::GroupMismatch);
        }
        let values = self.values.iter().zip(&other.values).map(|(a, b)| f(a, b)).collect();
        Ok(ClassFunction { classes: self.classes.clone(), values })
    }

    pub fn try_add(&self, other: &ClassFunction) -> Result<Self, CharError> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn try_sub(&self, other: &ClassFunction) -> Result<Self, CharError> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn try_mul(&self, other: &ClassFunction) -> Result<Self, CharError> {
        self.zip_with(other, |a, b| a * b)
    }

    pub fn scale(&self, k: &Cyclotomic) -> Self {
        ClassFunction { classes: self.classes.clone(), values: self.values.iter().map(|v| v * k).collect() }
    }

    pub fn complex_conjugate(&self) -> Self {
        ClassFunction { classes: self.classes.clone(), values: self.values.iter().map(Cyclotomic::complex_conjugate).collect() }
    }

    /// `g -> f(g^k)`.
    pub fn power(&self, k: i64) -> Self {
        let map = self.classes.power_map(k);
        ClassFunction { classes: self.classes.clone(), values: map.iter().map(|&c| self.values[c as usize].clone()).collect() }
    }

    /// Classes where the value equals the degree.
    pub fn kernel_classes(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&c| self.values[c] == self.values[0]).collect()
    }
}

impl Add for &ClassFunction {
    type Output = ClassFunction;
    /// Panics on a group mismatch.
    fn add(self, rhs: &ClassFunction) -> ClassFunction {
        self.try_add(rhs).expect("same group")
    }
}

impl Sub for &ClassFunction {
    type Output = ClassFunction;
    fn sub(self, rhs: &ClassFunction) -> ClassFunction {
        self.try_sub(rhs).expect("same group")
    }
}

impl Mul for &ClassFunction {
    type Output = ClassFunction;
    fn mul(self, rhs: &ClassFunction) -> ClassFunction {
        self.try_mul(rhs).expect("same group")
    }
}

/// `(1/|G|) sum_c |c| chi(c) conj(psi(c))`.
pub fn inner_product(chi: &ClassFunction, psi: &ClassFunction) -> Result<Cyclotomic, CharError> {
    if !chi.same_group(psi) {
        return Err(CharError::GroupMismatch);
    }
    let cc = &chi.classes;
    let total: Cyclotomic = (0..cc.len())
        .map(|c| (&chi.values[c] * &psi.values[c].complex_conjugate()).scale(&Rational::from_integer(cc.size(c).into())))
        .sum();
    Ok(total.scale(&Rational::new(1.into(), cc.group_order().into())))
}

/// Character of the `d`-th symmetric power, from
/// `h_n = (1/n) sum_{k=1..n} chi(g^k) h_{n-k}`.
pub fn sym_power_character(chi: &ClassFunction, d: usize) -> ClassFunction {
    let cc = &chi.classes;
    let powers: Vec<Vec<u32>> = (1..=d).map(|k| cc.power_map(k as i64).to_vec()).collect();
    let values = (0..cc.len())
        .map(|c| {
            let p: Vec<&Cyclotomic> = powers.iter().map(|m| &chi.values[m[c] as usize]).collect();
            let mut h = vec![Cyclotomic::one()];
            for n in 1..=d {
                let s: Cyclotomic = (1..=n).map(|k| p[k - 1] * &h[n - k]).sum();
                h.push(s.scale(&Rational::new(1.into(), (n as i64).into())));
            }
            h.pop().expect("h_0 present")
        })
        .collect();
    ClassFunction { classes: cc.clone(), values }
}

/// Dimension of degree-`d` invariants of a representation affording `chi`.
pub fn molien_invariant_dim(chi: &ClassFunction, d: usize) -> Result<u64, CharError> {
    let sym = sym_power_character(chi, d);
    let ip = inner_product(&sym, &ClassFunction::trivial(chi.classes.clone()))?;
    ip.as_integer().and_then(|n| n.to_u64()).ok_or_else(|| CharError::BadInvariantCount(ip.to_string()))
}

/// Complete table of irreducible characters.
#[derive(Clone, Debug)]
pub struct CharacterTable {
    classes: Arc<ConjClasses>,
    irreducibles: Vec<ClassFunction>,
    prime: u64,
}

impl CharacterTable {
    pub fn classes(&self) -> &Arc<ConjClasses> {
        &self.classes
    }

    pub fn irreducibles(&self) -> &[ClassFunction] {
        &self.irreducibles
    }

    pub fn len(&self) -> usize {
        self.irreducibles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.irreducibles.is_empty()
    }

    pub fn row(&self, i: usize) -> &ClassFunction {
        &self.irreducibles[i]
    }

    /// The prime used for the modular computation.
    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn degrees(&self) -> Vec<u64> {
        self.irreducibles.iter().map(|c| c.degree().as_integer().and_then(|d| d.to_u64()).expect("positive integer degree")).collect()
    }

    /// Indices of rows of the given degree.
    pub fn rows_of_degree(&self, d: u64) -> Vec<usize> {
        self.degrees().iter().enumerate().filter(|(_, &x)| x == d).map(|(i, _)| i).collect()
    }

    /// Multiplicities of the irreducibles in `f`.
    pub fn decompose(&self, f: &ClassFunction) -> Result<Vec<i64>, CharError> {
        self.irreducibles
            .iter()
            .enumerate()
            .map(|(row, chi)| {
                let ip = inner_product(f, chi)?;
                ip.as_integer().and_then(|n| n.to_i64()).ok_or_else(|| CharError::NotIntegral { row, value: ip.to_string() })
            })
            .collect()
    }

    /// Least total degree of a set of irreducibles whose kernels meet trivially.
    pub fn min_faithful_rep_degree(&self) -> u64 {
        let degrees = self.degrees();
        let kernels: Vec<u64> = self
            .irreducibles
            .iter()
            .map(|chi| chi.kernel_classes().iter().fold(0u64, |m, &c| m | (1 << c)))
            .collect();
        let n = self.irreducibles.len();
        if self.classes.len() == 1 {
            return 1;
        }
        assert!(n <= 24 && self.classes.len() <= 64, "subset search is limited to small tables");
        let mut best = u64::MAX;
        for mask in 1u32..(1 << n) {
            let mut kernel = u64::MAX;
            let mut total = 0;
            for i in 0..n {
                if mask & (1 << i) != 0 {
                    kernel &= kernels[i];
                    total += degrees[i];
                }
            }
            if kernel == 1 && total < best {
                best = total;
            }
        }
        best
    }

    /// Exact row and column orthogonality.
    pub fn verify_orthogonality(&self) -> Result<(), CharError> {
        let cc = &self.classes;
        for i in 0..self.len() {
            for j in i..self.len() {
                let ip = inner_product(&self.irreducibles[i], &self.irreducibles[j])?;
                let expected = if i == j { Cyclotomic::one() } else { Cyclotomic::zero() };
                if ip != expected {
                    return Err(CharError::NotOrthogonal(i, j));
                }
            }
        }
        for a in 0..cc.len() {
            for b in a..cc.len() {
                let s: Cyclotomic = self
                    .irreducibles
                    .iter()
                    .map(|chi| &chi.values[a] * &chi.values[b].complex_conjugate())
                    .sum();
                let expected = if a == b { Cyclotomic::from_int(cc.centralizer_order(a) as i64) } else { Cyclotomic::zero() };
                if s != expected {
                    return Err(CharError::NotOrthogonal(a, b));
                }
            }
        }
        Ok(())
    }
}
