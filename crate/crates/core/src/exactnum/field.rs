use std::fmt::Debug;

use num_traits::{One, Zero};

use super::Rational;

/// Minimal field interface used by the exact linear algebra below.
pub trait Field: Clone + PartialEq + Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn minus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn negated(&self) -> Self;
    fn inverse(&self) -> Option<Self>;
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn minus(&self, o: &Self) -> Self {
        self - o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn negated(&self) -> Self {
        -self
    }
    fn inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

/// Reduces `rows` in place to row echelon form and returns the rank.
fn echelon<F: Field>(rows: &mut [Vec<F>]) -> usize {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].inverse().expect("nonzero pivot");
        for c in col..ncols {
            rows[rank][c] = rows[rank][c].times(&inv);
        }
        let (head, tail) = rows.split_at_mut(rank + 1);
        let prow = &head[rank];
        for row in tail.iter_mut() {
            if row[col].is_zero() {
                continue;
            }
            let f = row[col].clone();
            for c in col..ncols {
                if !prow[c].is_zero() {
                    row[c] = row[c].minus(&f.times(&prow[c]));
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Rank of a matrix given by rows.
pub fn rank<F: Field>(mut rows: Vec<Vec<F>>) -> usize {
    echelon(&mut rows)
}

/// Determinant of a square matrix.
pub fn determinant<F: Field>(mut a: Vec<Vec<F>>) -> F {
    let n = a.len();
    let mut det = F::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a[r][col].is_zero()) else {
            return F::zero();
        };
        if pivot != col {
            a.swap(pivot, col);
            det = det.negated();
        }
        det = det.times(&a[col][col]);
        let inv = a[col][col].inverse().expect("nonzero pivot");
        for r in col + 1..n {
            if a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].times(&inv);
            for c in col..n {
                let t = f.times(&a[col][c]);
                a[r][c] = a[r][c].minus(&t);
            }
        }
    }
    det
}

/// Solves `a x = b` for square nonsingular `a`; `None` if singular.
pub fn solve<F: Field>(a: Vec<Vec<F>>, b: Vec<F>) -> Option<Vec<F>> {
    let n = a.len();
    let mut aug: Vec<Vec<F>> = a
        .into_iter()
        .zip(b)
        .map(|(mut row, rhs)| {
            row.push(rhs);
            row
        })
        .collect();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !aug[r][col].is_zero())?;
        aug.swap(col, pivot);
        let inv = aug[col][col].inverse()?;
        for c in col..=n {
            aug[col][c] = aug[col][c].times(&inv);
        }
        for r in 0..n {
            if r == col || aug[r][col].is_zero() {
                continue;
            }
            let f = aug[r][col].clone();
            for c in col..=n {
                let t = f.times(&aug[col][c]);
                aug[r][c] = aug[r][c].minus(&t);
            }
        }
    }
    Some(aug.into_iter().map(|mut row| row.pop().expect("augmented column")).collect())
}
