//! Linear substitution, invariance, averaging and symmetric powers.

use std::collections::HashMap;

use super::{ExactMatrix, MatrixGroup, MultiPoly, PolyError, Scalar};
use crate::exactnum::{rat, Cyclotomic};

/// `F(g x)`: each `x_i` becomes `sum_j g_ij x_j`.
///
/// This satisfies `act(gh, F) = act(h, act(g, F))`.
pub fn act<T: Scalar>(g: &ExactMatrix<T>, f: &MultiPoly) -> Result<MultiPoly, PolyError> {
    let n = f.nvars();
    if g.dim() != n {
        return Err(PolyError::DimensionMismatch { expected: n, found: g.dim() });
    }
    let images: Vec<MultiPoly> = (0..n)
        .map(|i| {
            let terms = (0..n).map(|j| {
                let mut e = vec![0; n];
                e[j] = 1;
                (g.get(i, j).to_cyclotomic(), e)
            });
            MultiPoly::from_terms(n, terms)
        })
        .collect();
    f.substitute(&images)
}

/// `true` iff every generator fixes `F` exactly.
pub fn is_invariant<T: Scalar>(f: &MultiPoly, gens: &[ExactMatrix<T>]) -> Result<bool, PolyError> {
    for g in gens {
        if act(g, f)? != *f {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Average of `act(g, F)` over an enumerated group.
pub fn reynolds<T: Scalar>(f: &MultiPoly, group: &MatrixGroup<T>) -> Result<MultiPoly, PolyError> {
    let elems = group.elements().ok_or(PolyError::NotEnumerated)?;
    let mut sum = MultiPoly::zero(f.nvars());
    for g in elems {
        sum = &sum + &act(g, f)?;
    }
    Ok(sum.scale(&Cyclotomic::from_rational(rat(1, elems.len() as i64))))
}

/// Degree-`d` monomials in `n` variables, in lexicographically decreasing
/// exponent order, with their index map.
pub fn monomials(n: usize, d: u32) -> (Vec<Vec<u32>>, HashMap<Vec<u32>, usize>) {
    fn rec(n: usize, i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i + 1 == n {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for k in (0..=left).rev() {
            cur[i] = k;
            rec(n, i + 1, left - k, cur, out);
        }
    }
    let mut out = Vec::new();
    if n > 0 {
        rec(n, 0, d, &mut vec![0; n], &mut out);
    } else if d == 0 {
        out.push(Vec::new());
    }
    let index = out.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    (out, index)
}

/// Precomputed monomial bases for degrees `0..=d` and the maps
/// `(monomial of degree t-1, variable) -> monomial of degree t`.
pub struct SymPowerTables {
    n: usize,
    bases: Vec<Vec<Vec<u32>>>,
    up: Vec<Vec<Vec<usize>>>,
    /// For each degree-`t` monomial: a degree-`t-1` monomial and a variable
    /// whose product it is.
    split: Vec<Vec<(usize, usize)>>,
}

impl SymPowerTables {
    pub fn new(n: usize, d: u32) -> Self {
        let mut bases = Vec::new();
        let mut indices = Vec::new();
        for t in 0..=d {
            let (b, idx) = monomials(n, t);
            bases.push(b);
            indices.push(idx);
        }
        let mut up = vec![Vec::new()];
        let mut split = vec![Vec::new()];
        for t in 1..=d as usize {
            let table: Vec<Vec<usize>> = bases[t - 1]
                .iter()
                .map(|m| {
                    (0..n)
                        .map(|j| {
                            let mut e = m.clone();
                            e[j] += 1;
                            indices[t][&e]
                        })
                        .collect()
                })
                .collect();
            let sp = bases[t]
                .iter()
                .map(|m| {
                    let i = m.iter().position(|&k| k > 0).expect("positive degree");
                    let mut e = m.clone();
                    e[i] -= 1;
                    (indices[t - 1][&e], i)
                })
                .collect();
            up.push(table);
            split.push(sp);
        }
        SymPowerTables { n, bases, up, split }
    }

    pub fn basis(&self, t: usize) -> &[Vec<u32>] {
        &self.bases[t]
    }

    /// Column `m` holds the coefficients of `act(g, x^m)`.
    pub fn matrix<T: Scalar>(&self, g: &ExactMatrix<T>) -> Vec<Vec<T>> {
        let d = self.bases.len() - 1;
        // images[m] = coefficient vector of act(g, x^m) for the current degree.
        let mut images: Vec<Vec<T>> = vec![vec![T::one()]];
        for t in 1..=d {
            let size = self.bases[t].len();
            let next: Vec<Vec<T>> = self.split[t]
                .iter()
                .map(|&(prev, i)| {
                    let mut v = vec![T::zero(); size];
                    for (k, c) in images[prev].iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        for j in 0..self.n {
                            let gij = g.get(i, j);
                            if !gij.is_zero() {
                                let slot = self.up[t][k][j];
                                v[slot] = v[slot].add(&c.mul(gij));
                            }
                        }
                    }
                    v
                })
                .collect();
            images = next;
        }
        let size = images.len();
        (0..size).map(|r| (0..size).map(|c| images[c][r].clone()).collect()).collect()
    }
}

/// Rank of `sum_g Sym^d(g)` over an enumerated group.
pub fn invariant_space_dim_direct<T: Scalar>(group: &MatrixGroup<T>, d: u32) -> Result<usize, PolyError> {
    let elems = group.elements().ok_or(PolyError::NotEnumerated)?;
    let tables = SymPowerTables::new(group.dim(), d);
    let size = tables.basis(d as usize).len();
    let mut total = vec![vec![T::zero(); size]; size];
    for g in elems {
        let m = tables.matrix(g);
        for (trow, mrow) in total.iter_mut().zip(m) {
            for (t, x) in trow.iter_mut().zip(mrow) {
                if !x.is_zero() {
                    *t = t.add(&x);
                }
            }
        }
    }
    Ok(T::rank_of(total))
}
