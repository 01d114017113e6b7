//! Concrete matrix groups: the order-55 Klein symmetries, permutation
//! matrices, and the Weyl group of E6 in the root basis.

use std::collections::HashMap;

use super::{ExactMatrix, MatrixGroup, PolyError};
use crate::exactnum::Cyclotomic;
use crate::permgrp::{PermGroup, Permutation};

/// Exponents `a` with `2 a_i + a_{i+1} = 0 mod 11` (indices mod 5), `a_1 = 1`.
pub fn klein_exponents() -> [i64; 5] {
    let mut a = [1i64; 5];
    for i in 1..5 {
        a[i] = (-2 * a[i - 1]).rem_euclid(11);
    }
    a
}

/// `sigma: x_i -> x_{i+1}` and `tau = diag(zeta_11^{a_i})`.
pub fn klein_55_generators() -> (ExactMatrix<Cyclotomic>, ExactMatrix<Cyclotomic>) {
    let a = klein_exponents();
    let sigma = cyclic_shift(5, 0);
    let tau = ExactMatrix::diagonal(a.iter().map(|&k| Cyclotomic::root_of_unity(11, k)).collect());
    (sigma, tau)
}

/// The same generators on `x_0, ..., x_5`, fixing `x_0`.
pub fn palatini_55_generators() -> (ExactMatrix<Cyclotomic>, ExactMatrix<Cyclotomic>) {
    let a = klein_exponents();
    let sigma = cyclic_shift(6, 1);
    let mut diag = vec![Cyclotomic::one()];
    diag.extend(a.iter().map(|&k| Cyclotomic::root_of_unity(11, k)));
    (sigma, ExactMatrix::diagonal(diag))
}

/// Cyclic shift of the variables `offset..n`, fixing those before.
fn cyclic_shift(n: usize, offset: usize) -> ExactMatrix<Cyclotomic> {
    let len = n - offset;
    let rows = (0..n)
        .map(|i| {
            let target = if i < offset { i } else { offset + (i - offset + 1) % len };
            (0..n).map(|j| if j == target { Cyclotomic::one() } else { Cyclotomic::zero() }).collect()
        })
        .collect();
    ExactMatrix::from_rows(rows).expect("square")
}

/// Matrix sending `x_i` to `x_{p(i)}` under [`act`](super::act).
pub fn permutation_matrix(p: &Permutation) -> ExactMatrix<i64> {
    let n = p.degree();
    let rows = (0..n).map(|i| (0..n).map(|j| i64::from(p.image(i as u32) as usize == j)).collect()).collect();
    ExactMatrix::from_rows(rows).expect("square")
}

/// Cartan matrix of E6, nodes 1-3-4-5-6 in a chain with 2 attached to 4.
pub fn e6_cartan() -> [[i64; 6]; 6] {
    let mut a = [[0i64; 6]; 6];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    for (x, y) in [(0, 2), (2, 3), (3, 4), (4, 5), (1, 3)] {
        a[x][y] = -1;
        a[y][x] = -1;
    }
    a
}

/// Simple reflections in the root basis: `s_i(alpha_c) = alpha_c - A_ic alpha_i`.
pub fn e6_simple_reflections() -> Vec<ExactMatrix<i64>> {
    let a = e6_cartan();
    (0..6)
        .map(|i| {
            let rows = (0..6)
                .map(|r| (0..6).map(|c| i64::from(r == c) - if r == i { a[i][c] } else { 0 }).collect())
                .collect();
            ExactMatrix::from_rows(rows).expect("square")
        })
        .collect()
}

fn apply(m: &ExactMatrix<i64>, v: &[i64]) -> Vec<i64> {
    (0..m.dim()).map(|r| (0..m.dim()).map(|c| m.get(r, c) * v[c]).sum()).collect()
}

/// The Weyl group of E6 and its 72 roots in root coordinates.
#[derive(Clone, Debug)]
pub struct WeylE6 {
    pub group: MatrixGroup<i64>,
    pub roots: Vec<Vec<i64>>,
}

impl WeylE6 {
    /// Permutation of the roots induced by `m`.
    pub fn root_permutation(&self, m: &ExactMatrix<i64>) -> Permutation {
        let index: HashMap<&Vec<i64>, u32> = self.roots.iter().enumerate().map(|(i, r)| (r, i as u32)).collect();
        let images = self.roots.iter().map(|r| index[&apply(m, r)]).collect();
        Permutation::new(images).expect("roots are permuted")
    }

    /// The permutation group on roots generated by the images of `gens`.
    pub fn on_roots(&self, gens: &[ExactMatrix<i64>]) -> PermGroup {
        PermGroup::new(self.roots.len(), gens.iter().map(|g| self.root_permutation(g)).collect()).expect("same degree")
    }

    /// Matrix of a root permutation: column `i` is the image of simple root `i`.
    pub fn matrix_of(&self, p: &Permutation) -> ExactMatrix<i64> {
        let simple: Vec<usize> = (0..6)
            .map(|i| self.roots.iter().position(|r| r.iter().enumerate().all(|(k, &x)| x == i64::from(k == i))).expect("simple root"))
            .collect();
        let cols: Vec<&Vec<i64>> = simple.iter().map(|&s| &self.roots[p.image(s as u32) as usize]).collect();
        let rows = (0..6).map(|r| (0..6).map(|c| cols[c][r]).collect()).collect();
        ExactMatrix::from_rows(rows).expect("square")
    }
}

/// `W(E6)`, enumerated.
pub fn weyl_e6(budget: usize) -> Result<WeylE6, PolyError> {
    let gens = e6_simple_reflections();
    let mut roots: Vec<Vec<i64>> = (0..6).map(|i| (0..6).map(|k| i64::from(k == i)).collect()).collect();
    let mut head = 0;
    while head < roots.len() {
        let r = roots[head].clone();
        for g in &gens {
            let s = apply(g, &r);
            if !roots.contains(&s) {
                roots.push(s);
            }
        }
        head += 1;
    }
    roots.sort();
    let group = MatrixGroup::new(6, gens)?.enumerate(budget)?;
    Ok(WeylE6 { group, roots })
}
