//! Dixon-Schneider: simultaneous eigenvectors of the class matrices over
//! `F_p`, lifted to cyclotomic values through eigenvalue multiplicities.

use std::sync::Arc;

use rayon::prelude::*;

use super::{CharError, CharacterTable, ClassFunction};
use crate::exactnum::{rat, Cyclotomic};
use crate::permgrp::ConjClasses;

const PRIME_SEARCH_BOUND: u64 = 100_000_000;

fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| n % d != 0)
}

/// Least prime `p = 1 mod exponent` with `p^2 > 4 |G|`.
pub fn dixon_prime(exponent: u64, order: usize) -> Result<u64, CharError> {
    let mut p = exponent + 1;
    while p <= PRIME_SEARCH_BOUND {
        if (p as u128) * (p as u128) > 4 * order as u128 && is_prime(p) {
            return Ok(p);
        }
        p += exponent;
    }
    Err(CharError::NoPrime { exponent, order, bound: PRIME_SEARCH_BOUND })
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2;
    while d * d <= m {
        if m % d == 0 {
            factors.push(d);
            while m % d == 0 {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    (2..p).find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1)).expect("cyclic group")
}

/// Basis (rows) of the null space of an `m x n` matrix over `F_p`.
fn null_space(mut a: Vec<Vec<u64>>, n: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(r) = (row..a.len()).find(|&r| a[r][col] != 0) else { continue };
        a.swap(row, r);
        let inv = inv_mod(a[row][col], p);
        for x in a[row].iter_mut() {
            *x = *x * inv % p;
        }
        for r in 0..a.len() {
            if r != row && a[r][col] != 0 {
                let f = a[r][col];
                for c in 0..n {
                    a[r][c] = (a[r][c] + p * p - f * a[row][c] % p) % p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[r][f]) % p;
            }
            v
        })
        .collect()
}

/// `A[l][k] = #{x in C_j : x^-1 z_k in C_l}` for a fixed representative `z_k`,
/// so that `A w = w_j w` for every central character `w`.
fn class_matrix(cc: &ConjClasses, j: usize, p: u64) -> Vec<Vec<u64>> {
    let r = cc.len();
    let mut a = vec![vec![0u64; r]; r];
    let inv_members = cc.members(cc.inverse_class(j));
    for (k, z) in cc.reps().iter().enumerate() {
        for &y in inv_members {
            let l = cc.class_of(&cc.element(y as usize).then(z)).expect("closed under products");
            a[l][k] += 1;
        }
    }
    for row in a.iter_mut() {
        for x in row.iter_mut() {
            *x %= p;
        }
    }
    a
}

/// Splits the common eigenspaces of the class matrices into lines.
fn central_characters(cc: &ConjClasses, p: u64) -> Result<Vec<Vec<u64>>, CharError> {
    let r = cc.len();
    let matrices: Vec<Vec<Vec<u64>>> = (0..r).into_par_iter().map(|j| class_matrix(cc, j, p)).collect();
    // Each space is a list of basis column vectors.
    let identity: Vec<Vec<u64>> = (0..r).map(|i| (0..r).map(|k| u64::from(i == k)).collect()).collect();
    let mut spaces = vec![identity];
    for a in &matrices {
        if spaces.iter().all(|s| s.len() == 1) {
            break;
        }
        let mut next = Vec::new();
        for basis in spaces {
            if basis.len() == 1 {
                next.push(basis);
                continue;
            }
            let d = basis.len();
            let image: Vec<Vec<u64>> = basis
                .iter()
                .map(|v| (0..r).map(|l| (0..r).map(|k| a[l][k] * v[k] % p).sum::<u64>() % p).collect())
                .collect();
            let mut found = 0;
            for lambda in 0..p {
                // Columns of (A - lambda) B, as an r x d system in the coordinates.
                let system: Vec<Vec<u64>> = (0..r)
                    .map(|l| (0..d).map(|c| (image[c][l] + p - lambda * basis[c][l] % p) % p).collect())
                    .collect();
                let kernel = null_space(system, d, p);
                if kernel.is_empty() {
                    continue;
                }
                found += kernel.len();
                let sub: Vec<Vec<u64>> = kernel
                    .iter()
                    .map(|coords| {
                        (0..r).map(|l| (0..d).map(|c| coords[c] * basis[c][l] % p).sum::<u64>() % p).collect()
                    })
                    .collect();
                next.push(sub);
                if found == d {
                    break;
                }
            }
            if found != d {
                return Err(CharError::SplitFailure { dim: d });
            }
        }
        spaces = next;
    }
    if let Some(s) = spaces.iter().find(|s| s.len() != 1) {
        return Err(CharError::SplitFailure { dim: s.len() });
    }
    // Normalize so the identity class has value 1.
    Ok(spaces
        .into_iter()
        .map(|mut s| {
            let mut w = s.pop().expect("line");
            let inv = inv_mod(w[0], p);
            for x in w.iter_mut() {
                *x = *x * inv % p;
            }
            w
        })
        .collect())
}

/// Character table of the group underlying `cc`, with rows sorted by
/// degree and then by value order. Orthogonality is verified exactly.
pub fn dixon_character_table(cc: Arc<ConjClasses>) -> Result<CharacterTable, CharError> {
    let order = cc.group_order();
    let e = cc.exponent();
    let p = dixon_prime(e, order)?;
    let r = cc.len();
    let sizes: Vec<u64> = cc.sizes().iter().map(|&s| s as u64).collect();
    let omegas = central_characters(&cc, p)?;
    let z = pow_mod(primitive_root(p), (p - 1) / e, p);

    let mut rows = Vec::with_capacity(r);
    for w in omegas {
        let denom = (0..r).map(|k| w[k] * w[cc.inverse_class(k)] % p * inv_mod(sizes[k] % p, p) % p).sum::<u64>() % p;
        let d2 = (order as u64 % p) * inv_mod(denom, p) % p;
        let degree = (1..=p / 2).find(|&d| d * d % p == d2).ok_or(CharError::SplitFailure { dim: 1 })?;
        let modular: Vec<u64> = (0..r).map(|k| w[k] * degree % p * inv_mod(sizes[k] % p, p) % p).collect();
        let values = (0..r)
            .map(|k| {
                let o = cc.orders()[k];
                let zo = pow_mod(z, e / o, p);
                let inv_o = inv_mod(o % p, p);
                let terms: Vec<(i64, _)> = (0..o)
                    .map(|j| {
                        let s = (0..o)
                            .map(|l| {
                                let val = modular[cc.power_map(l as i64)[k] as usize];
                                val * pow_mod(zo, (o - j) * l % o, p) % p
                            })
                            .sum::<u64>()
                            % p;
                        let m = s * inv_o % p;
                        (j as i64, rat(m as i64, 1))
                    })
                    .collect();
                Cyclotomic::from_terms(o as u32, terms)
            })
            .collect();
        rows.push(ClassFunction::new(cc.clone(), values));
    }
    rows.sort_by(|a, b| {
        let da = a.degree().as_integer();
        let db = b.degree().as_integer();
        da.cmp(&db).then_with(|| a.values().cmp(b.values()))
    });
    let table = CharacterTable { classes: cc, irreducibles: rows, prime: p };
    table.verify_orthogonality()?;
    Ok(table)
}
