//! Singular points of projective complete intersections over `F_p`, and
//! exact Jacobian ranks at given points.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use rayon::prelude::*;

use super::{MultiPoly, PolyError};
use crate::exactnum::{rank, Cyclotomic, Rational};

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

fn reduce(r: &Rational, p: u64) -> Result<u64, PolyError> {
    let pb = BigInt::from(p);
    let den = r.denom().mod_floor(&pb).to_u64().expect("small");
    if den == 0 {
        return Err(PolyError::BadPrime { p });
    }
    let num = r.numer().mod_floor(&pb).to_u64().expect("small");
    Ok(num * inv_mod(den, p) % p)
}

/// A polynomial with coefficients reduced mod `p`.
#[derive(Clone, Debug)]
struct ModPoly {
    terms: Vec<(u64, Vec<u32>)>,
}

impl ModPoly {
    fn new(f: &MultiPoly, p: u64) -> Result<Self, PolyError> {
        let mut terms = Vec::new();
        for (e, c) in f.terms() {
            let r = c.as_rational().ok_or_else(|| PolyError::Degenerate(format!("non-rational coefficient {c}")))?;
            let v = reduce(r, p)?;
            if v != 0 {
                terms.push((v, e.clone()));
            }
        }
        Ok(ModPoly { terms })
    }

    /// `powers[i][k] = x_i^k`.
    fn eval(&self, powers: &[Vec<u64>], p: u64) -> u64 {
        let mut s = 0u64;
        for (c, e) in &self.terms {
            let mut t = *c;
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t * powers[i][k as usize] % p;
                }
            }
            s += t;
        }
        s % p
    }
}

fn rank_mod(mut a: Vec<Vec<u64>>, p: u64) -> usize {
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p);
        for i in r + 1..a.len() {
            if a[i][c] != 0 {
                let f = a[i][c] * inv % p;
                for k in c..cols {
                    a[i][k] = (a[i][k] + p - f * a[r][k] % p) % p;
                }
            }
        }
        r += 1;
    }
    r
}

fn check_forms(forms: &[MultiPoly]) -> Result<usize, PolyError> {
    let n = forms.first().ok_or_else(|| PolyError::Degenerate("no forms".into()))?.nvars();
    for f in forms {
        if f.nvars() != n {
            return Err(PolyError::DimensionMismatch { expected: n, found: f.nvars() });
        }
        if f.is_zero() {
            return Err(PolyError::Degenerate("zero polynomial".into()));
        }
        if !f.is_homogeneous() {
            return Err(PolyError::NotHomogeneous);
        }
    }
    Ok(n)
}

/// Rank of the Jacobian of `forms` at `point`, exactly.
pub fn jacobian_rank_at(forms: &[MultiPoly], point: &[Cyclotomic]) -> Result<usize, PolyError> {
    let n = check_forms(forms)?;
    if point.len() != n {
        return Err(PolyError::DimensionMismatch { expected: n, found: point.len() });
    }
    let rows: Vec<Vec<Cyclotomic>> = forms.iter().map(|f| (0..n).map(|i| f.derivative(i).eval(point)).collect()).collect();
    Ok(rank(rows))
}

/// Scales a vector mod `p` so its first nonzero entry is 1.
fn normalize(v: &mut [u64], p: u64) {
    if let Some(&lead) = v.iter().find(|&&x| x != 0) {
        let inv = inv_mod(lead, p);
        for x in v.iter_mut() {
            *x = *x * inv % p;
        }
    }
}

/// Basis of the common kernel of linear forms given by coefficient rows.
fn kernel_mod(rows: Vec<Vec<u64>>, n: usize, p: u64) -> Vec<Vec<u64>> {
    let mut a = rows;
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(piv) = (r..a.len()).find(|&i| a[i][c] != 0) else { continue };
        a.swap(r, piv);
        let inv = inv_mod(a[r][c], p);
        for x in a[r].iter_mut() {
            *x = *x * inv % p;
        }
        for i in 0..a.len() {
            if i != r && a[i][c] != 0 {
                let f = a[i][c];
                for k in 0..n {
                    a[i][k] = (a[i][k] + p - f * a[r][k] % p) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![0u64; n];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - a[i][f]) % p;
            }
            v
        })
        .collect()
}

/// Points of the projective variety `forms = 0` over `F_p` where the
/// Jacobian has rank below the number of forms. Linear forms are
/// eliminated first; the remaining space is scanned exhaustively.
/// Points are normalized (first nonzero coordinate 1) and sorted.
pub fn singular_points_mod_p(forms: &[MultiPoly], p: u64) -> Result<Vec<Vec<u64>>, PolyError> {
    let n = check_forms(forms)?;
    if p < 2 || (2..p).take_while(|d| d * d <= p).any(|d| p % d == 0) || p > 1 << 31 {
        return Err(PolyError::BadPrime { p });
    }
    let linear_rows: Vec<Vec<u64>> = forms
        .iter()
        .filter(|f| f.degree() == Some(1))
        .map(|f| {
            let m = ModPoly::new(f, p)?;
            let mut row = vec![0u64; n];
            for (c, e) in &m.terms {
                row[e.iter().position(|&k| k == 1).expect("linear")] = *c;
            }
            Ok(row)
        })
        .collect::<Result<_, PolyError>>()?;
    let basis = if linear_rows.is_empty() {
        (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect()
    } else {
        kernel_mod(linear_rows, n, p)
    };
    let k = basis.len();
    if k == 0 {
        return Ok(Vec::new());
    }
    let compiled: Vec<ModPoly> = forms.iter().map(|f| ModPoly::new(f, p)).collect::<Result<_, _>>()?;
    let grads: Vec<Vec<ModPoly>> = forms
        .iter()
        .map(|f| (0..n).map(|i| ModPoly::new(&f.derivative(i), p)).collect::<Result<_, _>>())
        .collect::<Result<_, _>>()?;
    let max_deg = forms.iter().filter_map(MultiPoly::degree).max().unwrap_or(1) as usize;
    let codim = forms.len();

    // Points of P^{k-1}: leading coordinate `lead` is 1, earlier ones 0,
    // later ones free. Work is split by (lead, first free coordinate).
    let mut strata: Vec<(usize, u64)> = Vec::new();
    for lead in 0..k {
        if lead + 1 < k {
            strata.extend((0..p).map(|v| (lead, v)));
        } else {
            strata.push((lead, 0));
        }
    }
    let mut found: Vec<Vec<u64>> = strata
        .par_iter()
        .flat_map_iter(|&(lead, first)| {
            let mut out = Vec::new();
            let free = k.saturating_sub(lead + 2);
            let count = p.pow(free as u32);
            let mut y = vec![0u64; k];
            let mut x = vec![0u64; n];
            let mut powers = vec![vec![1u64; max_deg + 1]; n];
            for code in 0..count {
                y.iter_mut().for_each(|v| *v = 0);
                y[lead] = 1;
                if lead + 1 < k {
                    y[lead + 1] = first;
                }
                let mut c = code;
                for slot in y.iter_mut().skip(lead + 2) {
                    *slot = c % p;
                    c /= p;
                }
                for (i, xi) in x.iter_mut().enumerate() {
                    *xi = (0..k).map(|j| y[j] * basis[j][i] % p).sum::<u64>() % p;
                }
                for (i, row) in powers.iter_mut().enumerate() {
                    for e in 1..=max_deg {
                        row[e] = row[e - 1] * x[i] % p;
                    }
                }
                if compiled.iter().any(|f| f.eval(&powers, p) != 0) {
                    continue;
                }
                let jac: Vec<Vec<u64>> = grads.iter().map(|g| g.iter().map(|d| d.eval(&powers, p)).collect()).collect();
                if rank_mod(jac, p) < codim {
                    let mut pt = x.clone();
                    normalize(&mut pt, p);
                    out.push(pt);
                }
            }
            out
        })
        .collect();
    found.sort();
    found.dedup();
    Ok(found)
}

/// Reduction mod `p` of a rational projective point, normalized.
pub fn reduce_point(point: &[Rational], p: u64) -> Result<Vec<u64>, PolyError> {
    let mut v: Vec<u64> = point.iter().map(|r| reduce(r, p)).collect::<Result<_, _>>()?;
    if v.iter().all(|&x| x == 0) {
        return Err(PolyError::Degenerate("point reduces to zero".into()));
    }
    normalize(&mut v, p);
    Ok(v)
}
