use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use super::field::solve;
use super::{NumError, Rational};

/// An element of `Q(zeta_n)`.
///
/// `coeffs[i]` is the coefficient of `zeta_n^i` for `i < phi(n)`. The stored
/// conductor is the smallest `n` whose field contains the value, and is
/// never congruent to 2 mod 4.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Cyclotomic {
    conductor: u32,
    coeffs: Vec<Rational>,
}

pub fn euler_phi(n: u32) -> u32 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

fn prime_factors(mut n: u32) -> Vec<u32> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            out.push(p);
            while n % p == 0 {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Coefficients (constant term first) of the `n`-th cyclotomic polynomial.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    field_data(n).poly.clone()
}

fn compute_cyclotomic_polynomial(n: u32) -> Vec<i64> {
    // x^n - 1 divided by Phi_d for every proper divisor d.
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let div = &field_data(d).poly;
            num = exact_div_monic(&num, div);
        }
    }
    num
}

fn exact_div_monic(num: &[i64], div: &[i64]) -> Vec<i64> {
    let dn = num.len() - 1;
    let dd = div.len() - 1;
    let mut rem = num.to_vec();
    let mut quot = vec![0i64; dn - dd + 1];
    for k in (0..=dn - dd).rev() {
        let c = rem[k + dd];
        quot[k] = c;
        if c != 0 {
            for (i, &d) in div.iter().enumerate() {
                rem[k + i] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

/// Per-conductor tables: `Phi_n` and `x^k mod Phi_n` for `0 <= k < n`.
struct FieldData {
    phi: usize,
    poly: Vec<i64>,
    powers: Vec<Vec<i64>>,
}

fn field_data(n: u32) -> Arc<FieldData> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().unwrap().get(&n) {
        return d.clone();
    }
    // Computed outside the lock: Phi_n recursively needs Phi_d.
    let poly = if n == 1 {
        vec![-1, 1]
    } else {
        compute_cyclotomic_polynomial(n)
    };
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by x and reduce
        let top = cur[phi - 1];
        let mut next = vec![0i64; phi];
        next[1..phi].copy_from_slice(&cur[..phi - 1]);
        if top != 0 {
            for i in 0..phi {
                next[i] -= top * poly[i];
            }
        }
        cur = next;
    }
    let data = Arc::new(FieldData { phi, poly, powers });
    cache.lock().unwrap().entry(n).or_insert(data).clone()
}

/// Linear data for recognising elements of `Q(zeta_m)` inside `Q(zeta_n)`.
struct Descent {
    /// Embedding columns: image of `zeta_m^j` in the power basis of `Q(zeta_n)`.
    embed: Vec<Vec<i64>>,
    /// Rows of the embedding matrix forming an invertible square block.
    pivots: Vec<usize>,
    /// Inverse of that block.
    inverse: Vec<Vec<Rational>>,
}

fn descent_data(n: u32, m: u32) -> Arc<Descent> {
    static CACHE: OnceLock<Mutex<HashMap<(u32, u32), Arc<Descent>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(d) = cache.lock().unwrap().get(&(n, m)) {
        return d.clone();
    }
    let big = field_data(n);
    let small_phi = field_data(m).phi;
    let step = (n / m) as usize;
    let embed: Vec<Vec<i64>> = (0..small_phi)
        .map(|j| big.powers[(step * j) % n as usize].clone())
        .collect();
    // Greedy choice of independent rows of the phi(n) x phi(m) embedding matrix.
    let mut pivots = Vec::new();
    let mut basis: Vec<Vec<Rational>> = Vec::new();
    for row in 0..big.phi {
        let candidate: Vec<Rational> = embed.iter().map(|col| Rational::from_integer(col[row].into())).collect();
        let mut trial = basis.clone();
        trial.push(candidate.clone());
        if super::field::rank(trial) > basis.len() {
            basis.push(candidate);
            pivots.push(row);
            if pivots.len() == small_phi {
                break;
            }
        }
    }
    assert_eq!(pivots.len(), small_phi, "embedding Q(zeta_{m}) -> Q(zeta_{n}) is not injective");
    let inverse = invert_square(&basis);
    let data = Arc::new(Descent { embed, pivots, inverse });
    cache.lock().unwrap().entry((n, m)).or_insert(data).clone()
}

fn invert_square(a: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let k = a.len();
    let mut cols = Vec::with_capacity(k);
    for j in 0..k {
        let mut e = vec![Rational::zero(); k];
        e[j] = Rational::one();
        cols.push(solve(a.to_vec(), e).expect("pivot block is invertible"));
    }
    (0..k).map(|i| (0..k).map(|j| cols[j][i].clone()).collect()).collect()
}

fn rat_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

impl Cyclotomic {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_rational(r: Rational) -> Self {
        Cyclotomic { conductor: 1, coeffs: vec![r] }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(rat_int(n))
    }

    /// `zeta_n^k`, with `zeta_n = exp(2 pi i / n)`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        Self::from_terms(n, [(k, Rational::one())])
    }

    /// `sum c * zeta_n^k` over the given `(k, c)` pairs.
    pub fn from_terms<I>(n: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rational)>,
    {
        assert!(n > 0, "conductor must be positive");
        // Q(zeta_2m) = Q(zeta_m) for odd m, with zeta_2m = -zeta_m^((m+1)/2).
        let (field, remap): (u32, Box<dyn Fn(i64) -> (i64, bool)>) = if n % 4 == 2 {
            let m = n / 2;
            let half = (m as i64 + 1) / 2;
            (m, Box::new(move |k: i64| (k * half, k.rem_euclid(2) == 1)))
        } else {
            (n, Box::new(|k: i64| (k, false)))
        };
        let data = field_data(field);
        let mut coeffs = vec![Rational::zero(); data.phi];
        for (k, c) in terms {
            let (e, negate) = remap(k);
            let idx = e.rem_euclid(field as i64) as usize;
            let c = if negate { -c } else { c };
            for (slot, &v) in coeffs.iter_mut().zip(&data.powers[idx]) {
                if v != 0 {
                    *slot += &c * rat_int(v);
                }
            }
        }
        Self::normalized(field, coeffs)
    }

    /// Builds from raw power-basis coefficients of `Q(zeta_n)` (`n` not 2 mod 4),
    /// reducing to the minimal conductor.
    pub fn from_coeffs(n: u32, coeffs: Vec<Rational>) -> Self {
        assert!(n % 4 != 2, "conductor {n} is 2 mod 4");
        assert_eq!(coeffs.len(), euler_phi(n) as usize, "wrong coefficient count for conductor {n}");
        Self::normalized(n, coeffs)
    }

    /// `sqrt(d)` for an integer `d`, built from quadratic Gauss sums.
    pub fn sqrt_int(d: i64) -> Self {
        if d == 0 {
            return Self::zero();
        }
        let mut rest = d.unsigned_abs();
        let mut outside: i64 = 1;
        let mut result = if d < 0 { Self::root_of_unity(4, 1) } else { Self::one() };
        let mut p = 2u64;
        while p * p <= rest {
            while rest % (p * p) == 0 {
                rest /= p * p;
                outside *= p as i64;
            }
            if rest % p == 0 {
                rest /= p;
                result = &result * &Self::sqrt_prime(p as u32);
            }
            p += 1;
        }
        if rest > 1 {
            result = &result * &Self::sqrt_prime(rest as u32);
        }
        result.scale(&rat_int(outside))
    }

    fn sqrt_prime(p: u32) -> Self {
        if p == 2 {
            // zeta_8 + zeta_8^7
            return Self::from_terms(8, [(1, Rational::one()), (7, Rational::one())]);
        }
        let g = Self::gauss_sum(p);
        if p % 4 == 1 {
            g
        } else {
            // g = sqrt(-p) = i sqrt(p)
            &g * &Self::root_of_unity(4, 3)
        }
    }

    /// The quadratic Gauss sum `sum_a (a/p) zeta_p^a` for an odd prime `p`;
    /// equals `sqrt(p)` or `i sqrt(p)` according to `p mod 4`.
    pub fn gauss_sum(p: u32) -> Self {
        let squares: Vec<bool> = {
            let mut s = vec![false; p as usize];
            for a in 1..p {
                s[((a as u64 * a as u64) % p as u64) as usize] = true;
            }
            s
        };
        Self::from_terms(
            p,
            (1..p).map(|a| (a as i64, if squares[a as usize] { Rational::one() } else { -Rational::one() })),
        )
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.conductor == 1 && self.coeffs[0].is_one()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        (self.conductor == 1).then(|| &self.coeffs[0])
    }

    /// The value as an integer, when it is one.
    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational().filter(|r| r.is_integer()).map(|r| r.to_integer())
    }

    pub fn scale(&self, r: &Rational) -> Self {
        if r.is_zero() {
            return Self::zero();
        }
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Applies `zeta_n -> zeta_n^k`.
    pub fn galois_conjugate(&self, k: i64) -> Result<Self, NumError> {
        let n = self.conductor as i64;
        if k.gcd(&n) != 1 {
            return Err(NumError::NotCoprime { k, conductor: self.conductor });
        }
        if n == 1 {
            return Ok(self.clone());
        }
        let data = field_data(self.conductor);
        let mut coeffs = vec![Rational::zero(); data.phi];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let idx = ((i as i64) * k).rem_euclid(n) as usize;
            for (slot, &v) in coeffs.iter_mut().zip(&data.powers[idx]) {
                if v != 0 {
                    *slot += c * rat_int(v);
                }
            }
        }
        // Galois conjugates generate the same field: conductor unchanged.
        Ok(Cyclotomic { conductor: self.conductor, coeffs })
    }

    pub fn complex_conjugate(&self) -> Self {
        self.galois_conjugate(-1).expect("-1 is a unit")
    }

    pub fn is_real(&self) -> bool {
        *self == self.complex_conjugate()
    }

    pub fn inv(&self) -> Result<Self, NumError> {
        if self.is_zero() {
            return Err(NumError::DivisionByZero);
        }
        if let Some(r) = self.as_rational() {
            return Ok(Self::from_rational(r.recip()));
        }
        // Solve self * x = 1 through the multiplication matrix.
        let n = self.conductor;
        let phi = self.coeffs.len();
        let columns: Vec<Vec<Rational>> = (0..phi)
            .map(|j| {
                let zj = power_basis_vector(n, j);
                mul_raw(n, &self.coeffs, &zj)
            })
            .collect();
        let matrix: Vec<Vec<Rational>> = (0..phi).map(|i| (0..phi).map(|j| columns[j][i].clone()).collect()).collect();
        let mut rhs = vec![Rational::zero(); phi];
        rhs[0] = Rational::one();
        let x = solve(matrix, rhs).ok_or(NumError::DivisionByZero)?;
        Ok(Cyclotomic { conductor: n, coeffs: x })
    }

    pub fn div(&self, other: &Self) -> Result<Self, NumError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Coefficients of `self` written in `Q(zeta_n)`, for `conductor | n`.
    pub fn coeffs_in(&self, n: u32) -> Vec<Rational> {
        assert!(n % self.conductor == 0, "conductor {} does not divide {n}", self.conductor);
        let n = if n % 4 == 2 { n / 2 } else { n };
        lift(self.conductor, &self.coeffs, n)
    }

    /// Floating-point approximation `(re, im)`.
    pub fn to_complex(&self) -> (f64, f64) {
        let n = self.conductor as f64;
        let mut re = 0.0;
        let mut im = 0.0;
        for (i, c) in self.coeffs.iter().enumerate() {
            let v = c.to_f64().unwrap_or(f64::NAN);
            let t = 2.0 * std::f64::consts::PI * i as f64 / n;
            re += v * t.cos();
            im += v * t.sin();
        }
        (re, im)
    }

    fn normalized(mut n: u32, mut coeffs: Vec<Rational>) -> Self {
        loop {
            if coeffs.iter().skip(1).all(|c| c.is_zero()) {
                return Cyclotomic { conductor: 1, coeffs: vec![coeffs.swap_remove(0)] };
            }
            let mut descended = false;
            for q in prime_factors(n) {
                let mut m = n / q;
                if m % 4 == 2 {
                    m /= 2;
                }
                if let Some(b) = try_descend(n, m, &coeffs) {
                    n = m;
                    coeffs = b;
                    descended = true;
                    break;
                }
            }
            if !descended {
                return Cyclotomic { conductor: n, coeffs };
            }
        }
    }
}

fn power_basis_vector(n: u32, j: usize) -> Vec<Rational> {
    let phi = field_data(n).phi;
    let mut v = vec![Rational::zero(); phi];
    v[j] = Rational::one();
    v
}

/// Embeds power-basis coefficients of `Q(zeta_m)` into `Q(zeta_n)`.
fn lift(m: u32, coeffs: &[Rational], n: u32) -> Vec<Rational> {
    if m == n {
        return coeffs.to_vec();
    }
    let data = field_data(n);
    let step = (n / m) as usize;
    let mut out = vec![Rational::zero(); data.phi];
    for (j, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (slot, &v) in out.iter_mut().zip(&data.powers[(step * j) % n as usize]) {
            if v != 0 {
                *slot += c * rat_int(v);
            }
        }
    }
    out
}

fn try_descend(n: u32, m: u32, coeffs: &[Rational]) -> Option<Vec<Rational>> {
    let d = descent_data(n, m);
    let b: Vec<Rational> = d
        .inverse
        .iter()
        .map(|row| {
            row.iter()
                .zip(&d.pivots)
                .filter(|(_, &p)| !coeffs[p].is_zero())
                .fold(Rational::zero(), |acc, (r, &p)| acc + r * &coeffs[p])
        })
        .collect();
    // Verify the candidate reproduces every coordinate.
    for (row, target) in coeffs.iter().enumerate() {
        let mut s = Rational::zero();
        for (col, bj) in d.embed.iter().zip(&b) {
            if col[row] != 0 && !bj.is_zero() {
                s += bj * rat_int(col[row]);
            }
        }
        if &s != target {
            return None;
        }
    }
    Some(b)
}

/// Product of two power-basis vectors of `Q(zeta_n)`, reduced mod `Phi_n`.
fn mul_raw(n: u32, a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let data = field_data(n);
    let phi = data.phi;
    let mut raw = vec![Rational::zero(); 2 * phi - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                raw[i + j] += x * y;
            }
        }
    }
    for k in (phi..raw.len()).rev() {
        let c = std::mem::take(&mut raw[k]);
        if c.is_zero() {
            continue;
        }
        for i in 0..phi {
            let p = data.poly[i];
            if p != 0 {
                raw[k - phi + i] -= &c * rat_int(p);
            }
        }
    }
    raw.truncate(phi);
    raw
}

impl Add for &Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, rhs: &Cyclotomic) -> Cyclotomic {
        if self.conductor == rhs.conductor {
            let coeffs = self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
            return Cyclotomic::normalized(self.conductor, coeffs);
        }
        let n = self.conductor.lcm(&rhs.conductor);
        let a = lift(self.conductor, &self.coeffs, n);
        let b = lift(rhs.conductor, &rhs.coeffs, n);
        Cyclotomic::normalized(n, a.into_iter().zip(b).map(|(x, y)| x + y).collect())
    }
}

impl Sub for &Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, rhs: &Cyclotomic) -> Cyclotomic {
        self + &(-rhs)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic { conductor: self.conductor, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, rhs: &Cyclotomic) -> Cyclotomic {
        if let Some(r) = rhs.as_rational() {
            return self.scale(r);
        }
        if let Some(r) = self.as_rational() {
            return rhs.scale(r);
        }
        let n = self.conductor.lcm(&rhs.conductor);
        let a = lift(self.conductor, &self.coeffs, n);
        let b = lift(rhs.conductor, &rhs.coeffs, n);
        Cyclotomic::normalized(n, mul_raw(n, &a, &b))
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: Cyclotomic) -> Cyclotomic {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, rhs: &Cyclotomic) -> Cyclotomic {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl std::iter::Sum for Cyclotomic {
    fn sum<I: Iterator<Item = Cyclotomic>>(iter: I) -> Self {
        iter.fold(Cyclotomic::zero(), |a, b| &a + &b)
    }
}

impl From<i64> for Cyclotomic {
    fn from(n: i64) -> Self {
        Cyclotomic::from_int(n)
    }
}

impl From<Rational> for Cyclotomic {
    fn from(r: Rational) -> Self {
        Cyclotomic::from_rational(r)
    }
}

impl super::field::Field for Cyclotomic {
    fn zero() -> Self {
        Cyclotomic::zero()
    }
    fn one() -> Self {
        Cyclotomic::one()
    }
    fn is_zero(&self) -> bool {
        Cyclotomic::is_zero(self)
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
        self.inv().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::{int, rat};
    use proptest::prelude::*;

    fn z(n: u32, k: i64) -> Cyclotomic {
        Cyclotomic::root_of_unity(n, k)
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(euler_phi(420), 96);
    }

    #[test]
    fn gauss_period_of_seven_is_alpha() {
        // zeta7 + zeta7^2 + zeta7^4 = (-1 + sqrt(-7))/2
        let a = &(&z(7, 1) + &z(7, 2)) + &z(7, 4);
        assert_eq!(a.conductor(), 7);
        let rel = &(&(&a * &a) + &a) + &Cyclotomic::from_int(2);
        assert!(rel.is_zero());
        let via_sqrt = (&Cyclotomic::sqrt_int(-7) - &Cyclotomic::one()).scale(&rat(1, 2));
        assert_eq!(a, via_sqrt);
    }

    #[test]
    fn golden_ratio_from_fifth_roots() {
        let a = &(&Cyclotomic::one() + &z(5, 1)) + &z(5, 4);
        let rel = &(&a * &a) - &(&a + &Cyclotomic::one());
        assert!(rel.is_zero());
        assert_eq!(a, (&Cyclotomic::one() + &Cyclotomic::sqrt_int(5)).scale(&rat(1, 2)));
        assert!(a.is_real());
        let (re, im) = a.to_complex();
        assert!((re - 1.618_033_988).abs() < 1e-8 && im.abs() < 1e-12);
    }

    #[test]
    fn roots_multiply_to_one() {
        for n in 1..40u32 {
            let p = &z(n, 1) * &z(n, n as i64 - 1);
            assert!(p.is_one(), "n = {n}");
        }
    }

    #[test]
    fn conductor_is_minimal() {
        let v = &(&z(6, 1) - &z(6, 1)) + &Cyclotomic::from_int(3);
        assert_eq!(v.conductor(), 1);
        assert_eq!(v.as_rational(), Some(&int(3)));
        // zeta_6 lives in Q(zeta_3)
        assert_eq!(z(6, 1).conductor(), 3);
        // i = zeta_12^3
        assert_eq!(z(12, 3), z(4, 1));
        // sqrt(-3) has conductor 3, sqrt(3) conductor 12
        assert_eq!(Cyclotomic::sqrt_int(-3).conductor(), 3);
        assert_eq!(Cyclotomic::sqrt_int(3).conductor(), 12);
        assert_eq!(Cyclotomic::sqrt_int(8), Cyclotomic::sqrt_int(2).scale(&int(2)));
        // zeta_15^5 + zeta_15^10 = -1
        assert!((&(&z(15, 5) + &z(15, 10)) + &Cyclotomic::one()).is_zero());
    }

    #[test]
    fn square_roots_square_back() {
        for d in [-11i64, -7, -5, -3, -2, -1, 2, 3, 5, 6, 10, 12, 21] {
            let s = Cyclotomic::sqrt_int(d);
            assert_eq!(&s * &s, Cyclotomic::from_int(d), "d = {d}");
        }
    }

    #[test]
    fn galois_pairs_of_the_tables() {
        let alpha = (&Cyclotomic::sqrt_int(-7) - &Cyclotomic::one()).scale(&rat(1, 2));
        let abar = alpha.galois_conjugate(-1).unwrap();
        assert_ne!(alpha, abar);
        assert_eq!(&alpha + &abar, Cyclotomic::from_int(-1));
        assert_eq!(&alpha * &abar, Cyclotomic::from_int(2));

        let beta = (&Cyclotomic::sqrt_int(-11) - &Cyclotomic::one()).scale(&rat(1, 2));
        let bbar = beta.complex_conjugate();
        assert_eq!(&beta + &bbar, Cyclotomic::from_int(-1));
        assert_eq!(&beta * &bbar, Cyclotomic::from_int(3));

        let r = Cyclotomic::from_rational(rat(-5, 3));
        assert_eq!(r.galois_conjugate(7).unwrap(), r);
        assert!(matches!(alpha.galois_conjugate(14), Err(NumError::NotCoprime { .. })));
    }

    #[test]
    fn inverse_and_division_by_zero() {
        let a = &z(7, 1) + &Cyclotomic::from_int(2);
        let b = a.inv().unwrap();
        assert!((&a * &b).is_one());
        assert_eq!(Cyclotomic::zero().inv(), Err(NumError::DivisionByZero));
        assert_eq!(Cyclotomic::from_int(4).inv().unwrap(), Cyclotomic::from_rational(rat(1, 4)));
    }

    #[test]
    fn text_round_trip() {
        let a = &z(7, 1) + &z(7, 3).scale(&rat(-2, 5));
        let s = a.to_string();
        assert!(s.starts_with("cyc(7)["));
        assert_eq!(s.parse::<Cyclotomic>().unwrap(), a);
        assert_eq!(Cyclotomic::from_rational(rat(3, 4)).to_string(), "3/4");
        assert_eq!("-7/2".parse::<Cyclotomic>().unwrap(), Cyclotomic::from_rational(rat(-7, 2)));
        assert!("cyc(7)[1,2]".parse::<Cyclotomic>().is_err());
        assert!("zeta".parse::<Cyclotomic>().is_err());
    }

    fn arb_cyc() -> impl Strategy<Value = Cyclotomic> {
        let conductors = prop::sample::select(vec![1u32, 3, 4, 5, 7, 8, 11, 12, 15]);
        (conductors, prop::collection::vec((-3i64..=3, 1i64..=3), 1..6)).prop_map(|(n, cs)| {
            Cyclotomic::from_terms(n, cs.into_iter().enumerate().map(|(k, (a, b))| (k as i64, rat(a, b))))
        })
    }

    proptest! {
        #[test]
        fn ring_axioms(a in arb_cyc(), b in arb_cyc(), c in arb_cyc()) {
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            // canonical form: a - b == 0 iff representations match
            prop_assert_eq!((&a - &b).is_zero(), a == b);
        }

        #[test]
        fn conjugation_is_an_involution(a in arb_cyc()) {
            prop_assert_eq!(a.complex_conjugate().complex_conjugate(), a.clone());
            let s = a.to_string();
            prop_assert_eq!(s.parse::<Cyclotomic>().unwrap(), a);
        }
    }
}
