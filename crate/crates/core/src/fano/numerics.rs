use num_traits::{One, Signed, Zero};

use super::FanoError;
use crate::exactnum::{int, rat, Rational};

/// Genera of smooth Fano threefolds with `Pic = Z (-K)`.
pub const FANO_GENERA: [i64; 10] = [2, 3, 4, 5, 6, 7, 8, 9, 10, 12];
const H12: [i64; 10] = [52, 30, 20, 14, 10, 7, 5, 3, 2, 0];

/// Genus, anticanonical degree, Picard rank and `h^{1,2}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FanoNumerics {
    pub genus: i64,
    pub anticanonical_cube: Rational,
    pub rho: i64,
    pub h12: i64,
}

impl FanoNumerics {
    /// The smooth Picard-rank-one Fano of genus `g`.
    pub fn smooth_rho1(g: i64) -> Result<Self, FanoError> {
        Ok(FanoNumerics { genus: g, anticanonical_cube: int(2 * g - 2), rho: 1, h12: fano_h12(g)? })
    }

    /// `-K^3 = 2g - 2`.
    pub fn is_gorenstein_consistent(&self) -> bool {
        self.anticanonical_cube == int(2 * self.genus - 2)
    }

    pub fn namikawa_bound(&self) -> i64 {
        namikawa_bound(self.rho, self.h12)
    }
}

/// `h^0(-K) = g + 2`.
pub fn h0_anticanonical(g: i64) -> i64 {
    g + 2
}

/// Number of quadrics cutting out the anticanonical model: `(g-2)(g-3)/2`.
pub fn quadric_count(g: i64) -> i64 {
    (g - 2) * (g - 3) / 2
}

/// `2g - 20`.
pub fn lefschetz(g: i64) -> i64 {
    2 * g - 20
}

/// `4 - dim H^3 = 4 - 2 h^{1,2}(g)`.
pub fn lefschetz_from_hodge(g: i64) -> Result<i64, FanoError> {
    Ok(4 - 2 * fano_h12(g)?)
}

pub fn fano_h12(g: i64) -> Result<i64, FanoError> {
    FANO_GENERA.iter().position(|&x| x == g).map(|i| H12[i]).ok_or(FanoError::NoSuchFano { g })
}

/// `20 - rho + h^{1,2}`.
pub fn namikawa_bound(rho: i64, h12: i64) -> i64 {
    20 - rho + h12
}

/// A smoothing `S x P^1` with `S` a del Pezzo surface of rank `rho - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductCase {
    pub rho: i64,
    pub anticanonical_cube: i64,
    pub genus: i64,
    pub h12: i64,
    pub bound: i64,
}

/// The cases `rho = 7, 8, 9`, where `-K^3 = 6(11 - rho)` and `h^{1,2} = 0`.
pub fn product_cases() -> Vec<ProductCase> {
    (7..=9)
        .map(|rho| {
            let cube = 6 * (11 - rho);
            ProductCase { rho, anticanonical_cube: cube, genus: cube / 2 + 1, h12: 0, bound: namikawa_bound(rho, 0) }
        })
        .collect()
}

/// Largest singular-point bound over [`product_cases`].
pub fn product_case_bound() -> i64 {
    product_cases().iter().map(|c| c.bound).max().expect("nonempty")
}

/// `dim |-K| = (-K)^3 / 2 + 2 - n/4` for `n` index-2 points.
pub fn anticanonical_dim_halfpoints(k3: &Rational, n: u32) -> Rational {
    k3 / int(2) + int(2) - rat(i64::from(n), 4)
}

/// Pairs `(l, -K^3)` with `dim |-K| = l`, i.e. `-K^3 = 2l - 4 + n/2 > 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntegralityReport {
    pub n: u32,
    pub offset: Rational,
    pub pairs: Vec<(u64, Rational)>,
}

pub fn solve_integrality(n: u32, l_max: u64) -> IntegralityReport {
    let offset = rat(i64::from(n), 2) - int(4);
    let pairs = (0..=l_max)
        .map(|l| (l, int(2 * l as i64) + &offset))
        .filter(|(_, k3)| k3.is_positive())
        .collect();
    IntegralityReport { n, offset, pairs }
}

/// Largest `m` such that `m` components of equal degree `d` with `2d`
/// integral can sum to `k3`; `None` unless `2 k3` is a positive integer.
pub fn max_components(k3: &Rational) -> Option<u64> {
    let twice = k3 * int(2);
    if !twice.denom().is_one() || twice.is_zero() || twice.is_negative() {
        return None;
    }
    num_traits::ToPrimitive::to_u64(twice.numer())
}
