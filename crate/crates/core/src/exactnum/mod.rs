//! Exact arithmetic over the rationals and over cyclotomic fields.
//!
//! Rationals are arbitrary precision ([`Rational`]). A [`Cyclotomic`] is an
//! element of some `Q(zeta_n)` stored densely in the power basis modulo the
//! `n`-th cyclotomic polynomial, always at its minimal conductor, so that
//! structural equality is field equality.

mod cyclotomic;
mod field;
mod text;

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, Cyclotomic};
pub use field::{determinant, rank, solve, Field};

use thiserror::Error;

/// Arbitrary-precision rational, always in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

/// Errors raised by exact arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{k} is not coprime to the conductor {conductor}")]
    NotCoprime { k: i64, conductor: u32 },
    #[error("cannot parse `{0}` as an exact number")]
    Parse(String),
}

/// Builds the rational `num/den`.
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}
