//! Exact polynomials, linear actions on forms, enumerated matrix groups,
//! named varieties and singular-point scans.

mod action;
mod groups;
mod matrix;
mod poly;
mod singular;
mod varieties;

pub use action::{act, invariant_space_dim_direct, is_invariant, monomials, reynolds, SymPowerTables};
pub use groups::{
    e6_cartan, e6_simple_reflections, klein_55_generators, klein_exponents, palatini_55_generators, permutation_matrix,
    weyl_e6, WeylE6,
};
pub use matrix::{group_closure, ExactMatrix, MatrixGroup, Scalar};
pub use poly::MultiPoly;
pub use singular::{jacobian_rank_at, reduce_point, singular_points_mod_p};
pub use varieties::{klein_cubic, palatini_quartic, variety, Variety, VARIETY_NAMES};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("form is not homogeneous")]
    NotHomogeneous,
    #[error("group enumeration exceeded {budget} elements")]
    BudgetExceeded { budget: usize },
    #[error("group is not enumerated")]
    NotEnumerated,
    #[error("matrix is not invertible")]
    NotInvertible,
    #[error("prime {p} is unusable here")]
    BadPrime { p: u64 },
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
    #[error("unknown variety `{0}`")]
    UnknownVariety(String),
}

#[cfg(test)]
mod tests;
