//! Numerical constraints on Fano threefolds with a group action: genus
//! relations, singular-point bounds, basket inequalities, Riemann–Hurwitz
//! enumeration, orbit divisibility and the final Diophantine eliminations.

mod basket;
mod diophantine;
mod hurwitz;
mod numerics;


pub use basket::{basket_inequality_cases, Basket, OrbitProfile, OrbitType};
pub use diophantine::{
    case_a_lhs, case_a_rhs, case_b_lhs, case_b_rhs, diophantine_case_a, diophantine_case_b, verify_factorizations,
    DiophantineSolution, FactorizationFailure,
};
pub use hurwitz::{hurwitz_enumerate, orbit_degree_constraint, HurwitzSolution, OrbitDegreeReport};
pub use numerics::{
    anticanonical_dim_halfpoints, fano_h12, h0_anticanonical, lefschetz, lefschetz_from_hodge, max_components,
    namikawa_bound, product_case_bound, product_cases, quadric_count, solve_integrality, FanoNumerics,
    IntegralityReport, ProductCase, FANO_GENERA,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FanoError {
    #[error("no smooth Fano threefold of Picard rank one has genus {g}")]
    NoSuchFano { g: i64 },
    #[error("invalid input: {0}")]
    InvalidInput(String),
}
