use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FanoError;

/// Positive integers with `(2g-2) alpha - 11 beta = 11` and
/// `(2g-2) alpha^2 - 22 alpha beta - 22 beta^2 = -22`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DiophantineSolution {
    pub k: u64,
    pub alpha: u64,
    pub beta: u64,
    pub g: u64,
}

/// `-1 - k a^2 + a (2ka - 1) + (2ka - 1)^2`.
pub fn case_a_lhs(k: i128, a: i128) -> i128 {
    let b = 2 * k * a - 1;
    -1 - k * a * a + a * b + b * b
}

/// `a (4k + 1)(ka - 1)`.
pub fn case_a_rhs(k: i128, a: i128) -> i128 {
    a * (4 * k + 1) * (k * a - 1)
}

/// `-1 - 11 h k^2 + 11 k (2hk - 1) + (2hk - 1)^2` with `h = g - 1`.
pub fn case_b_lhs(h: i128, k: i128) -> i128 {
    let b = 2 * h * k - 1;
    -1 - 11 * h * k * k + 11 * k * b + b * b
}

/// `k (11 + 4h)(hk - 1)`.
pub fn case_b_rhs(h: i128, k: i128) -> i128 {
    k * (11 + 4 * h) * (h * k - 1)
}

/// Case `g - 1 = 11k`: `beta = 2k alpha - 1` and `alpha (4k+1)(k alpha - 1) = 0`.
/// With `k, alpha > 0` this forces `k alpha = 1`.
pub fn diophantine_case_a() -> Vec<DiophantineSolution> {
    // Factor pairs of k alpha = 1.
    (1..=1u64)
        .filter(|k| 1 % k == 0)
        .map(|k| {
            let alpha = 1 / k;
            DiophantineSolution { k, alpha, beta: 2 * k * alpha - 1, g: 11 * k + 1 }
        })
        .collect()
}

/// Case `alpha = 11k`: `beta = 2(g-1)k - 1` and `k (11 + 4(g-1))((g-1)k - 1) = 0`.
/// For each `3 <= g <= g_max` the only positive root would be `k = 1/(g-1)`.
pub fn diophantine_case_b(g_max: u64) -> Result<Vec<DiophantineSolution>, FanoError> {
    if g_max < 3 {
        return Err(FanoError::InvalidInput(format!("g_max = {g_max} must be at least 3")));
    }
    let mut out = Vec::new();
    for g in 3..=g_max {
        let h = g - 1;
        if 1 % h == 0 {
            let k = 1 / h;
            out.push(DiophantineSolution { k, alpha: 11 * k, beta: 2 * h * k - 1, g });
        }
    }
    Ok(out)
}

/// The factorization identity that failed and where.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FactorizationFailure {
    pub case: char,
    pub x: i128,
    pub y: i128,
}

/// Checks both factorization identities at `samples` seeded random points.
pub fn verify_factorizations(seed: u64, samples: usize) -> Result<(), FactorizationFailure> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let x: i128 = rng.gen_range(-10_000..=10_000);
        let y: i128 = rng.gen_range(-10_000..=10_000);
        if case_a_lhs(x, y) != case_a_rhs(x, y) {
            return Err(FactorizationFailure { case: 'A', x, y });
        }
        if case_b_lhs(x, y) != case_b_rhs(x, y) {
            return Err(FactorizationFailure { case: 'B', x, y });
        }
    }
    Ok(())
}
