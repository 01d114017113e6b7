use num_integer::Integer;

use super::FanoError;

/// A solution of `2g - 2 = |G| (2g' - 2) + |G| sum (1 - 1/a_i)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HurwitzSolution {
    pub group_order: u64,
    pub signature: Vec<u64>,
    pub quotient_genus: u64,
}

impl HurwitzSolution {
    /// Both sides of the formula, multiplied out over the integers.
    pub fn check(&self, two_g_minus_2: i64) -> bool {
        let n = self.group_order as i64;
        let rhs = n * (2 * self.quotient_genus as i64 - 2) + self.signature.iter().map(|&a| n - n / a as i64).sum::<i64>();
        rhs == two_g_minus_2 && self.signature.iter().all(|&a| self.group_order % a == 0)
    }
}

/// All Riemann–Hurwitz data for a curve with `2g - 2 = two_g_minus_2 > 0`:
/// group orders `>= min_order` (and divisible by `divisible_by` when given),
/// quotient genus `g' >= 0`, branch orders `a_i` in `[2, max_branch]`.
/// Branch orders are element orders, so each `a_i` divides `|G|`.
/// Orders are bounded by `42 (2g - 2)`. Output is sorted.
pub fn hurwitz_enumerate(
    two_g_minus_2: u64,
    min_order: u64,
    max_branch: u64,
    divisible_by: Option<u64>,
) -> Result<Vec<HurwitzSolution>, FanoError> {
    if two_g_minus_2 == 0 || two_g_minus_2 % 2 == 1 {
        return Err(FanoError::InvalidInput(format!("2g-2 = {two_g_minus_2} must be positive and even")));
    }
    if divisible_by == Some(0) {
        return Err(FanoError::InvalidInput("divisor must be positive".into()));
    }
    let target = two_g_minus_2 as i64;
    let mut out = Vec::new();
    for n in min_order.max(1)..=42 * two_g_minus_2 {
        if divisible_by.is_some_and(|d| n % d != 0) {
            continue;
        }
        let branches: Vec<u64> = (2..=max_branch.min(n)).filter(|a| n % a == 0).collect();
        let ni = n as i64;
        let mut gq = 0u64;
        // n (2g' - 2) <= 2g - 2.
        while ni * (2 * gq as i64 - 2) <= target {
            let rest = target - ni * (2 * gq as i64 - 2);
            let mut sig = Vec::new();
            branch_sums(ni, &branches, 0, rest, &mut sig, &mut |s| {
                out.push(HurwitzSolution { group_order: n, signature: s.to_vec(), quotient_genus: gq });
            });
            gq += 1;
        }
    }
    out.sort();
    Ok(out)
}

/// Nondecreasing sequences from `branches[start..]` with
/// `sum (n - n/a) = rest`.
fn branch_sums(n: i64, branches: &[u64], start: usize, rest: i64, sig: &mut Vec<u64>, emit: &mut dyn FnMut(&[u64])) {
    if rest == 0 {
        emit(sig);
        return;
    }
    for (i, &a) in branches.iter().enumerate().skip(start) {
        let c = n - n / a as i64;
        if c > rest {
            break;
        }
        sig.push(a);
        branch_sums(n, branches, i, rest - c, sig, emit);
        sig.pop();
    }
}

/// Degrees `d` of surfaces whose orbit of size `m | |G|` is anticanonical:
/// `m d = (2g - 2) r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitDegreeReport {
    pub group_order: u64,
    pub two_g_minus_2: u64,
    /// `(m, smallest admissible d)` for each divisor `m`; every admissible
    /// `d` for that `m` is a multiple of it.
    pub per_divisor: Vec<(u64, u64)>,
    /// gcd of all smallest degrees: every solution has this dividing `d`.
    pub forced_divisor: u64,
}

impl OrbitDegreeReport {
    /// Admissible degrees `d <= max_d`.
    pub fn admissible_degrees(&self, max_d: u64) -> Vec<u64> {
        (1..=max_d).filter(|d| self.per_divisor.iter().any(|&(_, step)| d % step == 0)).collect()
    }
}

pub fn orbit_degree_constraint(group_order: u64, two_g_minus_2: u64) -> Result<OrbitDegreeReport, FanoError> {
    if group_order == 0 || two_g_minus_2 == 0 {
        return Err(FanoError::InvalidInput("inputs must be positive".into()));
    }
    let per_divisor: Vec<(u64, u64)> = (1..=group_order)
        .filter(|m| group_order % m == 0)
        .map(|m| (m, two_g_minus_2 / m.gcd(&two_g_minus_2)))
        .collect();
    let forced_divisor = per_divisor.iter().fold(0, |acc, &(_, d)| acc.gcd(&d));
    Ok(OrbitDegreeReport { group_order, two_g_minus_2, per_divisor, forced_divisor })
}
