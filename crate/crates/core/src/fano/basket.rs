use num_traits::Signed;

use super::FanoError;
use crate::exactnum::{int, rat, Rational};

/// Virtual basket points: `(index r, count n)` with `r >= 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basket {
    entries: Vec<(u32, u32)>,
}

impl Basket {
    pub fn new(entries: Vec<(u32, u32)>) -> Result<Self, FanoError> {
        if let Some(&(r, n)) = entries.iter().find(|&&(r, n)| r < 2 || n == 0) {
            return Err(FanoError::InvalidInput(format!("basket entry (r={r}, n={n})")));
        }
        Ok(Basket { entries })
    }

    pub fn entries(&self) -> &[(u32, u32)] {
        &self.entries
    }

    /// `sum n (r - 1/r)`.
    pub fn rr_sum(&self) -> Rational {
        self.entries.iter().map(|&(r, n)| int(i64::from(n)) * index_weight(r)).sum()
    }
}

/// `r - 1/r`.
fn index_weight(r: u32) -> Rational {
    let r = i64::from(r);
    rat(r * r - 1, r)
}

/// An orbit of `size` points, each carrying basket points of the given
/// indices (sorted).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitType {
    pub size: u32,
    pub indices: Vec<u32>,
}

impl OrbitType {
    pub fn weight(&self) -> Rational {
        int(i64::from(self.size)) * self.indices.iter().map(|&r| index_weight(r)).sum::<Rational>()
    }
}

/// A multiset of orbits, sorted.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct OrbitProfile {
    pub orbits: Vec<OrbitType>,
}

impl OrbitProfile {
    pub fn total(&self) -> Rational {
        self.orbits.iter().map(OrbitType::weight).sum()
    }

    /// Every orbit carries exactly one basket point per singular point.
    pub fn is_single_index(&self) -> bool {
        self.orbits.iter().all(|o| o.indices.len() == 1)
    }

    pub fn has_multi_entry_orbit(&self) -> bool {
        self.orbits.iter().any(|o| o.indices.len() > 1)
    }

    pub fn basket(&self) -> Basket {
        let mut entries: Vec<(u32, u32)> = Vec::new();
        for o in &self.orbits {
            for &r in &o.indices {
                match entries.iter_mut().find(|e| e.0 == r) {
                    Some(e) => e.1 += o.size,
                    None => entries.push((r, o.size)),
                }
            }
        }
        entries.sort_unstable();
        Basket { entries }
    }
}

fn within(x: &Rational, bound: &Rational, strict: bool) -> bool {
    if strict {
        x < bound
    } else {
        x <= bound
    }
}

/// All orbit profiles with every orbit of size `>= min_orbit` and
/// `sum n_i sum_j (r_ij - 1/r_ij)` below `bound` (or at most `bound` when
/// `strict` is false). Output is sorted.
pub fn basket_inequality_cases(min_orbit: u32, bound: &Rational, strict: bool) -> Result<Vec<OrbitProfile>, FanoError> {
    if min_orbit == 0 {
        return Err(FanoError::InvalidInput("min_orbit must be positive".into()));
    }
    if !bound.is_positive() {
        return Err(FanoError::InvalidInput(format!("bound {bound} must be positive")));
    }
    let mut types = Vec::new();
    let mut size = min_orbit;
    // Weight of an orbit is at least 3/2 per point.
    while within(&(int(i64::from(size)) * rat(3, 2)), bound, strict) {
        let mut indices = Vec::new();
        index_lists(size, 2, &mut indices, &int(0), bound, strict, &mut types);
        size += 1;
    }
    types.sort();
    let weights: Vec<Rational> = types.iter().map(OrbitType::weight).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    profiles(&types, &weights, 0, &int(0), bound, strict, &mut chosen, &mut out);
    out.sort();
    Ok(out)
}

fn index_lists(
    size: u32,
    min_r: u32,
    cur: &mut Vec<u32>,
    acc: &Rational,
    bound: &Rational,
    strict: bool,
    out: &mut Vec<OrbitType>,
) {
    let n = int(i64::from(size));
    let mut r = min_r;
    loop {
        let next = acc + &n * index_weight(r);
        if !within(&next, bound, strict) {
            break;
        }
        cur.push(r);
        out.push(OrbitType { size, indices: cur.clone() });
        index_lists(size, r, cur, &next, bound, strict, out);
        cur.pop();
        r += 1;
    }
}

#[allow(clippy::too_many_arguments)]
fn profiles(
    types: &[OrbitType],
    weights: &[Rational],
    start: usize,
    acc: &Rational,
    bound: &Rational,
    strict: bool,
    chosen: &mut Vec<usize>,
    out: &mut Vec<OrbitProfile>,
) {
    for i in start..types.len() {
        let next = acc + &weights[i];
        if !within(&next, bound, strict) {
            continue;
        }
        chosen.push(i);
        out.push(OrbitProfile { orbits: chosen.iter().map(|&k| types[k].clone()).collect() });
        profiles(types, weights, i, &next, bound, strict, chosen, out);
        chosen.pop();
    }
}
