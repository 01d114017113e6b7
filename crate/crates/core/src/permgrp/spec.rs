//! Group spec strings such as `A7`, `PSL2(11)`, `SL3(3):26` or `coset:A7/PSL2(7)`.

use super::constructors::*;
use super::{PermError, PermGroup};

/// Seed for the subgroup search used when a coset spec names `A5` in `PSL2(11)`.
pub const SUBGROUP_SEED: u64 = 0;

/// Parses a group spec string into a permutation group.
pub fn parse_group_spec(spec: &str) -> Result<PermGroup, PermError> {
    let s = spec.trim();
    if let Some(rest) = s.strip_prefix("coset:") {
        let (g, h) = rest.split_once('/').ok_or_else(|| PermError::UnknownSpec(spec.to_string()))?;
        let ambient = parse_group_spec(g)?;
        let sub = subgroup_in(&ambient, h.trim())?;
        return ambient.coset_action(&sub);
    }
    let unknown = || PermError::UnknownSpec(spec.to_string());
    if let Some(n) = s.strip_prefix('M').and_then(|n| n.parse::<usize>().ok()) {
        return mathieu(n);
    }
    for (prefix, ctor) in [("A", alternating as fn(usize) -> PermGroup), ("S", symmetric), ("C", cyclic)] {
        if let Some(n) = s.strip_prefix(prefix).and_then(|n| n.parse::<usize>().ok()) {
            if n > 64 {
                return Err(PermError::Unsupported(format!("degree {n}")));
            }
            return Ok(ctor(n));
        }
    }
    if let Some(q) = s.strip_prefix("PSL2(").and_then(|r| r.strip_suffix(')')) {
        return psl2(q.parse().map_err(|_| unknown())?);
    }
    match s {
        "SL2(8)" => Ok(sl2_8()),
        "SL3(3):26" => Ok(sl3_3_on_26()),
        "PSp4(3):40" => Ok(psp4_3_on_40()),
        "GL3(2):7" => Ok(gl3_2_on_7()),
        _ => Err(unknown()),
    }
}

/// Resolves a subgroup name inside an ambient group of the same degree.
fn subgroup_in(ambient: &PermGroup, name: &str) -> Result<PermGroup, PermError> {
    let degree = ambient.degree();
    let candidate = match (name, degree) {
        ("PSL2(7)" | "GL3(2)", 7) => gl3_2_on_7(),
        ("S5", 7) => s5_in_a7(),
        ("A5", 12) => find_two_generated_subgroup(ambient, (2, 5), 60, SUBGROUP_SEED, 2000)?,
        _ => {
            let g = parse_group_spec(name)?;
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch { expected: degree, found: g.degree() });
            }
            g
        }
    };
    if !candidate.is_subgroup_of(ambient) {
        return Err(PermError::NotSubgroup(name.to_string()));
    }
    Ok(candidate)
}
