//! Permutation groups backed by stabilizer chains: orbits, blocks,
//! transitivity, stabilizers, coset actions and conjugacy classes.

mod blocks;
mod chain;
mod classes;
mod constructors;
mod gf;
mod perm;
mod spec;

pub use blocks::BlockSystem;
pub use chain::StabChain;
pub use classes::ConjClasses;
pub use constructors::{
    alternating, cyclic, find_two_generated_subgroup, gl3_2_on_7, mathieu, psl2, psp4_3_on_40, s5_in_a7, sl2_8,
    sl3_3_on_26,
    symmetric,
};
pub use gf::SmallField;
pub use perm::Permutation;
pub use spec::{parse_group_spec, SUBGROUP_SEED};

use std::collections::BTreeSet;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("images {images:?} do not form a bijection")]
    NotBijective { images: Vec<u32> },
    #[error("cycles are not disjoint or leave the range 0..{degree}")]
    BadCycles { degree: usize },
    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("unsupported parameter: {0}")]
    Unsupported(String),
    #[error("Mathieu group {0} is not constructed")]
    MathieuNotConstructed(String),
    #[error("group is not transitive")]
    Intransitive,
    #[error("{0} is not a subgroup of the ambient group")]
    NotSubgroup(String),
    #[error("group of order {order} exceeds the enumeration budget {budget}")]
    BudgetExceeded { order: u128, budget: usize },
    #[error("unknown group spec `{0}`")]
    UnknownSpec(String),
    #[error("no subgroup found: {0}")]
    SubgroupNotFound(String),
}

/// A permutation group on `{0, ..., degree-1}` with its stabilizer chain.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: StabChain,
}

impl PermGroup {
    /// Schreier-Sims on the given generators; base points are chosen as the
    /// smallest moved point, so the chain is reproducible.
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self, PermError> {
        Self::with_base(degree, generators, &[])
    }

    /// Like [`new`](Self::new) but the base starts with `prefix`.
    pub fn with_base(degree: usize, generators: Vec<Permutation>, prefix: &[u32]) -> Result<Self, PermError> {
        for g in &generators {
            if g.degree() != degree {
                return Err(PermError::DegreeMismatch { expected: degree, found: g.degree() });
            }
        }
        if let Some(&p) = prefix.iter().find(|&&p| p as usize >= degree) {
            return Err(PermError::Unsupported(format!("base point {p} outside degree {degree}")));
        }
        let chain = StabChain::build(degree, &generators, prefix);
        Ok(PermGroup { degree, generators, chain })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, Vec::new()).expect("no generators")
    }

    /// Builds from image lists, validating each as a bijection.
    pub fn from_images(degree: usize, images: Vec<Vec<u32>>) -> Result<Self, PermError> {
        let gens = images.into_iter().map(Permutation::new).collect::<Result<Vec<_>, _>>()?;
        Self::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        &self.chain
    }

    pub fn order(&self) -> u128 {
        self.chain.order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain.contains(g)
    }

    pub fn identity(&self) -> Permutation {
        Permutation::identity(self.degree)
    }

    /// Every element, in chain index order.
    pub fn elements(&self) -> Vec<Permutation> {
        self.chain.elements()
    }

    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.degree == other.degree && self.generators.iter().all(|g| other.contains(g))
    }

    pub fn orbit(&self, p: u32) -> Vec<u32> {
        let mut seen = vec![false; self.degree];
        let mut orbit = vec![p];
        seen[p as usize] = true;
        let mut head = 0;
        while head < orbit.len() {
            let q = orbit[head];
            for g in &self.generators {
                let r = g.image(q);
                if !seen[r as usize] {
                    seen[r as usize] = true;
                    orbit.push(r);
                }
            }
            head += 1;
        }
        orbit.sort_unstable();
        orbit
    }

    /// Orbit partition, each orbit sorted, orbits ordered by least element.
    pub fn orbits(&self) -> Vec<Vec<u32>> {
        let mut seen = vec![false; self.degree];
        let mut out = Vec::new();
        for p in 0..self.degree as u32 {
            if seen[p as usize] {
                continue;
            }
            let orbit = self.orbit(p);
            for &q in &orbit {
                seen[q as usize] = true;
            }
            out.push(orbit);
        }
        out
    }

    pub fn is_transitive(&self) -> bool {
        self.degree <= 1 || self.orbit(0).len() == self.degree
    }

    pub fn point_stabilizer(&self, p: u32) -> Result<PermGroup, PermError> {
        if p as usize >= self.degree {
            return Err(PermError::Unsupported(format!("point {p} outside degree {}", self.degree)));
        }
        let chain = StabChain::build(self.degree, &self.generators, &[p]);
        let gens = chain.stabilizer_generators(1);
        PermGroup::new(self.degree, gens)
    }

    /// Pointwise stabilizer of a sequence of points.
    pub fn pointwise_stabilizer(&self, points: &[u32]) -> Result<PermGroup, PermError> {
        let chain = StabChain::build(self.degree, &self.generators, points);
        // Prefix levels may have been dropped only when trailing and trivial.
        let depth = points.len().min(chain.base().len());
        let gens = if chain.base().len() < points.len() { Vec::new() } else { chain.stabilizer_generators(depth) };
        PermGroup::new(self.degree, gens)
    }

    /// Largest `k <= 3` such that the action is `k`-transitive; 0 when intransitive.
    pub fn transitivity_degree(&self) -> usize {
        if !self.is_transitive() {
            return 0;
        }
        let mut k = 1;
        let mut fixed: Vec<u32> = Vec::new();
        while k < 3 && fixed.len() + 1 < self.degree {
            fixed.push(fixed.len() as u32);
            let stab = self.pointwise_stabilizer(&fixed).expect("valid points");
            let rest: BTreeSet<u32> = (fixed.len() as u32..self.degree as u32).collect();
            let first = *rest.iter().next().expect("nonempty");
            let orbit: BTreeSet<u32> = stab.orbit(first).into_iter().collect();
            if orbit != rest {
                break;
            }
            k += 1;
        }
        k
    }

    /// Group generated by `g^-1 h^-1 g h` for generator pairs, closed under
    /// conjugation by the generators.
    pub fn derived_subgroup(&self) -> PermGroup {
        let mut gens: Vec<Permutation> = Vec::new();
        for (i, a) in self.generators.iter().enumerate() {
            for b in &self.generators[i + 1..] {
                let c = a.inverse().then(&b.inverse()).then(a).then(b);
                if !c.is_identity() && !gens.contains(&c) {
                    gens.push(c);
                }
            }
        }
        self.normal_closure(gens)
    }

    fn normal_closure(&self, mut gens: Vec<Permutation>) -> PermGroup {
        let mut sub = PermGroup::new(self.degree, gens.clone()).expect("same degree");
        loop {
            let mut added = false;
            let snapshot = gens.clone();
            for x in &snapshot {
                for g in &self.generators {
                    let c = x.conjugate_by(g);
                    if !sub.contains(&c) {
                        gens.push(c);
                        sub = PermGroup::new(self.degree, gens.clone()).expect("same degree");
                        added = true;
                    }
                }
            }
            if !added {
                return sub;
            }
        }
    }

    /// Least common multiple of element orders.
    pub fn exponent(&self) -> u64 {
        use num_integer::Integer;
        self.elements().iter().fold(1u64, |e, g| e.lcm(&g.order()))
    }

    /// Action on right cosets `Hx` by right multiplication. Coset 0 is `H`.
    pub fn coset_action(&self, sub: &PermGroup) -> Result<PermGroup, PermError> {
        if !sub.is_subgroup_of(self) {
            return Err(PermError::NotSubgroup(format!("subgroup of order {}", sub.order())));
        }
        let h_elems = sub.elements();
        let canonical = |x: &Permutation| h_elems.iter().map(|h| h.then(x)).min().expect("nonempty subgroup");
        let mut reps = vec![canonical(&self.identity())];
        let mut index = std::collections::HashMap::new();
        index.insert(reps[0].clone(), 0u32);
        let mut images: Vec<Vec<u32>> = vec![Vec::new(); self.generators.len()];
        let mut head = 0;
        while head < reps.len() {
            let x = reps[head].clone();
            for (gi, g) in self.generators.iter().enumerate() {
                let y = canonical(&x.then(g));
                let next = index.len() as u32;
                let idx = *index.entry(y.clone()).or_insert_with(|| {
                    reps.push(y);
                    next
                });
                images[gi].push(idx);
            }
            head += 1;
        }
        let degree = reps.len();
        let gens = images.into_iter().map(Permutation::new).collect::<Result<Vec<_>, _>>()?;
        PermGroup::new(degree, gens)
    }

    /// Conjugacy classes by full enumeration; fails above `budget` elements.
    pub fn conjugacy_classes(&self, budget: usize) -> Result<ConjClasses, PermError> {
        ConjClasses::compute(self, budget)
    }

    /// Generators pruned greedily: a generator is kept only if it enlarges
    /// the group generated by the ones kept before it.
    pub fn pruned(&self) -> PermGroup {
        let mut kept: Vec<Permutation> = Vec::new();
        let mut current = PermGroup::trivial(self.degree);
        for g in &self.generators {
            if !current.contains(g) {
                kept.push(g.clone());
                current = PermGroup::new(self.degree, kept.clone()).expect("same degree");
                if current.order() == self.order() {
                    break;
                }
            }
        }
        current
    }
}

#[cfg(test)]
mod tests;
