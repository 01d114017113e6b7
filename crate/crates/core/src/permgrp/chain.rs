//! Deterministic Schreier-Sims stabilizer chains.

use super::Permutation;

#[derive(Clone, Debug)]
struct Level {
    base_point: u32,
    generators: Vec<Permutation>,
    orbit: Vec<u32>,
    /// `position[p]` is the index of `p` in `orbit`, or `u32::MAX`.
    position: Vec<u32>,
    /// For each orbit point `p`: `u` with `u(base_point) = p`, and `u^-1`.
    transversal: Vec<(Permutation, Permutation)>,
}

impl Level {
    fn build(degree: usize, base_point: u32, generators: Vec<Permutation>) -> Self {
        let mut position = vec![u32::MAX; degree];
        let id = Permutation::identity(degree);
        let mut orbit = vec![base_point];
        let mut transversal = vec![(id.clone(), id)];
        position[base_point as usize] = 0;
        let mut head = 0;
        while head < orbit.len() {
            let p = orbit[head];
            for g in &generators {
                let q = g.image(p);
                if position[q as usize] == u32::MAX {
                    position[q as usize] = orbit.len() as u32;
                    orbit.push(q);
                    let u = transversal[head].0.then(g);
                    let uinv = u.inverse();
                    transversal.push((u, uinv));
                }
            }
            head += 1;
        }
        Level { base_point, generators, orbit, position, transversal }
    }

    fn lookup(&self, p: u32) -> Option<usize> {
        let i = self.position[p as usize];
        (i != u32::MAX).then_some(i as usize)
    }
}

/// Base and strong generating set with explicit transversals.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
    strong: Vec<Permutation>,
}

impl StabChain {
    /// Runs Schreier-Sims. The base starts with `prefix` and is extended by
    /// the smallest point moved by each new strong generator.
    pub fn build(degree: usize, generators: &[Permutation], prefix: &[u32]) -> Self {
        let mut base: Vec<u32> = Vec::new();
        for &p in prefix {
            if !base.contains(&p) {
                base.push(p);
            }
        }
        let mut strong: Vec<Permutation> = Vec::new();
        for g in generators {
            if !g.is_identity() && !strong.contains(g) {
                strong.push(g.clone());
            }
        }
        for s in &strong {
            if base.iter().all(|&b| s.image(b) == b) {
                base.push(s.smallest_moved_point().expect("non-identity"));
            }
        }
        let mut chain = StabChain { degree, levels: Vec::new(), strong };
        chain.rebuild_from(0, &base);

        let mut i = chain.levels.len() as isize - 1;
        while i >= 0 {
            match chain.find_unsifted(i as usize) {
                Some((residue, j)) => {
                    let mut base: Vec<u32> = chain.levels.iter().map(|l| l.base_point).collect();
                    if j == base.len() {
                        base.push(residue.smallest_moved_point().expect("non-identity residue"));
                    }
                    chain.strong.push(residue);
                    chain.rebuild_from(i as usize + 1, &base);
                    i = j as isize;
                }
                None => i -= 1,
            }
        }
        // Trailing levels with trivial orbit carry no information.
        while chain.levels.last().is_some_and(|l| l.orbit.len() == 1) {
            chain.levels.pop();
        }
        chain
    }

    fn rebuild_from(&mut self, start: usize, base: &[u32]) {
        self.levels.truncate(start);
        for l in start..base.len() {
            let gens: Vec<Permutation> = self
                .strong
                .iter()
                .filter(|s| base[..l].iter().all(|&b| s.image(b) == b))
                .cloned()
                .collect();
            self.levels.push(Level::build(self.degree, base[l], gens));
        }
    }

    /// First Schreier generator of level `i` that does not sift through the
    /// levels below it, with the residue and the level where sifting stopped.
    fn find_unsifted(&self, i: usize) -> Option<(Permutation, usize)> {
        let level = &self.levels[i];
        for (idx, &beta) in level.orbit.iter().enumerate() {
            let u = &level.transversal[idx].0;
            for s in &level.generators {
                let target = level.lookup(s.image(beta)).expect("orbit is closed");
                let h = u.then(s).then(&level.transversal[target].1);
                if h.is_identity() {
                    continue;
                }
                let (residue, j) = self.strip(h, i + 1);
                if j < self.levels.len() || !residue.is_identity() {
                    return Some((residue, j));
                }
            }
        }
        None
    }

    /// Sifts `g` through levels `start..`, returning the residue and the
    /// first level where the image of the base point left the orbit
    /// (`levels.len()` when sifting completed).
    fn strip(&self, mut g: Permutation, start: usize) -> (Permutation, usize) {
        for (l, level) in self.levels.iter().enumerate().skip(start) {
            match level.lookup(g.image(level.base_point)) {
                Some(idx) => g = g.then(&level.transversal[idx].1),
                None => return (g, l),
            }
        }
        (g, self.levels.len())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn base(&self) -> Vec<u32> {
        self.levels.iter().map(|l| l.base_point).collect()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn strong_generators(&self) -> &[Permutation] {
        &self.strong
    }

    /// Generators of the stabilizer of the first `depth` base points.
    pub fn stabilizer_generators(&self, depth: usize) -> Vec<Permutation> {
        match self.levels.get(depth) {
            Some(level) => level.generators.clone(),
            None => Vec::new(),
        }
    }

    pub fn basic_orbit(&self, depth: usize) -> &[u32] {
        &self.levels[depth].orbit
    }

    pub fn order(&self) -> u128 {
        self.levels.iter().map(|l| l.orbit.len() as u128).product()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (residue, j) = self.strip(g.clone(), 0);
        j == self.levels.len() && residue.is_identity()
    }

    /// Position of `g` in the mixed-radix enumeration of the group.
    pub fn element_index(&self, g: &Permutation) -> Option<usize> {
        let mut g = g.clone();
        let mut idx = 0usize;
        let mut radix = 1usize;
        for level in &self.levels {
            let pos = level.lookup(g.image(level.base_point))?;
            idx += pos * radix;
            radix *= level.orbit.len();
            g = g.then(&level.transversal[pos].1);
        }
        g.is_identity().then_some(idx)
    }

    /// Inverse of [`element_index`](Self::element_index).
    pub fn element_at(&self, mut idx: usize) -> Permutation {
        let mut positions = Vec::with_capacity(self.levels.len());
        for level in &self.levels {
            positions.push(idx % level.orbit.len());
            idx /= level.orbit.len();
        }
        let mut g = Permutation::identity(self.degree);
        for (level, &pos) in self.levels.iter().zip(&positions).rev() {
            g = g.then(&level.transversal[pos].0);
        }
        g
    }

    /// All elements, in index order.
    pub fn elements(&self) -> Vec<Permutation> {
        let mut out = vec![Permutation::identity(self.degree)];
        // Build products u_{k-1} ... u_0 so that index = p_0 + |O_0| (p_1 + ...).
        for level in self.levels.iter().rev() {
            let mut next = Vec::with_capacity(out.len() * level.orbit.len());
            for prefix in &out {
                for (u, _) in &level.transversal {
                    next.push(prefix.then(u));
                }
            }
            out = next;
        }
        // Level 0 varies fastest, matching `element_index`.
        debug_assert!(out.len() < 2 || self.element_index(&out[1]) == Some(1));
        out
    }
}
