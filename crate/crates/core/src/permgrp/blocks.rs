//! Block systems via union-find closure.

use super::{PermError, PermGroup};

/// A partition of the points into blocks permuted by the group.
/// Blocks are sorted internally and ordered by least element.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockSystem {
    pub blocks: Vec<Vec<u32>>,
}

impl BlockSystem {
    pub fn block_size(&self) -> usize {
        self.blocks[0].len()
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }
}

struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n as u32).collect() }
    }

    fn find(&mut self, mut x: u32) -> u32 {
        while self.parent[x as usize] != x {
            let up = self.parent[self.parent[x as usize] as usize];
            self.parent[x as usize] = up;
            x = up;
        }
        x
    }

    /// Returns false when already joined.
    fn union(&mut self, a: u32, b: u32) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
        self.parent[hi as usize] = lo;
        true
    }
}

impl PermGroup {
    /// Finest block system in which `a` and `b` share a block.
    pub fn block_system_joining(&self, a: u32, b: u32) -> BlockSystem {
        let mut uf = UnionFind::new(self.degree());
        let mut pending = Vec::new();
        if uf.union(a, b) {
            pending.push((a, b));
        }
        // Each recorded pair generates the relation; closing the pairs under
        // the generators closes the whole relation.
        while let Some((x, y)) = pending.pop() {
            for g in self.generators() {
                let (gx, gy) = (g.image(x), g.image(y));
                if uf.union(gx, gy) {
                    pending.push((gx, gy));
                }
            }
        }
        let mut blocks: Vec<Vec<u32>> = vec![Vec::new(); self.degree()];
        for p in 0..self.degree() as u32 {
            let r = uf.find(p);
            blocks[r as usize].push(p);
        }
        blocks.retain(|b| !b.is_empty());
        blocks.sort();
        BlockSystem { blocks }
    }

    /// All minimal nontrivial block systems.
    pub fn minimal_blocks(&self) -> Result<Vec<BlockSystem>, PermError> {
        if !self.is_transitive() {
            return Err(PermError::Intransitive);
        }
        let mut systems: Vec<BlockSystem> = Vec::new();
        for b in 1..self.degree() as u32 {
            let s = self.block_system_joining(0, b);
            if s.num_blocks() > 1 && !systems.contains(&s) {
                systems.push(s);
            }
        }
        // A system is fixed by its block through 0, which is blocks[0].
        let minimal: Vec<BlockSystem> = systems
            .iter()
            .filter(|s| {
                !systems.iter().any(|t| {
                    t.block_size() < s.block_size() && t.blocks[0].iter().all(|p| s.blocks[0].contains(p))
                })
            })
            .cloned()
            .collect();
        Ok(minimal)
    }

    pub fn is_primitive(&self) -> Result<bool, PermError> {
        Ok(self.minimal_blocks()?.is_empty())
    }
}
