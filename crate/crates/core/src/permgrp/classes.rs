//! Conjugacy classes and power maps by full enumeration.

use num_integer::Integer;

use super::{PermError, PermGroup, Permutation};

/// Conjugacy classes of a fully enumerated group.
///
/// Classes are ordered by size, then by least element. Element indices are
/// the stabilizer chain indices of the group.
#[derive(Clone, Debug)]
pub struct ConjClasses {
    group: PermGroup,
    elements: Vec<Permutation>,
    element_class: Vec<u32>,
    reps: Vec<Permutation>,
    members: Vec<Vec<u32>>,
    orders: Vec<u64>,
    exponent: u64,
    /// `power_maps[k][c]` is the class of `g^k` for `g` in class `c`, `0 <= k < exponent`.
    power_maps: Vec<Vec<u32>>,
}

impl ConjClasses {
    pub(super) fn compute(group: &PermGroup, budget: usize) -> Result<Self, PermError> {
        let order = group.order();
        if order > budget as u128 {
            return Err(PermError::BudgetExceeded { order, budget });
        }
        let chain = group.chain();
        let elements = group.elements();
        let n = elements.len();
        let mut raw_class = vec![u32::MAX; n];
        let mut raw_members: Vec<Vec<u32>> = Vec::new();
        for start in 0..n {
            if raw_class[start] != u32::MAX {
                continue;
            }
            let c = raw_members.len() as u32;
            raw_class[start] = c;
            let mut orbit = vec![start as u32];
            let mut head = 0;
            while head < orbit.len() {
                let x = &elements[orbit[head] as usize];
                for g in group.generators() {
                    let y = chain.element_index(&x.conjugate_by(g)).expect("closed under conjugation");
                    if raw_class[y] == u32::MAX {
                        raw_class[y] = c;
                        orbit.push(y as u32);
                    }
                }
                head += 1;
            }
            raw_members.push(orbit);
        }

        let min_of = |m: &Vec<u32>| m.iter().map(|&i| &elements[i as usize]).min().expect("nonempty").clone();
        let mut keyed: Vec<(usize, Permutation, Vec<u32>)> =
            raw_members.into_iter().map(|mut m| {
                m.sort_unstable();
                (m.len(), min_of(&m), m)
            }).collect();
        keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));

        let mut element_class = vec![0u32; n];
        let mut reps = Vec::with_capacity(keyed.len());
        let mut members = Vec::with_capacity(keyed.len());
        for (c, (_, rep, m)) in keyed.into_iter().enumerate() {
            for &i in &m {
                element_class[i as usize] = c as u32;
            }
            reps.push(rep);
            members.push(m);
        }
        let orders: Vec<u64> = reps.iter().map(Permutation::order).collect();
        let exponent = orders.iter().fold(1u64, |e, o| e.lcm(o));

        let mut power_maps = vec![vec![0u32; reps.len()]; exponent as usize];
        for (c, rep) in reps.iter().enumerate() {
            let o = orders[c] as usize;
            let mut by_residue = Vec::with_capacity(o);
            let mut x = Permutation::identity(group.degree());
            for _ in 0..o {
                by_residue.push(element_class[chain.element_index(&x).expect("group element")]);
                x = x.then(rep);
            }
            for (k, row) in power_maps.iter_mut().enumerate() {
                row[c] = by_residue[k % o];
            }
        }

        Ok(ConjClasses { group: group.clone(), elements, element_class, reps, members, orders, exponent, power_maps })
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn group_order(&self) -> usize {
        self.elements.len()
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    /// Least element of each class.
    pub fn reps(&self) -> &[Permutation] {
        &self.reps
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.members.iter().map(Vec::len).collect()
    }

    pub fn size(&self, c: usize) -> usize {
        self.members[c].len()
    }

    pub fn centralizer_order(&self, c: usize) -> usize {
        self.group_order() / self.size(c)
    }

    /// Element orders per class.
    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    /// Element indices of class `c`, ascending.
    pub fn members(&self, c: usize) -> &[u32] {
        &self.members[c]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> &Permutation {
        &self.elements[idx]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.group.chain().element_index(g)
    }

    pub fn class_of_index(&self, idx: usize) -> usize {
        self.element_class[idx] as usize
    }

    pub fn class_of(&self, g: &Permutation) -> Option<usize> {
        self.index_of(g).map(|i| self.class_of_index(i))
    }

    /// Class map `c -> class of g^k`; `k` is read modulo the exponent.
    pub fn power_map(&self, k: i64) -> &[u32] {
        &self.power_maps[k.rem_euclid(self.exponent as i64) as usize]
    }

    pub fn inverse_class(&self, c: usize) -> usize {
        self.power_map(-1)[c] as usize
    }
}
