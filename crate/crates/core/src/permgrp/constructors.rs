//! Concrete permutation groups.

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{PermError, PermGroup, Permutation, SmallField};

fn cycle(degree: usize, points: &[u32]) -> Permutation {
    Permutation::from_cycles(degree, &[points]).expect("valid cycle")
}

/// `S_n` on `{0, ..., n-1}`.
pub fn symmetric(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n);
    }
    let all: Vec<u32> = (0..n as u32).collect();
    PermGroup::new(n, vec![cycle(n, &[0, 1]), cycle(n, &all)]).expect("same degree")
}

/// `A_n` on `{0, ..., n-1}`.
pub fn alternating(n: usize) -> PermGroup {
    if n < 3 {
        return PermGroup::trivial(n);
    }
    // An n-cycle is even only for odd n; otherwise use the (n-1)-cycle on 1..n.
    let long: Vec<u32> = if n % 2 == 1 { (0..n as u32).collect() } else { (1..n as u32).collect() };
    PermGroup::new(n, vec![cycle(n, &[0, 1, 2]), cycle(n, &long)]).expect("same degree")
}

/// Cyclic group of order `n` acting regularly.
pub fn cyclic(n: usize) -> PermGroup {
    if n < 2 {
        return PermGroup::trivial(n);
    }
    let all: Vec<u32> = (0..n as u32).collect();
    PermGroup::new(n, vec![cycle(n, &all)]).expect("same degree")
}

/// `PSL_2(q)` on the `q + 1` points of the projective line; point `q` is infinity.
pub fn psl2(q: u32) -> Result<PermGroup, PermError> {
    if ![4, 5, 7, 8, 9, 11, 13].contains(&q) {
        return Err(PermError::Unsupported(format!("PSL2({q})")));
    }
    let f = SmallField::new(q)?;
    let inf = q;
    let degree = (q + 1) as usize;
    let moebius = |map: &dyn Fn(u32) -> u32| {
        let images: Vec<u32> = (0..=q).map(|x| if x == inf { inf } else { map(x) }).collect();
        Permutation::new(images)
    };
    let mut gens = Vec::new();
    // Translations by an additive basis p^i.
    let mut b = 1;
    for _ in 0..f.degree() {
        gens.push(moebius(&|x| f.add(x, b))?);
        b *= f.characteristic();
    }
    let a = f.primitive_element();
    let a2 = f.mul(a, a);
    if a2 != 1 {
        gens.push(moebius(&|x| f.mul(a2, x))?);
    }
    // x -> -1/x swaps 0 and infinity.
    let images: Vec<u32> = (0..=q)
        .map(|x| match x {
            0 => inf,
            x if x == inf => 0,
            x => f.neg(f.inv(x).expect("nonzero")),
        })
        .collect();
    gens.push(Permutation::new(images)?);
    PermGroup::new(degree, gens)
}

/// `SL_2(8) = PSL_2(8)` on the 9 points of the projective line over `F_8`.
pub fn sl2_8() -> PermGroup {
    psl2(8).expect("q = 8 is supported")
}

fn vectors(p: u32, dim: usize) -> Vec<Vec<u32>> {
    (1..p.pow(dim as u32))
        .map(|mut c| {
            (0..dim)
                .map(|_| {
                    let d = c % p;
                    c /= p;
                    d
                })
                .collect()
        })
        .collect()
}

fn vector_index(v: &[u32], p: u32) -> u32 {
    v.iter().rev().fold(0, |acc, &c| acc * p + c) - 1
}

/// Action of the elementary transvections `I + E_ij` on nonzero vectors of `F_p^dim`.
fn elementary_transvections(p: u32, dim: usize) -> Vec<Permutation> {
    let vs = vectors(p, dim);
    let mut gens = Vec::new();
    for i in 0..dim {
        for j in 0..dim {
            if i == j {
                continue;
            }
            let images: Vec<u32> = vs
                .iter()
                .map(|v| {
                    let mut w = v.clone();
                    w[i] = (w[i] + v[j]) % p;
                    vector_index(&w, p)
                })
                .collect();
            gens.push(Permutation::new(images).expect("invertible map"));
        }
    }
    gens
}

/// `SL_3(3)` on the 26 nonzero vectors of `F_3^3`; vector `v` has index
/// `v_0 + 3 v_1 + 9 v_2 - 1`.
pub fn sl3_3_on_26() -> PermGroup {
    PermGroup::new(26, elementary_transvections(3, 3)).expect("same degree").pruned()
}

/// `GL_3(2) = PSL_2(7)` on the 7 nonzero vectors of `F_2^3`, a subgroup of `A_7`.
pub fn gl3_2_on_7() -> PermGroup {
    PermGroup::new(7, elementary_transvections(2, 3)).expect("same degree").pruned()
}

/// `PSp_4(3)` on the 40 points of `P^3(F_3)`, generated by symplectic
/// transvections for `w(u, v) = u_0 v_2 + u_1 v_3 - u_2 v_0 - u_3 v_1`.
pub fn psp4_3_on_40() -> PermGroup {
    let p = 3u32;
    let points: Vec<Vec<u32>> = vectors(p, 4)
        .into_iter()
        .filter(|v| v.iter().find(|&&c| c != 0) == Some(&1))
        .collect();
    let normalize = |v: &[u32]| -> Vec<u32> {
        let lead = *v.iter().find(|&&c| c != 0).expect("nonzero");
        // Over F_3 the inverse of the leading entry is itself.
        v.iter().map(|&c| c * lead % p).collect()
    };
    let index_of = |v: &[u32]| points.iter().position(|w| w == v).expect("normalized point") as u32;
    let form = |u: &[u32], v: &[u32]| (u[0] * v[2] + u[1] * v[3] + 2 * u[2] * v[0] + 2 * u[3] * v[1]) % p;
    let gens: Vec<Permutation> = points
        .iter()
        .map(|a| {
            let images: Vec<u32> = points
                .iter()
                .map(|v| {
                    let t = form(v, a);
                    let w: Vec<u32> = v.iter().zip(a).map(|(x, y)| (x + t * y) % p).collect();
                    index_of(&normalize(&w))
                })
                .collect();
            Permutation::new(images).expect("invertible map")
        })
        .collect();
    PermGroup::new(40, gens).expect("same degree").pruned()
}

/// `S_5` inside `A_7`: even elements act on `{0..4}`, odd ones also swap 5 and 6.
pub fn s5_in_a7() -> PermGroup {
    PermGroup::new(7, vec![cycle(7, &[0, 1, 2, 3, 4]), Permutation::from_cycles(7, &[&[0, 1], &[5, 6]]).unwrap()])
        .expect("same degree")
}

/// Mathieu groups are outside the constructed range.
pub fn mathieu(n: usize) -> Result<PermGroup, PermError> {
    Err(PermError::MathieuNotConstructed(format!("M{n}")))
}

/// A subgroup of `g` of order `target` generated by an element of order
/// `orders.0` and one of order `orders.1`.
///
/// Random pairs come from a ChaCha stream seeded with `seed`; if none of
/// `attempts` pairs works, every pair with the first element fixed to
/// each candidate in turn is tried in index order.
pub fn find_two_generated_subgroup(
    g: &PermGroup,
    orders: (u64, u64),
    target: u128,
    seed: u64,
    attempts: usize,
) -> Result<PermGroup, PermError> {
    let elements = g.elements();
    let of_order = |k: u64| elements.iter().filter(|x| x.order() == k).cloned().collect::<Vec<_>>();
    let (xs, ys) = (of_order(orders.0), of_order(orders.1));
    if xs.is_empty() || ys.is_empty() {
        return Err(PermError::SubgroupNotFound(format!("no elements of orders {orders:?}")));
    }
    let try_pair = |x: &Permutation, y: &Permutation| {
        let h = PermGroup::new(g.degree(), vec![x.clone(), y.clone()]).expect("same degree");
        (h.order() == target).then_some(h)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..attempts {
        let x = xs.choose(&mut rng).expect("nonempty");
        let y = ys.choose(&mut rng).expect("nonempty");
        if let Some(h) = try_pair(x, y) {
            return Ok(h);
        }
    }
    for x in &xs {
        for y in &ys {
            if let Some(h) = try_pair(x, y) {
                return Ok(h);
            }
        }
    }
    Err(PermError::SubgroupNotFound(format!("order {target} from orders {orders:?}")))
}
