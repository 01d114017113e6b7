use std::collections::HashSet;
use std::sync::Arc;

use proptest::prelude::*;

use super::*;
use crate::chartab::{molien_invariant_dim, ClassFunction};
use crate::exactnum::{int, rat, Cyclotomic};
use crate::permgrp::{alternating, symmetric, Permutation};

fn sigma(n: usize, k: usize) -> MultiPoly {
    MultiPoly::elementary_symmetric(n, k)
}

fn perm_gens(g: &crate::permgrp::PermGroup) -> Vec<ExactMatrix<i64>> {
    g.generators().iter().map(permutation_matrix).collect()
}

#[test]
fn elementary_symmetric_counts() {
    assert_eq!(sigma(6, 3).terms().len(), 20);
    assert_eq!(sigma(7, 2).terms().len(), 21);
    assert!(sigma(3, 4).is_zero());
    assert_eq!(sigma(4, 0), MultiPoly::constant(4, Cyclotomic::one()));
}

#[test]
fn text_round_trip() {
    let f = klein_cubic();
    assert_eq!(MultiPoly::parse(5, &f.to_string()).unwrap(), f);
    let g = MultiPoly::parse(3, "x1^2*x2 - 3/2*x3^3 + cyc(3)[0,1]*x1*x2*x3 - x2^3").unwrap();
    assert_eq!(g.terms().len(), 4);
    assert_eq!(MultiPoly::parse(3, &g.to_string()).unwrap(), g);
    assert!(MultiPoly::parse(2, "x3").is_err());
    assert!(MultiPoly::parse(2, "x1^").is_err());
}

#[test]
fn identity_action() {
    let f = palatini_quartic();
    assert_eq!(act(&ExactMatrix::<i64>::identity(6), &f).unwrap(), f);
    assert!(matches!(act(&ExactMatrix::<i64>::identity(5), &f), Err(PolyError::DimensionMismatch { .. })));
}

#[test]
fn symmetric_functions_are_permutation_invariant() {
    let s4 = sigma(6, 4);
    for g in symmetric(6).elements().iter().step_by(7) {
        assert_eq!(act(&permutation_matrix(g), &s4).unwrap(), s4);
    }
}

#[test]
fn klein_symmetries() {
    assert_eq!(klein_exponents(), [1, 9, 4, 3, 5]);
    let (s, t) = klein_55_generators();
    let k = klein_cubic();
    assert_eq!(act(&s, &k).unwrap(), k);
    assert!(is_invariant(&k, &[s.clone(), t.clone()]).unwrap());
    let g = group_closure(5, vec![s, t], 1000).unwrap();
    assert_eq!(g.order(), Some(55));
    let (ps, pt) = palatini_55_generators();
    assert!(is_invariant(&palatini_quartic(), &[ps, pt]).unwrap());
    let swap = permutation_matrix(&Permutation::from_cycles(5, &[&[0, 1]]).unwrap());
    assert!(!is_invariant(&k, &[swap]).unwrap());
}

#[test]
fn named_varieties_are_invariant() {
    let s6 = perm_gens(&symmetric(6));
    for name in ["segre_cubic", "burkhardt"] {
        for f in &variety(name).unwrap().forms {
            assert!(is_invariant(f, &s6).unwrap(), "{name}");
        }
    }
    let a7 = perm_gens(&alternating(7));
    for f in &variety("x6prime").unwrap().forms {
        assert!(is_invariant(f, &a7).unwrap());
    }
    assert!(matches!(variety("quintic"), Err(PolyError::UnknownVariety(_))));
}

#[test]
fn reynolds_examples() {
    let trivial = group_closure::<i64>(3, vec![], 10).unwrap();
    let cube = MultiPoly::var(3, 0).pow(3);
    assert_eq!(reynolds(&cube, &trivial).unwrap(), cube);
    let s3 = group_closure(3, perm_gens(&symmetric(3)), 10).unwrap();
    let avg = reynolds(&cube, &s3).unwrap();
    let expected = (0..3).fold(MultiPoly::zero(3), |acc, i| &acc + &MultiPoly::var(3, i).pow(3));
    assert_eq!(avg, expected.scale(&Cyclotomic::from_rational(rat(1, 3))));
    let unenumerated = MatrixGroup::<i64>::new(3, vec![]).unwrap();
    assert_eq!(reynolds(&cube, &unenumerated), Err(PolyError::NotEnumerated));
}

/// Oracle: tau-invariant cubic monomials, counted by sigma-orbit. Only the
/// Klein cubic survives.
#[test]
fn klein_group_cubic_invariants() {
    let (s, t) = klein_55_generators();
    let g = group_closure(5, vec![s, t], 1000).unwrap();
    let a = klein_exponents();
    let (mons, _) = monomials(5, 3);
    let weight_zero: HashSet<Vec<u32>> =
        mons.into_iter().filter(|m| m.iter().zip(&a).map(|(&e, &w)| e as i64 * w).sum::<i64>() % 11 == 0).collect();
    let mut orbits = 0;
    let mut seen = HashSet::new();
    for m in &weight_zero {
        if seen.insert(m.clone()) {
            orbits += 1;
            let mut r = m.clone();
            for _ in 0..5 {
                r.rotate_right(1);
                seen.insert(r.clone());
            }
        }
    }
    assert_eq!(orbits, 1);
    assert_eq!(invariant_space_dim_direct(&g, 3).unwrap(), orbits);
}

#[test]
fn weyl_group_and_derived_subgroup() {
    let w = weyl_e6(60_000).unwrap();
    assert_eq!(w.group.order(), Some(51840));
    assert_eq!(w.roots.len(), 72);
    let on_roots = w.on_roots(w.group.generators());
    assert_eq!(on_roots.order(), 51840);
    let d = w.group.derived_subgroup(60_000).unwrap();
    assert_eq!(d.order(), Some(25920));
    assert_eq!(invariant_space_dim_direct(&d, 2).unwrap(), 1);
    assert_eq!(invariant_space_dim_direct(&d, 3).unwrap(), 0);
    // Matrices recovered from root permutations.
    for g in d.elements().unwrap().iter().step_by(1001) {
        assert_eq!(&w.matrix_of(&w.root_permutation(g)), g);
    }
}

#[test]
fn molien_matches_direct_for_derived_weyl() {
    let w = weyl_e6(60_000).unwrap();
    let d = w.group.derived_subgroup(60_000).unwrap();
    let perm = w.on_roots(d.generators());
    let cc = Arc::new(perm.conjugacy_classes(60_000).unwrap());
    let chi = ClassFunction::new(
        cc.clone(),
        cc.reps().iter().map(|p| Cyclotomic::from_int(w.matrix_of(p).trace())).collect(),
    );
    for deg in [2u32, 3] {
        assert_eq!(molien_invariant_dim(&chi, deg as usize).unwrap() as usize, invariant_space_dim_direct(&d, deg).unwrap());
    }
}

#[test]
fn segre_nodes_over_small_prime() {
    let forms = variety("segre_cubic").unwrap().forms;
    let p = 31;
    let sing = singular_points_mod_p(&forms, p).unwrap();
    let mut orbit: Vec<Vec<u64>> = symmetric(6)
        .elements()
        .iter()
        .map(|g| {
            let base = [1, 1, 1, -1, -1, -1];
            let pt: Vec<_> = (0..6).map(|i| int(base[g.image(i as u32) as usize])).collect();
            reduce_point(&pt, p).unwrap()
        })
        .collect();
    orbit.sort();
    orbit.dedup();
    assert_eq!(orbit.len(), 10);
    assert_eq!(sing, orbit);
    let exact: Vec<Cyclotomic> = [1, 1, 1, -1, -1, -1].iter().map(|&x| Cyclotomic::from_int(x)).collect();
    assert_eq!(jacobian_rank_at(&forms, &exact).unwrap(), 1);
}

#[test]
fn klein_cubic_smooth_mod_13() {
    assert!(singular_points_mod_p(&[klein_cubic()], 13).unwrap().is_empty());
    // Over F_11 the cubic acquires singular points.
    assert!(!singular_points_mod_p(&[klein_cubic()], 11).unwrap().is_empty());
}

#[test]
fn degenerate_inputs() {
    assert!(matches!(singular_points_mod_p(&[MultiPoly::zero(3)], 7), Err(PolyError::Degenerate(_))));
    assert!(matches!(jacobian_rank_at(&[MultiPoly::zero(3)], &vec![Cyclotomic::one(); 3]), Err(PolyError::Degenerate(_))));
    let inhomogeneous = &MultiPoly::var(2, 0) + &MultiPoly::var(2, 1).pow(2);
    assert_eq!(singular_points_mod_p(&[inhomogeneous], 7), Err(PolyError::NotHomogeneous));
    assert!(matches!(singular_points_mod_p(&[klein_cubic()], 12), Err(PolyError::BadPrime { .. })));
    let half = MultiPoly::var(1, 0).scale(&Cyclotomic::from_rational(rat(1, 7)));
    assert!(matches!(singular_points_mod_p(&[half], 7), Err(PolyError::BadPrime { .. })));
}

fn small_matrix() -> impl Strategy<Value = ExactMatrix<i64>> {
    proptest::collection::vec(-2i64..=2, 9).prop_map(|v| ExactMatrix::from_rows(v.chunks(3).map(<[i64]>::to_vec).collect()).unwrap())
}

fn small_poly() -> impl Strategy<Value = MultiPoly> {
    proptest::collection::vec((-3i64..=3, 0u32..3, 0u32..3, 0u32..3), 1..5).prop_map(|ts| {
        MultiPoly::from_terms(3, ts.into_iter().map(|(c, a, b, d)| (Cyclotomic::from_int(c), vec![a, b, d])))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn action_composes(g in small_matrix(), h in small_matrix(), f in small_poly()) {
        let lhs = act(&g.mul(&h), &f).unwrap();
        let rhs = act(&h, &act(&g, &f).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn text_form_round_trips(f in small_poly()) {
        prop_assert_eq!(MultiPoly::parse(3, &f.to_string()).unwrap(), f);
    }

    #[test]
    fn sym_power_matrix_matches_action(g in small_matrix(), d in 0u32..4) {
        let tables = SymPowerTables::new(3, d);
        let m = tables.matrix(&g);
        for (c, mono) in tables.basis(d as usize).iter().enumerate() {
            let image = act(&g, &MultiPoly::monomial(Cyclotomic::one(), mono.clone())).unwrap();
            for (r, target) in tables.basis(d as usize).iter().enumerate() {
                let coeff = image.terms().get(target).cloned().unwrap_or_else(Cyclotomic::zero);
                prop_assert_eq!(Cyclotomic::from_int(m[r][c]), coeff);
            }
        }
    }
}
