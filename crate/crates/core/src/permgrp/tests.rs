use std::collections::HashSet;

use proptest::prelude::*;

use super::*;

/// Closure of the generators by breadth-first multiplication.
fn brute_force_elements(g: &PermGroup) -> HashSet<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let id = g.identity();
    let mut frontier = vec![id.clone()];
    seen.insert(id);
    while let Some(x) = frontier.pop() {
        for s in g.generators() {
            let y = x.then(s);
            if seen.insert(y.clone()) {
                frontier.push(y);
            }
        }
    }
    seen
}

fn seven_groups() -> Vec<(&'static str, PermGroup)> {
    vec![
        ("A7", alternating(7)),
        ("S5", symmetric(5)),
        ("A5", alternating(5)),
        ("PSL2(11)", psl2(11).unwrap()),
        ("SL2(8)", sl2_8()),
        ("SL3(3)", sl3_3_on_26()),
        ("PSp4(3)", psp4_3_on_40()),
    ]
}

#[test]
fn orders_of_constructed_groups() {
    assert_eq!(alternating(7).order(), 2520);
    assert_eq!(symmetric(5).order(), 120);
    assert_eq!(psl2(11).unwrap().order(), 660);
    assert_eq!(psl2(11).unwrap().degree(), 12);
    assert_eq!(sl2_8().order(), 504);
    assert_eq!(sl2_8().degree(), 9);
    let q: u128 = 3;
    assert_eq!(sl3_3_on_26().order(), (q.pow(3) - 1) * (q.pow(3) - q) * (q.pow(3) - q * q) / (q - 1));
    assert_eq!(psp4_3_on_40().order(), 25920);
    assert_eq!(psp4_3_on_40().degree(), 40);
    assert_eq!(gl3_2_on_7().order(), 168);
    for (q, order) in [(4, 60), (5, 60), (7, 168), (8, 504), (9, 360), (13, 1092)] {
        assert_eq!(psl2(q).unwrap().order(), order, "PSL2({q})");
    }
    assert_eq!(PermGroup::new(4, vec![Permutation::identity(4)]).unwrap().order(), 1);
}

#[test]
fn unsupported_inputs_fail() {
    assert!(matches!(psl2(6), Err(PermError::Unsupported(_))));
    assert!(matches!(psl2(16), Err(PermError::Unsupported(_))));
    assert!(matches!(mathieu(11), Err(PermError::MathieuNotConstructed(_))));
    assert!(matches!(parse_group_spec("M24"), Err(PermError::MathieuNotConstructed(_))));
    assert!(matches!(parse_group_spec("Foo"), Err(PermError::UnknownSpec(_))));
    let mixed = vec![Permutation::identity(3), Permutation::identity(4)];
    assert!(matches!(PermGroup::new(3, mixed), Err(PermError::DegreeMismatch { .. })));
    assert!(PermGroup::from_images(3, vec![vec![0, 0, 1]]).is_err());
}

#[test]
fn chain_order_matches_enumeration() {
    for (name, g) in seven_groups() {
        let brute = brute_force_elements(&g);
        assert_eq!(brute.len() as u128, g.order(), "{name}");
        assert!(brute.iter().all(|x| g.contains(x)), "{name}");
        for (i, x) in g.elements().iter().enumerate().step_by(97) {
            assert_eq!(g.chain().element_index(x), Some(i));
            assert_eq!(&g.chain().element_at(i), x);
        }
    }
}

#[test]
fn order_is_degree_times_stabilizer() {
    for (name, g) in seven_groups() {
        assert!(g.is_transitive(), "{name}");
        assert_eq!(g.order(), g.degree() as u128 * g.point_stabilizer(0).unwrap().order(), "{name}");
    }
}

#[test]
fn orbits_examples() {
    assert!(alternating(7).is_transitive());
    let a = Permutation::from_cycles(10, &[&[0, 1, 2], &[5, 6, 7]]).unwrap();
    let b = Permutation::from_cycles(10, &[&[0, 1, 2, 3, 4], &[5, 6, 7, 8, 9]]).unwrap();
    let two = PermGroup::new(10, vec![a, b]).unwrap();
    assert_eq!(two.order(), 60);
    assert_eq!(two.orbits(), vec![vec![0, 1, 2, 3, 4], vec![5, 6, 7, 8, 9]]);
    assert!(!two.is_transitive());
    assert!(matches!(two.minimal_blocks(), Err(PermError::Intransitive)));
    let cosets = parse_group_spec("coset:A7/PSL2(7)").unwrap();
    assert_eq!(cosets.degree(), 15);
    assert!(cosets.is_transitive());
    assert_eq!(cosets.order(), 2520);
}

#[test]
fn block_examples() {
    let g = sl3_3_on_26();
    let systems = g.minimal_blocks().unwrap();
    assert!(!g.is_primitive().unwrap());
    let pairs = systems.iter().find(|s| s.block_size() == 2).expect("antipodal blocks");
    assert_eq!(pairs.num_blocks(), 13);
    // Block {v, -v}: index of -v for v of index i.
    let neg = |i: u32| {
        let v = [(i + 1) % 3, (i + 1) / 3 % 3, (i + 1) / 9];
        (0..3).rev().fold(0, |acc, k| acc * 3 + (3 - v[k]) % 3) - 1
    };
    for b in &pairs.blocks {
        assert_eq!(neg(b[0]), b[1]);
    }
    assert!(psl2(11).unwrap().is_primitive().unwrap());
    let c4 = cyclic(4);
    let blocks = c4.minimal_blocks().unwrap();
    assert_eq!(blocks, vec![BlockSystem { blocks: vec![vec![0, 2], vec![1, 3]] }]);
    assert!(alternating(7).is_primitive().unwrap());
    assert!(psp4_3_on_40().is_primitive().unwrap());
}

#[test]
fn block_systems_are_invariant_partitions() {
    for g in [sl3_3_on_26(), cyclic(12), parse_group_spec("coset:A7/PSL2(7)").unwrap()] {
        for s in g.minimal_blocks().unwrap() {
            let mut all: Vec<u32> = s.blocks.concat();
            all.sort_unstable();
            assert_eq!(all, (0..g.degree() as u32).collect::<Vec<_>>());
            for gen in g.generators() {
                for b in &s.blocks {
                    let mut image: Vec<u32> = b.iter().map(|&p| gen.image(p)).collect();
                    image.sort_unstable();
                    assert!(s.blocks.contains(&image));
                }
            }
        }
    }
}

#[test]
fn transitivity_examples() {
    let p = psl2(11).unwrap();
    assert_eq!(p.transitivity_degree(), 2);
    let a5 = find_two_generated_subgroup(&p, (2, 5), 60, SUBGROUP_SEED, 2000).unwrap();
    assert_eq!(a5.order(), 60);
    let on11 = p.coset_action(&a5).unwrap();
    assert_eq!(on11.degree(), 11);
    assert_eq!(on11.order(), 660);
    assert!(on11.is_transitive());
    assert_eq!(on11.transitivity_degree(), 2);
    assert_eq!(sl3_3_on_26().transitivity_degree(), 1);
    assert_eq!(symmetric(6).transitivity_degree(), 3);
    assert_eq!(alternating(7).transitivity_degree(), 3);
    assert_eq!(sl2_8().transitivity_degree(), 3);
    assert_eq!(cyclic(5).transitivity_degree(), 1);
}

#[test]
fn double_transitivity_matches_stabilizer() {
    for (name, g) in seven_groups() {
        let stab = g.point_stabilizer(0).unwrap();
        let rest_one_orbit = stab.orbit(1).len() == g.degree() - 1;
        assert_eq!(g.transitivity_degree() >= 2, rest_one_orbit, "{name}");
    }
}

#[test]
fn stabilizer_examples() {
    let stab = sl2_8().point_stabilizer(3).unwrap();
    assert_eq!(stab.order(), 56);
    let derived = stab.derived_subgroup();
    assert_eq!(derived.order(), 8);
    assert_eq!(derived.exponent(), 2);
    assert_eq!(alternating(7).point_stabilizer(0).unwrap().order(), 360);
    assert!(matches!(alternating(7).coset_action(&symmetric(7)), Err(PermError::NotSubgroup(_))));
}

#[test]
fn derived_subgroups() {
    assert_eq!(symmetric(5).derived_subgroup().order(), 60);
    assert_eq!(alternating(7).derived_subgroup().order(), 2520);
    assert_eq!(cyclic(6).derived_subgroup().order(), 1);
}

#[test]
fn class_examples() {
    let a7 = alternating(7).conjugacy_classes(60_000).unwrap();
    assert_eq!(a7.len(), 9);
    let sevens: Vec<usize> = (0..a7.len()).filter(|&c| a7.orders()[c] == 7).collect();
    assert_eq!(sevens.len(), 2);
    assert!(sevens.iter().all(|&c| a7.size(c) == 360));
    assert_eq!(symmetric(5).conjugacy_classes(60_000).unwrap().len(), 7);
    assert_eq!(psl2(11).unwrap().conjugacy_classes(60_000).unwrap().len(), 8);
    assert_eq!(psp4_3_on_40().conjugacy_classes(60_000).unwrap().len(), 20);
    assert!(matches!(psp4_3_on_40().conjugacy_classes(1000), Err(PermError::BudgetExceeded { order: 25920, .. })));
}

/// Class sizes of `A_7` from cycle types: `7!/z` per type, halved twice over
/// when the type has distinct odd parts.
#[test]
fn a7_class_sizes_match_cycle_type_count() {
    let a7 = alternating(7).conjugacy_classes(60_000).unwrap();
    let mut sizes = a7.sizes();
    sizes.sort_unstable();
    let mut oracle = vec![1, 105, 70, 280, 630, 210, 504, 360, 360];
    oracle.sort_unstable();
    assert_eq!(sizes, oracle);
}

#[test]
fn class_invariants() {
    for (name, g) in seven_groups() {
        let cc = g.conjugacy_classes(60_000).unwrap();
        let order = g.order() as usize;
        assert_eq!(cc.sizes().iter().sum::<usize>(), order, "{name}");
        assert!(cc.sizes().iter().all(|s| order % s == 0), "{name}");
        assert_eq!(cc.power_map(1), (0..cc.len() as u32).collect::<Vec<_>>().as_slice());
        assert!(cc.power_map(0).iter().all(|&c| c == 0));
        assert_eq!(cc.size(0), 1);
        for c in 0..cc.len() {
            assert_eq!(cc.size(cc.inverse_class(c)), cc.size(c));
            let rep = &cc.reps()[c];
            assert_eq!(cc.class_of(&rep.pow(3)), Some(cc.power_map(3)[c] as usize));
            assert_eq!(cc.class_of(rep), Some(c));
        }
        let sorted = cc.sizes().windows(2).all(|w| w[0] <= w[1]);
        assert!(sorted, "{name}");
    }
}

#[test]
fn spec_strings() {
    for (spec, degree, order) in [
        ("A7", 7, 2520),
        ("S5", 5, 120),
        ("PSL2(11)", 12, 660),
        ("SL2(8)", 9, 504),
        ("SL3(3):26", 26, 5616),
        ("PSp4(3):40", 40, 25920),
        ("coset:A7/PSL2(7)", 15, 2520),
        ("coset:PSL2(11)/A5", 11, 660),
    ] {
        let g = parse_group_spec(spec).unwrap();
        assert_eq!((g.degree(), g.order()), (degree, order), "{spec}");
    }
}

#[test]
fn subgroup_search_is_reproducible() {
    let p = psl2(11).unwrap();
    let a = find_two_generated_subgroup(&p, (2, 5), 60, 7, 2000).unwrap();
    let b = find_two_generated_subgroup(&p, (2, 5), 60, 7, 2000).unwrap();
    assert_eq!(a.generators(), b.generators());
    let fallback = find_two_generated_subgroup(&p, (2, 5), 60, 7, 0).unwrap();
    assert_eq!(fallback.order(), 60);
    assert!(find_two_generated_subgroup(&p, (2, 5), 61, 7, 10).is_err());
}

fn arb_perm(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n as u32).collect::<Vec<u32>>()).prop_shuffle().prop_map(|v| Permutation::new(v).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn random_subgroups_of_s7_agree_with_enumeration(a in arb_perm(7), b in arb_perm(7)) {
        let g = PermGroup::new(7, vec![a, b]).unwrap();
        let brute = brute_force_elements(&g);
        prop_assert_eq!(brute.len() as u128, g.order());
        prop_assert_eq!(g.order() % g.orbit(0).len() as u128, 0);
        prop_assert_eq!(g.order(), g.orbit(0).len() as u128 * g.point_stabilizer(0).unwrap().order());
    }

    #[test]
    fn membership_is_exact(a in arb_perm(6), b in arb_perm(6), x in arb_perm(6)) {
        let g = PermGroup::new(6, vec![a, b]).unwrap();
        let brute = brute_force_elements(&g);
        prop_assert_eq!(g.contains(&x), brute.contains(&x));
    }
}
