//! Acceptance gate: ten criteria, each with a runtime limit. Prints one
//! PASS/FAIL line per criterion and exits nonzero if any fails.

use std::panic;
use std::process::ExitCode;
use std::sync::Arc;
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestRng, TestRunner};

use cremona_core::chartab::{
    dixon_character_table, inner_product, match_printed_table, molien_invariant_dim, reference, CharacterTable,
    ClassFunction, FusionMap, PrintedTable,
};
use cremona_core::exactnum::{int, rat, Cyclotomic, Rational};
use cremona_core::fano;
use cremona_core::permgrp::{
    alternating, find_two_generated_subgroup, parse_group_spec, psl2, s5_in_a7, sl2_8, sl3_3_on_26, symmetric,
    ConjClasses, PermGroup, SUBGROUP_SEED,
};
use cremona_core::polyinv::{
    act, group_closure, invariant_space_dim_direct, is_invariant, jacobian_rank_at, klein_55_generators, klein_cubic,
    palatini_55_generators, palatini_quartic, permutation_matrix, reduce_point, reynolds, singular_points_mod_p,
    variety, weyl_e6, ExactMatrix, MatrixGroup, MultiPoly,
};

type Outcome = Result<String, String>;

const SEED: u64 = 20_240_601;
const CASES: u32 = 1000;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn classes(g: &PermGroup) -> Arc<ConjClasses> {
    Arc::new(g.conjugacy_classes(100_000).expect("within budget"))
}

fn table(g: &PermGroup) -> CharacterTable {
    dixon_character_table(classes(g)).expect("table")
}

fn ints(v: &[i64]) -> Vec<Cyclotomic> {
    v.iter().map(|&x| Cyclotomic::from_int(x)).collect()
}

fn group_orders() -> Outcome {
    let specs = ["A5", "A6", "A7", "GL3(2):7", "SL2(8)", "PSp4(3):40", "PSL2(11)"];
    let observed: Vec<u128> = specs.iter().map(|s| parse_group_spec(s).map(|g| g.order())).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    let expected = [60, 360, 2520, 168, 504, 25920, 660];
    ensure(observed == expected, || format!("orders {observed:?}, expected {expected:?}"))?;
    Ok(format!("{observed:?}"))
}

fn character_tables() -> Outcome {
    let cases: [(&str, PermGroup, PrintedTable); 4] = [
        ("A7", alternating(7), reference::a7()),
        ("S5", symmetric(5), reference::s5()),
        ("PSL2(11)", psl2(11).map_err(|e| e.to_string())?, reference::psl2_11()),
        ("A5", alternating(5), reference::a5()),
    ];
    let mut columns = Vec::new();
    for (name, g, printed) in cases {
        let t = table(&g);
        t.verify_orthogonality().map_err(|e| format!("{name}: {e}"))?;
        let m = match_printed_table(&t, &printed).ok_or_else(|| format!("{name}: printed rows not found"))?;
        ensure(m.rows.len() == printed.rows.len(), || format!("{name}: partial match"))?;
        columns.push(m.columns.len());
    }
    ensure(columns == [9, 7, 8, 5], || format!("column counts {columns:?}"))?;
    Ok(format!("class columns {columns:?}"))
}

fn restrictions() -> Outcome {
    let a7 = table(&alternating(7));
    let s5_classes = classes(&s5_in_a7());
    let s5 = dixon_character_table(s5_classes.clone()).map_err(|e| e.to_string())?;
    let fusion = FusionMap::new(s5_classes, a7.classes().clone()).map_err(|e| e.to_string())?;
    let m7 = match_printed_table(&a7, &reference::a7()).ok_or("A7 unmatched")?;
    let p5 = reference::s5();
    let m5 = match_printed_table(&s5, &p5).ok_or("S5 unmatched")?;
    let res = fusion.restrict(a7.row(m7.rows[2])).map_err(|e| e.to_string())?;
    let values: Vec<Cyclotomic> = m5.columns.iter().map(|&c| res.value(c).clone()).collect();
    ensure(values == ints(&[10, -2, -2, 1, 1, 0, 0]), || format!("chi3 restricted: {values:?}"))?;
    let expected = s5.row(m5.rows[1]) + s5.row(m5.rows[3]);
    ensure(res == expected, || "chi3 restricted is not chi2' + chi4'".into())?;

    let g = psl2(11).map_err(|e| e.to_string())?;
    let big = table(&g);
    let sub = find_two_generated_subgroup(&g, (2, 5), 60, SUBGROUP_SEED, 2000).map_err(|e| e.to_string())?;
    let sub_classes = classes(&sub);
    let small = dixon_character_table(sub_classes.clone()).map_err(|e| e.to_string())?;
    let fusion = FusionMap::new(sub_classes, big.classes().clone()).map_err(|e| e.to_string())?;
    let mb = match_printed_table(&big, &reference::psl2_11()).ok_or("PSL2(11) unmatched")?;
    let ms = match_printed_table(&small, &reference::a5()).ok_or("A5 unmatched")?;
    let res = fusion.restrict(big.row(mb.rows[1])).map_err(|e| e.to_string())?;
    ensure(inner_product(&res, &res).map_err(|e| e.to_string())? == Cyclotomic::one(), || "restriction reducible".into())?;
    ensure(&res == small.row(ms.rows[4]), || "restriction is not chi5'".into())?;
    Ok("chi3|S5 = chi2' + chi4'; chi2|A5 = chi5'".into())
}

fn character_route_invariants() -> Outcome {
    let t = table(&psl2(11).map_err(|e| e.to_string())?);
    let mut psl = Vec::new();
    for r in t.rows_of_degree(5) {
        psl.push((molien_invariant_dim(t.row(r), 3).map_err(|e| e.to_string())?, molien_invariant_dim(t.row(r), 4).map_err(|e| e.to_string())?));
    }
    ensure(psl == [(1, 0), (1, 0)], || format!("PSL2(11) (Inv3, Inv4): {psl:?}"))?;
    let t = table(&parse_group_spec("PSp4(3):40").map_err(|e| e.to_string())?);
    let rows: Vec<usize> = t.rows_of_degree(5).into_iter().chain(t.rows_of_degree(6)).collect();
    ensure(rows.len() == 3, || format!("PSp4(3) rows of degree 5 and 6: {}", rows.len()))?;
    let cubic: Vec<u64> = rows.iter().map(|&r| molien_invariant_dim(t.row(r), 3)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    ensure(cubic == [0, 0, 0], || format!("PSp4(3) Inv3: {cubic:?}"))?;
    Ok(format!("PSL2(11) {psl:?}; PSp4(3) {cubic:?}"))
}

fn matrix_route_invariants() -> Outcome {
    let w = weyl_e6(60_000).map_err(|e| e.to_string())?;
    ensure(w.group.order() == Some(51840), || format!("|W(E6)| = {:?}", w.group.order()))?;
    let d = w.group.derived_subgroup(60_000).map_err(|e| e.to_string())?;
    ensure(d.order() == Some(25920), || format!("|W(E6)'| = {:?}", d.order()))?;
    let direct = invariant_space_dim_direct(&d, 3).map_err(|e| e.to_string())?;
    let perm = w.on_roots(d.generators());
    let cc = classes(&perm);
    let chi = ClassFunction::new(cc.clone(), cc.reps().iter().map(|p| Cyclotomic::from_int(w.matrix_of(p).trace())).collect());
    let molien = molien_invariant_dim(&chi, 3).map_err(|e| e.to_string())?;
    ensure(direct == 0 && molien == 0, || format!("direct {direct}, character route {molien}"))?;
    Ok("orders 51840 / 25920; Inv3 direct 0 = character 0".into())
}

fn explicit_varieties() -> Outcome {
    let (s, t) = klein_55_generators();
    ensure(is_invariant(&klein_cubic(), &[s, t]).map_err(|e| e.to_string())?, || "Klein cubic".into())?;
    let (s, t) = palatini_55_generators();
    ensure(is_invariant(&palatini_quartic(), &[s, t]).map_err(|e| e.to_string())?, || "Palatini quartic".into())?;
    let perms = |g: &PermGroup| g.generators().iter().map(permutation_matrix).collect::<Vec<_>>();
    for (name, g) in [("segre_cubic", symmetric(6)), ("burkhardt", symmetric(6)), ("x6prime", alternating(7))] {
        let gens = perms(&g);
        for f in variety(name).map_err(|e| e.to_string())?.forms {
            ensure(is_invariant(&f, &gens).map_err(|e| e.to_string())?, || format!("{name} form {f}"))?;
        }
    }
    Ok("Klein, Palatini, Segre, Burkhardt, X6' invariant".into())
}

fn singular_loci() -> Outcome {
    let forms = variety("segre_cubic").map_err(|e| e.to_string())?.forms;
    let base = [1i64, 1, 1, -1, -1, -1];
    let exact: Vec<Cyclotomic> = ints(&base);
    let mut counts = Vec::new();
    for p in [31u64, 41, 61] {
        let sing = singular_points_mod_p(&forms, p).map_err(|e| e.to_string())?;
        let mut orbit: Vec<Vec<u64>> = symmetric(6)
            .elements()
            .iter()
            .map(|g| reduce_point(&(0..6).map(|i| int(base[g.image(i) as usize])).collect::<Vec<Rational>>(), p))
            .collect::<Result<_, _>>()
            .map_err(|e| e.to_string())?;
        orbit.sort();
        orbit.dedup();
        ensure(sing.len() == 10 && sing == orbit, || format!("F_{p}: {} singular points", sing.len()))?;
        counts.push(sing.len());
    }
    for g in symmetric(6).elements() {
        let pt: Vec<Cyclotomic> = (0..6).map(|i| exact[g.image(i) as usize].clone()).collect();
        let r = jacobian_rank_at(&forms, &pt).map_err(|e| e.to_string())?;
        ensure(r == 1, || format!("Jacobian rank {r} at {pt:?}"))?;
    }
    for p in [13u64, 23] {
        let sing = singular_points_mod_p(&[klein_cubic()], p).map_err(|e| e.to_string())?;
        ensure(sing.is_empty(), || format!("Klein cubic singular over F_{p}: {sing:?}"))?;
    }
    Ok(format!("Segre {counts:?}; Klein cubic smooth over F_13, F_23"))
}

fn permutation_facts() -> Outcome {
    let stab = sl2_8().point_stabilizer(0).map_err(|e| e.to_string())?;
    let d = stab.derived_subgroup();
    ensure(stab.order() == 56 && d.order() == 8 && d.exponent() == 2 && d.derived_subgroup().order() == 1, || {
        format!("stabilizer {} derived {} exponent {}", stab.order(), d.order(), d.exponent())
    })?;
    let g = sl3_3_on_26();
    let blocks = g.minimal_blocks().map_err(|e| e.to_string())?;
    ensure(!g.is_primitive().map_err(|e| e.to_string())?, || "SL3(3) primitive".into())?;
    ensure(blocks.len() == 1 && blocks[0].num_blocks() == 13 && blocks[0].block_size() == 2, || "SL3(3) blocks".into())?;
    let h = parse_group_spec("coset:PSL2(11)/A5").map_err(|e| e.to_string())?;
    ensure(h.degree() == 11 && h.transitivity_degree() >= 2, || "PSL2(11) on 11 points".into())?;
    let degrees: Vec<u64> =
        [alternating(5), symmetric(5), alternating(6), stab].iter().map(|g| table(g).min_faithful_rep_degree()).collect();
    ensure(degrees == [3, 4, 5, 7], || format!("minimal faithful degrees {degrees:?}"))?;
    Ok(format!("stabilizer 56/8, 13 blocks of 2, 2-transitive on 11, degrees {degrees:?}"))
}

fn fano_arithmetic() -> Outcome {
    ensure(fano::quadric_count(5) == 3, || "quadric_count(5)".into())?;
    let h12: Vec<i64> = fano::FANO_GENERA.iter().map(|&g| fano::fano_h12(g)).collect::<Result<_, _>>().map_err(|e| e.to_string())?;
    ensure(h12 == [52, 30, 20, 14, 10, 7, 5, 3, 2, 0], || format!("h12 {h12:?}"))?;
    let multi: Vec<_> = fano::basket_inequality_cases(7, &int(24), true)
        .map_err(|e| e.to_string())?
        .into_iter()
        .filter(|p| p.has_multi_entry_orbit())
        .collect();
    ensure(multi.len() == 1 && multi[0].orbits == [fano::OrbitType { size: 7, indices: vec![2, 2] }], || format!("{multi:?}"))?;
    let window: Vec<(usize, u32, Vec<u32>)> = fano::basket_inequality_cases(9, &int(24), true)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|p| (p.orbits.len(), p.orbits[0].size, p.orbits[0].indices.clone()))
        .collect();
    ensure(window == (9..=15).map(|n| (1, n, vec![2])).collect::<Vec<_>>(), || format!("window {window:?}"))?;
    ensure(fano::anticanonical_dim_halfpoints(&rat(3, 2), 11) == int(0), || "half-point dimension".into())?;
    let hurwitz: Vec<(u64, Vec<u64>)> = fano::hurwitz_enumerate(12, 234, 18, Some(9))
        .map_err(|e| e.to_string())?
        .into_iter()
        .map(|s| (s.group_order, s.signature))
        .collect();
    ensure(hurwitz == [(288, vec![2, 3, 8]), (504, vec![2, 3, 7])], || format!("Hurwitz {hurwitz:?}"))?;
    let a = fano::diophantine_case_a();
    ensure(a == [fano::DiophantineSolution { k: 1, alpha: 1, beta: 1, g: 12 }], || format!("case A {a:?}"))?;
    let b = fano::diophantine_case_b(100).map_err(|e| e.to_string())?;
    ensure(b.is_empty(), || format!("case B {b:?}"))?;
    let r = fano::orbit_degree_constraint(660, 14).map_err(|e| e.to_string())?;
    ensure(r.forced_divisor == 7 && r.admissible_degrees(6).is_empty(), || format!("{r:?}"))?;
    Ok("all arithmetic steps reproduced".into())
}

// Criterion 10 helpers.

fn runner(salt: u64) -> TestRunner {
    let mut seed = [0u8; 32];
    seed[..8].copy_from_slice(&SEED.to_le_bytes());
    seed[8..16].copy_from_slice(&salt.to_le_bytes());
    let config = Config { cases: CASES, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::from_seed(RngAlgorithm::ChaCha, &seed))
}

fn cyclotomic() -> impl Strategy<Value = Cyclotomic> {
    (prop::sample::select(vec![1u32, 3, 4, 5, 7, 8, 9, 12, 15]), prop::collection::vec((-5i64..=5, 1i64..=4), 15))
        .prop_map(|(n, cs)| Cyclotomic::from_terms(n, cs.into_iter().take(n as usize).enumerate().map(|(i, (a, b))| (i as i64, rat(a, b)))))
}

fn small_matrix() -> impl Strategy<Value = ExactMatrix<i64>> {
    prop::collection::vec(-2i64..=2, 9).prop_map(|v| ExactMatrix::from_rows(v.chunks(3).map(<[i64]>::to_vec).collect()).expect("square"))
}

fn small_poly(max_exp: u32) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((-3i64..=3, 0..=max_exp, 0..=max_exp, 0..=max_exp), 1..5)
        .prop_map(|ts| MultiPoly::from_terms(3, ts.into_iter().map(|(c, a, b, d)| (Cyclotomic::from_int(c), vec![a, b, d]))))
}

/// Signed permutation matrix: `x_i -> s_i x_{p(i)}`.
fn signed_perm(n: usize, perm: &[usize], signs: u32) -> ExactMatrix<i64> {
    let rows = (0..n)
        .map(|i| (0..n).map(|j| if perm[i] == j { if signs >> i & 1 == 1 { -1 } else { 1 } } else { 0 }).collect())
        .collect();
    ExactMatrix::from_rows(rows).expect("square")
}

fn signed_perm_strategy(n: usize) -> impl Strategy<Value = ExactMatrix<i64>> {
    (Just((0..n).collect::<Vec<usize>>()).prop_shuffle(), 0u32..(1 << n)).prop_map(move |(p, s)| signed_perm(n, &p, s))
}

/// Molien count from power traces: `h_d = (1/d) sum_k tr(g^k) h_{d-k}`, averaged.
fn molien_from_traces(group: &MatrixGroup<i64>, d: usize) -> Rational {
    let elems = group.elements().expect("enumerated");
    let mut total = int(0);
    for g in elems {
        let mut powers = vec![ExactMatrix::identity(g.dim())];
        for k in 1..=d {
            powers.push(powers[k - 1].mul(g));
        }
        let p: Vec<Rational> = powers.iter().map(|m| int(m.trace())).collect();
        let mut h = vec![int(1)];
        for t in 1..=d {
            let s: Rational = (1..=t).map(|k| &p[k] * &h[t - k]).sum();
            h.push(s / int(t as i64));
        }
        total += &h[d];
    }
    total / int(elems.len() as i64)
}

fn fail<T: std::fmt::Debug>(name: &str, e: proptest::test_runner::TestError<T>) -> String {
    format!("{name}: {e}")
}

fn property_suites() -> Outcome {
    runner(1)
        .run(&(cyclotomic(), cyclotomic(), cyclotomic()), |(a, b, c)| {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert!((&a - &a).is_zero());
            prop_assert_eq!(&a * &Cyclotomic::one(), a.clone());
            if !a.is_zero() {
                prop_assert!((&a * &a.inv().expect("nonzero")).is_one());
            }
            Ok(())
        })
        .map_err(|e| fail("ring axioms", e))?;

    runner(2)
        .run(&(small_matrix(), small_matrix(), small_poly(2)), |(g, h, f)| {
            prop_assert_eq!(act(&g.mul(&h), &f).expect("dims"), act(&h, &act(&g, &f).expect("dims")).expect("dims"));
            Ok(())
        })
        .map_err(|e| fail("action composition", e))?;

    let pool: Vec<MatrixGroup<i64>> = vec![
        group_closure(3, symmetric(3).generators().iter().map(permutation_matrix).collect(), 100).map_err(|e| e.to_string())?,
        group_closure(3, vec![signed_perm(3, &[1, 0, 2], 0), signed_perm(3, &[1, 2, 0], 0), signed_perm(3, &[0, 1, 2], 1)], 100)
            .map_err(|e| e.to_string())?,
        group_closure(3, vec![signed_perm(3, &[1, 2, 0], 0), signed_perm(3, &[0, 1, 2], 3)], 100).map_err(|e| e.to_string())?,
    ];
    let orders: Vec<Option<usize>> = pool.iter().map(MatrixGroup::order).collect();
    ensure(orders == [Some(6), Some(48), Some(12)], || format!("Reynolds pool orders {orders:?}"))?;
    runner(3)
        .run(&(0..pool.len(), small_poly(3)), |(i, f)| {
            let r = reynolds(&f, &pool[i]).expect("enumerated");
            prop_assert!(is_invariant(&r, pool[i].generators()).expect("dims"));
            prop_assert_eq!(reynolds(&r, &pool[i]).expect("enumerated"), r);
            Ok(())
        })
        .map_err(|e| fail("Reynolds invariance", e))?;

    let tables: Vec<CharacterTable> =
        [alternating(5), symmetric(5), parse_group_spec("GL3(2):7").expect("spec"), alternating(6), psl2(11).expect("q"), alternating(7)]
            .iter()
            .map(table)
            .collect();
    runner(4)
        .run(&(0..tables.len(), any::<prop::sample::Index>(), any::<prop::sample::Index>()), |(t, i, j)| {
            let t = &tables[t];
            let (i, j) = (i.index(t.len()), j.index(t.len()));
            let ip = inner_product(t.row(i), t.row(j)).expect("same group");
            prop_assert_eq!(ip, Cyclotomic::from_int(i64::from(i == j)));
            let col: Cyclotomic =
                t.irreducibles().iter().map(|chi| chi.value(i) * &chi.value(j).complex_conjugate()).sum();
            let expected = if i == j { t.classes().centralizer_order(i) as i64 } else { 0 };
            prop_assert_eq!(col, Cyclotomic::from_int(expected));
            Ok(())
        })
        .map_err(|e| fail("orthogonality", e))?;

    let groups = (prop::sample::select(vec![3usize, 4]), 1usize..=2, any::<u64>()).prop_flat_map(|(n, k, _)| {
        (Just(n), prop::collection::vec(signed_perm_strategy(n), k), 1usize..=3)
    });
    runner(5)
        .run(&groups, |(n, gens, d)| {
            let g = group_closure(n, gens, 1000).expect("finite");
            let direct = invariant_space_dim_direct(&g, d as u32).expect("enumerated");
            prop_assert_eq!(int(direct as i64), molien_from_traces(&g, d));
            Ok(())
        })
        .map_err(|e| fail("Molien vs direct", e))?;

    Ok(format!("5 suites x {CASES} cases, seed {SEED}"))
}

struct Criterion {
    number: u32,
    name: &'static str,
    limit: Duration,
    run: fn() -> Outcome,
}

fn main() -> ExitCode {
    let criteria = [
        Criterion { number: 1, name: "group orders", limit: Duration::from_secs(10), run: group_orders },
        Criterion { number: 2, name: "character tables", limit: Duration::from_secs(60), run: character_tables },
        Criterion { number: 3, name: "restriction identities", limit: Duration::from_secs(10), run: restrictions },
        Criterion { number: 4, name: "invariant counts (character route)", limit: Duration::from_secs(30), run: character_route_invariants },
        Criterion { number: 5, name: "invariant counts (matrix route)", limit: Duration::from_secs(300), run: matrix_route_invariants },
        Criterion { number: 6, name: "explicit varieties", limit: Duration::from_secs(10), run: explicit_varieties },
        Criterion { number: 7, name: "singular loci", limit: Duration::from_secs(120), run: singular_loci },
        Criterion { number: 8, name: "permutation facts", limit: Duration::from_secs(60), run: permutation_facts },
        Criterion { number: 9, name: "Fano arithmetic", limit: Duration::from_secs(10), run: fano_arithmetic },
        Criterion { number: 10, name: "cross-oracle property suites", limit: Duration::from_secs(120), run: property_suites },
    ];
    let mut failed = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = panic::catch_unwind(c.run).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok(d) if elapsed <= c.limit => (true, d),
            Ok(d) => (false, format!("{d}; over the {} s limit", c.limit.as_secs())),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "{} criterion {:>2} {}: {:.2} s (limit {} s) {}",
            if ok { "PASS" } else { "FAIL" },
            c.number,
            c.name,
            elapsed.as_secs_f64(),
            c.limit.as_secs(),
            detail
        );
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
