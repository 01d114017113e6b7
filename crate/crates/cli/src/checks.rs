//! The check catalogue. Ids are `<module>.<slug>` and stable.

use std::sync::Arc;

use serde_json::{json, Value};

use cremona_core::chartab::{
    dixon_character_table, match_printed_table, molien_invariant_dim, reference, CharacterTable, ClassFunction,
    FusionMap, PrintedTable,
};
use cremona_core::exactnum::{int, rat, Cyclotomic, Rational};
use cremona_core::fano;
use cremona_core::permgrp::{
    alternating, find_two_generated_subgroup, parse_group_spec, psl2, s5_in_a7, sl2_8, sl3_3_on_26, symmetric,
    ConjClasses, PermGroup, SUBGROUP_SEED,
};
use cremona_core::polyinv::{
    self, group_closure, invariant_space_dim_direct, is_invariant, jacobian_rank_at, klein_55_generators,
    klein_cubic, klein_exponents, monomials, palatini_55_generators, palatini_quartic, permutation_matrix,
    reduce_point, singular_points_mod_p, weyl_e6, ExactMatrix,
};

use super::{Outcome, Suite};

type Body = fn(u64) -> Result<Outcome, String>;

#[derive(Clone, Copy)]
pub struct Check {
    pub id: &'static str,
    pub anchor: &'static str,
    pub suite: Suite,
    pub body: Body,
}

impl std::fmt::Debug for Check {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Check").field("id", &self.id).field("suite", &self.suite).finish()
    }
}

const CLASS_BUDGET: usize = 100_000;
const CLOSURE_BUDGET: usize = 60_000;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn classes(g: &PermGroup) -> Result<Arc<ConjClasses>, String> {
    g.conjugacy_classes(CLASS_BUDGET).map(Arc::new).map_err(err)
}

fn table(g: &PermGroup) -> Result<CharacterTable, String> {
    dixon_character_table(classes(g)?).map_err(err)
}

fn texts(v: &[Cyclotomic]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

fn order_check(spec: &str, expected: u128) -> Result<Outcome, String> {
    let g = parse_group_spec(spec).map_err(err)?;
    Ok(Outcome::compare(json!({ "spec": spec }), g.order(), expected))
}

fn printed_table_check(g: PermGroup, name: &str, printed: PrintedTable) -> Result<Outcome, String> {
    let t = table(&g)?;
    let m = match_printed_table(&t, &printed);
    let pass = m.is_some();
    let witness = json!({
        "group": name,
        "classes": t.len(),
        "printed_columns": printed.column_labels,
        "printed_rows": printed.rows.iter().map(|r| r.0.clone()).collect::<Vec<_>>(),
        "column_map": m.as_ref().map(|m| m.columns.clone()),
        "row_map": m.as_ref().map(|m| m.rows.clone()),
        "computed_degrees": t.degrees(),
    });
    Ok(Outcome { pass, witness })
}

fn invariance_check<T: polyinv::Scalar>(name: &str, forms: &[polyinv::MultiPoly], gens: &[ExactMatrix<T>]) -> Result<Outcome, String> {
    let mut each = Vec::new();
    for f in forms {
        each.push(is_invariant(f, gens).map_err(err)?);
    }
    let pass = each.iter().all(|&b| b);
    Ok(Outcome {
        pass,
        witness: json!({
            "variety": name,
            "forms": forms.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "generators": gens.len(),
            "invariant": each,
        }),
    })
}

fn perm_matrices(g: &PermGroup) -> Vec<ExactMatrix<i64>> {
    g.generators().iter().map(permutation_matrix).collect()
}

fn segre_nodes(p: u64) -> Result<Outcome, String> {
    let forms = polyinv::variety("segre_cubic").map_err(err)?.forms;
    let sing = singular_points_mod_p(&forms, p).map_err(err)?;
    let base = [1i64, 1, 1, -1, -1, -1];
    let mut orbit: Vec<Vec<u64>> = symmetric(6)
        .elements()
        .iter()
        .map(|g| {
            let pt: Vec<Rational> = (0..6).map(|i| int(base[g.image(i) as usize])).collect();
            reduce_point(&pt, p)
        })
        .collect::<Result<_, _>>()
        .map_err(err)?;
    orbit.sort();
    orbit.dedup();
    let mut ranks = Vec::new();
    for pt in &orbit {
        // Lift the F_p representative with coordinates in {0, 1, p-1}.
        let exact: Vec<Cyclotomic> =
            pt.iter().map(|&x| Cyclotomic::from_int(if x == p - 1 { -1 } else { x as i64 })).collect();
        ranks.push(jacobian_rank_at(&forms, &exact).map_err(err)?);
    }
    let pass = sing.len() == 10 && sing == orbit && ranks.iter().all(|&r| r == 1);
    Ok(Outcome {
        pass,
        witness: json!({
            "p": p,
            "observed_count": sing.len(),
            "expected_count": 10,
            "singular_points": sing,
            "orbit_of_(1,1,1,-1,-1,-1)": orbit,
            "exact_jacobian_ranks": ranks,
        }),
    })
}

fn klein_smooth(p: u64) -> Result<Outcome, String> {
    let sing = singular_points_mod_p(&[klein_cubic()], p).map_err(err)?;
    Ok(Outcome::compare(json!({ "p": p }), sing, Vec::new()))
}

fn rats(v: &[Rational]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

macro_rules! check {
    ($suite:expr, $id:literal, $anchor:literal, $body:expr) => {
        Check { id: $id, anchor: $anchor, suite: $suite, body: $body }
    };
}

fn orders() -> Vec<Check> {
    use Suite::Orders as S;
    vec![
        check!(S, "permgrp.order-a5", "order of A5 is 60", |_| order_check("A5", 60)),
        check!(S, "permgrp.order-a6", "order of A6 is 360", |_| order_check("A6", 360)),
        check!(S, "permgrp.order-a7", "order of A7 is 2520", |_| order_check("A7", 2520)),
        check!(S, "permgrp.order-psl2-7", "order of PSL2(7) is 168", |_| order_check("GL3(2):7", 168)),
        check!(S, "permgrp.order-sl2-8", "order of SL2(8) is 504", |_| order_check("SL2(8)", 504)),
        check!(S, "permgrp.order-psp4-3", "order of PSp4(3) is 25920", |_| order_check("PSp4(3):40", 25920)),
        check!(S, "permgrp.order-psl2-11", "order of PSL2(11) is 660", |_| order_check("PSL2(11)", 660)),
    ]
}

fn permutation() -> Vec<Check> {
    use Suite::Permutation as S;
    vec![
        check!(S, "permgrp.sl2-8-point-stabilizer", "SL2(8) point stabilizer is (mu2)^3 : mu7", |_| {
            let stab = sl2_8().point_stabilizer(0).map_err(err)?;
            let d = stab.derived_subgroup();
            let observed = (stab.order(), d.order(), d.exponent(), d.derived_subgroup().order());
            Ok(Outcome::compare(json!({ "group": "SL2(8)", "point": 0 }), observed, (56, 8, 2, 1)))
        }),
        check!(S, "permgrp.sl3-3-blocks", "SL3(3) on 26 points is imprimitive with 13 blocks of size 2", |_| {
            let g = sl3_3_on_26();
            let systems = g.minimal_blocks().map_err(err)?;
            let shapes: Vec<(usize, usize)> = systems.iter().map(|b| (b.num_blocks(), b.block_size())).collect();
            let observed = (g.is_primitive().map_err(err)?, shapes);
            Ok(Outcome::compare(json!({ "group": "SL3(3):26" }), observed, (false, vec![(13, 2)])))
        }),
        check!(S, "permgrp.psl2-11-doubly-transitive", "PSL2(11) acts doubly transitively on 11 points", |_| {
            let g = parse_group_spec("coset:PSL2(11)/A5").map_err(err)?;
            let observed = (g.degree(), g.transitivity_degree() >= 2, g.point_stabilizer(0).map_err(err)?.order());
            Ok(Outcome::compare(json!({ "spec": "coset:PSL2(11)/A5" }), observed, (11, true, 60)))
        }),
        check!(S, "chartab.min-faithful-degrees", "minimal faithful degrees 3, 4, 5, 7", |_| {
            let stab = sl2_8().point_stabilizer(0).map_err(err)?;
            let observed: Vec<u64> = [alternating(5), symmetric(5), alternating(6), stab]
                .iter()
                .map(|g| table(g).map(|t| t.min_faithful_rep_degree()))
                .collect::<Result<_, _>>()?;
            Ok(Outcome::compare(json!({ "groups": ["A5", "S5", "A6", "SL2(8)_0"] }), observed, vec![3, 4, 5, 7]))
        }),
    ]
}

fn characters() -> Vec<Check> {
    use Suite::Characters as S;
    vec![
        check!(S, "chartab.a7-table", "printed character table of A7", |_| {
            printed_table_check(alternating(7), "A7", reference::a7())
        }),
        check!(S, "chartab.s5-table", "printed character table of S5", |_| {
            printed_table_check(symmetric(5), "S5", reference::s5())
        }),
        check!(S, "chartab.psl2-11-table", "printed character table of PSL2(11)", |_| {
            printed_table_check(psl2(11).map_err(err)?, "PSL2(11)", reference::psl2_11())
        }),
        check!(S, "chartab.a5-table", "printed character table of A5", |_| {
            printed_table_check(alternating(5), "A5", reference::a5())
        }),
        check!(S, "chartab.a7-restriction-s5", "chi3 of A7 restricts to S5 as chi2' + chi4'", |_| {
            let a7 = table(&alternating(7))?;
            let s5_classes = classes(&s5_in_a7())?;
            let s5 = dixon_character_table(s5_classes.clone()).map_err(err)?;
            let fusion = FusionMap::new(s5_classes, a7.classes().clone()).map_err(err)?;
            let p7 = reference::a7();
            let p5 = reference::s5();
            let m7 = match_printed_table(&a7, &p7).ok_or("A7 table not matched")?;
            let m5 = match_printed_table(&s5, &p5).ok_or("S5 table not matched")?;
            let res = fusion.restrict(a7.row(m7.rows[2])).map_err(err)?;
            let values: Vec<Cyclotomic> = m5.columns.iter().map(|&c| res.value(c).clone()).collect();
            let mult = s5.decompose(&res).map_err(err)?;
            let parts: Vec<String> =
                m5.rows.iter().enumerate().filter(|(_, &r)| mult[r] != 0).map(|(i, _)| p5.rows[i].0.clone()).collect();
            let expected_values: Vec<String> = ["10", "-2", "-2", "1", "1", "0", "0"].map(String::from).to_vec();
            Ok(Outcome::compare(
                json!({ "character": "chi3", "columns": p5.column_labels }),
                (texts(&values), parts),
                (expected_values, vec!["chi2'".to_string(), "chi4'".to_string()]),
            ))
        }),
        check!(S, "chartab.psl2-11-restriction-a5", "chi2 of PSL2(11) restricts to A5 as chi5'", |_| {
            let g = psl2(11).map_err(err)?;
            let big = table(&g)?;
            let sub = find_two_generated_subgroup(&g, (2, 5), 60, SUBGROUP_SEED, 2000).map_err(err)?;
            let sub_classes = classes(&sub)?;
            let small = dixon_character_table(sub_classes.clone()).map_err(err)?;
            let fusion = FusionMap::new(sub_classes, big.classes().clone()).map_err(err)?;
            let pb = reference::psl2_11();
            let ps = reference::a5();
            let mb = match_printed_table(&big, &pb).ok_or("PSL2(11) table not matched")?;
            let ms = match_printed_table(&small, &ps).ok_or("A5 table not matched")?;
            let res = fusion.restrict(big.row(mb.rows[1])).map_err(err)?;
            let mult = small.decompose(&res).map_err(err)?;
            let parts: Vec<(String, i64)> = ms
                .rows
                .iter()
                .enumerate()
                .filter(|(_, &r)| mult[r] != 0)
                .map(|(i, &r)| (ps.rows[i].0.clone(), mult[r]))
                .collect();
            let values: Vec<Cyclotomic> = ms.columns.iter().map(|&c| res.value(c).clone()).collect();
            Ok(Outcome::compare(
                json!({ "character": "chi2", "subgroup_seed": SUBGROUP_SEED, "restricted_values": texts(&values) }),
                parts,
                vec![("chi5'".to_string(), 1)],
            ))
        }),
        check!(S, "chartab.psl2-11-quintic-invariants", "PSL2(11) in degree 5 has one cubic and no quartic invariant", |_| {
            let t = table(&psl2(11).map_err(err)?)?;
            let mut observed = Vec::new();
            for r in t.rows_of_degree(5) {
                let chi = t.row(r);
                observed.push((molien_invariant_dim(chi, 3).map_err(err)?, molien_invariant_dim(chi, 4).map_err(err)?));
            }
            Ok(Outcome::compare(json!({ "degrees": [3, 4] }), observed, vec![(1, 0), (1, 0)]))
        }),
        check!(S, "chartab.psp4-3-cubic-invariants", "PSp4(3) in degrees 5 and 6 has no cubic invariant", |_| {
            let t = table(&parse_group_spec("PSp4(3):40").map_err(err)?)?;
            let rows: Vec<usize> = t.rows_of_degree(5).into_iter().chain(t.rows_of_degree(6)).collect();
            let observed: Vec<(u64, u64)> = rows
                .iter()
                .map(|&r| molien_invariant_dim(t.row(r), 3).map(|m| (t.degrees()[r], m)))
                .collect::<Result<_, _>>()
                .map_err(err)?;
            Ok(Outcome::compare(json!({ "degree": 3, "prime": t.prime() }), observed, vec![(5, 0), (5, 0), (6, 0)]))
        }),
    ]
}

fn invariants() -> Vec<Check> {
    use Suite::Invariants as S;
    vec![
        check!(S, "polyinv.weyl-e6-order", "W(E6) has order 51840", |_| {
            let w = weyl_e6(CLOSURE_BUDGET).map_err(err)?;
            Ok(Outcome::compare(json!({ "roots": w.roots.len() }), w.group.order(), Some(51840)))
        }),
        check!(S, "polyinv.weyl-e6-derived-order", "W(E6)' has order 25920", |_| {
            let w = weyl_e6(CLOSURE_BUDGET).map_err(err)?;
            let d = w.group.derived_subgroup(CLOSURE_BUDGET).map_err(err)?;
            Ok(Outcome::compare(json!({}), d.order(), Some(25920)))
        }),
        check!(S, "polyinv.weyl-e6-derived-cubic", "W(E6)' has no cubic invariants", |_| {
            let w = weyl_e6(CLOSURE_BUDGET).map_err(err)?;
            let d = w.group.derived_subgroup(CLOSURE_BUDGET).map_err(err)?;
            let direct = invariant_space_dim_direct(&d, 3).map_err(err)? as u64;
            let perm = w.on_roots(d.generators());
            let cc = classes(&perm)?;
            let chi = ClassFunction::new(
                cc.clone(),
                cc.reps().iter().map(|p| Cyclotomic::from_int(w.matrix_of(p).trace())).collect(),
            );
            let molien = molien_invariant_dim(&chi, 3).map_err(err)?;
            Ok(Outcome::compare(json!({ "degree": 3 }), (direct, molien), (0, 0)))
        }),
        check!(S, "polyinv.klein-55-order", "the diagonal and cyclic symmetries generate a group of order 55", |_| {
            let (s, t) = klein_55_generators();
            let g = group_closure(5, vec![s, t], 1000).map_err(err)?;
            Ok(Outcome::compare(json!({ "exponents": klein_exponents() }), g.order(), Some(55)))
        }),
        check!(S, "polyinv.klein-55-cubic-invariants", "the order-55 group has one cubic invariant", |_| {
            let (s, t) = klein_55_generators();
            let g = group_closure(5, vec![s, t], 1000).map_err(err)?;
            let direct = invariant_space_dim_direct(&g, 3).map_err(err)?;
            let a = klein_exponents();
            let weight_zero = monomials(5, 3)
                .0
                .into_iter()
                .filter(|m| m.iter().zip(&a).map(|(&e, &w)| i64::from(e) * w).sum::<i64>() % 11 == 0)
                .count();
            // Weight-zero cubic monomials form free orbits of the 5-cycle.
            Ok(Outcome::compare(json!({ "weight_zero_monomials": weight_zero }), direct, weight_zero / 5))
        }),
    ]
}

fn varieties() -> Vec<Check> {
    use Suite::Varieties as S;
    vec![
        check!(S, "polyinv.klein-cubic-invariance", "the Klein cubic is invariant under sigma and tau", |_| {
            let (s, t) = klein_55_generators();
            invariance_check("klein_cubic", &[klein_cubic()], &[s, t])
        }),
        check!(S, "polyinv.palatini-invariance", "the Palatini quartic is invariant under the order-55 group", |_| {
            let (s, t) = palatini_55_generators();
            invariance_check("palatini", &[palatini_quartic()], &[s, t])
        }),
        check!(S, "polyinv.segre-invariance", "the Segre cubic is S6-invariant", |_| {
            invariance_check("segre_cubic", &polyinv::variety("segre_cubic").map_err(err)?.forms, &perm_matrices(&symmetric(6)))
        }),
        check!(S, "polyinv.burkhardt-invariance", "the Burkhardt quartic is S6-invariant", |_| {
            invariance_check("burkhardt", &polyinv::variety("burkhardt").map_err(err)?.forms, &perm_matrices(&symmetric(6)))
        }),
        check!(S, "polyinv.x6prime-invariance", "X6' is A7-invariant", |_| {
            invariance_check("x6prime", &polyinv::variety("x6prime").map_err(err)?.forms, &perm_matrices(&alternating(7)))
        }),
        check!(S, "polyinv.segre-nodes-f31", "the Segre cubic has 10 nodes", |_| segre_nodes(31)),
        check!(S, "polyinv.segre-nodes-f41", "the Segre cubic has 10 nodes", |_| segre_nodes(41)),
        check!(S, "polyinv.segre-nodes-f61", "the Segre cubic has 10 nodes", |_| segre_nodes(61)),
        check!(S, "polyinv.klein-cubic-smooth-f13", "the Klein cubic is smooth", |_| klein_smooth(13)),
        check!(S, "polyinv.klein-cubic-smooth-f23", "the Klein cubic is smooth", |_| klein_smooth(23)),
    ]
}

fn fano_checks() -> Vec<Check> {
    use Suite::Fano as S;
    vec![
        check!(S, "fano.quadric-count", "a genus-5 Fano is an intersection of 3 quadrics", |_| {
            Ok(Outcome::compare(json!({ "g": 5 }), fano::quadric_count(5), 3))
        }),
        check!(S, "fano.h12-table", "h12 of smooth rank-one Fano threefolds", |_| {
            let observed: Vec<(i64, i64)> = fano::FANO_GENERA
                .iter()
                .map(|&g| fano::fano_h12(g).map(|h| (g, h)))
                .collect::<Result<_, _>>()
                .map_err(err)?;
            let expected: Vec<(i64, i64)> =
                fano::FANO_GENERA.iter().copied().zip([52, 30, 20, 14, 10, 7, 5, 3, 2, 0]).collect();
            Ok(Outcome::compare(json!({}), observed, expected))
        }),
        check!(S, "fano.namikawa-product-bound", "at most 13 singular points in the product cases", |_| {
            let cases: Vec<(i64, i64, i64)> = fano::product_cases().iter().map(|c| (c.rho, c.genus, c.bound)).collect();
            Ok(Outcome::compare(
                json!({ "h12": 0 }),
                (cases, fano::product_case_bound()),
                (vec![(7, 13, 13), (8, 10, 12), (9, 7, 11)], 13),
            ))
        }),
        check!(S, "fano.basket-multi-entry", "only l=2, n=7, r=(2,2) for non-cyclic points", |_| {
            let cases = fano::basket_inequality_cases(7, &int(24), true).map_err(err)?;
            let multi: Vec<(u32, Vec<u32>)> = cases
                .iter()
                .filter(|p| p.has_multi_entry_orbit())
                .flat_map(|p| p.orbits.iter().map(|o| (o.size, o.indices.clone())))
                .collect();
            Ok(Outcome::compare(json!({ "min_orbit": 7, "bound": 24, "strict": true }), multi, vec![(7, vec![2, 2])]))
        }),
        check!(S, "fano.basket-window", "orbits of size at least 9 give m=1, r=2, 9 <= n <= 15", |_| {
            let cases = fano::basket_inequality_cases(9, &int(24), true).map_err(err)?;
            let observed: Vec<(usize, u32, Vec<u32>)> = cases
                .iter()
                .map(|p| (p.orbits.len(), p.orbits[0].size, p.orbits[0].indices.clone()))
                .collect();
            let expected: Vec<(usize, u32, Vec<u32>)> = (9..=15).map(|n| (1, n, vec![2])).collect();
            Ok(Outcome::compare(json!({ "min_orbit": 9, "bound": 24, "strict": true }), observed, expected))
        }),
        check!(S, "fano.halfpoint-dimension", "dim |-K| = 0 forces -K^3 = 3/2 for 11 half-points", |_| {
            let dims = [rat(3, 2), rat(7, 2)].map(|k3| fano::anticanonical_dim_halfpoints(&k3, 11));
            let report = fano::solve_integrality(11, 2);
            let pairs: Vec<(u64, String)> = report.pairs.iter().map(|(l, k)| (*l, k.to_string())).collect();
            Ok(Outcome::compare(
                json!({ "n": 11, "cubes": ["3/2", "7/2"] }),
                (rats(&dims), pairs),
                (vec!["0".to_string(), "1".to_string()], vec![(0, "3/2".into()), (1, "7/2".into()), (2, "11/2".into())]),
            ))
        }),
        check!(S, "fano.hurwitz-genus-7", "genus-7 curves: |G| = 288 with (2,3,8) or |G| = 504 with (2,3,7)", |_| {
            let sols = fano::hurwitz_enumerate(12, 234, 18, Some(9)).map_err(err)?;
            let observed: Vec<(u64, Vec<u64>, u64)> =
                sols.into_iter().map(|s| (s.group_order, s.signature, s.quotient_genus)).collect();
            Ok(Outcome::compare(
                json!({ "two_g_minus_2": 12, "min_order": 234, "max_branch": 18, "divisible_by": 9 }),
                observed,
                vec![(288, vec![2, 3, 8], 0), (504, vec![2, 3, 7], 0)],
            ))
        }),
        check!(S, "fano.orbit-degree-660", "surface degrees on the PSL2(11) threefold are divisible by 7", |_| {
            let r = fano::orbit_degree_constraint(660, 14).map_err(err)?;
            Ok(Outcome::compare(
                json!({ "group_order": 660, "two_g_minus_2": 14 }),
                (r.forced_divisor, r.admissible_degrees(6)),
                (7, Vec::new()),
            ))
        }),
        check!(S, "fano.diophantine-case-a", "case g - 1 = 11k forces k = 1 and g = 12", |_| {
            let sols: Vec<(u64, u64, u64, u64)> =
                fano::diophantine_case_a().iter().map(|s| (s.k, s.alpha, s.beta, s.g)).collect();
            Ok(Outcome::compare(json!({}), sols, vec![(1, 1, 1, 12)]))
        }),
        check!(S, "fano.diophantine-case-b", "case alpha = 11k has no solution with g > 2", |_| {
            let sols: Vec<(u64, u64, u64, u64)> =
                fano::diophantine_case_b(100).map_err(err)?.iter().map(|s| (s.k, s.alpha, s.beta, s.g)).collect();
            Ok(Outcome::compare(json!({ "g_max": 100 }), sols, Vec::new()))
        }),
        check!(S, "fano.factorization-identities", "factorizations of the eliminated quadratics", |seed| {
            let r = fano::verify_factorizations(seed, 100);
            let observed = r.err().map(|f| json!({ "case": f.case.to_string(), "x": f.x.to_string(), "y": f.y.to_string() }));
            Ok(Outcome::compare(json!({ "seed": seed, "samples": 100 }), observed, None::<Value>))
        }),
    ]
}

/// Checks of a suite in deterministic order.
pub fn checks_for(suite: Suite) -> Vec<Check> {
    suite
        .members()
        .into_iter()
        .flat_map(|s| match s {
            Suite::Orders => orders(),
            Suite::Permutation => permutation(),
            Suite::Characters => characters(),
            Suite::Invariants => invariants(),
            Suite::Varieties => varieties(),
            Suite::Fano => fano_checks(),
            Suite::All => unreachable!("expanded by members"),
        })
        .collect()
}
