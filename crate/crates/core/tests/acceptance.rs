//! The acceptance suite: ten criteria, each with a wall-clock limit.
//!
//! Runs without the libtest harness so every criterion prints one line.
//! A criterion fails on a panic, an error, or by running past its limit.

mod common;

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::fixtures::*;
use common::lifting::*;
use common::oracles::brute_force_count;
use common::random::random_construction;
use common::sheaves::sheaf_fixtures;
use common::squares::*;
use hpk::classify::{adjunction_witness, w_total, wbar};
use hpk::group::FiniteGroup;
use hpk::presentation::Verdict;
use hpk::sgpd::{moore_pi_n, pi0_sgpd, SimplicialGroupoid};
use hpk::site::fixtures::one_object;
use hpk::site::{is_sheaf, natural_isomorphism, sheafify, solve_lifting, LiftOutcome};
use hpk::sset::{
    all_maps, edge_path_group, pi0_sset, pi_n_kan, standard_complex, validate_sset, Basepoint,
    ComplexKind,
};
use hpk::two_gpd::{
    counit_2gpd, ms_weak_equivalence_presented, nerve, pi0_2gpd, pi1_2gpd, pi2_2gpd, whitehead_2gpd,
};
use hpk::Budget;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

struct Criterion {
    name: &'static str,
    limit: Duration,
    run: fn() -> String,
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn homotopy_groups_of_wbar() -> String {
    let budget = Budget::new(50_000_000);
    let mut checked = 0;
    for (name, a) in sgpd_fixtures() {
        let w = wbar(&a, 3, &budget).unwrap();
        assert!(validate_sset(&w.sset).is_empty(), "{name}");
        assert_eq!(
            pi0_sgpd(&a).count,
            pi0_sset(&w.sset).unwrap().count,
            "{name}"
        );
        for x in 0..a.objects().len() {
            let base = Basepoint(w.id_of(0, &[x]).unwrap());
            for n in 0..=1 {
                let left = moore_pi_n(&a, x, n).unwrap().group;
                let right = pi_n_kan(&w.sset, base, n + 1, &budget)
                    .unwrap()
                    .group
                    .unwrap();
                assert!(
                    left.find_isomorphism(&right, &budget).unwrap().is_some(),
                    "{name} object {x} degree {n}: {} vs {}",
                    left.describe(),
                    right.describe()
                );
                checked += 1;
            }
        }
    }
    format!("{checked} group comparisons")
}

fn total_space_is_contractible() -> String {
    let budget = Budget::new(50_000_000);
    let mut edges = 0;
    for g in [FiniteGroup::cyclic(2), FiniteGroup::cyclic(3)] {
        let a = SimplicialGroupoid::constant_group(&g, 3);
        let t = w_total(&a, 3, &budget).unwrap();
        assert!(validate_sset(&t.total).is_empty());
        assert_eq!(pi0_sset(&t.total).unwrap().count, 1);
        assert!(pi_n_kan(&t.total, Basepoint(0), 1, &budget)
            .unwrap()
            .group
            .unwrap()
            .is_trivial());

        // the edge from ⟨b⟩ to ⟨a⟩, found by search, is (s_0 b, b⁻¹a)
        let g0 = a.level(0);
        let vertex = |v: usize| t.tuples[0][v][0];
        for x in 0..t.total.level_size(0) {
            for y in 0..t.total.level_size(0) {
                let (ga, gb) = (vertex(x), vertex(y));
                let found: Vec<usize> = (0..t.total.level_size(1))
                    .filter(|&e| {
                        vertex(t.total.face(1, 1, e)) == gb && vertex(t.total.face(1, 0, e)) == ga
                    })
                    .collect();
                assert_eq!(found.len(), 1, "edges {gb} → {ga}");
                let expected = vec![
                    a.degeneracy(0, 0, gb),
                    g0.compose(g0.inverse(gb), ga).unwrap(),
                ];
                assert_eq!(t.tuples[1][found[0]], expected);
                edges += 1;
            }
        }
    }
    format!("π_0 = 1, π_1 = 1, {edges} edges located")
}

fn adjunction_counts() -> String {
    let budget = Budget::new(50_000_000);
    let mut pairs = 0;
    for (xn, x) in adjunction_sources() {
        for (an, a) in adjunction_targets() {
            let wit = adjunction_witness(&x, &a, &budget).unwrap();
            let w = wbar(&a, x.depth(), &budget).unwrap();
            let oracle = brute_force_count(&x, &w.sset);
            assert!(wit.holds(), "{xn} / {an}: {wit:?}");
            assert_eq!(wit.wbar_side, oracle, "{xn} / {an}");
            assert_eq!(wit.loop_side, oracle, "{xn} / {an}");
            pairs += 1;
        }
    }
    format!("{pairs} hom-set pairs")
}

fn nerve_homotopy_groups() -> String {
    let budget = Budget::new(200_000_000);
    let fixtures = two_gpd_fixtures();
    assert!(fixtures.len() >= 4);
    for (name, k) in &fixtures {
        let nk = nerve(k, 4, &budget).unwrap();
        assert_eq!(
            pi0_2gpd(k).count,
            pi0_sset(&nk.sset).unwrap().count,
            "{name}"
        );
        for x in 0..k.object_count() {
            let base = Basepoint(x);
            let p1 = pi_n_kan(&nk.sset, base, 1, &budget).unwrap().group.unwrap();
            let p2 = pi_n_kan(&nk.sset, base, 2, &budget).unwrap().group.unwrap();
            let p3 = pi_n_kan(&nk.sset, base, 3, &budget).unwrap().group.unwrap();
            let k1 = pi1_2gpd(k, x).unwrap();
            let k2 = pi2_2gpd(k, x).unwrap();
            assert!(k1.find_isomorphism(&p1, &budget).unwrap().is_some());
            assert!(k2.find_isomorphism(&p2, &budget).unwrap().is_some());
            assert!(p3.is_trivial(), "{name} π_3 at {x}");
        }
    }
    format!("{} 2-groupoids at depth 4", fixtures.len())
}

fn counit_and_unit() -> String {
    let budget = Budget::new(200_000_000);
    let fixtures = two_gpd_fixtures();
    for (name, k) in &fixtures {
        let nk = nerve(k, 3, &budget).unwrap();
        let w = whitehead_2gpd(&nk.sset).unwrap();
        let h = counit_2gpd(&w, &nk);
        let v = ms_weak_equivalence_presented(&w, &h, k, &budget).unwrap();
        assert_eq!(v.verdict, Verdict::Yes, "{name}: {:?}", v.witness);
    }

    let s1 = standard_complex(ComplexKind::Sphere, 1, None, 3).unwrap();
    let w = whitehead_2gpd(&s1).unwrap();
    let (p, gens) = w.pi1_presentation(0);
    let epg = edge_path_group(&s1, Basepoint(0)).unwrap();
    let edge_of = |g: usize| w.edge_generator.iter().position(|&o| o == Some(g)).unwrap();
    let gen_map: Vec<usize> = gens
        .iter()
        .map(|&g| {
            epg.generator_edge
                .iter()
                .position(|&e| e == edge_of(g))
                .unwrap()
        })
        .collect();
    assert!(p.matches_under(&epg.presentation, &gen_map));
    assert_eq!(p.abelianization().unwrap().free_rank, 1);
    format!("{} counits, unit on S^1", fixtures.len())
}

fn sheafification() -> String {
    let b = Budget::new(50_000_000);
    let fixtures = sheaf_fixtures();
    for (name, c, f) in &fixtures {
        let l2 = sheafify(c, f, &b).unwrap();
        assert!(l2.violations(c).is_empty(), "{name}");
        assert!(is_sheaf(c, &l2, &b).unwrap().is_empty(), "{name}");
        let again = sheafify(c, &l2, &b).unwrap();
        assert_eq!(
            natural_isomorphism(c, &l2, &again, &b).unwrap().0,
            Verdict::Yes,
            "{name}"
        );
    }
    let (_, c, f) = &fixtures[0];
    let l2 = sheafify(c, f, &b).unwrap();
    assert_eq!(l2.values[0].0, vec!["{f:c}".to_string()]);
    assert_eq!(l2.values[1].0, vec!["c".to_string()]);
    assert_eq!(l2.restrictions[2], vec![0]);
    format!("{} presheaves", fixtures.len())
}

fn unit_and_planted_failure() -> String {
    let r = unit_report();
    assert_eq!(r.verdict, Verdict::Yes, "{r:?}");
    let planted = planted_failure_report();
    assert_eq!(planted.verdict, Verdict::No);
    let witness = planted.witness.unwrap();
    assert!(witness.starts_with("π_1 sheaf over U"), "{witness}");
    format!("unit checked {} sheaves; {witness}", r.checked.len())
}

fn lifting_problems() -> String {
    let site = one_object();
    let budget = Budget::new(1_000_000);
    for pr in [horn_in_simplex(), endpoints_on_circle()] {
        match solve_lifting(&site, &pr, &budget).unwrap() {
            LiftOutcome::Lift(h) => check_lift(&pr, &h),
            other => panic!("{other:?}"),
        }
    }
    let pr = horn_in_hollow_triangle();
    assert_eq!(
        solve_lifting(&site, &pr, &budget).unwrap(),
        LiftOutcome::NoLift
    );
    let (horn, d2, bd) = (
        complex(ComplexKind::Horn, 2),
        complex(ComplexKind::Simplex, 2),
        complex(ComplexKind::Boundary, 2),
    );
    let (i, top) = (include(&horn, &d2), include(&horn, &bd));
    let extending = all_maps(&d2, &bd, &budget)
        .unwrap()
        .into_iter()
        .filter(|m| {
            (0..=DEPTH).all(|n| {
                (0..horn.level_size(n)).all(|s| m.apply(n, i.apply(n, s)) == top.apply(n, s))
            })
        })
        .count();
    assert_eq!(extending, 0);
    "lift, lift, no lift".into()
}

fn random_constructions() -> String {
    let mut rng = ChaCha8Rng::seed_from_u64(0);
    let budget = Budget::new(50_000_000);
    let mut kinds = std::collections::BTreeMap::<String, usize>::new();
    for i in 0..1000 {
        let (kind, violations) = random_construction(&mut rng, &budget);
        assert!(
            violations.is_empty(),
            "construction {i} ({kind}): {violations:?}"
        );
        let family = kind
            .split_whitespace()
            .next()
            .unwrap_or_default()
            .to_string();
        *kinds.entry(family).or_default() += 1;
    }
    let summary: Vec<String> = kinds.iter().map(|(k, n)| format!("{k} {n}")).collect();
    summary.join(", ")
}

fn properness_and_pushouts() -> String {
    right_properness_instances();
    pushouts_of_free_trivial_cofibrations();
    "all instances".into()
}

fn main() -> ExitCode {
    let criteria = [
        Criterion {
            name: "Moore homotopy shifts into W-bar",
            limit: secs(60),
            run: homotopy_groups_of_wbar,
        },
        Criterion {
            name: "WG is contractible",
            limit: secs(30),
            run: total_space_is_contractible,
        },
        Criterion {
            name: "loop / W-bar adjunction",
            limit: secs(120),
            run: adjunction_counts,
        },
        Criterion {
            name: "nerves of 2-groupoids",
            limit: secs(120),
            run: nerve_homotopy_groups,
        },
        Criterion {
            name: "counit and unit",
            limit: secs(60),
            run: counit_and_unit,
        },
        Criterion {
            name: "sheafification",
            limit: secs(10),
            run: sheafification,
        },
        Criterion {
            name: "pointwise unit is a weak equivalence",
            limit: secs(60),
            run: unit_and_planted_failure,
        },
        Criterion {
            name: "lifting problems",
            limit: secs(10),
            run: lifting_problems,
        },
        Criterion {
            name: "random constructions",
            limit: secs(120),
            run: random_constructions,
        },
        Criterion {
            name: "right properness and pushouts",
            limit: secs(60),
            run: properness_and_pushouts,
        },
    ];

    // keep the panic text short: one line per failure is printed below
    std::panic::set_hook(Box::new(|_| {}));
    let mut failed = 0;
    for (i, c) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(c.run));
        let elapsed = start.elapsed();
        let line = match outcome {
            Ok(detail) if elapsed <= c.limit => format!("PASS ({detail})"),
            Ok(_) => "FAIL (over the time limit)".to_string(),
            Err(e) => {
                let msg = e
                    .downcast_ref::<String>()
                    .cloned()
                    .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                    .unwrap_or_default();
                format!("FAIL ({msg})")
            }
        };
        if line.starts_with("FAIL") {
            failed += 1;
        }
        println!(
            "criterion {:>2} {}: {line} [{:.2}s / {}s]",
            i + 1,
            c.name,
            elapsed.as_secs_f64(),
            c.limit.as_secs()
        );
    }
    println!(
        "{} of {} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
