mod common;

use common::lifting::*;
use hpk::site::fixtures::one_object;
use hpk::site::{solve_lifting, LiftOutcome};
use hpk::sset::{all_maps, ComplexKind, SimplicialMap};
use hpk::Budget;

#[test]
fn horn_into_the_simplex_lifts_to_the_identity() {
    let pr = horn_in_simplex();
    match solve_lifting(&one_object(), &pr, &Budget::new(1_000_000)).unwrap() {
        LiftOutcome::Lift(h) => {
            check_lift(&pr, &h);
            let d2 = complex(ComplexKind::Simplex, 2);
            assert_eq!(h.components[0], SimplicialMap::identity(&d2));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn endpoints_on_the_circle_lift_to_the_loop() {
    let pr = endpoints_on_circle();
    let (d1, s1) = (
        complex(ComplexKind::Simplex, 1),
        complex(ComplexKind::Sphere, 1),
    );
    match solve_lifting(&one_object(), &pr, &Budget::new(1_000_000)).unwrap() {
        LiftOutcome::Lift(h) => {
            check_lift(&pr, &h);
            let e = h.components[0].apply(1, d1.id(1, "01").unwrap());
            assert_eq!(s1.name(1, e), "01");
            assert!(!s1.is_degenerate(1, e));
        }
        other => panic!("{other:?}"),
    }
}

#[test]
fn horn_in_the_hollow_triangle_has_no_lift() {
    let pr = horn_in_hollow_triangle();
    let outcome = solve_lifting(&one_object(), &pr, &Budget::new(1_000_000)).unwrap();
    assert_eq!(outcome, LiftOutcome::NoLift);
    // independent check: no map Δ^2 → ∂Δ^2 restricts to the horn
    let (horn, d2, bd) = (
        complex(ComplexKind::Horn, 2),
        complex(ComplexKind::Simplex, 2),
        complex(ComplexKind::Boundary, 2),
    );
    let (i, top) = (include(&horn, &d2), include(&horn, &bd));
    let extending = all_maps(&d2, &bd, &Budget::new(1_000_000))
        .unwrap()
        .into_iter()
        .filter(|m| {
            (0..=DEPTH).all(|n| {
                (0..horn.level_size(n)).all(|s| m.apply(n, i.apply(n, s)) == top.apply(n, s))
            })
        })
        .count();
    assert_eq!(extending, 0);
}
