mod common;

use common::fixtures::{adjunction_sources, adjunction_targets};
use common::oracles::brute_force_count;
use hpk::classify::{adjunction_witness, wbar};
use hpk::groupoid::FiniteGroupoid;
use hpk::sgpd::SimplicialGroupoid;
use hpk::sset::{standard_complex, ComplexKind};
use hpk::Budget;

#[test]
fn hom_sets_agree_with_brute_force() {
    let budget = Budget::new(50_000_000);
    for (xn, x) in adjunction_sources() {
        for (an, a) in adjunction_targets() {
            let wit = adjunction_witness(&x, &a, &budget).unwrap();
            let w = wbar(&a, x.depth(), &budget).unwrap();
            let oracle = brute_force_count(&x, &w.sset);
            assert!(wit.holds(), "{xn} / {an}: {wit:?}");
            assert_eq!(wit.wbar_side, oracle, "{xn} / {an}");
            eprintln!("{xn} / {an}: {}", oracle);
        }
    }
}

#[test]
fn interval_into_interval_groupoid_has_four_maps() {
    let x = standard_complex(ComplexKind::Simplex, 1, None, 2).unwrap();
    let a = SimplicialGroupoid::constant(&FiniteGroupoid::interval(), 1);
    let w = wbar(&a, 2, &Budget::new(1_000_000)).unwrap();
    assert_eq!(brute_force_count(&x, &w.sset), 4);
}
