mod common;

use common::fixtures::sgpd_fixtures;
use hpk::classify::{w_total, wbar};
use hpk::group::FiniteGroup;
use hpk::sgpd::{moore_pi_n, pi0_sgpd, SimplicialGroupoid};
use hpk::sset::{pi0_sset, pi_n_kan, validate_sset, Basepoint};
use hpk::Budget;

#[test]
fn moore_groups_shift_into_wbar() {
    let budget = Budget::new(50_000_000);
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
            }
        }
    }
}

#[test]
fn total_space_is_contractible() {
    let budget = Budget::new(50_000_000);
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
    }
}
