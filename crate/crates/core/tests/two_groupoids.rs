mod common;

use common::fixtures::{small_complexes, two_gpd_fixtures};
use hpk::presentation::Verdict;
use hpk::sset::{
    all_maps, edge_path_group, pi0_sset, pi_n_kan, standard_complex, Basepoint, ComplexKind,
};
use hpk::two_gpd::fixtures::*;
use hpk::two_gpd::{
    counit_2gpd, count_presented_homs, ms_weak_equivalence_presented, nerve, pi0_2gpd, pi1_2gpd,
    pi2_2gpd, whitehead_2gpd,
};
use hpk::Budget;

#[test]
fn nerve_homotopy_groups_match() {
    let budget = Budget::new(200_000_000);
    for (name, k) in two_gpd_fixtures() {
        let nk = nerve(&k, 4, &budget).unwrap();
        assert_eq!(
            pi0_2gpd(&k).count,
            pi0_sset(&nk.sset).unwrap().count,
            "{name}"
        );
        for x in 0..k.object_count() {
            let base = Basepoint(x);
            let p1 = pi_n_kan(&nk.sset, base, 1, &budget).unwrap().group.unwrap();
            let p2 = pi_n_kan(&nk.sset, base, 2, &budget).unwrap().group.unwrap();
            let p3 = pi_n_kan(&nk.sset, base, 3, &budget).unwrap().group.unwrap();
            let k1 = pi1_2gpd(&k, x).unwrap();
            let k2 = pi2_2gpd(&k, x).unwrap();
            assert!(
                k1.find_isomorphism(&p1, &budget).unwrap().is_some(),
                "{name} π_1 at {x}"
            );
            assert!(
                k2.find_isomorphism(&p2, &budget).unwrap().is_some(),
                "{name} π_2 at {x}"
            );
            assert!(p3.is_trivial(), "{name} π_3 at {x}");
        }
    }
}

#[test]
fn presented_homs_are_nerve_maps() {
    let budget = Budget::new(200_000_000);
    for (xn, x) in small_complexes() {
        assert!(x.nondegenerate_counts().iter().sum::<usize>() <= 5, "{xn}");
        let w = whitehead_2gpd(&x).unwrap();
        for (kn, k) in two_gpd_fixtures() {
            let nk = nerve(&k, 3, &budget).unwrap();
            let left = count_presented_homs(&w, &k, &budget).unwrap();
            let right = all_maps(&x, &nk.sset, &budget).unwrap().len();
            assert_eq!(left, right, "{xn} into {kn}");
        }
    }
}

#[test]
fn relations_cut_down_homs() {
    // a 3-simplex imposes the cocycle; the boundary alone does not
    let budget = Budget::new(200_000_000);
    let k = z2_on_z3();
    let nk = nerve(&k, 3, &budget).unwrap();
    for kind in [ComplexKind::Simplex, ComplexKind::Boundary] {
        let x = standard_complex(kind, 3, None, 3).unwrap();
        let w = whitehead_2gpd(&x).unwrap();
        let left = count_presented_homs(&w, &k, &budget).unwrap();
        let right = all_maps(&x, &nk.sset, &budget).unwrap().len();
        assert_eq!(left, right, "{kind:?}");
    }
}

#[test]
fn counit_is_a_weak_equivalence_for_every_fixture() {
    let budget = Budget::new(200_000_000);
    for (name, k) in two_gpd_fixtures() {
        let nk = nerve(&k, 3, &budget).unwrap();
        let w = whitehead_2gpd(&nk.sset).unwrap();
        let h = counit_2gpd(&w, &nk);
        let v = ms_weak_equivalence_presented(&w, &h, &k, &budget).unwrap();
        assert_eq!(v.verdict, Verdict::Yes, "{name}: {:?}", v.witness);
    }
}

#[test]
fn unit_on_the_circle_matches_presentations() {
    let s1 = standard_complex(ComplexKind::Sphere, 1, None, 3).unwrap();
    let w = whitehead_2gpd(&s1).unwrap();
    let (p, gens) = w.pi1_presentation(0);
    let epg = edge_path_group(&s1, Basepoint(0)).unwrap();
    // both sides are generated by the one loop edge
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
    assert_eq!(p.generators.len(), 1);
    assert!(p.simplified().relators.is_empty());
    assert_eq!(p.abelianization().unwrap().free_rank, 1);
}
