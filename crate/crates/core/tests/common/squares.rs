//! Weak-equivalence instances on the two-object site: the pointwise unit,
//! a planted failure, and the properness and pushout squares.

use hpk::classify::{wbar, wbar_map};
use hpk::group::FiniteGroup;
use hpk::groupoid::FiniteGroupoid;
use hpk::presentation::Verdict;
use hpk::sgpd::{SGpdMap, SimplicialGroupoid};
use hpk::site::fixtures::*;
use hpk::site::{
    is_weak_equivalence, loop_pointwise, loop_pointwise_map, presheaf_pullback, presheaf_pushout,
    unit_pointwise, FiniteSite, NaturalTransformation, Presheaf, SectionMap, Sections, WeqReport,
};
use hpk::sset::{check_kan, standard_complex, ComplexKind, SimplicialMap, TruncatedSimplicialSet};
use hpk::Budget;

pub type Sset = TruncatedSimplicialSet;

pub fn budget() -> Budget {
    Budget::new(200_000_000)
}

pub fn to_point(x: &Sset) -> SimplicialMap {
    let pt = standard_complex(ComplexKind::Point, 0, None, x.depth()).unwrap();
    SimplicialMap::new(
        x.clone(),
        pt,
        (0..=x.depth()).map(|n| vec![0; x.level_size(n)]).collect(),
    )
    .unwrap()
}

pub fn weq(
    c: &hpk::site::FiniteSite,
    x: &Presheaf<Sset>,
    y: &Presheaf<Sset>,
    f: &NaturalTransformation<Sset>,
    n_max: usize,
) -> Verdict {
    let r = is_weak_equivalence(
        c,
        &Sections::SSet(x.clone()),
        &Sections::SSet(y.clone()),
        &SectionMap::SSet(f.clone()),
        n_max,
        &budget(),
    )
    .unwrap();
    r.verdict
}

/// The pointwise unit on the interval-and-point presheaf, at `n_max = 2`.
pub fn unit_report() -> WeqReport {
    let c = two_object();
    let x = interval_and_point(&c, 3);
    let (target, eta) = unit_pointwise(&c, &x, &budget()).unwrap();
    is_weak_equivalence(
        &c,
        &Sections::SSet(x),
        &Sections::SSet(target),
        &SectionMap::SSet(eta),
        2,
        &budget(),
    )
    .unwrap()
}

/// Constant `W̄ℤ/2` collapsed to a point, which kills `π_1`.
pub fn planted_failure_report() -> WeqReport {
    let c = two_object();
    let w = wbar(
        &SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2), 3),
        3,
        &budget(),
    )
    .unwrap()
    .sset;
    let x = Presheaf::constant(&c, &w);
    let y = Presheaf::constant(
        &c,
        &standard_complex(ComplexKind::Point, 0, None, 3).unwrap(),
    );
    let f = NaturalTransformation {
        components: vec![to_point(&w); 2],
    };
    is_weak_equivalence(
        &c,
        &Sections::SSet(x),
        &Sections::SSet(y),
        &SectionMap::SSet(f),
        2,
        &budget(),
    )
    .unwrap()
}

/// `W̄` of the codiscrete groupoid on two objects: contractible and Kan.
pub fn contractible(depth: usize) -> Sset {
    let g = FiniteGroupoid::codiscrete(vec!["a".into(), "b".into()]);
    wbar(&SimplicialGroupoid::constant(&g, depth), depth, &budget())
        .unwrap()
        .sset
}

pub fn wbar_of_group(n: usize, depth: usize) -> Sset {
    wbar(
        &SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(n), depth),
        depth,
        &budget(),
    )
    .unwrap()
    .sset
}

/// Pulls the sectionwise Kan surjection `p` back along the weak equivalence
/// `g` and checks the base change `X ×_Y Z → X`.
pub fn proper_square(
    c: &FiniteSite,
    x: &Presheaf<Sset>,
    y: &Presheaf<Sset>,
    z: &Presheaf<Sset>,
    p: &NaturalTransformation<Sset>,
    g: &NaturalTransformation<Sset>,
    n_max: usize,
) {
    assert_eq!(
        weq(c, z, y, g, n_max),
        Verdict::Yes,
        "g is a weak equivalence"
    );
    for u in 0..c.object_count() {
        assert!(p.components[u].is_surjective());
        check_kan(&x.values[u], n_max + 1, &budget()).unwrap();
        check_kan(&y.values[u], n_max + 1, &budget()).unwrap();
    }
    let (pb, to_x, _) = presheaf_pullback(c, x, z, p, g).unwrap();
    assert!(pb.violations(c).is_empty());
    assert_eq!(weq(c, &pb, x, &to_x, n_max), Verdict::Yes);
}

/// Three pullback squares of a sectionwise Kan surjection along a weak
/// equivalence; panics on the first failure.
pub fn right_properness_instances() {
    let c = two_object();
    let depth = 3;
    let pt = standard_complex(ComplexKind::Point, 0, None, depth).unwrap();
    let konst = |v: &Sset| Presheaf::constant(&c, v);
    let nat = |m: &SimplicialMap| NaturalTransformation {
        components: vec![m.clone(); 2],
    };
    let e = contractible(depth);
    let w2 = wbar_of_group(2, depth);

    // W̄Z/2 → * pulled back along a contractible Kan complex
    proper_square(
        &c,
        &konst(&w2),
        &konst(&pt),
        &konst(&e),
        &nat(&to_point(&w2)),
        &nat(&to_point(&e)),
        2,
    );

    // sections W̄Z/3 over U and a point over V
    let w3 = wbar_of_group(3, depth);
    let x = Presheaf {
        values: vec![w3.clone(), pt.clone()],
        restrictions: vec![
            SimplicialMap::identity(&w3),
            SimplicialMap::identity(&pt),
            to_point(&w3),
        ],
    };
    let p = NaturalTransformation {
        components: vec![to_point(&w3), SimplicialMap::identity(&pt)],
    };
    proper_square(&c, &x, &konst(&pt), &konst(&e), &p, &nat(&to_point(&e)), 2);

    // W̄ of Z/4 → Z/2 pulled back along W̄Z/2 × E → W̄Z/2
    let konst = |v: &Sset| Presheaf::constant(&c, v);
    let nat = |m: &SimplicialMap| NaturalTransformation {
        components: vec![m.clone(); 2],
    };
    let (z4, z2) = (FiniteGroup::cyclic(4), FiniteGroup::cyclic(2));
    let (a4, a2) = (
        SimplicialGroupoid::constant_group(&z4, depth),
        SimplicialGroupoid::constant_group(&z2, depth),
    );
    let q = SGpdMap::new(
        a4.clone(),
        a2.clone(),
        vec![0],
        vec![vec![0, 1, 0, 1]; depth + 1],
    )
    .unwrap();
    let (w4, w2) = (
        wbar(&a4, depth, &budget()).unwrap(),
        wbar(&a2, depth, &budget()).unwrap(),
    );
    let p = wbar_map(&q, &w4, &w2).unwrap();
    let e = contractible(depth);
    let (prod, proj, _) = presheaf_pullback(
        &c,
        &konst(&w2.sset),
        &konst(&e),
        &nat(&to_point(&w2.sset)),
        &nat(&to_point(&e)),
    )
    .unwrap();
    proper_square(
        &c,
        &konst(&w4.sset),
        &konst(&w2.sset),
        &prod,
        &nat(&p),
        &proj,
        2,
    );
}

/// Pushes `G(i)` out along `G(j)` for a trivial cofibration `i: A → B` and
/// checks `G(C) → G(C ⊔_A B)`; `G` is a left adjoint, so the pushout of
/// loop groupoids is the loop groupoid of the pushout.
pub fn pushout_instance(
    c: &FiniteSite,
    a: &Presheaf<Sset>,
    b: &Presheaf<Sset>,
    cc: &Presheaf<Sset>,
    i: &NaturalTransformation<Sset>,
    j: &NaturalTransformation<Sset>,
) {
    assert_eq!(weq(c, a, b, i, 2), Verdict::Yes, "i is a weak equivalence");
    assert!(i.components.iter().all(|m| m.is_injective()));
    let (d, _, from_c) = presheaf_pushout(c, b, cc, i, j).unwrap();
    assert!(d.violations(c).is_empty());
    let (gc, gd) = (
        loop_pointwise(c, cc).unwrap(),
        loop_pointwise(c, &d).unwrap(),
    );
    let gf = loop_pointwise_map(&gc, &gd, &from_c).unwrap();
    assert!(gf.violations(c, &gc, &gd).is_empty());
    let r = is_weak_equivalence(
        c,
        &Sections::SGpd(gc),
        &Sections::SGpd(gd),
        &SectionMap::SGpd(gf),
        1,
        &budget(),
    )
    .unwrap();
    assert_eq!(r.verdict, Verdict::Yes, "{r:?}");
}

/// Three pushouts of loop groupoids along free trivial cofibrations;
/// panics on the first failure.
pub fn pushouts_of_free_trivial_cofibrations() {
    let c = two_object();
    let depth = 3;
    let pt = standard_complex(ComplexKind::Point, 0, None, depth).unwrap();
    let d1 = standard_complex(ComplexKind::Simplex, 1, None, depth).unwrap();
    let two = Sset::disjoint_union(&[pt.clone(), pt.clone()]).unwrap();
    let konst = |v: &Sset| Presheaf::constant(&c, v);
    let nat = |m: &SimplicialMap| NaturalTransformation {
        components: vec![m.clone(); 2],
    };
    let vertex = |x: &Sset, v: usize| {
        SimplicialMap::new(
            pt.clone(),
            x.clone(),
            (0..=depth)
                .map(|n| vec![x.degenerate_vertex(v, n)])
                .collect(),
        )
        .unwrap()
    };
    // a whisker on one of two points
    pushout_instance(
        &c,
        &konst(&pt),
        &konst(&d1),
        &konst(&two),
        &nat(&vertex(&d1, 0)),
        &nat(&vertex(&two, 0)),
    );
    // two edges glued at their heads
    pushout_instance(
        &c,
        &konst(&pt),
        &konst(&d1),
        &konst(&d1),
        &nat(&vertex(&d1, 1)),
        &nat(&vertex(&d1, 1)),
    );
    // a point into the presheaf that is Δ^1 ⊔ Δ^0 over the covered object
    let x = interval_and_point(&c, depth);
    let i = NaturalTransformation {
        components: vec![vertex(&x.values[0], 0), vertex(&x.values[1], 0)],
    };
    pushout_instance(&c, &konst(&pt), &x, &konst(&d1), &i, &nat(&vertex(&d1, 0)));
}
