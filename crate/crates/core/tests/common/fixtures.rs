//! Named fixtures for the homotopy comparisons.

use hpk::group::FiniteGroup;
use hpk::groupoid::FiniteGroupoid;
use hpk::sgpd::{dold_kan, ChainFixture, SimplicialGroupoid};
use hpk::sset::{standard_complex, ComplexKind, TruncatedSimplicialSet};
use hpk::two_gpd::fixtures::*;
use hpk::two_gpd::TwoGroupoid;

pub fn sgpd_fixtures() -> Vec<(&'static str, SimplicialGroupoid)> {
    let z2 = SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2), 2);
    let z3 = SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(3), 2);
    vec![
        ("constant Z/2", z2.clone()),
        ("constant Z/3", z3.clone()),
        (
            "constant S3",
            SimplicialGroupoid::constant_group(&FiniteGroup::symmetric3(), 2),
        ),
        (
            "dold-kan Z/2[1]",
            dold_kan(&ChainFixture::concentrated(vec![2], 1), 2).unwrap(),
        ),
        (
            "interval groupoid",
            SimplicialGroupoid::constant(&FiniteGroupoid::interval(), 2),
        ),
        (
            "two components",
            SimplicialGroupoid::disjoint_union(&[z2, z3]).unwrap(),
        ),
    ]
}

pub fn two_gpd_fixtures() -> Vec<(&'static str, TwoGroupoid)> {
    vec![
        ("point", point()),
        ("interval", interval()),
        ("Z/3 2-cells", cyclic_two_cells(3)),
        ("Z/2 on Z/3", z2_on_z3()),
        ("Z/4 onto Z/2", z4_onto_z2()),
        ("identity on Z/2", identity_z2()),
        (
            "two components",
            TwoGroupoid::disjoint_union(&[cyclic_two_cells(2), interval()]),
        ),
    ]
}

pub fn small_complexes() -> Vec<(&'static str, TruncatedSimplicialSet)> {
    let b = |k, n| standard_complex(k, n, None, 3).unwrap();
    vec![
        ("point", b(ComplexKind::Point, 0)),
        ("interval", b(ComplexKind::Simplex, 1)),
        ("circle", b(ComplexKind::Sphere, 1)),
        ("2-sphere", b(ComplexKind::Sphere, 2)),
        (
            "horn",
            standard_complex(ComplexKind::Horn, 2, Some(1), 3).unwrap(),
        ),
        (
            "two points",
            TruncatedSimplicialSet::disjoint_union(&[
                b(ComplexKind::Point, 0),
                b(ComplexKind::Point, 0),
            ])
            .unwrap(),
        ),
        (
            "circle and point",
            TruncatedSimplicialSet::disjoint_union(&[
                b(ComplexKind::Sphere, 1),
                b(ComplexKind::Point, 0),
            ])
            .unwrap(),
        ),
    ]
}

pub fn adjunction_sources() -> Vec<(&'static str, TruncatedSimplicialSet)> {
    vec![
        (
            "point",
            standard_complex(ComplexKind::Point, 0, None, 2).unwrap(),
        ),
        (
            "interval",
            standard_complex(ComplexKind::Simplex, 1, None, 2).unwrap(),
        ),
        (
            "two points",
            standard_complex(ComplexKind::Boundary, 1, None, 2).unwrap(),
        ),
        (
            "circle",
            standard_complex(ComplexKind::Sphere, 1, None, 2).unwrap(),
        ),
    ]
}

pub fn adjunction_targets() -> Vec<(&'static str, SimplicialGroupoid)> {
    vec![
        (
            "trivial",
            SimplicialGroupoid::constant_group(&FiniteGroup::trivial(), 1),
        ),
        (
            "interval groupoid",
            SimplicialGroupoid::constant(&FiniteGroupoid::interval(), 1),
        ),
        (
            "constant Z/2",
            SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2), 1),
        ),
    ]
}
