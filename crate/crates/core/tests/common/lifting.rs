//! Lifting squares over the one-object site with known answers.

use hpk::site::fixtures::one_object;
use hpk::site::{LiftingProblem, NaturalTransformation, Presheaf};
use hpk::sset::{standard_complex, ComplexKind, SimplicialMap, TruncatedSimplicialSet};

type Sset = TruncatedSimplicialSet;

pub const DEPTH: usize = 2;

pub fn complex(kind: ComplexKind, n: usize) -> Sset {
    let k = (kind == ComplexKind::Horn).then_some(1);
    standard_complex(kind, n, k, DEPTH).unwrap()
}

/// The inclusion of a subcomplex, matching simplices by name.
pub fn include(a: &Sset, b: &Sset) -> SimplicialMap {
    let levels = (0..=DEPTH)
        .map(|n| {
            (0..a.level_size(n))
                .map(|s| b.id(n, a.name(n, s)).unwrap())
                .collect()
        })
        .collect();
    SimplicialMap::new(a.clone(), b.clone(), levels).unwrap()
}

pub fn to_point(x: &Sset) -> SimplicialMap {
    let pt = complex(ComplexKind::Point, 0);
    SimplicialMap::new(
        x.clone(),
        pt,
        (0..=DEPTH).map(|n| vec![0; x.level_size(n)]).collect(),
    )
    .unwrap()
}

#[allow(clippy::too_many_arguments)]
pub fn problem(
    a: &Sset,
    b: &Sset,
    x: &Sset,
    y: &Sset,
    i: SimplicialMap,
    p: SimplicialMap,
    top: SimplicialMap,
    bottom: SimplicialMap,
) -> LiftingProblem {
    let c = one_object();
    let k = |v: &Sset| Presheaf::constant(&c, v);
    let nt = |m: SimplicialMap| NaturalTransformation {
        components: vec![m],
    };
    LiftingProblem {
        a: k(a),
        b: k(b),
        x: k(x),
        y: k(y),
        i: nt(i),
        p: nt(p),
        top: nt(top),
        bottom: nt(bottom),
    }
}

/// Checks that `h` is natural and fills both triangles.
pub fn check_lift(pr: &LiftingProblem, h: &NaturalTransformation<Sset>) {
    let c = one_object();
    assert!(h.violations(&c, &pr.b, &pr.x).is_empty());
    assert_eq!(pr.i.then(h).unwrap(), pr.top);
    assert_eq!(h.then(&pr.p).unwrap(), pr.bottom);
}

/// `Λ^2_1 ↪ Δ^2` against the identity of `Δ^2`.
pub fn horn_in_simplex() -> LiftingProblem {
    let (horn, d2) = (
        complex(ComplexKind::Horn, 2),
        complex(ComplexKind::Simplex, 2),
    );
    let i = include(&horn, &d2);
    let id = SimplicialMap::identity(&d2);
    problem(&horn, &d2, &d2, &d2, i.clone(), id.clone(), i, id)
}

/// `∂Δ^1 ↪ Δ^1` against `S^1 → *`, both ends on the base vertex.
pub fn endpoints_on_circle() -> LiftingProblem {
    let (bd, d1, s1) = (
        complex(ComplexKind::Boundary, 1),
        complex(ComplexKind::Simplex, 1),
        complex(ComplexKind::Sphere, 1),
    );
    let pt = complex(ComplexKind::Point, 0);
    let top = SimplicialMap::new(
        bd.clone(),
        s1.clone(),
        (0..=DEPTH)
            .map(|n| vec![s1.degenerate_vertex(0, n); bd.level_size(n)])
            .collect(),
    )
    .unwrap();
    problem(
        &bd,
        &d1,
        &s1,
        &pt,
        include(&bd, &d1),
        to_point(&s1),
        top,
        to_point(&d1),
    )
}

/// `Λ^2_1 ↪ Δ^2` against `∂Δ^2 → *`: the hollow triangle has no filler.
pub fn horn_in_hollow_triangle() -> LiftingProblem {
    let (horn, d2, bd) = (
        complex(ComplexKind::Horn, 2),
        complex(ComplexKind::Simplex, 2),
        complex(ComplexKind::Boundary, 2),
    );
    let pt = complex(ComplexKind::Point, 0);
    problem(
        &horn,
        &d2,
        &bd,
        &pt,
        include(&horn, &d2),
        to_point(&bd),
        include(&horn, &bd),
        to_point(&d2),
    )
}
