//! Writes a small set of JSON fixtures for the `hpk` command line.
//!
//!     cargo run --example fixtures -- fixtures
//!     cargo run --bin hpk -- wbar fixtures/z2.json --depth 3

use std::path::Path;

use hpk::classify::LoopMap;
use hpk::cli::MapJson;
use hpk::group::FiniteGroup;
use hpk::groupoid::FiniteGroupoid;
use hpk::sgpd::{ChainFixture, SimplicialGroupoid};
use hpk::site::fixtures::{interval_and_point, one_object, two_object};
use hpk::site::{
    Elements, LiftingJson, LiftingProblem, NaturalTransformation, Presheaf, PresheafJson,
    TransformationJson,
};
use hpk::sset::{standard_complex, ComplexKind, SimplicialMap, TruncatedSimplicialSet};
use hpk::two_gpd::fixtures::{z2_on_z3, z4_onto_z2};
use hpk::two_gpd::TwoFunctor;

type Sset = TruncatedSimplicialSet;

fn complex(kind: ComplexKind, n: usize, depth: usize) -> Sset {
    let k = (kind == ComplexKind::Horn).then_some(1);
    standard_complex(kind, n, k, depth).expect("standard complexes build")
}

/// Inclusion of a subcomplex whose simplices keep their names.
fn include(a: &Sset, b: &Sset) -> SimplicialMap {
    let levels = (0..=a.depth())
        .map(|n| {
            (0..a.level_size(n))
                .map(|s| b.id(n, a.name(n, s)).unwrap())
                .collect()
        })
        .collect();
    SimplicialMap::new(a.clone(), b.clone(), levels).unwrap()
}

fn to_point(x: &Sset) -> SimplicialMap {
    let pt = complex(ComplexKind::Point, 0, x.depth());
    SimplicialMap::new(
        x.clone(),
        pt,
        (0..=x.depth()).map(|n| vec![0; x.level_size(n)]).collect(),
    )
    .unwrap()
}

fn save(dir: &Path, name: &str, value: &impl serde::Serialize) {
    let text = serde_json::to_string_pretty(value).expect("fixtures serialize");
    std::fs::write(dir.join(name), text + "\n").expect("fixture directory is writable");
    println!("wrote {name}");
}

fn main() {
    let dir = std::env::args().nth(1).unwrap_or_else(|| "fixtures".into());
    let dir = Path::new(&dir);
    std::fs::create_dir_all(dir).expect("fixture directory can be created");

    // simplicial sets and maps
    save(
        dir,
        "d2.json",
        &complex(ComplexKind::Simplex, 2, 2).to_json(),
    );
    save(
        dir,
        "s1.json",
        &complex(ComplexKind::Sphere, 1, 3).to_json(),
    );
    let (bd, d1) = (
        complex(ComplexKind::Boundary, 1, 2),
        complex(ComplexKind::Simplex, 1, 2),
    );
    save(
        dir,
        "endpoints_in_interval.json",
        &MapJson::from_map(&include(&bd, &d1)),
    );
    save(
        dir,
        "endpoints_to_point.json",
        &MapJson::from_map(&to_point(&bd)),
    );

    // simplicial groupoids and chain complexes
    save(
        dir,
        "z2.json",
        &SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2), 2),
    );
    save(
        dir,
        "interval_groupoid.json",
        &SimplicialGroupoid::constant(&FiniteGroupoid::interval(), 2),
    );
    save(
        dir,
        "chain_z2_degree1.json",
        &ChainFixture::concentrated(vec![2], 1),
    );
    // the loop of the circle goes to the generator of Z/2 in every level
    let loop_map = LoopMap {
        objects: vec![0],
        generators: vec![vec![1]; 3],
    };
    save(dir, "circle_to_z2.json", &loop_map);

    // 2-groupoids and 2-functors
    save(dir, "z4_onto_z2.json", &z4_onto_z2());
    save(
        dir,
        "identity_z2_on_z3.json",
        &TwoFunctor::identity(&z2_on_z3()),
    );

    // a site with presheaves over it
    let c = two_object();
    save(dir, "two_object_site.json", &c);
    let x = interval_and_point(&c, 3);
    save(
        dir,
        "interval_and_point.json",
        &PresheafJson::from_presheaf(&c, &x),
    );
    let id = NaturalTransformation::identity(&x);
    save(
        dir,
        "interval_and_point_identity.json",
        &TransformationJson::from_transformation(&c, &x, &x, &id),
    );
    let labels = |ls: &[&str]| Elements(ls.iter().map(|s| s.to_string()).collect());
    let collapse = Presheaf {
        values: vec![labels(&["a", "b"]), labels(&["c"])],
        restrictions: vec![vec![0, 1], vec![0], vec![0, 0]],
    };
    save(
        dir,
        "collapse.json",
        &PresheafJson::from_presheaf(&c, &collapse),
    );

    // the endpoints of the interval lift to the loop of the circle
    let pt = one_object();
    let s1 = complex(ComplexKind::Sphere, 1, 2);
    let k = |v: &Sset| Presheaf::constant(&pt, v);
    let nt = |m: SimplicialMap| NaturalTransformation {
        components: vec![m],
    };
    let top = SimplicialMap::new(
        bd.clone(),
        s1.clone(),
        (0..=2)
            .map(|n| vec![s1.degenerate_vertex(0, n); bd.level_size(n)])
            .collect(),
    )
    .unwrap();
    let problem = LiftingProblem {
        a: k(&bd),
        b: k(&d1),
        x: k(&s1),
        y: k(&complex(ComplexKind::Point, 0, 2)),
        i: nt(include(&bd, &d1)),
        p: nt(to_point(&s1)),
        top: nt(top),
        bottom: nt(to_point(&d1)),
    };
    save(dir, "point_site.json", &pt);
    save(
        dir,
        "circle_lift.json",
        &LiftingJson::from_problem(&pt, &problem),
    );
}
