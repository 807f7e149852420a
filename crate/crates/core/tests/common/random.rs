//! Seeded random constructions.

use hpk::classify::wbar;
use hpk::group::FiniteGroup;
use hpk::groupoid::FiniteGroupoid;
use hpk::loops::loop_groupoid;
use hpk::sgpd::{dold_kan, ChainFixture, SimplicialGroupoid};
use hpk::sset::{
    pushout, standard_complex, validate_sset, ComplexKind, SimplicialMap, TruncatedSimplicialSet,
};
use hpk::two_gpd::{nerve, validate_2gpd, CrossedModule, TwoGroupoid};
use hpk::Budget;
use rand::seq::SliceRandom;
use rand::Rng;

pub type Sset = TruncatedSimplicialSet;

/// Elements of `ℤ/n` are their residues.
fn cyclic_index(n: usize, k: usize) -> usize {
    k % n
}

pub fn random_group(rng: &mut impl Rng) -> FiniteGroup {
    match rng.gen_range(0..4) {
        0 => FiniteGroup::cyclic(rng.gen_range(1..=4)),
        1 => FiniteGroup::symmetric3(),
        2 => FiniteGroup::cyclic(2).product(&FiniteGroup::cyclic(2)),
        _ => FiniteGroup::cyclic(rng.gen_range(5..=6)),
    }
}

pub fn random_groupoid(rng: &mut impl Rng) -> FiniteGroupoid {
    let names = |k: usize| (0..k).map(|i| i.to_string()).collect::<Vec<_>>();
    match rng.gen_range(0..3) {
        0 => FiniteGroupoid::interval(),
        1 => FiniteGroupoid::codiscrete(names(rng.gen_range(1..=3))),
        _ => FiniteGroupoid::discrete(names(rng.gen_range(1..=3))),
    }
}

/// A finite simplicial groupoid through `depth`.
pub fn random_sgpd(rng: &mut impl Rng, depth: usize) -> SimplicialGroupoid {
    let leaf = |rng: &mut _| match Rng::gen_range(rng, 0..3) {
        0 => SimplicialGroupoid::constant_group(&random_group(rng), depth),
        1 => SimplicialGroupoid::constant(&random_groupoid(rng), depth),
        _ => {
            let c = ChainFixture::concentrated(
                vec![Rng::gen_range(rng, 2..=3)],
                Rng::gen_range(rng, 0..=1),
            );
            dold_kan(&c, depth).expect("concentrated chain complexes are valid")
        }
    };
    if rng.gen_bool(0.2) {
        SimplicialGroupoid::disjoint_union(&[leaf(rng), leaf(rng)]).expect("same depth")
    } else {
        leaf(rng)
    }
}

/// The vertex `v` of `x` as a map out of the point.
fn vertex_map(x: &Sset, v: usize) -> SimplicialMap {
    let pt = standard_complex(ComplexKind::Point, 0, None, x.depth()).unwrap();
    let levels = (0..=x.depth())
        .map(|n| vec![x.degenerate_vertex(v, n)])
        .collect();
    SimplicialMap::new(pt, x.clone(), levels).unwrap()
}

/// A small simplicial set through `depth`: a standard complex, a disjoint
/// union or a wedge of two.
pub fn random_sset(rng: &mut impl Rng, depth: usize) -> Sset {
    let leaf = |rng: &mut _| {
        let (kind, n, k) = *[
            (ComplexKind::Point, 0, None),
            (ComplexKind::Simplex, 1, None),
            (ComplexKind::Simplex, 2, None),
            (ComplexKind::Boundary, 1, None),
            (ComplexKind::Boundary, 2, None),
            (ComplexKind::Boundary, 3, None),
            (ComplexKind::Horn, 2, Some(0)),
            (ComplexKind::Horn, 2, Some(1)),
            (ComplexKind::Sphere, 1, None),
            (ComplexKind::Sphere, 2, None),
        ]
        .choose(rng)
        .unwrap();
        standard_complex(kind, n, k, depth).unwrap()
    };
    match rng.gen_range(0..4) {
        0 => Sset::disjoint_union(&[leaf(rng), leaf(rng)]).unwrap(),
        1 => {
            let (a, b) = (leaf(rng), leaf(rng));
            let (va, vb) = (
                rng.gen_range(0..a.level_size(0)),
                rng.gen_range(0..b.level_size(0)),
            );
            pushout(&vertex_map(&a, va), &vertex_map(&b, vb))
                .unwrap()
                .object
        }
        _ => leaf(rng),
    }
}

/// A finite 2-groupoid from a small crossed module or groupoid.
pub fn random_2gpd(rng: &mut impl Rng) -> TwoGroupoid {
    let leaf = |rng: &mut _| -> TwoGroupoid {
        let cm = match Rng::gen_range(rng, 0..4) {
            0 => CrossedModule::second_only(FiniteGroup::cyclic(Rng::gen_range(rng, 1..=4))),
            1 => {
                let m = Rng::gen_range(rng, 2..=4);
                CrossedModule::with_action(
                    FiniteGroup::cyclic(2),
                    FiniteGroup::cyclic(m),
                    move |a, b| {
                        if a == 0 {
                            b
                        } else {
                            cyclic_index(m, m - b)
                        }
                    },
                )
            }
            2 => {
                // reduction ℤ/(ab) → ℤ/a with trivial action
                let (a, b) = (Rng::gen_range(rng, 1..=3), Rng::gen_range(rng, 1..=2));
                let m = FiniteGroup::cyclic(a * b);
                CrossedModule {
                    boundary: (0..a * b).map(|x| cyclic_index(a, x)).collect(),
                    action: vec![(0..a * b).collect(); a],
                    n: FiniteGroup::cyclic(a),
                    m,
                }
            }
            _ => return TwoGroupoid::from_groupoid(&random_groupoid(rng)),
        };
        TwoGroupoid::from_crossed_module(&cm).expect("crossed module axioms hold")
    };
    if rng.gen_bool(0.2) {
        TwoGroupoid::disjoint_union(&[leaf(rng), leaf(rng)])
    } else {
        leaf(rng)
    }
}

/// One randomized construction, returning what was built and any violation.
pub fn random_construction(rng: &mut impl Rng, budget: &Budget) -> (String, Vec<String>) {
    match rng.gen_range(0..3) {
        0 => {
            let a = random_sgpd(rng, 2);
            let w = wbar(&a, 3, budget).expect("W-bar within budget");
            let v = validate_sset(&w.sset)
                .iter()
                .map(|v| format!("{v:?}"))
                .collect();
            (
                format!(
                    "W̄ of {} objects, sizes {:?}",
                    a.objects().len(),
                    w.sset.level_sizes()
                ),
                v,
            )
        }
        1 => {
            let x = random_sset(rng, 3);
            let g = loop_groupoid(&x, 2).expect("depth 3 gives G through level 2");
            let mut v = g.violations();
            if g.is_finite() {
                v.extend(
                    g.to_finite()
                        .expect("forest levels are finite")
                        .violations(),
                );
            }
            (
                format!("G of a complex with sizes {:?}", x.level_sizes()),
                v,
            )
        }
        _ => {
            let k = random_2gpd(rng);
            let mut v = validate_2gpd(&k);
            let nk = nerve(&k, 3, budget).expect("nerve within budget");
            v.extend(validate_sset(&nk.sset).iter().map(|v| format!("{v:?}")));
            (format!("nerve with sizes {:?}", nk.sset.level_sizes()), v)
        }
    }
}
