//! The loop groupoid G and the classifying complex W-bar: levels, hom-set
//! counts on both sides of the adjunction, and the unit and counit.

use hpk::classify::{adjunction_witness, counit, unit, w_total, wbar};
use hpk::group::FiniteGroup;
use hpk::loops::loop_groupoid;
use hpk::sgpd::SimplicialGroupoid;
use hpk::sset::{pi0_sset, standard_complex, ComplexKind};
use hpk::Budget;

fn main() -> hpk::Result<()> {
    let budget = Budget::search();
    let z2 = SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2), 2);
    let w = wbar(&z2, 3, &budget)?;
    println!("W̄ Z/2 level sizes: {:?}", w.sset.level_sizes());

    let total = w_total(&z2, 2, &budget)?;
    println!("W Z/2 has {} component(s)", pi0_sset(&total.total)?.count);

    // the circle has one free loop in each level of G
    let s1 = standard_complex(ComplexKind::Sphere, 1, None, 2)?;
    let g = loop_groupoid(&s1, 1)?;
    println!(
        "G(S^1) level 0 generators: {}, finite: {}",
        g.level(0).generators.len(),
        g.is_finite()
    );

    let a = adjunction_witness(
        &s1,
        &SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2), 1),
        &budget,
    )?;
    println!(
        "maps S^1 → W̄ Z/2: {}, maps G(S^1) → Z/2: {}",
        a.wbar_side, a.loop_side
    );

    // on a contractible complex G is finite, so the unit exists
    let d1 = standard_complex(ComplexKind::Simplex, 1, None, 2)?;
    let eta = unit(&d1, &budget)?;
    println!(
        "unit Δ^1 → W̄G(Δ^1): target levels {:?}",
        eta.classifying.sset.level_sizes()
    );
    let eps = counit(&z2, &budget)?;
    println!(
        "counit G(W̄ Z/2) → Z/2: generator images {:?}",
        eps.map.generators
    );
    Ok(())
}
