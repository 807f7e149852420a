//! Weak equivalences of simplicial presheaves, detected on homotopy sheaves,
//! and the lifting side: generating inclusions and trivial fibrations.

use hpk::group::FiniteGroup;
use hpk::sgpd::SimplicialGroupoid;
use hpk::site::fixtures::{interval_and_point, two_object};
use hpk::site::{
    generating_inclusions, is_trivial_fibration, is_weak_equivalence, unit_pointwise,
    wbar_pointwise, NaturalTransformation, Presheaf, SectionMap, Sections,
};
use hpk::sset::{standard_complex, ComplexKind, SimplicialMap};
use hpk::Budget;

fn main() -> hpk::Result<()> {
    let budget = Budget::search();
    let c = two_object();

    // the unit X → W̄G(X), applied object by object
    let x = interval_and_point(&c, 3);
    let (target, eta) = unit_pointwise(&c, &x, &budget)?;
    let r = is_weak_equivalence(
        &c,
        &Sections::SSet(x),
        &Sections::SSet(target),
        &SectionMap::SSet(eta),
        2,
        &budget,
    )?;
    println!(
        "unit: {:?} after checking {} sheaves",
        r.verdict,
        r.checked.len()
    );

    // collapsing W̄ Z/2 to a point kills π_1
    let a = Presheaf::constant(
        &c,
        &SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(2), 2),
    );
    let (w, _) = wbar_pointwise(&c, &a, 3, &budget)?;
    let pt = Presheaf::constant(&c, &standard_complex(ComplexKind::Point, 0, None, 3)?);
    let collapse = NaturalTransformation {
        components: w
            .values
            .iter()
            .map(|v| {
                SimplicialMap::new(
                    v.clone(),
                    pt.values[0].clone(),
                    (0..=3).map(|n| vec![0; v.level_size(n)]).collect(),
                )
            })
            .collect::<hpk::Result<Vec<_>>>()?,
    };
    let r = is_weak_equivalence(
        &c,
        &Sections::SSet(w.clone()),
        &Sections::SSet(pt),
        &SectionMap::SSet(collapse),
        2,
        &budget,
    )?;
    println!(
        "W̄ Z/2 → point: {:?}, {}",
        r.verdict,
        r.witness.unwrap_or_default()
    );

    for inc in generating_inclusions(&c, 0, 1, 1, &budget)?.iter().take(4) {
        println!("generating inclusion {}", inc.name);
    }
    let y = interval_and_point(&c, 2);
    let id = NaturalTransformation::identity(&y);
    let f = is_trivial_fibration(&c, &y, &y, &id, 1, &budget)?;
    println!(
        "identity is a trivial fibration: {:?} ({} squares)",
        f.verdict, f.squares
    );
    Ok(())
}
