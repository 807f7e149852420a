//! Standard complexes, colimits and homotopy groups of finite Kan complexes.

use hpk::classify::wbar;
use hpk::group::FiniteGroup;
use hpk::sgpd::SimplicialGroupoid;
use hpk::sset::{
    check_kan, pi0_sset, pi_n_kan, pushout, standard_complex, validate_sset, Basepoint,
    ComplexKind, SimplicialMap,
};
use hpk::Budget;

fn main() -> hpk::Result<()> {
    let budget = Budget::search();
    let d2 = standard_complex(ComplexKind::Simplex, 2, None, 3)?;
    let horn = standard_complex(ComplexKind::Horn, 2, Some(1), 3)?;
    println!(
        "Δ^2 through level 3: {:?} simplices, {:?} nondegenerate",
        d2.level_sizes(),
        d2.nondegenerate_counts()
    );
    println!("Λ^2_1 is valid: {}", validate_sset(&horn).is_empty());

    // glue the two ends of an interval to get a circle
    let d1 = standard_complex(ComplexKind::Simplex, 1, None, 2)?;
    let ends = standard_complex(ComplexKind::Boundary, 1, None, 2)?;
    let pt = standard_complex(ComplexKind::Point, 0, None, 2)?;
    let levels = (0..=2)
        .map(|n| {
            (0..ends.level_size(n))
                .map(|s| d1.id(n, ends.name(n, s)).unwrap())
                .collect()
        })
        .collect();
    let include = SimplicialMap::new(ends.clone(), d1, levels)?;
    let collapse = SimplicialMap::new(
        ends.clone(),
        pt,
        (0..=2).map(|n| vec![0; ends.level_size(n)]).collect(),
    )?;
    let circle = pushout(&include, &collapse)?.object;
    println!(
        "pushout: {:?} nondegenerate, {} component",
        circle.nondegenerate_counts(),
        pi0_sset(&circle)?.count
    );
    println!(
        "the glued circle is Kan: {}",
        check_kan(&circle, 2, &budget).is_ok()
    );

    // W-bar of a finite group is Kan, with its group in degree one
    let w = wbar(
        &SimplicialGroupoid::constant_group(&FiniteGroup::cyclic(3), 2),
        3,
        &budget,
    )?;
    for n in 1..=2 {
        let h = pi_n_kan(&w.sset, Basepoint(0), n, &budget)?;
        println!(
            "π_{n}(W̄ Z/3) = {}",
            h.group.map_or("?".into(), |g| g.describe())
        );
    }
    Ok(())
}
