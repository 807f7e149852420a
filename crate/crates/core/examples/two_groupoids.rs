//! 2-groupoids as 2-types: nerves, homotopy groups, and the presented
//! 2-groupoid of a simplicial set.

use hpk::sset::{pi_n_kan, standard_complex, Basepoint, ComplexKind};
use hpk::two_gpd::fixtures::{z2_on_z3, z4_onto_z2};
use hpk::two_gpd::{
    ms_fibration, ms_weak_equivalence, nerve, pi1_2gpd, pi2_2gpd, whitehead_2gpd, TwoFunctor,
};
use hpk::Budget;

fn main() -> hpk::Result<()> {
    let budget = Budget::search();
    for (name, k) in [
        ("Z/2 acting on Z/3", z2_on_z3()),
        ("Z/4 onto Z/2", z4_onto_z2()),
    ] {
        let nk = nerve(&k, 3, &budget)?;
        let nerve_pi2 = pi_n_kan(&nk.sset, Basepoint(0), 2, &budget)?.group;
        println!(
            "{name}: π_1 = {}, π_2 = {}, π_2 of the nerve = {}",
            pi1_2gpd(&k, 0)?.describe(),
            pi2_2gpd(&k, 0)?.describe(),
            nerve_pi2.map_or("?".into(), |g| g.describe())
        );
    }

    let k = z2_on_z3();
    println!(
        "identity weak equivalence: {:?}",
        ms_weak_equivalence(&TwoFunctor::identity(&k)).verdict
    );
    println!(
        "map to the point is a fibration: {:?}",
        ms_fibration(&TwoFunctor::to_terminal(&k)).verdict
    );

    // the hollow tetrahedron has four 2-generators and no relation
    let sphere = standard_complex(ComplexKind::Boundary, 3, None, 3)?;
    let w = whitehead_2gpd(&sphere)?;
    println!(
        "∂Δ^3: {} 1-generators, {} 2-generators, {} relations",
        w.one.generators.len(),
        w.two.len(),
        w.relations.len()
    );
    Ok(())
}
