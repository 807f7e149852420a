//! Sheafification on small sites and homotopy sheaves of a presheaf of
//! simplicial sets.

use hpk::site::fixtures::{interval_and_point, two_object};
use hpk::site::{
    homotopy_presheaf_sset, homotopy_sheaf, is_sheaf, pi0_presheaf, sheafify, Elements, Presheaf,
    Sections,
};
use hpk::Budget;

fn main() -> hpk::Result<()> {
    let budget = Budget::search();
    // U is covered by f: V → U; two sections over U restrict to the one over V
    let c = two_object();
    let labels = |ls: &[&str]| Elements(ls.iter().map(|s| s.to_string()).collect());
    let f = Presheaf {
        values: vec![labels(&["a", "b"]), labels(&["c"])],
        restrictions: vec![vec![0, 1], vec![0], vec![0, 0]],
    };
    println!("F fails: {:?}", is_sheaf(&c, &f, &budget)?);
    let l2 = sheafify(&c, &f, &budget)?;
    for (u, name) in c.objects.iter().enumerate() {
        println!("L²F({name}) = {:?}", l2.values[u].0);
    }
    println!("L²F is a sheaf: {}", is_sheaf(&c, &l2, &budget)?.is_empty());

    // a presheaf of simplicial sets: an interval and a point over U, a point over V
    let x = interval_and_point(&c, 2);
    let pi0 = pi0_presheaf(&c, &Sections::SSet(x.clone()))?;
    println!(
        "π_0 presheaf: {:?}",
        pi0.values.iter().map(|v| v.len()).collect::<Vec<_>>()
    );
    let (comma, p) = homotopy_presheaf_sset(&c, &x, 0, 0, 1, &budget)?;
    let s = homotopy_sheaf(&comma, &p, &budget)?;
    for (o, g) in comma.site.objects.iter().zip(&s.values) {
        println!("π_1 sheaf at {o}: {}", g.describe());
    }
    Ok(())
}
