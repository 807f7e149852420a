//! Simplicial groupoids from chain complexes, and their homotopy read off the
//! Moore complex.

use hpk::groupoid::FiniteGroupoid;
use hpk::sgpd::{dold_kan, moore_pi_n, pi0_sgpd, ChainFixture, SimplicialGroupoid};

fn main() -> hpk::Result<()> {
    // Z/2 in degree one, then Z/2 --2--> Z/4 which has homology Z/2 in both degrees
    let shifted = ChainFixture::concentrated(vec![2], 1);
    let doubling = ChainFixture {
        moduli: vec![vec![4], vec![2]],
        boundaries: vec![vec![], vec![vec![2]]],
    };
    for (name, c) in [("Z/2[1]", shifted), ("Z/2 -> Z/4", doubling)] {
        c.validate()?;
        let a = dold_kan(&c, 3)?;
        let sizes: Vec<usize> = a.levels().iter().map(|l| l.arrow_count()).collect();
        println!("{name}: level orders {sizes:?}");
        for n in 0..=2 {
            println!("  π_{n} = {}", moore_pi_n(&a, 0, n)?.group.describe());
        }
    }

    // a constant groupoid: two objects, one component
    let interval = SimplicialGroupoid::constant(&FiniteGroupoid::interval(), 2);
    println!(
        "interval groupoid: {} component(s)",
        pi0_sgpd(&interval).count
    );
    Ok(())
}
