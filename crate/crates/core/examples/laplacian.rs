//! Laplacian factors: the deletion factor keeps the degrees of the whole
//! graph on the surviving vertices.
//!
//! `cargo run --example laplacian`

use eqdecomp::{families, laplacian_factors, Partition};

fn main() -> eqdecomp::Result<()> {
    let x = families::cycle(4).permuted(&[0, 1, 3, 2].map(eqdecomp::VertexId))?;
    let pi = Partition::new(4, vec![vec![0, 1], vec![2, 3]])?;

    for signless in [false, true] {
        let f = laplacian_factors(&x, &pi, signless)?;
        let name = if signless { "signless" } else { "Laplacian" };
        println!("{name}: ({}) · ({}) = {}", f.quotient, f.deletion, f.product());
    }

    let k = families::complete(4);
    let halves = Partition::new(4, vec![vec![0], vec![1, 2, 3]])?;
    let f = laplacian_factors(&k, &halves, false)?;
    println!("K4 with one vertex fixed: ({}) · ({})", f.quotient, f.deletion);
    Ok(())
}
