//! Two equitable partitions of the Petersen graph give the same spectrum
//! split in different places.
//!
//! `cargo run --example petersen`

use eqdecomp::{coarsest_equitable, factor_char_poly, families, Partition};

fn main() -> eqdecomp::Result<()> {
    let x = families::petersen();
    let a = x.adjacency();

    let halves = Partition::new(10, vec![(0..5).collect(), (5..10).collect()])?;
    let seed = Partition::new(10, vec![vec![0], (1..10).collect()])?;
    let distance = coarsest_equitable(&x, &seed)?;

    for (name, pi) in [("outer/inner", &halves), ("distance from 0", &distance)] {
        let f = factor_char_poly(a, pi)?;
        println!("{name}: cells {:?}", pi.cells());
        println!("  φ(A/pi)   = {}", f.quotient);
        println!("  φ(A \\ pi) = {}", f.deletion);
        println!("  product   = {}", f.product());
    }
    Ok(())
}
