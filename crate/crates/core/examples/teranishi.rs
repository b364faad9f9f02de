//! Joins of irregular components: each component brings its own
//! equitable partition, and the deletion factor splits per component.
//!
//! `cargo run --example teranishi`

use eqdecomp::join::teranishi_factor;
use eqdecomp::{coarsest_equitable, families, Partition};

fn main() -> eqdecomp::Result<()> {
    let h = families::complete(2);
    let components = vec![families::path(3), families::complete_bipartite(1, 3)];
    let pis = components
        .iter()
        .map(|x| coarsest_equitable(x, &Partition::trivial(x.vertex_count())))
        .collect::<eqdecomp::Result<Vec<_>>>()?;

    let f = teranishi_factor(&h, &components, &pis)?;
    println!("joined partition {:?}", f.partition.cells());
    println!("quotient factor {}", f.quotient_factor);
    for (i, d) in f.component_deletion_factors.iter().enumerate() {
        println!("component {} deletion factor {d}", i + 1);
    }
    println!("φ(A) = {}", f.product());
    Ok(())
}
