//! The deletion graph: restrict to the non-representatives and subtract a
//! broadcast of each representative's out-edges.
//!
//! `cargo run --example deletion_graph`

use eqdecomp::decomposition::deletion_polys_over_reps;
use eqdecomp::{coarsest_equitable, deletion_graph, families, Partition};

fn main() -> eqdecomp::Result<()> {
    // C6 with vertex 0 fixed: cells {0}, {1, 5}, {2, 4}, {3}.
    let x = families::cycle(6);
    let seed = Partition::new(6, vec![vec![0], (1..6).collect()])?;
    let pi = coarsest_equitable(&x, &seed)?;
    println!("cells {:?}", pi.cells());

    let del = deletion_graph(&x, &pi)?;
    let g = del.graph.expect("built from a graph");
    println!("representatives: {:?}", del.representatives);
    println!("deletion graph on {:?}, signed adjacency:\n{}", del.vertices, g.adjacency());

    for (reps, phi) in deletion_polys_over_reps(x.adjacency(), &pi)? {
        println!("reps {reps:?}: φ = {phi}");
    }
    Ok(())
}
