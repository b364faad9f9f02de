//! Coarsest equitable partitions from different seeds.
//!
//! `cargo run --example refinement`

use eqdecomp::{check_equitable, coarsest_equitable, families, Partition, SignedDigraph};

fn show(name: &str, x: &SignedDigraph, seed: &Partition) -> eqdecomp::Result<()> {
    let pi = coarsest_equitable(x, seed)?;
    let q = check_equitable(x.adjacency(), &pi)?.into_matrix();
    println!("{name}: {} cells {:?}", pi.cell_count(), pi.cells());
    println!("{q}");
    Ok(())
}

fn main() -> eqdecomp::Result<()> {
    let p5 = families::path(5);
    show("P5", &p5, &Partition::trivial(5))?;

    let k23 = families::complete_bipartite(2, 3);
    show("K_{2,3}", &k23, &Partition::trivial(5))?;

    // A pendant vertex on a triangle; the seed isolates nothing.
    let paw = SignedDigraph::undirected(4, &[(0, 1), (1, 2), (0, 2), (2, 3)])?;
    show("paw", &paw, &Partition::trivial(4))?;

    let c6 = families::cycle(6);
    show("C6, trivial seed", &c6, &Partition::trivial(6))?;
    show("C6, vertex 0 fixed", &c6, &Partition::new(6, vec![vec![0], (1..6).collect()])?)?;
    Ok(())
}
