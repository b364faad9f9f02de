//! The 4-cycle split into two cells of adjacent vertices.
//!
//! `cargo run --example c4_golden`

use eqdecomp::{
    check_equitable, deletion_matrix, factor_char_poly, families, similarity_transform, Partition,
};

fn main() -> eqdecomp::Result<()> {
    // 0-1-3-2-0: vertices 0 and 1 are adjacent, as are 2 and 3.
    let x = families::cycle(4).permuted(&[0, 1, 3, 2].map(eqdecomp::VertexId))?;
    let a = x.adjacency();
    let pi = Partition::new(4, vec![vec![0, 1], vec![2, 3]])?;

    let quotient = check_equitable(a, &pi)?;
    println!("A =\n{a}");
    println!("A/pi =\n{}", quotient.clone().into_matrix());

    let del = deletion_matrix(a, &pi)?;
    println!("A \\ pi on {:?} =\n{}", del.vertices, del.matrix);

    let tri = similarity_transform(a, &pi)?;
    println!("P̄⁻¹ A P̄ =\n{}", tri.conjugated);

    let f = factor_char_poly(a, &pi)?;
    println!("φ(A/pi)   = {}", f.quotient);
    println!("φ(A \\ pi) = {}", f.deletion);
    println!("φ(A)      = {}", f.product());
    Ok(())
}
