//! A weighted digraph with loops: the factorization does not need symmetry.
//!
//! `cargo run --example directed_digraph`

use eqdecomp::cli::{parse_graph_file, parse_partition_file};
use eqdecomp::decomposition::check_representative_independence;
use eqdecomp::{check_equitable, deletion_matrix, factor_char_poly};

const GRAPH: &str = include_str!("../data/digraph5.graph");
const PARTITION: &str = include_str!("../data/digraph5.part");

fn main() -> eqdecomp::Result<()> {
    let x = parse_graph_file(GRAPH)?;
    let pi = parse_partition_file(PARTITION, x.vertex_count())?;
    let m = x.adjacency();
    println!("M =\n{m}");
    println!("M/pi =\n{}", check_equitable(m, &pi)?.into_matrix());

    let del = deletion_matrix(m, &pi)?;
    println!("M \\ pi (representatives {:?}) =\n{}", del.representatives, del.matrix);

    let f = factor_char_poly(m, &pi)?;
    println!("φ(M/pi)   = {}", f.quotient);
    println!("φ(M \\ pi) = {}", f.deletion);

    let same = check_representative_independence(m, &pi)?;
    println!(
        "all {} representative choices give {same}",
        pi.representative_choice_count()
    );
    Ok(())
}
