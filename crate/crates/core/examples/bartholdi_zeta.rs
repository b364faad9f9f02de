//! Bartholdi zeta reciprocals and their quotient/deletion split.
//!
//! `cargo run --example bartholdi_zeta`

use eqdecomp::zeta::{bartholdi_reciprocal, ihara_specialize, zeta_factor};
use eqdecomp::{coarsest_equitable, families, Partition};

fn main() -> eqdecomp::Result<()> {
    let c4 = families::cycle(4);
    let z = bartholdi_reciprocal(&c4)?;
    println!("C4: Z^-1 = {}", z.value);
    println!("C4 at u = 0: {}", ihara_specialize(&z).display_in("t"));

    let k4 = families::complete(4);
    let z = bartholdi_reciprocal(&k4)?;
    println!("K4: Z^-1 = {}", z.value);

    let x = families::complete_bipartite(2, 3);
    let pi = coarsest_equitable(&x, &Partition::trivial(5))?;
    let f = zeta_factor(&x, &pi)?;
    println!("K_{{2,3}} over {:?}:", pi.cells());
    println!("  s1 exponent {}", f.s1_exponent);
    println!("  quotient factor {}", f.quotient);
    println!("  deletion factor {}", f.deletion);
    println!("  product         {}", f.product()?);

    let tree = families::path(3);
    let f = zeta_factor(&tree, &coarsest_equitable(&tree, &Partition::trivial(3))?)?;
    // Trees have m - n = -1; the s1 factor divides out exactly.
    println!("P3: s1^{} · ({}) · ({})", f.s1_exponent, f.quotient, f.deletion);
    println!("  = {}", f.product()?);
    Ok(())
}
