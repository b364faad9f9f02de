//! Closed forms for a generalized join of regular graphs.
//!
//! `cargo run --example generalized_join`

use eqdecomp::join::{build_join, join_char_poly, join_quotient, join_zeta_reciprocal, JoinSpec};
use eqdecomp::{families, rat};

fn main() -> eqdecomp::Result<()> {
    // P3[C4, K1, K2]: every vertex of C4 joins the single vertex, which
    // joins both vertices of K2.
    let spec = JoinSpec::new(
        families::path(3),
        vec![families::cycle(4), families::complete(1), families::complete(2)],
    )?;
    let (x, pi) = build_join(&spec)?;
    println!("{} vertices, cells {:?}", x.vertex_count(), pi.cells());
    println!("degrees k_i {:?}, sizes n_i {:?}, outside N_i {:?}", spec.degrees(), spec.sizes(), spec.outside_degrees());
    println!("quotient =\n{}", join_quotient(&spec).into_matrix());

    let cp = join_char_poly(&spec, &rat(1), &[rat(0), rat(0), rat(0)])?;
    println!("φ(A/pi)           = {}", cp.quotient_factor);
    println!("det(-A(H) + Δ(x)) = {}", cp.h_form_det);
    for (i, f) in cp.component_factors.iter().enumerate() {
        println!("component {} factor = {f}", i + 1);
    }
    println!("φ(A)              = {}", cp.via_quotient);

    // D - A is alpha = -1 with d_i = k_i + N_i.
    let degrees: Vec<_> = spec
        .degrees()
        .iter()
        .zip(spec.outside_degrees())
        .map(|(k, n)| rat((k + n) as i64))
        .collect();
    let lap = join_char_poly(&spec, &rat(-1), &degrees)?;
    println!("φ(L)              = {}", lap.via_h_form);

    let z = join_zeta_reciprocal(&spec)?;
    for (i, g) in z.gamma.iter().enumerate() {
        println!("γ_{} = {g}", i + 1);
    }
    println!(
        "Z^-1 has {} terms, t-degree {:?}, s1 exponent {}",
        z.via_h_form.terms().count(),
        z.via_h_form.deg_t(),
        z.s1_exponent
    );
    Ok(())
}
