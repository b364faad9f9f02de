mod common;

use common::*;
use eqdecomp::cli::{parse_graph_file, parse_partition_file, print_graph, print_partition};
use eqdecomp::matrix::bareiss_det;
use eqdecomp::zeta::bartholdi_reciprocal;
use eqdecomp::{
    bipoly_det, check_equitable, coarsest_equitable, factor_char_poly, rat, BiPoly, BiPolyMatrix,
    Edge, Matrix, Partition, SignedDigraph, UniPoly,
};
use num::BigInt;
use proptest::prelude::*;

fn digraph(max_n: usize) -> impl Strategy<Value = SignedDigraph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(-2i64..=3, n * n).prop_map(move |w| {
            let edges: Vec<Edge> = (0..n * n)
                .filter(|&k| w[k] != 0)
                .map(|k| Edge::with_multiplicity(k / n, k % n, w[k]))
                .collect();
            SignedDigraph::build(n, &edges, false).unwrap()
        })
    })
}

fn simple_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = SignedDigraph> {
    (min_n..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
                .zip(bits)
                .filter_map(|(p, b)| b.then_some(p))
                .collect();
            SignedDigraph::undirected(n, &pairs).unwrap()
        })
    })
}

fn connected_graph(min_n: usize, max_n: usize) -> impl Strategy<Value = SignedDigraph> {
    simple_graph(min_n, max_n).prop_filter("connected", |g| g.is_connected())
}

fn bipoly() -> impl Strategy<Value = BiPoly> {
    proptest::collection::vec((0u32..3, 0u32..3, -3i64..=3), 0..4).prop_map(BiPoly::from_terms)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph_files_round_trip(g in digraph(6)) {
        let text = print_graph(&g);
        prop_assert_eq!(parse_graph_file(&text).unwrap(), g);
    }

    #[test]
    fn undirected_graph_files_round_trip(g in simple_graph(1, 7)) {
        let text = print_graph(&g);
        let header = format!("graph {} undirected", g.vertex_count());
        prop_assert!(text.starts_with(&header));
        prop_assert_eq!(parse_graph_file(&text).unwrap(), g);
    }

    #[test]
    fn partition_files_round_trip(g in simple_graph(1, 8), pick in any::<u64>()) {
        let pi = coarsest_equitable(&g, &Partition::trivial(g.vertex_count())).unwrap();
        let choices = pi.representative_choices();
        let reps = choices[(pick % choices.len() as u64) as usize].clone();
        let pi = pi.with_reps(reps).unwrap();
        let back = parse_partition_file(&print_partition(&pi), g.vertex_count()).unwrap();
        prop_assert_eq!(back, pi);
    }

    #[test]
    fn refinement_is_the_coarsest_equitable_partition(g in digraph(6)) {
        let n = g.vertex_count();
        let pi = coarsest_equitable(&g, &Partition::trivial(n)).unwrap();
        prop_assert!(check_equitable(g.adjacency(), &pi).is_ok());
        for cells in all_partitions(n) {
            let other = Partition::new(n, cells).unwrap();
            if check_equitable(g.adjacency(), &other).is_ok() {
                prop_assert!(other.refines(&pi), "{:?} is equitable but does not refine {:?}", other, pi);
            }
        }
    }

    #[test]
    fn factors_multiply_to_a_monic_char_poly(g in digraph(7)) {
        let m = g.adjacency();
        let pi = coarsest_equitable(&g, &Partition::trivial(g.vertex_count())).unwrap();
        let f = factor_char_poly(m, &pi).unwrap();
        prop_assert!(f.quotient.is_monic());
        prop_assert!(f.deletion.is_monic() || f.deletion == UniPoly::one());
        prop_assert_eq!(f.quotient.degree(), Some(pi.cell_count()));
        let phi = f.product();
        prop_assert_eq!(phi.degree(), Some(g.vertex_count()));
        for x in -2..=2 {
            prop_assert_eq!(phi.eval(&rat(x)), char_poly_at(m, &rat(x)));
        }
    }

    #[test]
    fn bipoly_det_agrees_with_pointwise_determinants(
        n in 1usize..4,
        entries in proptest::collection::vec(bipoly(), 9),
        u in -4i64..=4,
        t in -4i64..=4,
    ) {
        let m = BiPolyMatrix::from_fn(n, |i, j| entries[i * 3 + j].clone());
        let (du, dt) = m.degree_bounds();
        let det = bipoly_det(&m, du, dt).unwrap();
        let (u, t) = (BigInt::from(u), BigInt::from(t));
        prop_assert_eq!(det.eval(&u, &t), bareiss_det(m.eval(&u, &t)));
    }

    #[test]
    fn zeta_reciprocal_basic_values(g in connected_graph(2, 7)) {
        let z = bartholdi_reciprocal(&g).unwrap();
        let m = z.edges;
        prop_assert_eq!(z.value.eval(&BigInt::from(0), &BigInt::from(0)), BigInt::from(1));
        for u in -2..=2 {
            prop_assert_eq!(z.value.specialize_u(u).eval(&rat(0)), rat(1));
        }
        prop_assert!(z.value.deg_t().unwrap_or(0) as usize <= 2 * m);

        // u = 1 removes the backtracking correction: det(I - tA).
        let a = g.adjacency();
        let at_one = z.value.specialize_u(1);
        for t in -3i64..=3 {
            let shifted = Matrix::from_fn(a.rows(), a.cols(), |i, j| {
                let id = if i == j { rat(1) } else { rat(0) };
                id - rat(t) * a.row(i)[j].clone()
            });
            prop_assert_eq!(at_one.eval(&rat(t)), laplace_det(&rows_of(&shifted)));
        }
    }

    #[test]
    fn zeta_reciprocal_matches_oriented_edges(g in connected_graph(2, 5), u in -2i64..=2, t in -2i64..=2) {
        let z = bartholdi_reciprocal(&g).unwrap();
        prop_assert_eq!(
            z.value.eval(&BigInt::from(u), &BigInt::from(t)),
            zeta_via_oriented_edges(&g, u, t)
        );
    }
}
