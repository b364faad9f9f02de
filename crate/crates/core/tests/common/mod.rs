//! Oracles and generators shared by the integration tests.
//!
//! The oracles avoid the library's determinant and polynomial code paths:
//! Laplace expansion for determinants, the oriented-edge matrix for zeta
//! values, and eigenvalue products for a few closed forms.
#![allow(dead_code)]

use eqdecomp::join::JoinSpec;
use eqdecomp::{families, rat, Matrix, Partition, Rational, SignedDigraph, UniPoly};
use num::{BigInt, Zero};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

/// Determinant by cofactor expansion along the first row.
pub fn laplace_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return rat(1);
    }
    let mut total = rat(0);
    for j in 0..n {
        if m[0][j].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, x)| x.clone())
                    .collect()
            })
            .collect();
        let term = &m[0][j] * laplace_det(&minor);
        if j % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

pub fn rows_of(m: &Matrix) -> Vec<Vec<Rational>> {
    (0..m.rows()).map(|i| m.row(i).to_vec()).collect()
}

/// `det(x0 I - m)` by Laplace expansion.
pub fn char_poly_at(m: &Matrix, x0: &Rational) -> Rational {
    let n = m.rows();
    let rows: Vec<Vec<Rational>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let d = if i == j { x0.clone() } else { rat(0) };
                    d - &m[(i, j)]
                })
                .collect()
        })
        .collect();
    laplace_det(&rows)
}

/// `prod (x - r)` for integer roots with multiplicity.
pub fn from_roots(roots: &[i64]) -> UniPoly {
    UniPoly::from_roots(roots)
}

/// Plain matrix product on rational rows, independent of the library's
/// operators.
pub fn mat_mul(a: &Matrix, b: &Matrix) -> Vec<Vec<Rational>> {
    (0..a.rows())
        .map(|i| {
            (0..b.cols())
                .map(|j| (0..a.cols()).fold(rat(0), |acc, k| acc + &a[(i, k)] * &b[(k, j)]))
                .collect()
        })
        .collect()
}

/// `Z(u, t)^{-1} = det(I - t (B - (1 - u) J))` on the `2m` oriented edges,
/// where `B[e][f] = 1` when `e` ends where `f` starts and `J` pairs each
/// edge with its reverse. Needs a simple undirected graph.
pub fn zeta_via_oriented_edges(x: &SignedDigraph, u: i64, t: i64) -> BigInt {
    let n = x.vertex_count();
    let mut arcs = Vec::new();
    for a in 0..n {
        for b in 0..n {
            if a != b && !x.entry(a, b).is_zero() {
                assert_eq!(x.entry(a, b), &rat(1), "oracle needs a simple graph");
                arcs.push((a, b));
            }
        }
    }
    let k = arcs.len();
    let mut m = vec![vec![BigInt::zero(); k]; k];
    for (i, &(a, b)) in arcs.iter().enumerate() {
        m[i][i] += 1;
        for (j, &(c, d)) in arcs.iter().enumerate() {
            let follows = if b == c { 1 } else { 0 };
            let reverse = if c == b && d == a { 1 - u } else { 0 };
            m[i][j] -= BigInt::from(t * (follows - reverse));
        }
    }
    eqdecomp::matrix::bareiss_det(m)
}

/// All set partitions of `0..n` (restricted growth strings).
pub fn all_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(i: usize, n: usize, cur: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        for c in 0..cur.len() {
            cur[c].push(i);
            go(i + 1, n, cur, out);
            cur[c].pop();
        }
        cur.push(vec![i]);
        go(i + 1, n, cur, out);
        cur.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

pub fn circulant(n: usize, jumps: &[usize]) -> SignedDigraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for &s in jumps {
            let j = (i + s) % n;
            if i < j && !edges.contains(&(i, j)) {
                edges.push((i, j));
            } else if j < i && !edges.contains(&(j, i)) {
                edges.push((j, i));
            }
        }
    }
    SignedDigraph::undirected(n, &edges).unwrap()
}

pub fn random_undirected(r: &mut StdRng, n: usize, p: f64) -> SignedDigraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                edges.push((i, j));
            }
        }
    }
    SignedDigraph::undirected(n, &edges).unwrap()
}

/// Random spanning tree plus extra edges; simple and connected.
pub fn random_connected(r: &mut StdRng, n: usize, extra: f64) -> SignedDigraph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(r);
    let mut edges = Vec::new();
    for k in 1..n {
        let parent = order[r.gen_range(0..k)];
        let (a, b) = (order[k].min(parent), order[k].max(parent));
        edges.push((a, b));
    }
    for i in 0..n {
        for j in i + 1..n {
            if !edges.contains(&(i, j)) && r.gen_bool(extra) {
                edges.push((i, j));
            }
        }
    }
    SignedDigraph::undirected(n, &edges).unwrap()
}

/// Random adjacency with entries in `lo..=hi`, optionally symmetric.
pub fn random_matrix_graph(r: &mut StdRng, n: usize, lo: i64, hi: i64, symmetric: bool) -> SignedDigraph {
    let mut m = Matrix::zeros(n, n);
    for i in 0..n {
        for j in 0..n {
            if symmetric && j < i {
                m[(i, j)] = m[(j, i)].clone();
            } else if r.gen_bool(0.4) {
                m[(i, j)] = rat(r.gen_range(lo..=hi));
            }
        }
    }
    SignedDigraph::from_adjacency(m).unwrap()
}

/// Disjoint union.
pub fn union(a: &SignedDigraph, b: &SignedDigraph) -> SignedDigraph {
    let (na, nb) = (a.vertex_count(), b.vertex_count());
    let m = Matrix::from_fn(na + nb, na + nb, |i, j| match (i < na, j < na) {
        (true, true) => a.entry(i, j).clone(),
        (false, false) => b.entry(i - na, j - na).clone(),
        _ => rat(0),
    });
    SignedDigraph::from_adjacency(m).unwrap()
}

/// Regular simple graphs on at most 4 vertices.
pub fn small_regular(r: &mut StdRng) -> SignedDigraph {
    let choices = [
        families::edgeless(1),
        families::edgeless(2),
        families::complete(2),
        families::edgeless(3),
        families::complete(3),
        families::edgeless(4),
        SignedDigraph::undirected(4, &[(0, 1), (2, 3)]).unwrap(),
        families::cycle(4),
        families::complete(4),
    ];
    choices.choose(r).unwrap().clone()
}

/// Random simple graph on `r` vertices for the outer graph of a join.
pub fn random_h(rng: &mut StdRng, r: usize) -> SignedDigraph {
    random_undirected(rng, r, 0.6)
}

pub fn random_join_spec(rng: &mut StdRng) -> JoinSpec {
    let r = rng.gen_range(1..=3);
    let h = random_h(rng, r);
    let comps = (0..r).map(|_| small_regular(rng)).collect();
    JoinSpec::new(h, comps).unwrap()
}

/// A graph together with the seed its partition is refined from.
pub struct Instance {
    pub name: String,
    pub graph: SignedDigraph,
    pub seed: Partition,
}

fn seed_for(r: &mut StdRng, n: usize) -> Partition {
    if n > 1 && r.gen_bool(0.3) {
        let v = r.gen_range(0..n);
        let rest: Vec<usize> = (0..n).filter(|&w| w != v).collect();
        Partition::new(n, vec![vec![v], rest]).unwrap()
    } else {
        Partition::trivial(n)
    }
}

/// 100 graphs on at most 8 vertices, biased toward symmetric constructions
/// so that the coarsest equitable partitions have non-singleton cells.
pub fn random_suite(seed: u64) -> Vec<Instance> {
    let mut r = rng(seed);
    let mut out: Vec<Instance> = Vec::new();
    let push = |out: &mut Vec<Instance>, r: &mut StdRng, name: String, graph: SignedDigraph| {
        let seed = seed_for(r, graph.vertex_count());
        out.push(Instance { name, graph, seed });
    };
    while out.len() < 100 {
        let kind = out.len() % 7;
        match kind {
            0 => {
                let n = r.gen_range(3..=8);
                let k = r.gen_range(1..=2);
                let jumps: Vec<usize> = (0..k).map(|_| r.gen_range(1..=n / 2)).collect();
                push(&mut out, &mut r, format!("circulant({n}, {jumps:?})"), circulant(n, &jumps));
            }
            1 => {
                let spec = random_join_spec(&mut r);
                let (x, _) = eqdecomp::join::build_join(&spec).unwrap();
                if x.vertex_count() <= 8 {
                    push(&mut out, &mut r, "join".into(), x);
                }
            }
            2 => {
                let n = r.gen_range(2..=8);
                let g = random_undirected(&mut r, n, 0.5);
                push(&mut out, &mut r, format!("random undirected n={n}"), g);
            }
            3 => {
                let n = r.gen_range(2..=4);
                let g = random_undirected(&mut r, n, 0.6);
                push(&mut out, &mut r, format!("two copies n={n}"), union(&g, &g));
            }
            4 => {
                let n = r.gen_range(2..=7);
                let g = random_matrix_graph(&mut r, n, 1, 2, false);
                push(&mut out, &mut r, format!("random digraph n={n}"), g);
            }
            5 => {
                let n = r.gen_range(2..=7);
                let symmetric = r.gen_bool(0.5);
                let g = random_matrix_graph(&mut r, n, -2, 2, symmetric);
                push(&mut out, &mut r, format!("random signed n={n}"), g);
            }
            _ => {
                let a = r.gen_range(1..=4);
                let b = r.gen_range(1..=4);
                push(&mut out, &mut r, format!("K({a},{b})"), families::complete_bipartite(a, b));
            }
        }
    }
    out
}

/// Adjacency from 0/1 rows given one-based in print order.
pub fn graph_from_rows(rows: &[&[i64]]) -> SignedDigraph {
    SignedDigraph::from_adjacency(Matrix::from_i64_rows(rows)).unwrap()
}

/// The Petersen graph labelled by distance from vertex 1.
pub fn petersen_distance() -> SignedDigraph {
    graph_from_rows(&[
        &[0, 1, 1, 1, 0, 0, 0, 0, 0, 0],
        &[1, 0, 0, 0, 1, 1, 0, 0, 0, 0],
        &[1, 0, 0, 0, 0, 0, 1, 1, 0, 0],
        &[1, 0, 0, 0, 0, 0, 0, 0, 1, 1],
        &[0, 1, 0, 0, 0, 0, 0, 1, 1, 0],
        &[0, 1, 0, 0, 0, 0, 1, 0, 0, 1],
        &[0, 0, 1, 0, 0, 1, 0, 0, 1, 0],
        &[0, 0, 1, 0, 1, 0, 0, 0, 0, 1],
        &[0, 0, 0, 1, 1, 0, 1, 0, 0, 0],
        &[0, 0, 0, 1, 0, 1, 0, 1, 0, 0],
    ])
}

/// The 5-vertex digraph with an equitable pair `{1, 2, 3}, {4, 5}`.
pub fn digraph5() -> Matrix {
    Matrix::from_i64_rows(&[
        [1, 1, 1, 1, 0],
        [1, 1, 1, 0, 1],
        [2, 0, 1, 0, 1],
        [2, 0, 0, 0, 1],
        [0, 2, 0, 1, 0],
    ])
}

/// C4 with edges 1-2, 3-4, 1-3, 2-4.
pub fn c4() -> SignedDigraph {
    SignedDigraph::undirected(4, &[(0, 1), (2, 3), (0, 2), (1, 3)]).unwrap()
}

pub fn c4_partition() -> Partition {
    Partition::new(4, vec![vec![0, 1], vec![2, 3]]).unwrap()
}
