//! Standard undirected graphs.

use crate::graph::SignedDigraph;

/// Cycle `0 - 1 - ... - (n-1) - 0`. Needs `n >= 3`.
pub fn cycle(n: usize) -> SignedDigraph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    SignedDigraph::undirected(n, &edges).unwrap()
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> SignedDigraph {
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    SignedDigraph::undirected(n, &edges).unwrap()
}

pub fn complete(n: usize) -> SignedDigraph {
    let edges: Vec<_> = (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect();
    SignedDigraph::undirected(n, &edges).unwrap()
}

pub fn complete_bipartite(a: usize, b: usize) -> SignedDigraph {
    let edges: Vec<_> = (0..a).flat_map(|i| (a..a + b).map(move |j| (i, j))).collect();
    SignedDigraph::undirected(a + b, &edges).unwrap()
}

/// `n` isolated vertices.
pub fn edgeless(n: usize) -> SignedDigraph {
    SignedDigraph::empty(n)
}

/// Petersen graph: an outer pentagram on `0..5`, an inner pentagon on
/// `5..10`, and spokes `k - (k + 5)`.
pub fn petersen() -> SignedDigraph {
    let mut edges = vec![(0, 2), (0, 3), (1, 3), (1, 4), (2, 4)];
    edges.extend([(5, 6), (6, 7), (7, 8), (8, 9), (5, 9)]);
    edges.extend((0..5).map(|k| (k, k + 5)));
    SignedDigraph::undirected(10, &edges).unwrap()
}
