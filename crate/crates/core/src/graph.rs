//! Signed directed multigraphs stored as dense integer adjacency matrices,
//! and the graph algebra used to build deletion graphs: restriction, signed
//! sums and broadcast graphs.

use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;

use num::{Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::{rat, Matrix, Rational};

/// Vertex label. Zero-based internally, printed one-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0 + 1)
    }
}

/// An edge `from -> to` between vertex positions, with a nonzero signed
/// multiplicity.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub multiplicity: i64,
}

impl Edge {
    pub fn new(from: usize, to: usize) -> Self {
        Edge {
            from,
            to,
            multiplicity: 1,
        }
    }

    pub fn with_multiplicity(from: usize, to: usize, multiplicity: i64) -> Self {
        Edge {
            from,
            to,
            multiplicity,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

/// A signed directed multigraph. Entry `(u, v)` of the adjacency matrix is
/// the signed number of edges `u -> v`; negative entries are negative edges.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SignedDigraph {
    labels: Vec<VertexId>,
    adjacency: Matrix,
}

impl SignedDigraph {
    /// Graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Self {
        SignedDigraph {
            labels: (0..n).map(VertexId).collect(),
            adjacency: Matrix::zeros(n, n),
        }
    }

    /// Accumulates the given edges. With `undirected`, every edge is also
    /// inserted reversed; a loop is inserted once.
    pub fn build(n: usize, edges: &[Edge], undirected: bool) -> Result<Self> {
        let mut adjacency = Matrix::zeros(n, n);
        for e in edges {
            if e.from >= n || e.to >= n {
                return Err(Error::Validation(format!(
                    "edge {} -> {} has an endpoint outside 1..={n}",
                    e.from + 1,
                    e.to + 1
                )));
            }
            if e.multiplicity == 0 {
                return Err(Error::Validation(format!(
                    "edge {} -> {} has multiplicity 0",
                    e.from + 1,
                    e.to + 1
                )));
            }
            adjacency[(e.from, e.to)] += rat(e.multiplicity);
            if undirected && e.from != e.to {
                adjacency[(e.to, e.from)] += rat(e.multiplicity);
            }
        }
        Self::from_adjacency(adjacency)
    }

    /// Convenience wrapper around [`Self::build`] for unit-multiplicity
    /// undirected edges.
    pub fn undirected(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let edges: Vec<Edge> = edges.iter().map(|&(a, b)| Edge::new(a, b)).collect();
        Self::build(n, &edges, true)
    }

    pub fn from_adjacency(adjacency: Matrix) -> Result<Self> {
        let labels = (0..adjacency.rows()).map(VertexId).collect();
        Self::with_labels(labels, adjacency)
    }

    pub fn with_labels(labels: Vec<VertexId>, adjacency: Matrix) -> Result<Self> {
        let n = adjacency.require_square("SignedDigraph")?;
        if labels.len() != n {
            return Err(Error::DimensionMismatch {
                op: "SignedDigraph",
                detail: format!("{} labels for a {n}x{n} adjacency", labels.len()),
            });
        }
        if !adjacency.is_integral() {
            return Err(Error::Validation("adjacency entries must be integers".into()));
        }
        let mut seen = HashSet::new();
        if let Some(dup) = labels.iter().find(|l| !seen.insert(**l)) {
            return Err(Error::Validation(format!("duplicate vertex label {dup}")));
        }
        Ok(SignedDigraph { labels, adjacency })
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[VertexId] {
        &self.labels
    }

    pub fn adjacency(&self) -> &Matrix {
        &self.adjacency
    }

    pub fn entry(&self, u: usize, v: usize) -> &Rational {
        &self.adjacency[(u, v)]
    }

    pub fn position(&self, label: VertexId) -> Option<usize> {
        self.labels.iter().position(|&l| l == label)
    }

    fn positions_of(&self, subset: &[VertexId]) -> Result<HashSet<usize>> {
        subset
            .iter()
            .map(|&l| {
                self.position(l)
                    .ok_or_else(|| Error::Validation(format!("unknown vertex {l}")))
            })
            .collect()
    }

    /// Out-degrees (row sums of the adjacency matrix).
    pub fn degrees(&self) -> Vec<Rational> {
        (0..self.vertex_count())
            .map(|i| self.adjacency.row(i).iter().sum())
            .collect()
    }

    /// Diagonal matrix of out-degrees. A loop counts its multiplicity once.
    pub fn degree_matrix(&self) -> Matrix {
        Matrix::diagonal(&self.degrees())
    }

    /// Induced subgraph on `subset`, keeping this graph's vertex order.
    pub fn restrict(&self, subset: &[VertexId]) -> Result<SignedDigraph> {
        let keep = self.positions_of(subset)?;
        let idx: Vec<usize> = (0..self.vertex_count()).filter(|i| keep.contains(i)).collect();
        Ok(SignedDigraph {
            labels: idx.iter().map(|&i| self.labels[i]).collect(),
            adjacency: self.adjacency.submatrix(&idx, &idx),
        })
    }

    /// `x1 + x2` or `x1 - x2` on the union of the vertex sets: the vertices of
    /// `self` in order, then the new vertices of `other` in order.
    pub fn signed_sum(&self, other: &SignedDigraph, sign: Sign) -> SignedDigraph {
        let mut labels = self.labels.clone();
        let mut pos: HashMap<VertexId, usize> =
            labels.iter().enumerate().map(|(i, &l)| (l, i)).collect();
        for &l in &other.labels {
            pos.entry(l).or_insert_with(|| {
                labels.push(l);
                labels.len() - 1
            });
        }
        let n = labels.len();
        let m = self.vertex_count();
        let mut adjacency = Matrix::from_fn(n, n, |i, j| {
            if i < m && j < m {
                self.adjacency[(i, j)].clone()
            } else {
                Rational::zero()
            }
        });
        for (i, li) in other.labels.iter().enumerate() {
            for (j, lj) in other.labels.iter().enumerate() {
                let v = &other.adjacency[(i, j)];
                let slot = &mut adjacency[(pos[li], pos[lj])];
                match sign {
                    Sign::Plus => *slot += v,
                    Sign::Minus => *slot -= v,
                }
            }
        }
        SignedDigraph { labels, adjacency }
    }

    /// The broadcast graph `B(vbar) > C`: on `B ∪ C` (in this graph's
    /// vertex order), every row `u ∈ B` restricted to `C` copies row `vbar`
    /// of this graph; all other entries are zero.
    pub fn broadcast(&self, b: &[VertexId], vbar: VertexId, c: &[VertexId]) -> Result<SignedDigraph> {
        let bs = self.positions_of(b)?;
        let cs = self.positions_of(c)?;
        let vb = self
            .position(vbar)
            .ok_or_else(|| Error::Validation(format!("unknown vertex {vbar}")))?;
        let idx: Vec<usize> = (0..self.vertex_count())
            .filter(|i| bs.contains(i) || cs.contains(i))
            .collect();
        let adjacency = Matrix::from_fn(idx.len(), idx.len(), |i, j| {
            if bs.contains(&idx[i]) && cs.contains(&idx[j]) {
                self.adjacency[(vb, idx[j])].clone()
            } else {
                Rational::zero()
            }
        });
        Ok(SignedDigraph {
            labels: idx.iter().map(|&i| self.labels[i]).collect(),
            adjacency,
        })
    }

    /// Symmetric adjacency.
    pub fn is_undirected(&self) -> bool {
        self.adjacency.is_symmetric()
    }

    pub fn is_unsigned(&self) -> bool {
        self.adjacency.entries().iter().all(|x| !x.is_negative())
    }

    pub fn has_loops(&self) -> bool {
        (0..self.vertex_count()).any(|i| !self.adjacency[(i, i)].is_zero())
    }

    /// 0/1 adjacency with an empty diagonal.
    pub fn is_simple(&self) -> bool {
        !self.has_loops()
            && self
                .adjacency
                .entries()
                .iter()
                .all(|x| x.is_zero() || *x == rat(1))
    }

    /// Number of non-oriented edges of an undirected graph: each off-diagonal
    /// pair counted once, loops counted by their multiplicity.
    pub fn undirected_edge_count(&self) -> Rational {
        let n = self.vertex_count();
        let mut m = Rational::zero();
        for i in 0..n {
            for j in i..n {
                m += &self.adjacency[(i, j)];
            }
        }
        m
    }

    /// Weak connectivity over nonzero entries. The empty graph is connected.
    pub fn is_connected(&self) -> bool {
        let n = self.vertex_count();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        while let Some(v) = queue.pop_front() {
            let a = &self.adjacency;
            let next: Vec<usize> = (0..n)
                .filter(|&w| !seen[w] && (!a[(v, w)].is_zero() || !a[(w, v)].is_zero()))
                .collect();
            for w in next {
                seen[w] = true;
                queue.push_back(w);
            }
        }
        seen.into_iter().all(|s| s)
    }

    /// Same graph with vertices listed in `order`, which must be a
    /// permutation of the labels.
    pub fn permuted(&self, order: &[VertexId]) -> Result<SignedDigraph> {
        if order.len() != self.vertex_count() {
            return Err(Error::DimensionMismatch {
                op: "permuted",
                detail: format!("{} labels for {} vertices", order.len(), self.vertex_count()),
            });
        }
        let idx = order
            .iter()
            .map(|&l| {
                self.position(l)
                    .ok_or_else(|| Error::Validation(format!("unknown vertex {l}")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedDigraph::with_labels(order.to_vec(), self.adjacency.submatrix(&idx, &idx))
    }

    /// Same graph with vertices sorted by label.
    pub fn canonicalize(&self) -> SignedDigraph {
        let mut idx: Vec<usize> = (0..self.vertex_count()).collect();
        idx.sort_by_key(|&i| self.labels[i]);
        SignedDigraph {
            labels: idx.iter().map(|&i| self.labels[i]).collect(),
            adjacency: self.adjacency.submatrix(&idx, &idx),
        }
    }
}
