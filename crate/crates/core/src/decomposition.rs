//! Deletion matrices and graphs over a partition, the similarity transform
//! that puts an equitable pair into block upper-triangular form, and the
//! resulting characteristic-polynomial factorizations.
//!
//! With `P` the characteristic matrix of `pi`, `Q` the selector of the
//! non-representatives `V'` and `P̄ = (P, Q)`:
//!
//! ```text
//! P̄⁻¹ M P̄ = | M/pi   M|_{reps x V'} |
//!           |  0     M \ pi         |
//! ```
//!
//! where `(M \ pi)[v, w] = M[v, w] - M[rep(v), w]` for `v, w ∈ V'`. Hence
//! `φ(M) = φ(M/pi) · φ(M \ pi)`, and the second factor does not depend on
//! which representatives were chosen.

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Sign, SignedDigraph, VertexId};
use crate::matrix::{rat, Matrix, Rational};
use crate::partition::{check_equitable, quotient_of_shifted, Partition, QuotientMatrix};
use crate::poly::UniPoly;

/// `M \ pi` on `V'`, and the signed deletion graph when built from a graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeletionResult {
    pub matrix: Matrix,
    pub graph: Option<SignedDigraph>,
    /// Rows and columns of `matrix`, in cell-major order.
    pub vertices: Vec<VertexId>,
    pub representatives: Vec<VertexId>,
}

/// The conjugated form `P̄⁻¹ M P̄` split into its blocks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularForm {
    pub quotient: QuotientMatrix,
    pub coupling: Matrix,
    pub deletion: Matrix,
    pub basis: Matrix,
    pub conjugated: Matrix,
}

/// `φ(M) = quotient · deletion`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CharPolyFactors {
    pub quotient: UniPoly,
    pub deletion: UniPoly,
}

impl CharPolyFactors {
    pub fn product(&self) -> UniPoly {
        &self.quotient * &self.deletion
    }
}

/// `M|_{V'xV'} - P|_{V'x pi} · M|_{reps x V'}`.
pub fn deletion_matrix(m: &Matrix, pi: &Partition) -> Result<DeletionResult> {
    let n = m.require_square("deletion_matrix")?;
    if pi.vertex_count() != n {
        return Err(Error::DimensionMismatch {
            op: "deletion_matrix",
            detail: format!("partition covers {} vertices, matrix has {n}", pi.vertex_count()),
        });
    }
    let cell = pi.cell_index();
    let vp = pi.non_representatives();
    let reps = pi.reps();
    let matrix = Matrix::from_fn(vp.len(), vp.len(), |i, j| {
        let (v, w) = (vp[i], vp[j]);
        &m[(v, w)] - &m[(reps[cell[v]], w)]
    });
    Ok(DeletionResult {
        matrix,
        graph: None,
        vertices: vp.into_iter().map(VertexId).collect(),
        representatives: reps.iter().copied().map(VertexId).collect(),
    })
}

/// Builds `X \ pi = X|_{V'} - Σ_{i,j} (V_i'(rep_i) > V_j')` from graph
/// operations and checks that its adjacency equals `A(X) \ pi`.
pub fn deletion_graph(x: &SignedDigraph, pi: &Partition) -> Result<DeletionResult> {
    let expected = deletion_matrix(x.adjacency(), pi)?;
    let label = |v: usize| x.labels()[v];
    let rep_of: Vec<usize> = pi.reps().to_vec();
    let primed: Vec<Vec<VertexId>> = pi
        .cells()
        .iter()
        .zip(&rep_of)
        .map(|(c, &r)| c.iter().filter(|&&v| v != r).map(|&v| label(v)).collect())
        .collect();

    let mut broadcasts = SignedDigraph::empty(0);
    for (i, vi) in primed.iter().enumerate() {
        for vj in &primed {
            let b = x.broadcast(vi, label(rep_of[i]), vj)?;
            broadcasts = broadcasts.signed_sum(&b, Sign::Plus);
        }
    }
    let vp: Vec<VertexId> = primed.concat();
    let graph = x
        .restrict(&vp)?
        .signed_sum(&broadcasts, Sign::Minus)
        .permuted(&vp)?;

    let want = Matrix::from_fn(vp.len(), vp.len(), |i, j| expected.matrix[(i, j)].clone());
    if graph.adjacency() != &want {
        return Err(Error::Consistency(format!(
            "deletion graph adjacency {} differs from deletion matrix {}",
            graph.adjacency(),
            want
        )));
    }
    Ok(DeletionResult {
        matrix: expected.matrix,
        graph: Some(graph),
        vertices: vp,
        representatives: rep_of.iter().map(|&v| label(v)).collect(),
    })
}

/// Whether `M P = P (M/pi)` holds exactly.
pub fn intertwines(m: &Matrix, pi: &Partition, quotient: &Matrix) -> bool {
    let p = pi.characteristic_matrix();
    m * &p == &p * quotient
}

/// Conjugates `m` by `P̄ = (P, Q)` and checks every block of the result.
pub fn similarity_transform(m: &Matrix, pi: &Partition) -> Result<TriangularForm> {
    let quotient = check_equitable(m, pi)?;
    let n = m.rows();
    let r = pi.cell_count();
    let basis = pi.characteristic_matrix().hconcat(&pi.selector_matrix())?;
    let inv = basis
        .inverse()
        .map_err(|e| Error::Consistency(format!("(P, Q) is not invertible: {e}")))?;
    let conjugated = &(&inv * m) * &basis;

    let top: Vec<usize> = (0..r).collect();
    let bottom: Vec<usize> = (r..n).collect();
    let vp = pi.non_representatives();
    let coupling = m.submatrix(pi.reps(), &vp);
    let deletion = deletion_matrix(m, pi)?.matrix;

    let checks = [
        ("quotient", conjugated.submatrix(&top, &top), &*quotient),
        ("coupling", conjugated.submatrix(&top, &bottom), &coupling),
        ("deletion", conjugated.submatrix(&bottom, &bottom), &deletion),
    ];
    for (name, got, want) in checks {
        if &got != want {
            return Err(Error::Consistency(format!(
                "{name} block of the conjugated matrix is {got}, expected {want}"
            )));
        }
    }
    let lower = conjugated.submatrix(&bottom, &top);
    if !lower.is_zero() {
        return Err(Error::Consistency(format!("lower-left block is {lower}, not zero")));
    }
    if !intertwines(m, pi, &quotient) {
        return Err(Error::Consistency("M P != P (M/pi)".into()));
    }
    Ok(TriangularForm {
        quotient,
        coupling,
        deletion,
        basis,
        conjugated,
    })
}

/// `(φ(M/pi), φ(M \ pi))`, checked against an independently computed `φ(M)`.
pub fn factor_char_poly(m: &Matrix, pi: &Partition) -> Result<CharPolyFactors> {
    let quotient = check_equitable(m, pi)?.char_poly()?;
    let deletion = deletion_matrix(m, pi)?.matrix.char_poly()?;
    let factors = CharPolyFactors { quotient, deletion };
    let full = m.char_poly()?;
    if factors.product() != full {
        return Err(Error::Consistency(format!(
            "φ(M/pi)·φ(M\\pi) = {} but φ(M) = {full}",
            factors.product()
        )));
    }
    Ok(factors)
}

/// Factors of `φ(L(X))`, or of `φ(Q(X))` when `signless`.
///
/// The quotient factor is `φ(∓A(X/pi) + diag(d_i))`; the deletion factor is
/// `φ(∓A(X \ pi) + D(X)|_{V'xV'})`, i.e. the degrees of `X`, not of the
/// restricted graph `X|_{V'}`.
pub fn laplacian_factors(x: &SignedDigraph, pi: &Partition, signless: bool) -> Result<CharPolyFactors> {
    if !x.is_undirected() {
        return Err(Error::Validation(
            "Laplacian factorization needs an undirected graph".into(),
        ));
    }
    let alpha = if signless { rat(1) } else { rat(-1) };
    let degrees = x.degrees();
    let cell_deg: Vec<Rational> = pi.cells().iter().map(|c| degrees[c[0]].clone()).collect();
    let quotient = quotient_of_shifted(x, pi, &alpha, &cell_deg)?;

    let del = deletion_graph(x, pi)?;
    let vp: Vec<usize> = del.vertices.iter().map(|v| v.0).collect();
    let restricted_degrees = Matrix::diagonal(&vp.iter().map(|&v| degrees[v].clone()).collect::<Vec<_>>());
    let del_graph = del.graph.expect("deletion_graph always builds the graph");
    let deletion = &del_graph.adjacency().scale(&alpha) + &restricted_degrees;

    let factors = CharPolyFactors {
        quotient: quotient.char_poly()?,
        deletion: deletion.char_poly()?,
    };
    let full = (&x.adjacency().scale(&alpha) + &x.degree_matrix()).char_poly()?;
    if factors.product() != full {
        return Err(Error::Consistency(format!(
            "Laplacian factors multiply to {} but the direct polynomial is {full}",
            factors.product()
        )));
    }
    Ok(factors)
}

/// `φ(M \ pi)` for every choice of representatives, in the order of
/// [`Partition::representative_choices`].
pub fn deletion_polys_over_reps(m: &Matrix, pi: &Partition) -> Result<Vec<(Vec<usize>, UniPoly)>> {
    pi.representative_choices()
        .into_par_iter()
        .map(|reps| {
            let p = pi.clone().with_reps(reps.clone())?;
            let poly = deletion_matrix(m, &p)?.matrix.char_poly()?;
            Ok((reps, poly))
        })
        .collect()
}

/// Checks that `φ(M \ pi)` is the same for all representative choices.
/// Returns the common polynomial.
pub fn check_representative_independence(m: &Matrix, pi: &Partition) -> Result<UniPoly> {
    let all = deletion_polys_over_reps(m, pi)?;
    let (first_reps, first) = &all[0];
    for (reps, p) in &all[1..] {
        if p != first {
            return Err(Error::Consistency(format!(
                "deletion polynomial {p} for representatives {:?} differs from {first} for {:?}",
                one_based(reps),
                one_based(first_reps)
            )));
        }
    }
    Ok(first.clone())
}

fn one_based(v: &[usize]) -> Vec<usize> {
    v.iter().map(|x| x + 1).collect()
}
