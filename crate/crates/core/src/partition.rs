//! Vertex partitions with designated representatives, equitability checks,
//! quotient matrices and coarsest equitable refinement.

use std::collections::BTreeMap;
use std::ops::Deref;

use num::Zero;

use crate::error::{Error, Result};
use crate::graph::SignedDigraph;
use crate::matrix::{Matrix, Rational};

/// Ordered cells `V_1, ..., V_r` over vertex positions `0..n`, each with a
/// representative. Vertices within a cell are kept ascending.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Partition {
    n: usize,
    cells: Vec<Vec<usize>>,
    reps: Vec<usize>,
}

impl Partition {
    /// Representatives default to the least vertex of each cell.
    pub fn new(n: usize, cells: Vec<Vec<usize>>) -> Result<Self> {
        let mut cells = cells;
        if cells.is_empty() {
            return Err(Error::Validation("a partition needs at least one cell".into()));
        }
        let mut owner = vec![None; n];
        for (ci, cell) in cells.iter_mut().enumerate() {
            if cell.is_empty() {
                return Err(Error::Validation(format!("cell {} is empty", ci + 1)));
            }
            cell.sort_unstable();
            for &v in cell.iter() {
                if v >= n {
                    return Err(Error::Validation(format!(
                        "vertex {} is outside 1..={n}",
                        v + 1
                    )));
                }
                if let Some(prev) = owner[v].replace(ci) {
                    return Err(Error::Validation(format!(
                        "vertex {} appears in cells {} and {}",
                        v + 1,
                        prev + 1,
                        ci + 1
                    )));
                }
            }
        }
        let missing: Vec<String> = (0..n)
            .filter(|&v| owner[v].is_none())
            .map(|v| (v + 1).to_string())
            .collect();
        if !missing.is_empty() {
            return Err(Error::Validation(format!(
                "vertices not covered by any cell: {}",
                missing.join(", ")
            )));
        }
        let reps = cells.iter().map(|c| c[0]).collect();
        Ok(Partition { n, cells, reps })
    }

    /// Replaces the representatives; `reps[i]` must lie in cell `i`.
    pub fn with_reps(mut self, reps: Vec<usize>) -> Result<Self> {
        if reps.len() != self.cells.len() {
            return Err(Error::Validation(format!(
                "{} representatives for {} cells",
                reps.len(),
                self.cells.len()
            )));
        }
        for (i, (&rep, cell)) in reps.iter().zip(&self.cells).enumerate() {
            if !cell.contains(&rep) {
                return Err(Error::Validation(format!(
                    "representative {} is not in cell {}",
                    rep + 1,
                    i + 1
                )));
            }
        }
        self.reps = reps;
        Ok(self)
    }

    /// One cell holding every vertex.
    pub fn trivial(n: usize) -> Self {
        Partition::new(n, vec![(0..n).collect()]).expect("n >= 1")
    }

    /// Every vertex in its own cell.
    pub fn singletons(n: usize) -> Self {
        Partition::new(n, (0..n).map(|v| vec![v]).collect()).expect("n >= 1")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn cells(&self) -> &[Vec<usize>] {
        &self.cells
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    /// Cell index of every vertex.
    pub fn cell_index(&self) -> Vec<usize> {
        let mut idx = vec![0; self.n];
        for (ci, cell) in self.cells.iter().enumerate() {
            for &v in cell {
                idx[v] = ci;
            }
        }
        idx
    }

    /// `V'`: all non-representative vertices, cell by cell.
    pub fn non_representatives(&self) -> Vec<usize> {
        self.cells
            .iter()
            .zip(&self.reps)
            .flat_map(|(cell, &rep)| cell.iter().copied().filter(move |&v| v != rep))
            .collect()
    }

    /// Every way of picking one representative per cell, in lexicographic
    /// order of the choice vectors.
    pub fn representative_choices(&self) -> Vec<Vec<usize>> {
        self.cells.iter().fold(vec![Vec::new()], |acc, cell| {
            acc.into_iter()
                .flat_map(|prefix| {
                    cell.iter().map(move |&v| {
                        let mut p = prefix.clone();
                        p.push(v);
                        p
                    })
                })
                .collect()
        })
    }

    pub fn representative_choice_count(&self) -> usize {
        self.cells.iter().map(Vec::len).product()
    }

    /// Whether every cell of `self` lies inside a cell of `coarser`.
    pub fn refines(&self, coarser: &Partition) -> bool {
        let idx = coarser.cell_index();
        self.n == coarser.n
            && self
                .cells
                .iter()
                .all(|cell| cell.iter().all(|&v| idx[v] == idx[cell[0]]))
    }

    /// Same cells as a set partition, ignoring cell order and representatives.
    pub fn same_cells(&self, other: &Partition) -> bool {
        let mut a = self.cells.clone();
        let mut b = other.cells.clone();
        a.sort();
        b.sort();
        a == b
    }

    /// The `n x r` 0/1 cell-membership matrix `P`.
    pub fn characteristic_matrix(&self) -> Matrix {
        let idx = self.cell_index();
        Matrix::from_fn(self.n, self.cells.len(), |v, j| {
            if idx[v] == j {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            }
        })
    }

    /// The `n x (n - r)` 0/1 matrix `Q` selecting the non-representatives,
    /// columns in [`Self::non_representatives`] order.
    pub fn selector_matrix(&self) -> Matrix {
        let vp = self.non_representatives();
        Matrix::from_fn(self.n, vp.len(), |v, j| {
            if vp[j] == v {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            }
        })
    }

    fn require_size(&self, n: usize, op: &'static str) -> Result<()> {
        if self.n == n {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                op,
                detail: format!("partition covers {} vertices, matrix has {n}", self.n),
            })
        }
    }
}

/// `r x r` matrix `B` with `M|_{Vi x Vj} 1 = b_ij 1`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct QuotientMatrix(Matrix);

impl QuotientMatrix {
    pub fn into_matrix(self) -> Matrix {
        self.0
    }

    pub(crate) fn from_closed_form(m: Matrix) -> Self {
        QuotientMatrix(m)
    }
}

impl Deref for QuotientMatrix {
    type Target = Matrix;
    fn deref(&self) -> &Matrix {
        &self.0
    }
}

/// Returns `M/pi` if every block of `m` has constant row sums.
///
/// The error names the first failing block (one-based cell numbers) and the
/// one-based vertex whose row sum differs from the first row of its cell.
pub fn check_equitable(m: &Matrix, pi: &Partition) -> Result<QuotientMatrix> {
    let n = m.require_square("check_equitable")?;
    pi.require_size(n, "check_equitable")?;
    let r = pi.cell_count();
    let mut b = Matrix::zeros(r, r);
    for (i, ci) in pi.cells().iter().enumerate() {
        for (j, cj) in pi.cells().iter().enumerate() {
            let row_sum = |v: usize| -> Rational { cj.iter().map(|&w| &m[(v, w)]).sum() };
            let expected = row_sum(ci[0]);
            for &v in &ci[1..] {
                let found = row_sum(v);
                if found != expected {
                    return Err(Error::NotEquitable {
                        cell_i: i + 1,
                        cell_j: j + 1,
                        vertex: v + 1,
                        expected: expected.to_string(),
                        found: found.to_string(),
                    });
                }
            }
            b[(i, j)] = expected;
        }
    }
    Ok(QuotientMatrix(b))
}

/// `alpha * A(x) + D` where `D` is constant `cell_diag[i]` on cell `i`.
pub fn shifted_matrix(
    x: &SignedDigraph,
    pi: &Partition,
    alpha: &Rational,
    cell_diag: &[Rational],
) -> Result<Matrix> {
    pi.require_size(x.vertex_count(), "shifted_matrix")?;
    if cell_diag.len() != pi.cell_count() {
        return Err(Error::DimensionMismatch {
            op: "shifted_matrix",
            detail: format!("{} diagonal values for {} cells", cell_diag.len(), pi.cell_count()),
        });
    }
    let idx = pi.cell_index();
    let d: Vec<Rational> = idx.iter().map(|&c| cell_diag[c].clone()).collect();
    Ok(&x.adjacency().scale(alpha) + &Matrix::diagonal(&d))
}

/// `alpha * A(x/pi) + diag(cell_diag)`, computed from the adjacency quotient.
pub fn quotient_of_shifted(
    x: &SignedDigraph,
    pi: &Partition,
    alpha: &Rational,
    cell_diag: &[Rational],
) -> Result<QuotientMatrix> {
    let q = check_equitable(x.adjacency(), pi)?;
    if cell_diag.len() != pi.cell_count() {
        return Err(Error::DimensionMismatch {
            op: "quotient_of_shifted",
            detail: format!("{} diagonal values for {} cells", cell_diag.len(), pi.cell_count()),
        });
    }
    Ok(QuotientMatrix(&q.scale(alpha) + &Matrix::diagonal(cell_diag)))
}

/// Coarsest equitable partition refining `seed` (color refinement).
///
/// Each round splits every cell by the vector of edge-weight sums into the
/// current cells. Split pieces stay in their parent's position, ordered by
/// descending signature; starting from one distinguished vertex this lists
/// cells by distance on distance-regular graphs.
pub fn coarsest_equitable(x: &SignedDigraph, seed: &Partition) -> Result<Partition> {
    let n = x.vertex_count();
    seed.require_size(n, "coarsest_equitable")?;
    let a = x.adjacency();
    let mut cells: Vec<Vec<usize>> = seed.cells().to_vec();
    loop {
        let mut color = vec![0usize; n];
        for (ci, cell) in cells.iter().enumerate() {
            for &v in cell {
                color[v] = ci;
            }
        }
        let mut next: Vec<Vec<usize>> = Vec::with_capacity(cells.len());
        for cell in &cells {
            let mut groups: BTreeMap<Vec<Rational>, Vec<usize>> = BTreeMap::new();
            for &v in cell {
                let mut sig = vec![Rational::zero(); cells.len()];
                for w in 0..n {
                    sig[color[w]] += &a[(v, w)];
                }
                groups.entry(sig).or_default().push(v);
            }
            next.extend(groups.into_values().rev());
        }
        if next.len() == cells.len() {
            break;
        }
        cells = next;
    }
    Partition::new(n, cells)
}
