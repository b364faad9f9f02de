//! Dense matrices over exact rationals.
//!
//! Determinants run through fraction-free (Bareiss) elimination on integer
//! rows: each rational row is first scaled by the lcm of its denominators,
//! so no intermediate quotient is ever inexact.

use std::fmt;
use std::ops::{Add, Index, IndexMut, Mul, Neg, Sub};

use num::{BigInt, BigRational, Integer, One, Zero};

use crate::error::{Error, Result};
use crate::poly::UniPoly;

/// Exact rational scalar. Always stored reduced with a positive denominator.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Row-major dense matrix of [`Rational`] entries.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { Rational::one() } else { Rational::zero() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    /// Builds a matrix from integer rows. Panics if the rows are ragged.
    pub fn from_i64_rows<R: AsRef<[i64]>>(rows: &[R]) -> Self {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        assert!(
            rows.iter().all(|r| r.as_ref().len() == cols),
            "ragged rows in matrix literal"
        );
        Self::from_fn(rows.len(), cols, |i, j| rat(rows[i].as_ref()[j]))
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let n = entries.len();
        Self::from_fn(n, n, |i, j| {
            if i == j {
                entries[i].clone()
            } else {
                Rational::zero()
            }
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.data.iter().all(Rational::is_integer)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (0..i).all(|j| self[(i, j)] == self[(j, i)]))
    }

    pub(crate) fn require_square(&self, op: &'static str) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::NotSquare {
                op,
                rows: self.rows,
                cols: self.cols,
            })
        }
    }

    pub fn transpose(&self) -> Matrix {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)].clone())
    }

    pub fn scale(&self, s: &Rational) -> Matrix {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).fold(Rational::zero(), |acc, i| acc + &self[(i, i)])
    }

    /// The submatrix on the given row and column index lists, in list order.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Matrix {
        Self::from_fn(rows.len(), cols.len(), |i, j| self[(rows[i], cols[j])].clone())
    }

    /// Column-wise concatenation `(self, other)`.
    pub fn hconcat(&self, other: &Matrix) -> Result<Matrix> {
        if self.rows != other.rows {
            return Err(Error::DimensionMismatch {
                op: "hconcat",
                detail: format!("{} rows vs {} rows", self.rows, other.rows),
            });
        }
        Ok(Self::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self[(i, j)].clone()
            } else {
                other[(i, j - self.cols)].clone()
            }
        }))
    }

    /// Assembles `[[a, b], [c, d]]`.
    pub fn block2x2(a: &Matrix, b: &Matrix, c: &Matrix, d: &Matrix) -> Result<Matrix> {
        if a.rows != b.rows || c.rows != d.rows || a.cols != c.cols || b.cols != d.cols {
            return Err(Error::DimensionMismatch {
                op: "block2x2",
                detail: "blocks do not tile".into(),
            });
        }
        Ok(Self::from_fn(a.rows + c.rows, a.cols + b.cols, |i, j| {
            match (i < a.rows, j < a.cols) {
                (true, true) => a[(i, j)].clone(),
                (true, false) => b[(i, j - a.cols)].clone(),
                (false, true) => c[(i - a.rows, j)].clone(),
                (false, false) => d[(i - a.rows, j - a.cols)].clone(),
            }
        }))
    }

    pub fn checked_mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                op: "mul",
                detail: format!("{}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols),
            });
        }
        Ok(Self::from_fn(self.rows, other.cols, |i, j| {
            let mut acc = Rational::zero();
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if !a.is_zero() {
                    acc += a * &other[(k, j)];
                }
            }
            acc
        }))
    }

    /// Exact determinant by fraction-free elimination.
    pub fn det(&self) -> Result<Rational> {
        let n = self.require_square("det")?;
        let mut scale = BigInt::one();
        let mut rows = Vec::with_capacity(n);
        for i in 0..n {
            let lcm = self
                .row(i)
                .iter()
                .fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            rows.push(
                self.row(i)
                    .iter()
                    .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
                    .collect(),
            );
            scale *= lcm;
        }
        Ok(Rational::new(bareiss_det(rows), scale))
    }

    /// Exact inverse by Gauss–Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.require_square("inverse")?;
        let mut a = self.clone();
        let mut inv = Matrix::identity(n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(Error::Singular { column: col })?;
            if pivot != col {
                a.swap_rows(pivot, col);
                inv.swap_rows(pivot, col);
            }
            let p = a[(col, col)].recip();
            for j in 0..n {
                a[(col, j)] *= &p;
                inv[(col, j)] *= &p;
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for j in 0..n {
                    let da = &f * &a[(col, j)];
                    a[(r, j)] -= da;
                    let di = &f * &inv[(col, j)];
                    inv[(r, j)] -= di;
                }
            }
        }
        Ok(inv)
    }

    /// `det(xI - self)`, found by evaluating the determinant at the integers
    /// `0..=n` and interpolating. The result is monic of degree `n`.
    pub fn char_poly(&self) -> Result<UniPoly> {
        let n = self.require_square("char_poly")?;
        let xs: Vec<Rational> = (0..=n as i64).map(rat).collect();
        let mut ys = Vec::with_capacity(n + 1);
        for x0 in &xs {
            ys.push(self.shifted_neg(x0).det()?);
        }
        Ok(UniPoly::interpolate(&xs, &ys))
    }

    /// `x0 * I - self`.
    pub fn shifted_neg(&self, x0: &Rational) -> Matrix {
        Self::from_fn(self.rows, self.cols, |i, j| {
            let v = -&self[(i, j)];
            if i == j {
                v + x0
            } else {
                v
            }
        })
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

/// Bareiss determinant of a square integer matrix given as rows.
pub fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

impl Index<(usize, usize)> for Matrix {
    type Output = Rational;
    fn index(&self, (i, j): (usize, usize)) -> &Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut Rational {
        assert!(i < self.rows && j < self.cols, "index ({i}, {j}) out of range");
        &mut self.data[i * self.cols + j]
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in add");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sub");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Neg for &Matrix {
    type Output = Matrix;
    fn neg(self) -> Matrix {
        self.scale(&-Rational::one())
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    /// Panics on a shape mismatch; use [`Matrix::checked_mul`] otherwise.
    fn mul(self, rhs: &Matrix) -> Matrix {
        self.checked_mul(rhs).expect("shape mismatch in mul")
    }
}

pub(crate) fn fmt_rational(x: &Rational) -> String {
    if x.is_integer() {
        x.numer().to_string()
    } else {
        format!("{}/{}", x.numer(), x.denom())
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", fmt_rational(x))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix{}x{}{}", self.rows, self.cols, self)
    }
}

/// Rows of the matrix as strings, the machine format used in reports.
pub fn matrix_to_strings(m: &Matrix) -> Vec<Vec<String>> {
    (0..m.rows())
        .map(|i| m.row(i).iter().map(fmt_rational).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_det_is_one() {
        assert_eq!(Matrix::identity(3).det().unwrap(), rat(1));
        assert_eq!(Matrix::identity(0).det().unwrap(), rat(1));
    }

    #[test]
    fn permutation_det() {
        let m = Matrix::from_i64_rows(&[[0, 1], [1, 0]]);
        assert_eq!(m.det().unwrap(), rat(-1));
    }

    #[test]
    fn rational_det_clears_denominators() {
        let m = Matrix::from_fn(2, 2, |i, j| match (i, j) {
            (0, 0) => ratio(1, 2),
            (0, 1) => ratio(1, 3),
            (1, 0) => ratio(1, 4),
            _ => ratio(1, 5),
        });
        // 1/10 - 1/12
        assert_eq!(m.det().unwrap(), ratio(1, 60));
    }

    #[test]
    fn det_needs_pivot_swap() {
        let m = Matrix::from_i64_rows(&[[0, 0, 1], [0, 2, 0], [3, 0, 0]]);
        assert_eq!(m.det().unwrap(), rat(-6));
    }

    #[test]
    fn non_square_is_rejected() {
        let m = Matrix::zeros(2, 3);
        assert!(matches!(m.det(), Err(Error::NotSquare { rows: 2, cols: 3, .. })));
        assert!(matches!(m.char_poly(), Err(Error::NotSquare { .. })));
        assert!(matches!(m.inverse(), Err(Error::NotSquare { .. })));
    }

    #[test]
    fn inverse_of_diagonal() {
        let m = Matrix::from_i64_rows(&[[2, 0], [0, 4]]);
        let inv = m.inverse().unwrap();
        assert_eq!(inv, Matrix::diagonal(&[ratio(1, 2), ratio(1, 4)]));
        assert_eq!(Matrix::identity(4).inverse().unwrap(), Matrix::identity(4));
    }

    #[test]
    fn singular_inverse_reports_column() {
        let m = Matrix::from_i64_rows(&[[1, 2, 3], [2, 4, 6], [0, 0, 1]]);
        assert_eq!(m.inverse(), Err(Error::Singular { column: 1 }));
    }

    #[test]
    fn char_poly_of_zero_matrix() {
        let p = Matrix::zeros(3, 3).char_poly().unwrap();
        assert_eq!(p, UniPoly::monomial(rat(1), 3));
    }

    #[test]
    fn char_poly_of_c4() {
        let a = Matrix::from_i64_rows(&[[0, 1, 1, 0], [1, 0, 0, 1], [1, 0, 0, 1], [0, 1, 1, 0]]);
        assert_eq!(a.char_poly().unwrap(), UniPoly::from_i64(&[0, 0, -4, 0, 1]));
    }

    #[test]
    fn block_assembly_round_trips() {
        let a = Matrix::from_i64_rows(&[[1]]);
        let b = Matrix::from_i64_rows(&[[2, 3]]);
        let c = Matrix::from_i64_rows(&[[4], [5]]);
        let d = Matrix::from_i64_rows(&[[6, 7], [8, 9]]);
        let m = Matrix::block2x2(&a, &b, &c, &d).unwrap();
        assert_eq!(m, Matrix::from_i64_rows(&[[1, 2, 3], [4, 6, 7], [5, 8, 9]]));
        assert_eq!(m.submatrix(&[1, 2], &[1, 2]), d);
    }

    #[test]
    fn display_uses_fractions() {
        let m = Matrix::diagonal(&[ratio(1, 2), rat(-3)]);
        assert_eq!(m.to_string(), "[[1/2, 0], [0, -3]]");
    }
}
