//! Univariate polynomials over exact rationals.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{fmt_rational, rat, Matrix, Rational};

/// Polynomial with rational coefficients stored in ascending degree order.
///
/// The coefficient vector never has a trailing zero, so the zero polynomial
/// is the empty vector and equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<Rational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(Rational::one(), 1)
    }

    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Self::from_coeffs(coeffs)
    }

    /// `x - c`.
    pub fn x_minus(c: Rational) -> Self {
        Self::from_coeffs(vec![-c, Rational::one()])
    }

    pub fn from_coeffs(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| rat(c)).collect())
    }

    /// Product of `(x - r)` over the given roots, with multiplicity.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots.iter().map(|&r| Self::x_minus(rat(r))).product()
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Rational {
        self.coeffs.get(k).cloned().unwrap_or_else(Rational::zero)
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// True when every coefficient has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(Rational::is_integer)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * s).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Euclidean division. Errors only on a zero divisor.
    pub fn div_rem(&self, den: &UniPoly) -> Result<(UniPoly, UniPoly)> {
        let dd = den
            .degree()
            .ok_or_else(|| Error::Validation("division by the zero polynomial".into()))?;
        let lead = den.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree().filter(|&nd| nd >= dd) else {
            return Ok((UniPoly::zero(), self.clone()));
        };
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] / &lead;
            if c.is_zero() {
                continue;
            }
            for (i, dc) in den.coeffs.iter().enumerate() {
                rem[k + i] -= &c * dc;
            }
            quot[k] = c;
        }
        Ok((UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem)))
    }

    /// Quotient of an exact division; a nonzero remainder is an error.
    pub fn div_exact(&self, den: &UniPoly) -> Result<UniPoly> {
        let (q, r) = self.div_rem(den)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision {
                remainder: r.to_string(),
            })
        }
    }

    /// The unique polynomial of degree `< xs.len()` through the given points
    /// (Newton divided differences). Panics on repeated abscissae.
    pub fn interpolate(xs: &[Rational], ys: &[Rational]) -> Self {
        assert_eq!(xs.len(), ys.len(), "interpolate: length mismatch");
        let n = xs.len();
        let mut dd: Vec<Rational> = ys.to_vec();
        for level in 1..n {
            for i in (level..n).rev() {
                let denom = &xs[i] - &xs[i - level];
                assert!(!denom.is_zero(), "interpolate: repeated abscissa");
                dd[i] = (&dd[i] - &dd[i - 1]) / denom;
            }
        }
        let mut p = UniPoly::zero();
        for k in (0..n).rev() {
            p = &(&p * &UniPoly::x_minus(xs[k].clone())) + &UniPoly::constant(dd[k].clone());
        }
        p
    }

    /// Ascending coefficients as strings, the canonical machine format.
    /// Display string using `var` as the variable name.
    pub fn display_in(&self, var: &str) -> String {
        let mut s = String::new();
        write_poly(&mut s, &self.coeffs, var).expect("writing to a String");
        s
    }

    pub fn coeff_strings(&self) -> Vec<String> {
        self.coeffs.iter().map(fmt_rational).collect()
    }
}

/// Determinant of a square matrix of polynomials, by evaluation at
/// `bound + 1` integers and interpolation. The degree bound is the sum over
/// rows of the largest entry degree in that row.
pub fn poly_matrix_det(m: &[Vec<UniPoly>]) -> Result<UniPoly> {
    let n = m.len();
    if let Some(bad) = m.iter().find(|r| r.len() != n) {
        return Err(Error::NotSquare {
            op: "poly_matrix_det",
            rows: n,
            cols: bad.len(),
        });
    }
    let bound: usize = m
        .iter()
        .map(|row| row.iter().filter_map(UniPoly::degree).max().unwrap_or(0))
        .sum();
    let xs: Vec<Rational> = (0..=bound as i64).map(rat).collect();
    let ys = xs
        .iter()
        .map(|x0| Matrix::from_fn(n, n, |i, j| m[i][j].eval(x0)).det())
        .collect::<Result<Vec<_>>>()?;
    Ok(UniPoly::interpolate(&xs, &ys))
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_poly(f, &self.coeffs, "x")
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "UniPoly({self})")
    }
}

pub(crate) fn write_poly(f: &mut impl fmt::Write, coeffs: &[Rational], var: &str) -> fmt::Result {
    let mut first = true;
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if first {
            if c.is_negative() {
                write!(f, "-")?;
            }
        } else if c.is_negative() {
            write!(f, " - ")?;
        } else {
            write!(f, " + ")?;
        }
        first = false;
        let mag_str = if mag.is_integer() {
            mag.numer().to_string()
        } else {
            format!("({}/{})", mag.numer(), mag.denom())
        };
        match k {
            0 => write!(f, "{mag_str}")?,
            _ => {
                if !mag.is_one() {
                    write!(f, "{mag_str}")?;
                }
                if k == 1 {
                    write!(f, "{var}")?;
                } else {
                    write!(f, "{var}^{k}")?;
                }
            }
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        UniPoly::from_coeffs((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::from_coeffs(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Product for UniPoly {
    fn product<I: Iterator<Item = UniPoly>>(iter: I) -> UniPoly {
        iter.fold(UniPoly::one(), |acc, p| &acc * &p)
    }
}

impl<'a> Product<&'a UniPoly> for UniPoly {
    fn product<I: Iterator<Item = &'a UniPoly>>(iter: I) -> UniPoly {
        iter.fold(UniPoly::one(), |acc, p| &acc * p)
    }
}

impl Sum for UniPoly {
    fn sum<I: Iterator<Item = UniPoly>>(iter: I) -> UniPoly {
        iter.fold(UniPoly::zero(), |acc, p| &acc + &p)
    }
}

impl Serialize for UniPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeff_strings().serialize(s)
    }
}
