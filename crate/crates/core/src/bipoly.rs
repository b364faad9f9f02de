//! Bivariate integer polynomials in `u` and `t`, and determinants of
//! matrices with such entries.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{BigInt, Integer, One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::{bareiss_det, Rational};
use crate::poly::UniPoly;

/// Exponent pair of a term. Ordered by `t`-degree first, then `u`-degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Monomial {
    pub t: u32,
    pub u: u32,
}

/// Polynomial in `u, t` with arbitrary-precision integer coefficients.
/// Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BiPoly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(BigInt::from(c), 0, 0)
    }

    pub fn u() -> Self {
        Self::monomial(BigInt::one(), 1, 0)
    }

    pub fn t() -> Self {
        Self::monomial(BigInt::one(), 0, 1)
    }

    pub fn monomial(c: BigInt, u: u32, t: u32) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(Monomial { t, u }, c);
        p
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m).or_insert_with(BigInt::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    /// Builds from `(u-degree, t-degree, coefficient)` triples.
    pub fn from_terms(terms: impl IntoIterator<Item = (u32, u32, i64)>) -> Self {
        let mut p = BiPoly::zero();
        for (u, t, c) in terms {
            p.add_term(Monomial { t, u }, BigInt::from(c));
        }
        p
    }

    /// Terms in ascending `(t, u)` order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, u: u32, t: u32) -> BigInt {
        self.terms
            .get(&Monomial { t, u })
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn deg_u(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.u).max()
    }

    pub fn deg_t(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.t).max()
    }

    pub fn eval(&self, u: &BigInt, t: &BigInt) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |acc, (m, c)| {
            acc + c * num::pow(u.clone(), m.u as usize) * num::pow(t.clone(), m.t as usize)
        })
    }

    /// Integer coefficients in `t` after substituting `u`.
    fn t_coeffs_at(&self, u: &BigInt) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.deg_t().map_or(0, |d| d as usize + 1)];
        for (m, c) in &self.terms {
            out[m.t as usize] += c * num::pow(u.clone(), m.u as usize);
        }
        out
    }

    pub fn eval_rational(&self, u: &Rational, t: &Rational) -> Rational {
        self.terms.iter().fold(Rational::zero(), |acc, (m, c)| {
            acc + Rational::from_integer(c.clone())
                * num::pow(u.clone(), m.u as usize)
                * num::pow(t.clone(), m.t as usize)
        })
    }

    /// Substitutes `u = u0`, leaving a polynomial in `t`.
    pub fn specialize_u(&self, u0: i64) -> UniPoly {
        let u0 = BigInt::from(u0);
        let deg = self.deg_t().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            coeffs[m.t as usize] += Rational::from_integer(c * num::pow(u0.clone(), m.u as usize));
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Substitutes `t = t0`, leaving a polynomial in `u`.
    pub fn specialize_t(&self, t0: i64) -> UniPoly {
        let t0 = BigInt::from(t0);
        let deg = self.deg_u().unwrap_or(0) as usize;
        let mut coeffs = vec![Rational::zero(); deg + 1];
        for (m, c) in &self.terms {
            coeffs[m.u as usize] += Rational::from_integer(c * num::pow(t0.clone(), m.t as usize));
        }
        UniPoly::from_coeffs(coeffs)
    }

    /// Embeds a polynomial in `t` with integer coefficients.
    pub fn from_t_poly(p: &UniPoly) -> Result<Self> {
        let mut out = BiPoly::zero();
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_integer() {
                return Err(Error::Validation(format!(
                    "coefficient {c} of {p} is not an integer"
                )));
            }
            out.add_term(Monomial { t: k as u32, u: 0 }, c.to_integer());
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(BiPoly::one(), |acc, _| &acc * self)
    }

    pub fn scale(&self, s: &BigInt) -> Self {
        let mut out = BiPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(*m, c * s);
        }
        out
    }

    fn leading(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    /// Exact division in `Z[u, t]`; any remainder is an error.
    pub fn div_exact(&self, den: &BiPoly) -> Result<BiPoly> {
        let (lm, lc) = den
            .leading()
            .ok_or_else(|| Error::Validation("division by the zero polynomial".into()))?;
        let lc = lc.clone();
        let mut rem = self.clone();
        let mut quot = BiPoly::zero();
        while let Some((m, c)) = rem.leading() {
            let (q, r) = c.div_rem(&lc);
            if m.t < lm.t || m.u < lm.u || !r.is_zero() {
                return Err(Error::InexactDivision {
                    remainder: rem.to_string(),
                });
            }
            let term = BiPoly::monomial(q, m.u - lm.u, m.t - lm.t);
            rem = &rem - &(&term * den);
            quot = &quot + &term;
        }
        Ok(quot)
    }

    /// `(u-degree, t-degree, coefficient)` rows sorted by `(t, u)` ascending.
    pub fn term_table(&self) -> Vec<(u32, u32, String)> {
        self.terms
            .iter()
            .map(|(m, c)| (m.u, m.t, c.to_string()))
            .collect()
    }
}

impl fmt::Display for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut parts = Vec::new();
            if !mag.is_one() || (m.u == 0 && m.t == 0) {
                parts.push(mag.to_string());
            }
            match m.u {
                0 => {}
                1 => parts.push("u".into()),
                k => parts.push(format!("u^{k}")),
            }
            match m.t {
                0 => {}
                1 => parts.push("t".into()),
                k => parts.push(format!("t^{k}")),
            }
            write!(f, "{}", parts.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for BiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BiPoly({self})")
    }
}

impl Serialize for BiPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.term_table().serialize(s)
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(
                    Monomial {
                        t: ma.t + mb.t,
                        u: ma.u + mb.u,
                    },
                    ca * cb,
                );
            }
        }
        out
    }
}

impl Neg for &BiPoly {
    type Output = BiPoly;
    fn neg(self) -> BiPoly {
        self.scale(&-BigInt::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BiPoly {
            type Output = BiPoly;
            fn $m(self, rhs: BiPoly) -> BiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl std::iter::Product for BiPoly {
    fn product<I: Iterator<Item = BiPoly>>(iter: I) -> BiPoly {
        iter.fold(BiPoly::one(), |acc, p| &acc * &p)
    }
}

/// Square matrix with [`BiPoly`] entries.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BiPolyMatrix {
    n: usize,
    entries: Vec<BiPoly>,
}

impl BiPolyMatrix {
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> BiPoly) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(f(i, j));
            }
        }
        BiPolyMatrix { n, entries }
    }

    pub fn from_rows(rows: Vec<Vec<BiPoly>>) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(Error::NotSquare {
                op: "BiPolyMatrix",
                rows: n,
                cols: bad.len(),
            });
        }
        Ok(BiPolyMatrix {
            n,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> &BiPoly {
        &self.entries[i * self.n + j]
    }

    /// Integer matrix obtained by substituting `u = u0, t = t0` entrywise.
    pub fn eval(&self, u0: &BigInt, t0: &BigInt) -> Vec<Vec<BigInt>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j).eval(u0, t0)).collect())
            .collect()
    }

    /// Row-sum bounds on the `u`- and `t`-degree of the determinant.
    pub fn degree_bounds(&self) -> (usize, usize) {
        let mut bu = 0usize;
        let mut bt = 0usize;
        for i in 0..self.n {
            let row = (0..self.n).map(|j| self.get(i, j));
            let (mu, mt) = row.fold((0u32, 0u32), |(mu, mt), p| {
                (mu.max(p.deg_u().unwrap_or(0)), mt.max(p.deg_t().unwrap_or(0)))
            });
            bu += mu as usize;
            bt += mt as usize;
        }
        (bu, bt)
    }

    /// Determinant with bounds taken from [`Self::degree_bounds`].
    pub fn det(&self) -> Result<BiPoly> {
        let (du, dt) = self.degree_bounds();
        bipoly_det(self, du, dt)
    }
}

fn horner(coeffs: &[BigInt], x: &BigInt) -> BigInt {
    coeffs.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// Monomial coefficients of the polynomial of degree `< ys.len()` taking
/// the value `ys[i]` at `x0 + i`. Newton divided differences at consecutive
/// integers are integers whenever the interpolant has integer coefficients;
/// `None` means some division was inexact, so it does not.
pub(crate) fn interpolate_consecutive(x0: i64, ys: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = ys.len();
    let mut dd = ys.to_vec();
    for level in 1..n {
        let l = BigInt::from(level);
        for i in (level..n).rev() {
            let (q, r) = (&dd[i] - &dd[i - 1]).div_rem(&l);
            if !r.is_zero() {
                return None;
            }
            dd[i] = q;
        }
    }
    // Horner in the Newton basis: p = dd[k] + (x - (x0 + k)) p.
    let mut p: Vec<BigInt> = Vec::with_capacity(n);
    for k in (0..n).rev() {
        let node = BigInt::from(x0 + k as i64);
        let mut next = vec![BigInt::zero(); p.len() + 1];
        for (j, c) in p.iter().enumerate() {
            next[j + 1] += c;
            next[j] -= c * &node;
        }
        next[0] += &dd[k];
        p = next;
    }
    p.truncate(n.max(1));
    Some(p)
}

/// Exact determinant of a [`BiPolyMatrix`].
///
/// Evaluates on a grid of `(deg_u + 1) x (deg_t + 1)` consecutive integers
/// centred on the origin, takes Bareiss determinants there, and
/// interpolates first along `t` and then along `u` in integer arithmetic.
/// An inexact step, or a mismatch at one of two holdout points outside the
/// grid, means the stated bounds were too small.
pub fn bipoly_det(m: &BiPolyMatrix, deg_u: usize, deg_t: usize) -> Result<BiPoly> {
    let u0 = -(deg_u as i64 / 2);
    let t0 = -(deg_t as i64 / 2);
    let holdouts = [
        (u0 + deg_u as i64 + 1, t0 + deg_t as i64 + 1),
        (u0 - 1, t0 - 1),
    ];
    let fail = |(u, t): (i64, i64)| Error::BoundViolation { u, t, deg_u, deg_t };

    let per_u: Vec<Vec<BigInt>> = (0..=deg_u as i64)
        .into_par_iter()
        .map(|i| {
            let u = BigInt::from(u0 + i);
            let in_t: Vec<Vec<BigInt>> = m.entries.iter().map(|p| p.t_coeffs_at(&u)).collect();
            let ys: Vec<BigInt> = (0..=deg_t as i64)
                .map(|j| {
                    let t = BigInt::from(t0 + j);
                    let rows = (0..m.n)
                        .map(|r| in_t[r * m.n..(r + 1) * m.n].iter().map(|c| horner(c, &t)).collect())
                        .collect();
                    bareiss_det(rows)
                })
                .collect();
            interpolate_consecutive(t0, &ys).ok_or_else(|| fail(holdouts[0]))
        })
        .collect::<Result<_>>()?;

    let mut out = BiPoly::zero();
    for k in 0..=deg_t {
        let ys: Vec<BigInt> = per_u.iter().map(|p| p.get(k).cloned().unwrap_or_default()).collect();
        let in_u = interpolate_consecutive(u0, &ys).ok_or_else(|| fail(holdouts[0]))?;
        for (j, c) in in_u.into_iter().enumerate() {
            out.add_term(
                Monomial {
                    t: k as u32,
                    u: j as u32,
                },
                c,
            );
        }
    }

    for (u, t) in holdouts {
        let (bu, bt) = (BigInt::from(u), BigInt::from(t));
        if out.eval(&bu, &bt) != bareiss_det(m.eval(&bu, &bt)) {
            return Err(fail((u, t)));
        }
    }
    Ok(out)
}
