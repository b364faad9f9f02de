//! Bartholdi zeta reciprocals as exact polynomials in `u, t`.
//!
//! For a connected undirected graph with `n` vertices and `m` edges,
//! `Z(u, t)^{-1} = s1^(m - n) · det(-t A + D^Z)` where
//! `s1 = 1 - (1 - u)^2 t^2`, `s2 = (1 - u) t^2` and `D^Z = s1 I + s2 D`.

use num::BigInt;
use serde::Serialize;

use crate::bipoly::{BiPoly, BiPolyMatrix};
use crate::decomposition::deletion_graph;
use crate::error::{Error, Result};
use crate::graph::SignedDigraph;
use crate::matrix::{Matrix, Rational};
use crate::partition::{check_equitable, Partition};
use crate::poly::UniPoly;

/// `1 - (1 - u)^2 t^2`.
pub fn s1() -> BiPoly {
    let one_minus_u = &BiPoly::one() - &BiPoly::u();
    &BiPoly::one() - &(&one_minus_u.pow(2) * &BiPoly::t().pow(2))
}

/// `(1 - u) t^2`.
pub fn s2() -> BiPoly {
    &(&BiPoly::one() - &BiPoly::u()) * &BiPoly::t().pow(2)
}

/// `s1 + s2 · degree`.
pub fn dz_entry(degree: &BigInt) -> BiPoly {
    &s1() + &s2().scale(degree)
}

/// Diagonal of `D^Z = s1 I + s2 D(X)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DzMatrix {
    pub diagonal: Vec<BiPoly>,
}

impl DzMatrix {
    pub fn to_matrix(&self) -> BiPolyMatrix {
        BiPolyMatrix::from_fn(self.diagonal.len(), |i, j| {
            if i == j {
                self.diagonal[i].clone()
            } else {
                BiPoly::zero()
            }
        })
    }
}

/// `Z(u, t)^{-1}` together with the edge and vertex counts it came from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaReciprocal {
    pub value: BiPoly,
    pub edges: usize,
    pub vertices: usize,
}

/// `Z^{-1} = s1^s1_exponent · quotient · deletion`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ZetaFactors {
    pub s1_exponent: i64,
    pub quotient: BiPoly,
    pub deletion: BiPoly,
}

impl ZetaFactors {
    /// `s1^e` when `e >= 0`. Trees have `e = -1`, which is not a polynomial.
    pub fn s1_power(&self) -> Result<BiPoly> {
        u32::try_from(self.s1_exponent)
            .map(|e| s1().pow(e))
            .map_err(|_| Error::Validation(format!("s1^{} is not a polynomial", self.s1_exponent)))
    }

    pub fn product(&self) -> Result<BiPoly> {
        apply_s1_power(&self.quotient * &self.deletion, self.s1_exponent)
    }
}

pub(crate) fn apply_s1_power(det: BiPoly, exponent: i64) -> Result<BiPoly> {
    if exponent >= 0 {
        Ok(&s1().pow(exponent as u32) * &det)
    } else {
        det.div_exact(&s1().pow(exponent.unsigned_abs() as u32))
            .map_err(|e| Error::Consistency(format!("s1 does not divide the determinant: {e}")))
    }
}

pub(crate) fn to_int(x: &Rational) -> BigInt {
    debug_assert!(x.is_integer());
    x.to_integer()
}

fn require_zeta_input(x: &SignedDigraph) -> Result<()> {
    if !x.is_undirected() {
        return Err(Error::Validation("zeta functions need an undirected graph".into()));
    }
    if !x.is_unsigned() {
        return Err(Error::Validation("zeta functions need an unsigned graph".into()));
    }
    if x.has_loops() {
        return Err(Error::Validation("zeta functions are not defined here for graphs with loops".into()));
    }
    Ok(())
}

pub fn dz_matrix(x: &SignedDigraph) -> Result<DzMatrix> {
    require_zeta_input(x)?;
    Ok(DzMatrix {
        diagonal: x.degrees().iter().map(|d| dz_entry(&to_int(d))).collect(),
    })
}

/// `-t · adjacency + diag(dz)`.
pub fn zeta_matrix(adjacency: &Matrix, dz: &[BiPoly]) -> BiPolyMatrix {
    BiPolyMatrix::from_fn(dz.len(), |i, j| {
        let off = BiPoly::t().scale(&-to_int(&adjacency[(i, j)]));
        if i == j {
            &off + &dz[i]
        } else {
            off
        }
    })
}

fn require_connected(x: &SignedDigraph) -> Result<()> {
    if x.vertex_count() == 0 || !x.is_connected() {
        return Err(Error::Validation(
            "the determinant formula needs a nonempty connected graph".into(),
        ));
    }
    Ok(())
}

fn counts(x: &SignedDigraph) -> (usize, usize, i64) {
    let m: usize = to_int(&x.undirected_edge_count())
        .try_into()
        .expect("edge count fits in usize");
    let n = x.vertex_count();
    (m, n, m as i64 - n as i64)
}

/// `s1^(m - n) · det(-t A(X) + D^Z(X))`. For a tree the determinant is
/// divided by `s1` exactly.
pub fn bartholdi_reciprocal(x: &SignedDigraph) -> Result<ZetaReciprocal> {
    let dz = dz_matrix(x)?;
    require_connected(x)?;
    let (m, n, e) = counts(x);
    let det = zeta_matrix(x.adjacency(), &dz.diagonal).det()?;
    Ok(ZetaReciprocal {
        value: apply_s1_power(det, e)?,
        edges: m,
        vertices: n,
    })
}

/// Splits `Z^{-1}` into `det(-t A(X/pi) + D^Z(X/pi))` and
/// `det(-t A(X \ pi) + D^Z(X)|_{V'xV'})`, and checks the product against
/// [`bartholdi_reciprocal`].
pub fn zeta_factor(x: &SignedDigraph, pi: &Partition) -> Result<ZetaFactors> {
    let dz = dz_matrix(x)?;
    require_connected(x)?;
    let q = check_equitable(x.adjacency(), pi)?;
    let degrees = x.degrees();
    let cell_dz: Vec<BiPoly> = pi
        .cells()
        .iter()
        .map(|c| dz_entry(&to_int(&degrees[c[0]])))
        .collect();
    let quotient = zeta_matrix(&q, &cell_dz).det()?;

    let del = deletion_graph(x, pi)?;
    let del_dz: Vec<BiPoly> = del.vertices.iter().map(|v| dz.diagonal[v.0].clone()).collect();
    let del_adj = del.graph.expect("deletion_graph always builds the graph");
    let deletion = zeta_matrix(del_adj.adjacency(), &del_dz).det()?;

    let (_, _, e) = counts(x);
    let factors = ZetaFactors {
        s1_exponent: e,
        quotient,
        deletion,
    };
    let direct = bartholdi_reciprocal(x)?.value;
    let product = factors.product()?;
    if product != direct {
        return Err(Error::Consistency(format!(
            "zeta factors multiply to {product} but the direct value is {direct}"
        )));
    }
    Ok(factors)
}

/// `Z(0, t)^{-1}`, the Ihara zeta reciprocal.
pub fn ihara_specialize(z: &ZetaReciprocal) -> UniPoly {
    z.value.specialize_u(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn dz_diagonals() {
        let c4 = dz_matrix(&families::cycle(4)).unwrap();
        assert!(c4.diagonal.iter().all(|d| *d == &s1() + &s2().scale(&2.into())));
        let single = dz_matrix(&SignedDigraph::empty(1)).unwrap();
        assert_eq!(single.diagonal, vec![s1()]);
        let p = dz_matrix(&families::petersen()).unwrap();
        assert!(p.diagonal.iter().all(|d| *d == &s1() + &s2().scale(&3.into())));
    }

    #[test]
    fn directed_or_signed_inputs_rejected() {
        let d = SignedDigraph::build(2, &[crate::graph::Edge::new(0, 1)], false).unwrap();
        assert!(dz_matrix(&d).is_err());
        let s = SignedDigraph::build(2, &[crate::graph::Edge::with_multiplicity(0, 1, -1)], true)
            .unwrap();
        assert!(dz_matrix(&s).is_err());
    }

    #[test]
    fn disconnected_rejected() {
        assert!(matches!(
            bartholdi_reciprocal(&SignedDigraph::empty(2)),
            Err(Error::Validation(_))
        ));
    }

    #[test]
    fn single_edge_is_one_minus_u2_t2() {
        // det = (s1 + s2)^2 - t^2 = s1 (1 - u^2 t^2)
        let z = bartholdi_reciprocal(&families::path(2)).unwrap();
        assert_eq!(z.value, BiPoly::from_terms([(0, 0, 1), (2, 2, -1)]));
        assert_eq!(ihara_specialize(&z), UniPoly::one());
    }

    #[test]
    fn single_vertex_reciprocal_is_one() {
        let z = bartholdi_reciprocal(&SignedDigraph::empty(1)).unwrap();
        assert_eq!(z.value, BiPoly::one());
        assert_eq!(ihara_specialize(&z), UniPoly::one());
    }

    #[test]
    fn c4_ihara() {
        let z = bartholdi_reciprocal(&families::cycle(4)).unwrap();
        let one_minus_t4 = UniPoly::from_i64(&[1, 0, 0, 0, -1]);
        assert_eq!(ihara_specialize(&z), one_minus_t4.pow(2));
    }

    #[test]
    fn singleton_partition_factor() {
        let x = families::cycle(5);
        let f = zeta_factor(&x, &Partition::singletons(5)).unwrap();
        assert_eq!(f.deletion, BiPoly::one());
        assert_eq!(f.s1_power().unwrap(), BiPoly::one());
    }

    #[test]
    fn tree_factor_product() {
        let x = families::path(3);
        let pi = Partition::new(3, vec![vec![0, 2], vec![1]]).unwrap();
        let f = zeta_factor(&x, &pi).unwrap();
        assert_eq!(f.s1_exponent, -1);
        assert!(f.s1_power().is_err());
        assert_eq!(f.product().unwrap(), bartholdi_reciprocal(&x).unwrap().value);
    }
}
