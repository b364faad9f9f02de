//! Generalized joins `H[X_1, ..., X_r]`: replace vertex `i` of `H` by `X_i`
//! and connect all of `V(X_i)` to all of `V(X_j)` whenever `ij` is an edge
//! of `H`.
//!
//! With regular components the cells `V(X_i)` form an equitable partition
//! whose quotient has `k_i` on the diagonal and `A(H)_ij n_j` off it, and the
//! deletion factor splits into one factor per component.

use num::{BigInt, One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::bipoly::{BiPoly, BiPolyMatrix};
use crate::decomposition::factor_char_poly;
use crate::error::{Error, Result};
use crate::graph::SignedDigraph;
use crate::matrix::{rat, Matrix, Rational};
use crate::partition::{check_equitable, Partition, QuotientMatrix};
use crate::poly::{poly_matrix_det, UniPoly};
use crate::zeta::{apply_s1_power, bartholdi_reciprocal, dz_entry, zeta_matrix};

/// `H` together with one regular component per vertex of `H`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinSpec {
    h: SignedDigraph,
    components: Vec<SignedDigraph>,
    degrees: Vec<usize>,
}

fn require_simple_undirected(g: &SignedDigraph, what: &str) -> Result<()> {
    if !g.is_undirected() || !g.is_simple() {
        return Err(Error::Validation(format!(
            "{what} must be a simple undirected graph"
        )));
    }
    Ok(())
}

fn require_shape(h: &SignedDigraph, components: &[SignedDigraph]) -> Result<()> {
    require_simple_undirected(h, "H")?;
    if components.len() != h.vertex_count() {
        return Err(Error::DimensionMismatch {
            op: "join",
            detail: format!(
                "{} components for an H with {} vertices",
                components.len(),
                h.vertex_count()
            ),
        });
    }
    for (i, c) in components.iter().enumerate() {
        if c.vertex_count() == 0 {
            return Err(Error::Validation(format!("component {} is empty", i + 1)));
        }
        require_simple_undirected(c, &format!("component {}", i + 1))?;
    }
    Ok(())
}

impl JoinSpec {
    /// Validates `h` and the components; every component must be regular.
    pub fn new(h: SignedDigraph, components: Vec<SignedDigraph>) -> Result<Self> {
        require_shape(&h, &components)?;
        let mut degrees = Vec::with_capacity(components.len());
        for (i, c) in components.iter().enumerate() {
            let deg = c.degrees();
            if let Some(v) = deg.iter().position(|d| *d != deg[0]) {
                return Err(Error::Validation(format!(
                    "component {} is not regular: vertex {} has degree {} but vertex 1 has degree {}",
                    i + 1,
                    v + 1,
                    deg[v],
                    deg[0]
                )));
            }
            degrees.push(deg[0].to_integer().try_into().expect("degree fits in usize"));
        }
        Ok(JoinSpec { h, components, degrees })
    }

    pub fn h(&self) -> &SignedDigraph {
        &self.h
    }

    pub fn components(&self) -> &[SignedDigraph] {
        &self.components
    }

    /// `k_i`.
    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    /// `n_i`.
    pub fn sizes(&self) -> Vec<usize> {
        self.components.iter().map(|c| c.vertex_count()).collect()
    }

    /// `N_i = sum_{j != i} A(H)_ij n_j`, the number of neighbours a vertex of
    /// `X_i` has outside `X_i`.
    pub fn outside_degrees(&self) -> Vec<usize> {
        let n = self.sizes();
        (0..n.len())
            .map(|i| {
                (0..n.len())
                    .filter(|&j| j != i && !self.h.entry(i, j).is_zero())
                    .map(|j| n[j])
                    .sum()
            })
            .collect()
    }
}

fn assemble(h: &SignedDigraph, components: &[SignedDigraph]) -> Result<(SignedDigraph, Partition)> {
    let sizes: Vec<usize> = components.iter().map(|c| c.vertex_count()).collect();
    let mut offsets = vec![0];
    for s in &sizes {
        offsets.push(offsets.last().unwrap() + s);
    }
    let total = offsets[sizes.len()];
    let mut owner = vec![0; total];
    for i in 0..sizes.len() {
        owner[offsets[i]..offsets[i + 1]].fill(i);
    }
    let a = Matrix::from_fn(total, total, |v, w| {
        let (i, j) = (owner[v], owner[w]);
        if i == j {
            components[i].entry(v - offsets[i], w - offsets[i]).clone()
        } else {
            h.entry(i, j).clone()
        }
    });
    let cells = (0..sizes.len())
        .map(|i| (offsets[i]..offsets[i + 1]).collect())
        .collect();
    Ok((SignedDigraph::from_adjacency(a)?, Partition::new(total, cells)?))
}

/// The joined graph and the partition into component vertex sets.
pub fn build_join(spec: &JoinSpec) -> Result<(SignedDigraph, Partition)> {
    assemble(&spec.h, &spec.components)
}

/// Closed form: `k_i` on the diagonal, `A(H)_ij n_j` off it.
pub fn join_quotient(spec: &JoinSpec) -> QuotientMatrix {
    let n = spec.sizes();
    let m = Matrix::from_fn(n.len(), n.len(), |i, j| {
        if i == j {
            rat(spec.degrees[i] as i64)
        } else {
            spec.h.entry(i, j) * rat(n[j] as i64)
        }
    });
    QuotientMatrix::from_closed_form(m)
}

/// Diagonal of `Δ(x)`: `(x - alpha k_i - d_i) / n_i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DeltaMatrix {
    pub diagonal: Vec<UniPoly>,
}

/// Both closed forms of `φ(alpha A(X) + D)` for a join, `D` constant `d_i`
/// on `V(X_i)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinCharPoly {
    /// `φ(alpha A(X/pi) + diag(d)) · prod component_factors`.
    pub via_quotient: UniPoly,
    /// `det(-alpha A(H) + Δ(x)) · prod n_i · component_factors`.
    pub via_h_form: UniPoly,
    pub quotient_factor: UniPoly,
    pub h_form_det: UniPoly,
    pub delta: DeltaMatrix,
    /// `φ(alpha A(X_i) + d_i I) / (x - alpha k_i - d_i)`.
    pub component_factors: Vec<UniPoly>,
}

fn cell_eigenvalue(spec: &JoinSpec, alpha: &Rational, d: &[Rational], i: usize) -> Rational {
    alpha * rat(spec.degrees[i] as i64) + &d[i]
}

/// Evaluates both closed forms and checks each against the characteristic
/// polynomial of the assembled `alpha A(X) + D`.
pub fn join_char_poly(spec: &JoinSpec, alpha: &Rational, d: &[Rational]) -> Result<JoinCharPoly> {
    let r = spec.components.len();
    if d.len() != r {
        return Err(Error::DimensionMismatch {
            op: "join_char_poly",
            detail: format!("{} diagonal values for {r} components", d.len()),
        });
    }
    let n = spec.sizes();

    let component_factors = spec
        .components
        .par_iter()
        .enumerate()
        .map(|(i, c)| {
            let shifted = &c.adjacency().scale(alpha) + &Matrix::identity(n[i]).scale(&d[i]);
            shifted
                .char_poly()?
                .div_exact(&UniPoly::x_minus(cell_eigenvalue(spec, alpha, d, i)))
                .map_err(|e| Error::Consistency(format!("component {}: {e}", i + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    let components_product: UniPoly = component_factors.iter().product();

    let q = join_quotient(spec);
    let quotient_factor = (&q.scale(alpha) + &Matrix::diagonal(d)).char_poly()?;
    let via_quotient = &quotient_factor * &components_product;

    let delta = DeltaMatrix {
        diagonal: (0..r)
            .map(|i| {
                UniPoly::x_minus(cell_eigenvalue(spec, alpha, d, i))
                    .scale(&Rational::new(BigInt::one(), BigInt::from(n[i])))
            })
            .collect(),
    };
    let h_form: Vec<Vec<UniPoly>> = (0..r)
        .map(|i| {
            (0..r)
                .map(|j| {
                    let off = UniPoly::constant(-(alpha * spec.h.entry(i, j)));
                    if i == j {
                        &off + &delta.diagonal[i]
                    } else {
                        off
                    }
                })
                .collect()
        })
        .collect();
    let h_form_det = poly_matrix_det(&h_form)?;
    let size_product = rat(n.iter().product::<usize>() as i64);
    let via_h_form = &h_form_det.scale(&size_product) * &components_product;

    let direct = {
        let (x, pi) = build_join(spec)?;
        let cell_diag: Vec<Rational> = d.to_vec();
        crate::partition::shifted_matrix(&x, &pi, alpha, &cell_diag)?.char_poly()?
    };
    for (name, value) in [("quotient form", &via_quotient), ("H form", &via_h_form)] {
        if *value != direct {
            return Err(Error::Consistency(format!(
                "join {name} gives {value} but the assembled matrix has {direct}"
            )));
        }
    }
    Ok(JoinCharPoly {
        via_quotient,
        via_h_form,
        quotient_factor,
        h_form_det,
        delta,
        component_factors,
    })
}

/// Both closed forms of `Z(u, t)^{-1}` for a join.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JoinZeta {
    pub via_quotient: BiPoly,
    pub via_h_form: BiPoly,
    /// `γ_i = -t k_i + s1 + s2 d_i(X)`.
    pub gamma: Vec<BiPoly>,
    pub s1_exponent: i64,
    /// `det(-t A(X/pi) + diag(d^Z_i(X)))`.
    pub quotient_factor: BiPoly,
    /// `det(diag(n) (-t A(H) + Δ))`, with `Δ_ii = γ_i / n_i`.
    pub h_form_det: BiPoly,
    /// `det(-t A(X_i) + d^Z_i(X) I) / γ_i`.
    pub component_factors: Vec<BiPoly>,
}

/// `γ_i` written as `1 - t k_i + (1 - u)(k_i + N_i - 1 + u) t^2`.
pub fn gamma_expanded(k: usize, outside: usize) -> BiPoly {
    let u = BiPoly::u();
    let t = BiPoly::t();
    let one = BiPoly::one();
    let lin = &(&BiPoly::constant((k + outside) as i64) - &one) + &u;
    let quad = &(&(&one - &u) * &lin) * &t.pow(2);
    &(&one - &t.scale(&BigInt::from(k))) + &quad
}

/// `γ_i` written as `-t k_i + s1 + s2 (k_i + N_i)`.
pub fn gamma_from_dz(k: usize, outside: usize) -> BiPoly {
    &dz_entry(&BigInt::from(k + outside)) - &BiPoly::t().scale(&BigInt::from(k))
}

/// `I - t A(X_i) + (1 - u)(F - (1 - u) I) t^2` with `F = D(X_i) + N_i I`.
pub fn component_zeta_matrix_substituted(component: &SignedDigraph, outside: usize) -> BiPolyMatrix {
    let one_minus_u = &BiPoly::one() - &BiPoly::u();
    let t2 = BiPoly::t().pow(2);
    let deg = component.degrees();
    BiPolyMatrix::from_fn(component.vertex_count(), |v, w| {
        let adj = BiPoly::t().scale(&-component.entry(v, w).to_integer());
        if v == w {
            let f = BiPoly::monomial(deg[v].to_integer() + BigInt::from(outside), 0, 0);
            let corr = &(&one_minus_u * &(&f - &one_minus_u)) * &t2;
            &(&BiPoly::one() + &adj) + &corr
        } else {
            adj
        }
    })
}

/// `-t A(X_i) + d^Z_i(X) I`.
pub fn component_zeta_matrix(component: &SignedDigraph, k: usize, outside: usize) -> BiPolyMatrix {
    let dz = vec![dz_entry(&BigInt::from(k + outside)); component.vertex_count()];
    zeta_matrix(component.adjacency(), &dz)
}

/// `ρ'_ij = -t A(H)_ij + δ_ij γ_i / n_i` at a rational point.
fn rho_prime(spec: &JoinSpec, gamma: &[BiPoly], u: &Rational, t: &Rational) -> Matrix {
    let n = spec.sizes();
    Matrix::from_fn(n.len(), n.len(), |i, j| {
        let off = -(t * spec.h.entry(i, j));
        if i == j {
            off + gamma[i].eval_rational(u, t) / rat(n[i] as i64)
        } else {
            off
        }
    })
}

/// Checks `det((ρ'_ij n_j)) = (prod n_i) det((ρ'_ij))` at every given point.
/// Returns the first failing point.
pub fn check_scaling_identity(
    spec: &JoinSpec,
    points: &[(Rational, Rational)],
) -> Result<Option<(Rational, Rational)>> {
    let n = spec.sizes();
    let gamma: Vec<BiPoly> = (0..n.len())
        .map(|i| gamma_from_dz(spec.degrees[i], spec.outside_degrees()[i]))
        .collect();
    let size_product = rat(n.iter().product::<usize>() as i64);
    for (u, t) in points {
        let rho = rho_prime(spec, &gamma, u, t);
        let scaled = Matrix::from_fn(n.len(), n.len(), |i, j| &rho[(i, j)] * rat(n[j] as i64));
        if scaled.det()? != &size_product * rho.det()? {
            return Ok(Some((u.clone(), t.clone())));
        }
    }
    Ok(None)
}

/// Evaluates both closed forms of the zeta reciprocal and checks them, the
/// two expressions for `γ_i`, and the substituted component matrices
/// against direct computation on the assembled join.
pub fn join_zeta_reciprocal(spec: &JoinSpec) -> Result<JoinZeta> {
    let (x, pi) = build_join(spec)?;
    let direct = bartholdi_reciprocal(&x)?;
    let r = spec.components.len();
    let n = spec.sizes();
    let outside = spec.outside_degrees();
    let k = &spec.degrees;

    let gamma: Vec<BiPoly> = (0..r).map(|i| gamma_from_dz(k[i], outside[i])).collect();
    for i in 0..r {
        let other = gamma_expanded(k[i], outside[i]);
        if other != gamma[i] {
            return Err(Error::Consistency(format!(
                "gamma_{} is {} from d^Z but {other} expanded",
                i + 1,
                gamma[i]
            )));
        }
    }

    let component_factors = (0..r)
        .into_par_iter()
        .map(|i| {
            let c = &spec.components[i];
            let m = component_zeta_matrix(c, k[i], outside[i]);
            if m != component_zeta_matrix_substituted(c, outside[i]) {
                return Err(Error::Consistency(format!(
                    "component {}: substituting D(X_i) + N_i I does not reproduce -t A(X_i) + d^Z_i I",
                    i + 1
                )));
            }
            m.det()?
                .div_exact(&gamma[i])
                .map_err(|e| Error::Consistency(format!("component {}: {e}", i + 1)))
        })
        .collect::<Result<Vec<_>>>()?;
    let components_product: BiPoly = component_factors.iter().cloned().product();

    let q = join_quotient(spec);
    let x_degrees = x.degrees();
    let cell_dz: Vec<BiPoly> = pi
        .cells()
        .iter()
        .map(|c| dz_entry(&x_degrees[c[0]].to_integer()))
        .collect();
    let quotient_factor = zeta_matrix(&q, &cell_dz).det()?;

    let h_form_det = BiPolyMatrix::from_fn(r, |i, j| {
        if i == j {
            gamma[i].clone()
        } else {
            BiPoly::t().scale(&-(spec.h.entry(i, j).to_integer() * BigInt::from(n[i])))
        }
    })
    .det()?;

    let s1_exponent = direct.edges as i64 - direct.vertices as i64;
    let via_quotient = apply_s1_power(&quotient_factor * &components_product, s1_exponent)?;
    let via_h_form = apply_s1_power(&h_form_det * &components_product, s1_exponent)?;
    for (name, value) in [("quotient form", &via_quotient), ("H form", &via_h_form)] {
        if *value != direct.value {
            return Err(Error::Consistency(format!(
                "join zeta {name} gives {value} but the assembled graph has {}",
                direct.value
            )));
        }
    }
    Ok(JoinZeta {
        via_quotient,
        via_h_form,
        gamma,
        s1_exponent,
        quotient_factor,
        h_form_det,
        component_factors,
    })
}

/// `φ(A(X)) = φ(A(X/pi)) · prod φ(A(X_i \ pi_i))` for a join whose
/// components carry their own equitable partitions.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TeranishiFactors {
    pub quotient_factor: UniPoly,
    pub component_deletion_factors: Vec<UniPoly>,
    /// The concatenated partition of the joined graph.
    #[serde(skip)]
    pub partition: Partition,
}

impl TeranishiFactors {
    pub fn product(&self) -> UniPoly {
        &self.quotient_factor * &self.component_deletion_factors.iter().product::<UniPoly>()
    }
}

/// Components may be irregular; each `pis[i]` must be equitable for `X_i`.
/// Checks both product forms against `φ(A(X))`.
pub fn teranishi_factor(
    h: &SignedDigraph,
    components: &[SignedDigraph],
    pis: &[Partition],
) -> Result<TeranishiFactors> {
    require_shape(h, components)?;
    if pis.len() != components.len() {
        return Err(Error::DimensionMismatch {
            op: "teranishi_factor",
            detail: format!("{} partitions for {} components", pis.len(), components.len()),
        });
    }
    let per_component = components
        .par_iter()
        .zip(pis.par_iter())
        .enumerate()
        .map(|(i, (c, p))| {
            let wrap = |e: Error| Error::Validation(format!("component {}: {e}", i + 1));
            let f = factor_char_poly(c.adjacency(), p).map_err(wrap)?;
            let ratio = c
                .adjacency()
                .char_poly()?
                .div_exact(&f.quotient)
                .map_err(|e| Error::Consistency(format!("component {}: {e}", i + 1)))?;
            if ratio != f.deletion {
                return Err(Error::Consistency(format!(
                    "component {}: deletion factor {} differs from φ(A(X_i))/φ(A(X_i/pi_i)) = {ratio}",
                    i + 1,
                    f.deletion
                )));
            }
            Ok(f.deletion)
        })
        .collect::<Result<Vec<_>>>()?;

    let (x, _) = assemble(h, components)?;
    let mut cells = Vec::new();
    let mut reps = Vec::new();
    let mut offset = 0;
    for (c, p) in components.iter().zip(pis) {
        for (cell, &rep) in p.cells().iter().zip(p.reps()) {
            cells.push(cell.iter().map(|v| v + offset).collect::<Vec<_>>());
            reps.push(rep + offset);
        }
        offset += c.vertex_count();
    }
    let partition = Partition::new(offset, cells)?.with_reps(reps)?;
    let q = check_equitable(x.adjacency(), &partition)?;
    let factors = TeranishiFactors {
        quotient_factor: q.char_poly()?,
        component_deletion_factors: per_component,
        partition,
    };
    let direct = x.adjacency().char_poly()?;
    if factors.product() != direct {
        return Err(Error::Consistency(format!(
            "Teranishi product {} differs from φ(A(X)) = {direct}",
            factors.product()
        )));
    }
    Ok(factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    fn k2_over_k2_and_2k1() -> JoinSpec {
        JoinSpec::new(families::complete(2), vec![families::complete(2), families::edgeless(2)]).unwrap()
    }

    #[test]
    fn quotient_matches_assembled_graph() {
        let spec = k2_over_k2_and_2k1();
        let (x, pi) = build_join(&spec).unwrap();
        assert_eq!(*join_quotient(&spec), Matrix::from_i64_rows(&[[1, 2], [2, 0]]));
        assert_eq!(*check_equitable(x.adjacency(), &pi).unwrap(), *join_quotient(&spec));
    }

    #[test]
    fn k22_is_c4() {
        let spec = JoinSpec::new(families::complete(2), vec![families::edgeless(2); 2]).unwrap();
        let (x, _) = build_join(&spec).unwrap();
        assert_eq!(x.canonicalize(), families::complete_bipartite(2, 2).canonicalize());
        assert_eq!(*join_quotient(&spec), Matrix::from_i64_rows(&[[0, 2], [2, 0]]));
    }

    #[test]
    fn single_component_join_is_the_component() {
        let spec = JoinSpec::new(SignedDigraph::empty(1), vec![families::cycle(4)]).unwrap();
        let (x, pi) = build_join(&spec).unwrap();
        assert_eq!(x, families::cycle(4));
        assert_eq!(pi.cell_count(), 1);
        assert_eq!(*join_quotient(&spec), Matrix::from_i64_rows(&[[2]]));
        let f = join_char_poly(&spec, &rat(1), &[rat(0)]).unwrap();
        assert_eq!(f.quotient_factor, UniPoly::from_roots(&[2]));
        assert_eq!(f.component_factors[0], UniPoly::from_roots(&[0, 0, -2]));
    }

    #[test]
    fn irregular_component_named() {
        let err = JoinSpec::new(SignedDigraph::empty(1), vec![families::path(3)]).unwrap_err();
        let msg = err.to_string();
        assert!(msg.contains("component 1") && msg.contains("vertex 2"), "{msg}");
    }

    #[test]
    fn adjacency_char_poly_of_small_join() {
        // (x^2 - x - 4)(x + 1) x
        let spec = k2_over_k2_and_2k1();
        let f = join_char_poly(&spec, &rat(1), &[rat(0), rat(0)]).unwrap();
        let expected = &(&UniPoly::from_i64(&[-4, -1, 1]) * &UniPoly::from_roots(&[-1])) * &UniPoly::x();
        assert_eq!(f.via_quotient, expected);
        assert_eq!(f.via_h_form, expected);
    }

    #[test]
    fn laplacian_case_matches_direct_laplacian() {
        let spec = k2_over_k2_and_2k1();
        let (x, _) = build_join(&spec).unwrap();
        let d = vec![rat(3), rat(2)];
        let f = join_char_poly(&spec, &rat(-1), &d).unwrap();
        let lap = &x.degree_matrix() - x.adjacency();
        assert_eq!(f.via_quotient, lap.char_poly().unwrap());
    }

    #[test]
    fn wrong_diagonal_length() {
        assert!(join_char_poly(&k2_over_k2_and_2k1(), &rat(1), &[rat(0)]).is_err());
    }

    #[test]
    fn gamma_at_u_equal_one() {
        assert_eq!(gamma_expanded(3, 4).specialize_u(1), UniPoly::from_i64(&[1, -3]));
        assert_eq!(gamma_from_dz(3, 4), gamma_expanded(3, 4));
    }

    #[test]
    fn k22_zeta_is_c4_zeta() {
        let spec = JoinSpec::new(families::complete(2), vec![families::edgeless(2); 2]).unwrap();
        let z = join_zeta_reciprocal(&spec).unwrap();
        assert_eq!(z.via_quotient, bartholdi_reciprocal(&families::cycle(4)).unwrap().value);
    }

    #[test]
    fn scaling_identity_on_grid() {
        let spec = k2_over_k2_and_2k1();
        let pts: Vec<_> = (0..3)
            .flat_map(|u| (0..3).map(move |t| (crate::matrix::ratio(u, 2), crate::matrix::ratio(t, 3))))
            .collect();
        assert_eq!(check_scaling_identity(&spec, &pts).unwrap(), None);
    }

    #[test]
    fn teranishi_with_irregular_component() {
        let pi1 = Partition::new(3, vec![vec![0, 2], vec![1]]).unwrap();
        let f = teranishi_factor(
            &families::complete(2),
            &[families::path(3), SignedDigraph::empty(1)],
            &[pi1, Partition::trivial(1)],
        )
        .unwrap();
        assert_eq!(f.component_deletion_factors[0], UniPoly::x());
        assert_eq!(f.component_deletion_factors[1], UniPoly::one());
    }

    #[test]
    fn teranishi_rejects_non_equitable_component() {
        let bad = Partition::new(3, vec![vec![0, 1], vec![2]]).unwrap();
        let err = teranishi_factor(&SignedDigraph::empty(1), &[families::path(3)], &[bad]).unwrap_err();
        assert!(err.to_string().contains("component 1"));
    }
}
