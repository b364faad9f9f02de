//! Exact quotient/deletion factorizations for equitably partitioned graphs.
//!
//! For an equitable pair `(M, pi)` the characteristic polynomial splits as
//! `φ(M) = φ(M/pi) · φ(M \ pi)`: the quotient matrix over the cells times a
//! deletion matrix obtained by subtracting, from every non-representative
//! row, the row of its cell representative. The same similarity transform
//! factors Laplacian polynomials and Bartholdi zeta reciprocals, and for
//! generalized joins of regular graphs gives closed forms in terms of the
//! components.
//!
//! All arithmetic is exact: rationals and integers are arbitrary precision,
//! and every factorization is checked against an independent direct
//! computation before it is returned.
//!
//! Runnable walkthroughs live in `examples/`; `cargo run --example c4_golden`
//! is a good first stop.

pub mod bipoly;
pub mod cli;
pub mod decomposition;
pub mod error;
pub mod families;
pub mod graph;
pub mod join;
pub mod matrix;
pub mod partition;
pub mod poly;
pub mod zeta;

pub use bipoly::{bipoly_det, BiPoly, BiPolyMatrix};
pub use decomposition::{
    deletion_graph, deletion_matrix, factor_char_poly, laplacian_factors, similarity_transform,
    CharPolyFactors, DeletionResult, TriangularForm,
};
pub use error::{Error, Result};
pub use graph::{Edge, Sign, SignedDigraph, VertexId};
pub use matrix::{rat, ratio, Matrix, Rational};
pub use partition::{
    check_equitable, coarsest_equitable, quotient_of_shifted, Partition, QuotientMatrix,
};
pub use poly::UniPoly;
