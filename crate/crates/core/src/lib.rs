//! Exact evaluation of graph partition functions
//! `Z_A(G) = sum over sigma: V -> [m] of prod over edges uv of A[sigma(u)][sigma(v)]`,
//! the Bulatov-Grohe tractability classifier, and executable checks of the
//! algebraic identities around them.
//!
//! The evaluators are generic over [`Scalar`]; the concrete rings are
//! arbitrary-precision integers, rationals and univariate polynomials over
//! the rationals. [`WeightMatrix`] wraps a matrix whose ring is only known
//! at run time.

pub mod connection;
pub mod corpus;
pub mod error;
pub mod evaluator;
pub mod fastpath;
pub mod graph;
pub mod models;
pub mod moebius;
pub mod reductions;
pub mod rings;
pub mod tagged;
pub mod verify;

#[cfg(test)]
mod testutil;

pub use error::{Error, Result};
pub use graph::{glue, DirectedGraph, Hypergraph, LabeledGraph, Multigraph, Pinning, VertexPartition};
pub use rings::{Matrix, Poly, RingKind, RingValue, Scalar};
pub use tagged::{DiagonalWeights, WeightMatrix};

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;

pub type IntMatrix = Matrix<Integer>;
pub type RatMatrix = Matrix<Rational>;
pub type PolyMatrix = Matrix<Poly>;

/// Default cap on the number of configurations a brute-force evaluator
/// will enumerate.
pub const DEFAULT_BUDGET: u64 = 100_000_000;
