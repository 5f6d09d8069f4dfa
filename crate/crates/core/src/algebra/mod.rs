//! Exact arithmetic foundation: Gaussian rationals, sparse polynomials and
//! rational linear algebra.

pub mod gaussian;
pub mod matrix;
pub mod poly;

pub use gaussian::{fmt_rational, gq_arith, parse_rational, ArithOp, GaussianRational};
pub use matrix::{all_signed_permutations, cayley_orthogonal, signed_permutation, OrthogonalMatrix, RationalMatrix};
pub use poly::{Exponents, MultiPoly, Universe, DEFAULT_DEGREE_CAP};
