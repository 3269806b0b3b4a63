//! Exact scalar and matrix arithmetic.
//!
//! Everything here works over arbitrary-precision integers and reduced
//! fractions. There is no floating point anywhere in the crate; the
//! geometry and verification layers build on the primitives below.

mod hnf;
mod lattice;
mod matrix;
mod rational;

pub use hnf::{hnf, Hnf};
pub use lattice::{clear_denominators, coordinates_in_basis, integer_kernel, left_inverse, span_lattice_basis};
pub use matrix::{det_exact, det_int, inverse, nullspace, rank, solve_exact, IntMatrix, Matrix, RatMatrix};
pub use rational::{fmt_fraction, int_to_rat, parse_rational, rat, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("matrix is {rows}x{cols}, expected a square matrix")]
    NotSquare { rows: usize, cols: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is singular")]
    Singular,
    #[error("row {row} has {found} entries, expected {expected}")]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("cannot parse {0:?} as a rational number")]
    Parse(String),
}
