//! Exact tools for slicing Birkhoff polytopes.
//!
//! * [`linalg`]: rationals, determinants, Hermite normal form, lattices.
//! * [`birkhoff`]: vertices, edge directions and signed cycles of `B_n`.
//! * [`slicing_basis`]: the slicing matrix `V_n` and the unimodular change
//!   of basis that puts `B_n` into 1-general position.
//! * [`geometry`]: general position and integrality tests, lattice charts,
//!   volume by integer hyperplane slicing, and an independent triangulation
//!   oracle.
//! * [`cli`]: the `birkslice` command surface.

pub mod birkhoff;
pub mod cli;
pub mod geometry;
pub mod linalg;
pub mod slicing_basis;
