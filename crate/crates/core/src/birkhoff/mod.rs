//! Vertices, edge directions and signed cycles of the Birkhoff polytope.
//!
//! `B_n` has the `n!` permutation matrices as vertices. Two vertices span an
//! edge exactly when their difference is a single directed cycle of the
//! complete bipartite graph `K_{n,n}`, so the edge directions are the
//! [`CycleMatrix`] values enumerated by [`enumerate_edge_directions`].

mod cycles;
mod permutation;
mod signed;

pub use cycles::{enumerate_edge_directions, CycleMatrix};
pub use permutation::{adjacent_pairs, are_adjacent, enumerate_vertices, PermutationMatrix};
pub use signed::{
    birkhoff_cycle, check_negative_sum_bound, negative_sum_ceiling, verify_lemma12, verify_negative_sum_bound,
    BirkhoffCycle, CycleElement, NegativeBoundReport, Sign, SignCoherenceReport,
};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BirkhoffError {
    #[error("order must be at least 1")]
    ZeroOrder,
    #[error("order {n} is too small, need at least {min}")]
    OrderTooSmall { n: usize, min: usize },
    #[error("order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("vertices are identical")]
    IdenticalVertices,
    #[error("{0:?} is not a permutation")]
    InvalidPermutation(Vec<usize>),
    #[error("not a cycle matrix: {0}")]
    InvalidCycleMatrix(String),
    #[error("cycle is negative; the bound applies to positive cycles")]
    NegativeCycle,
}
