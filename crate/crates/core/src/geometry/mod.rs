//! Polytope geometry over exact rationals.
//!
//! The volume engine slices a polytope by the integer hyperplanes
//! `x₁ = y` and sums the lattice volumes of the slices. It works in a
//! [`LatticeChart`], an integral affine coordinate system on the affine hull
//! in which the polytope is full-dimensional and the first coordinate is the
//! chosen slicing functional. [`triangulation_oracle`] computes the same
//! volume without slicing, from a facet description and a pulling
//! triangulation.

mod chart;
mod frame;
mod hull;
mod oracle;
mod polytope;
mod position;
mod slicing;
mod triangulate;

pub use chart::{build_lattice_chart, LatticeChart};
pub use hull::{facets, Facet, HullLimits};
pub use oracle::{triangulation_oracle, triangulation_oracle_with};
pub use polytope::{birkhoff_polytope, Point, VPolytope};
pub use position::{is_affinely_integral, is_in_general_position, is_k_general_position, project};
pub use slicing::{slice_at, volume_by_slicing, SliceRecord, SlicingSpace, SlicingVolume};
pub use triangulate::{relative_volume, volume_in_dimension};

use num_bigint::BigInt;
use thiserror::Error;

use crate::linalg::LinalgError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("polytope has no vertices")]
    Empty,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("vertex {0} is listed twice")]
    DuplicateVertex(usize),
    #[error("vertex {0} is not extreme")]
    NotExtreme(usize),
    #[error("edge ({0}, {1}) references a missing vertex")]
    EdgeIndex(usize, usize),
    #[error("edge ({0}, {1}) joins a vertex to itself")]
    DegenerateEdge(usize, usize),
    #[error("projection depth {k} exceeds ambient dimension {ambient}")]
    DepthTooLarge { k: usize, ambient: usize },
    #[error("slicing depth {0} is not supported; only k = 1 is implemented")]
    UnsupportedDepth(usize),
    #[error("an edge list is required")]
    MissingEdges,
    #[error("vertex {index} {coords} is not integral")]
    NonIntegralVertex { index: usize, coords: String },
    #[error("slicing functional is not primitive on the polytope's lattice (gcd {gcd})")]
    NonPrimitiveFunctional { gcd: BigInt },
    #[error("point is not in the affine hull")]
    NotInAffineHull,
    #[error("polytope has dimension {dim} in R^{ambient}; a full-dimensional polytope is required")]
    NotFullDimensional { dim: usize, ambient: usize },
    #[error("polytope dimension {dim} is too small for slicing (need at least 2)")]
    DegenerateDimension { dim: usize },
    #[error("not in 1-general position: edge {from} -- {to} (vertex indices {}, {}) is parallel to the slicing hyperplanes", edge.0, edge.1)]
    GeneralPosition { edge: (usize, usize), from: String, to: String },
    #[error("{what} is {found}, above the limit of {limit}")]
    CapExceeded { what: &'static str, limit: usize, found: usize },
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

pub(crate) fn fmt_point(p: &[crate::linalg::Rational]) -> String {
    let parts: Vec<String> = p.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(", "))
}
