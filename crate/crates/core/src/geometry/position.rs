use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::frame::{affine_rank, differences};
use super::{GeometryError, VPolytope};
use crate::linalg::{det_int, int_to_rat, rank, span_lattice_basis, IntMatrix, RatMatrix, Rational};

/// First `k` coordinates of `p`.
pub fn project(p: &[Rational], k: usize) -> Result<Vec<Rational>, GeometryError> {
    if k > p.len() {
        return Err(GeometryError::DepthTooLarge { k, ambient: p.len() });
    }
    Ok(p[..k].to_vec())
}

/// Whether the lattice points of the affine hull project onto all of
/// `Z^m`, `m` being the hull's dimension, under the first `m` coordinates.
pub fn is_affinely_integral(points: &[Vec<BigInt>]) -> bool {
    let Some(first) = points.first() else { return true };
    let rational: Vec<Vec<Rational>> = points.iter().map(|p| p.iter().map(int_to_rat).collect()).collect();
    let lattice = match span_lattice_basis(&differences(&rational), first.len()) {
        Ok(l) => l,
        Err(_) => return false,
    };
    let m = lattice.rows();
    if m == 0 {
        return true;
    }
    let leading: Vec<Vec<BigInt>> = lattice.row_iter().map(|r| r[..m].to_vec()).collect();
    let square = IntMatrix::from_rows(m, leading).expect("square block");
    det_int(&square).map(|d| d.abs().is_one()).unwrap_or(false)
}

/// Whether the first `m` coordinates, `m` the hull's dimension, restrict
/// to a surjection on the affine hull.
pub fn is_in_general_position(points: &[Vec<Rational>]) -> bool {
    let m = affine_rank(points);
    if m == 0 {
        return true;
    }
    let leading: Vec<Vec<Rational>> = differences(points).into_iter().map(|d| d[..m].to_vec()).collect();
    rank(&RatMatrix::from_rows(m, leading).expect("equal widths")) == m
}

/// First edge whose endpoints share their first coordinate.
pub(crate) fn first_parallel_edge(p: &VPolytope) -> Result<Option<(usize, usize)>, GeometryError> {
    let edges = p.edges().ok_or(GeometryError::MissingEdges)?;
    let v = p.vertices();
    Ok(edges.iter().copied().find(|&(a, b)| v[a][0] == v[b][0]))
}

/// Faces of dimension ≤ `k` in general position; only `k ≤ 1` is supported.
pub fn is_k_general_position(p: &VPolytope, k: usize) -> Result<bool, GeometryError> {
    match k {
        0 => Ok(true),
        1 => Ok(first_parallel_edge(p)?.is_none()),
        _ => Err(GeometryError::UnsupportedDepth(k)),
    }
}
