//! Lattice volume from a facet description and a pulling triangulation.
//!
//! A face is triangulated by coning its first point over the triangulations
//! of those of its facets that miss that point. Facets of a face `G` are the
//! sets `G ∩ F`, `F` a facet of the polytope, of affine dimension one less.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::frame::{affine_rank, LatticeFrame};
use super::hull::facets;
use super::{GeometryError, HullLimits, VPolytope};
use crate::linalg::{det_exact, RatMatrix, Rational};


struct Pulling<'a> {
    coords: &'a [Vec<Rational>],
    facets: &'a [Vec<usize>],
    memo: BTreeMap<Vec<usize>, Vec<Vec<usize>>>,
}

impl Pulling<'_> {
    /// Simplices of a triangulation of the face spanned by `face` (sorted
    /// point indices, affine dimension `dim`).
    fn triangulate(&mut self, face: &[usize], dim: usize) -> Vec<Vec<usize>> {
        if dim == 0 {
            return vec![vec![face[0]]];
        }
        if let Some(done) = self.memo.get(face) {
            return done.clone();
        }
        let apex = face[0];
        let mut result = Vec::new();
        for sub in self.subfaces(face, dim) {
            if sub.contains(&apex) {
                continue;
            }
            for mut simplex in self.triangulate(&sub, dim - 1) {
                simplex.push(apex);
                result.push(simplex);
            }
        }
        self.memo.insert(face.to_vec(), result.clone());
        result
    }

    fn subfaces(&self, face: &[usize], dim: usize) -> Vec<Vec<usize>> {
        let mut found: Vec<Vec<usize>> = Vec::new();
        for f in self.facets {
            let meet: Vec<usize> = face.iter().copied().filter(|i| f.binary_search(i).is_ok()).collect();
            if meet.len() < dim || meet.len() == face.len() || found.contains(&meet) {
                continue;
            }
            let pts: Vec<Vec<Rational>> = meet.iter().map(|&i| self.coords[i].clone()).collect();
            if affine_rank(&pts) == dim - 1 {
                found.push(meet);
            }
        }
        found
    }
}

fn simplex_det(coords: &[Vec<Rational>], simplex: &[usize]) -> Rational {
    let base = &coords[simplex[0]];
    let rows: Vec<Vec<Rational>> =
        simplex[1..].iter().map(|&i| coords[i].iter().zip(base).map(|(a, b)| a - b).collect()).collect();
    det_exact(&RatMatrix::from_rows(base.len(), rows).expect("square")).expect("square").abs()
}


/// Euclidean volume of a full-dimensional point set in `R^m`, `m ≥ 1`.
fn full_dimensional_volume(coords: &[Vec<Rational>], limits: &HullLimits) -> Result<Rational, GeometryError> {
    let m = coords[0].len();
    let facet_sets: Vec<Vec<usize>> = facets(coords, limits)?.into_iter().map(|f| f.vertices).collect();
    let mut pulling = Pulling { coords, facets: &facet_sets, memo: BTreeMap::new() };
    let all: Vec<usize> = (0..coords.len()).collect();
    let factorial: BigInt = (1..=m).map(BigInt::from).product();
    let sum: Rational = pulling.triangulate(&all, m).iter().map(|s| simplex_det(coords, s)).sum();
    Ok(sum / Rational::from_integer(factorial))
}

/// Volume of `q` relative to the integer lattice of its own affine hull.
///
/// A single point has relative volume 1.
pub fn relative_volume(q: &VPolytope) -> Result<Rational, GeometryError> {
    relative_volume_of(q.vertices(), &HullLimits::default())
}

fn relative_volume_of(points: &[Vec<Rational>], limits: &HullLimits) -> Result<Rational, GeometryError> {
    let frame = LatticeFrame::new(points)?;
    limits.check(frame.dim(), points.len())?;
    if frame.dim() == 0 {
        return Ok(Rational::one());
    }
    full_dimensional_volume(&frame.all_coordinates(points)?, limits)
}

/// Relative volume measured at dimension `dim`: zero when the points span
/// less than `dim` dimensions.
pub fn volume_in_dimension(points: &[Vec<Rational>], dim: usize) -> Result<Rational, GeometryError> {
    if points.is_empty() || affine_rank(points) < dim {
        return Ok(Rational::zero());
    }
    relative_volume_of(points, &HullLimits::default())
}
