//! Volume as a sum of integer-level slice volumes (k = 1).

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::position::first_parallel_edge;
use super::triangulate::volume_in_dimension;
use super::{fmt_point, GeometryError, LatticeChart, VPolytope};
use crate::linalg::{int_to_rat, Rational};

/// The hyperplane `x₁ = level`. Only depth `k = 1` is implemented.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlicingSpace {
    pub level: BigInt,
    pub k: usize,
}

impl SlicingSpace {
    pub fn new(level: BigInt) -> Self {
        Self { level, k: 1 }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        x.first().is_some_and(|x1| *x1 == int_to_rat(&self.level))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceRecord {
    pub level: BigInt,
    /// Slice vertices with the first coordinate dropped; `None` when empty.
    pub slice: Option<VPolytope>,
    pub volume: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlicingVolume {
    pub total: Rational,
    /// Sorted by level.
    pub slices: Vec<SliceRecord>,
}

/// Slice of a full-dimensional polytope (with edges) at `x₁ = level`.
pub fn slice_at(p: &VPolytope, level: &BigInt) -> Result<SliceRecord, GeometryError> {
    let edges = p.edges().ok_or(GeometryError::MissingEdges)?;
    let d = p.dim();
    let t = int_to_rat(level);
    let v = p.vertices();

    let mut points: Vec<Vec<Rational>> = v.iter().filter(|x| x[0] == t).map(|x| x[1..].to_vec()).collect();
    for &(a, b) in edges {
        let (lo, hi) = if v[a][0] < v[b][0] { (&v[a], &v[b]) } else { (&v[b], &v[a]) };
        if lo[0] < t && t < hi[0] {
            let s = (&t - &lo[0]) / (&hi[0] - &lo[0]);
            let point: Vec<Rational> = lo[1..].iter().zip(&hi[1..]).map(|(x, y)| x + (y - x) * &s).collect();
            if !points.contains(&point) {
                points.push(point);
            }
        }
    }
    if points.is_empty() {
        return Ok(SliceRecord { level: level.clone(), slice: None, volume: Rational::zero() });
    }
    points.sort();
    let volume = volume_in_dimension(&points, d.saturating_sub(1))?;
    Ok(SliceRecord { level: level.clone(), slice: Some(VPolytope::new(points, None)?), volume })
}

/// Transforms `p` into `chart` and sums slice volumes over every integer
/// level. Reported levels are values of the chart's functional.
pub fn volume_by_slicing(p: &VPolytope, chart: &LatticeChart) -> Result<SlicingVolume, GeometryError> {
    let local = chart.apply(p)?;
    if local.dim() <= 1 {
        return Err(GeometryError::DegenerateDimension { dim: local.dim() });
    }
    if local.dim() != local.ambient_dim() {
        return Err(GeometryError::NotFullDimensional { dim: local.dim(), ambient: local.ambient_dim() });
    }
    if let Some((a, b)) = first_parallel_edge(&local)? {
        return Err(GeometryError::GeneralPosition {
            edge: (a, b),
            from: fmt_point(&p.vertices()[a]),
            to: fmt_point(&p.vertices()[b]),
        });
    }

    let firsts = local.vertices().iter().map(|x| &x[0]);
    let lo = firsts.clone().min().expect("nonempty").ceil().to_integer();
    let hi = firsts.max().expect("nonempty").floor().to_integer();
    let mut levels = Vec::new();
    let mut y = lo;
    while y <= hi {
        levels.push(y.clone());
        y += 1;
    }

    let offset = chart.level_offset();
    let mut slices = levels
        .par_iter()
        .map(|y| {
            slice_at(&local, y).map(|mut r| {
                r.level += &offset;
                r
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    slices.sort_by(|a, b| a.level.cmp(&b.level));
    let total = slices.iter().map(|s| &s.volume).sum();
    Ok(SlicingVolume { total, slices })
}
