//! Reference volume by placing triangulation, independent of the facet
//! enumeration used for slice volumes.
//!
//! Points are inserted one by one; each new point is coned over every
//! boundary facet of the current triangulation that it sees strictly from
//! outside. Orientation tests run on integer homogeneous coordinates.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed};

use super::frame::LatticeFrame;
use super::{GeometryError, HullLimits, VPolytope};
use crate::linalg::{det_int, hnf, integer_kernel, IntMatrix, Rational};

/// Relative lattice volume of `p`, computed without slicing.
pub fn triangulation_oracle(p: &VPolytope) -> Result<Rational, GeometryError> {
    triangulation_oracle_with(p, &HullLimits::default())
}

pub fn triangulation_oracle_with(p: &VPolytope, limits: &HullLimits) -> Result<Rational, GeometryError> {
    let frame = LatticeFrame::new(p.vertices())?;
    let m = frame.dim();
    limits.check(m, p.vertices().len())?;
    if m == 0 {
        return Ok(Rational::one());
    }
    let homogeneous: Vec<Vec<BigInt>> = frame.all_coordinates(p.vertices())?.iter().map(|x| homogenize(x)).collect();
    let factorial: BigInt = (1..=m).map(BigInt::from).product();
    let sum: Rational = placing_triangulation(&homogeneous)
        .iter()
        .map(|s| {
            let det = det_int(&matrix(&homogeneous, s)).expect("square").abs();
            let weights: BigInt = s.iter().map(|&i| homogeneous[i][0].clone()).product();
            Rational::new(det, weights)
        })
        .sum();
    Ok(sum / Rational::from_integer(factorial))
}

/// Hyperplane `c · h = 0` in homogeneous coordinates, with `c · h < 0`
/// on the triangulated side.
struct BoundaryFacet {
    plane: Vec<BigInt>,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `(w, w·x)` with `w > 0` the smallest integer clearing `x`'s denominators.
fn homogenize(x: &[Rational]) -> Vec<BigInt> {
    let w = x.iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()));
    let mut h = vec![w.clone()];
    h.extend(x.iter().map(|v| v.numer() * (&w / v.denom())));
    h
}

fn matrix(points: &[Vec<BigInt>], indices: &[usize]) -> IntMatrix {
    IntMatrix::from_rows(points[0].len(), indices.iter().map(|&i| points[i].clone()).collect()).expect("equal widths")
}

fn oriented_plane(points: &[Vec<BigInt>], facet: &[usize], opposite: usize) -> BoundaryFacet {
    let mut plane = integer_kernel(&matrix(points, facet)).row(0).to_vec();
    if dot(&plane, &points[opposite]).is_positive() {
        plane.iter_mut().for_each(|x| *x = -x.clone());
    }
    BoundaryFacet { plane }
}

/// Simplices (index lists) of a placing triangulation of a
/// full-dimensional point set given in homogeneous coordinates.
fn placing_triangulation(points: &[Vec<BigInt>]) -> Vec<Vec<usize>> {
    let width = points[0].len();
    let mut first: Vec<usize> = vec![0];
    for i in 1..points.len() {
        let mut trial = first.clone();
        trial.push(i);
        if hnf(&matrix(points, &trial)).rank == trial.len() {
            first = trial;
            if first.len() == width {
                break;
            }
        }
    }
    debug_assert_eq!(first.len(), width, "caller guarantees full dimension");

    let mut simplices = vec![first.clone()];
    let mut boundary: BTreeMap<Vec<usize>, BoundaryFacet> = BTreeMap::new();
    for skip in 0..first.len() {
        let facet: Vec<usize> = first.iter().enumerate().filter(|&(k, _)| k != skip).map(|(_, &v)| v).collect();
        let plane = oriented_plane(points, &facet, first[skip]);
        boundary.insert(facet, plane);
    }

    for p in 0..points.len() {
        if first.contains(&p) {
            continue;
        }
        let visible: Vec<Vec<usize>> = boundary
            .iter()
            .filter(|(_, f)| dot(&f.plane, &points[p]).is_positive())
            .map(|(k, _)| k.clone())
            .collect();
        for facet in visible {
            boundary.remove(&facet);
            let mut simplex = facet.clone();
            simplex.push(p);
            simplex.sort_unstable();
            for drop in &facet {
                let side: Vec<usize> = simplex.iter().copied().filter(|v| v != drop).collect();
                if boundary.remove(&side).is_none() {
                    let plane = oriented_plane(points, &side, *drop);
                    boundary.insert(side, plane);
                }
            }
            simplices.push(simplex);
        }
    }
    simplices
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::birkhoff_polytope;
    use crate::linalg::rat;

    fn poly(rows: &[Vec<i64>]) -> VPolytope {
        VPolytope::from_integer_rows(rows, None).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(triangulation_oracle(&poly(&[vec![0, 0], vec![2, 2]])).unwrap(), rat(2, 1));
        assert_eq!(triangulation_oracle(&poly(&[vec![0, 0], vec![1, 2], vec![2, 1]])).unwrap(), rat(3, 2));
        assert_eq!(triangulation_oracle(&birkhoff_polytope(2).unwrap()).unwrap(), rat(1, 1));
        assert_eq!(triangulation_oracle(&poly(&[vec![3, 3]])).unwrap(), rat(1, 1));
    }

    #[test]
    fn interior_points_do_not_change_volume() {
        let rows = vec![vec![1, 1], vec![0, 0], vec![4, 0], vec![2, 0], vec![0, 4], vec![1, 2]];
        assert_eq!(triangulation_oracle(&poly(&rows)).unwrap(), rat(8, 1));
    }

    #[test]
    fn rational_vertices() {
        let p = VPolytope::new(vec![vec![rat(0, 1), rat(0, 1)], vec![rat(1, 2), rat(0, 1)], vec![rat(0, 1), rat(1, 3)]], None)
            .unwrap();
        assert_eq!(triangulation_oracle(&p).unwrap(), rat(1, 12));
    }

    #[test]
    fn birkhoff_three() {
        assert_eq!(triangulation_oracle(&birkhoff_polytope(3).unwrap()).unwrap(), rat(1, 8));
    }
}
