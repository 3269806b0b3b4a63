use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::frame::differences;
use super::{fmt_point, GeometryError, VPolytope};
use crate::linalg::{hnf, left_inverse, span_lattice_basis, IntMatrix, RatMatrix, Rational};

/// Integral affine coordinates on the affine hull of a polytope.
///
/// `x = base + Σ y_i · directions_i`; the first direction has functional
/// value 1 and the others lie in the functional's kernel, so
/// `y_1 = f(x) − f(base)`.
#[derive(Debug, Clone)]
pub struct LatticeChart {
    base: Vec<Rational>,
    directions: IntMatrix,
    functional: Vec<BigInt>,
    left_inverse: RatMatrix,
}

impl LatticeChart {
    pub fn dim(&self) -> usize {
        self.directions.rows()
    }

    pub fn base(&self) -> &[Rational] {
        &self.base
    }

    /// Directions as rows.
    pub fn directions(&self) -> &IntMatrix {
        &self.directions
    }

    pub fn functional(&self) -> &[BigInt] {
        &self.functional
    }

    /// `f(base)`: added to chart levels to recover functional values.
    pub fn level_offset(&self) -> BigInt {
        self.functional.iter().zip(&self.base).map(|(a, b)| a * b.to_integer()).sum()
    }

    pub fn coordinates(&self, x: &[Rational]) -> Result<Vec<Rational>, GeometryError> {
        if x.len() != self.base.len() {
            return Err(GeometryError::Dimension { expected: self.base.len(), found: x.len() });
        }
        let shifted: Vec<Rational> = x.iter().zip(&self.base).map(|(a, b)| a - b).collect();
        let y = self.left_inverse.mul_vector(&shifted)?;
        if self.directions.to_rational().transpose().mul_vector(&y)? != shifted {
            return Err(GeometryError::NotInAffineHull);
        }
        Ok(y)
    }

    /// The polytope in chart coordinates, edges preserved.
    pub fn apply(&self, p: &VPolytope) -> Result<VPolytope, GeometryError> {
        p.map_vertices(|v| self.coordinates(v))
    }
}

/// Builds a chart on `aff(p)` whose first coordinate is `functional`.
pub fn build_lattice_chart(p: &VPolytope, functional: &[BigInt]) -> Result<LatticeChart, GeometryError> {
    let ambient = p.ambient_dim();
    if functional.len() != ambient {
        return Err(GeometryError::Dimension { expected: ambient, found: functional.len() });
    }
    if let Some(index) = p.first_non_integral() {
        return Err(GeometryError::NonIntegralVertex { index, coords: fmt_point(&p.vertices()[index]) });
    }
    let lattice = span_lattice_basis(&differences(p.vertices()), ambient)?;
    let d = lattice.rows();
    if d == 0 {
        return Err(GeometryError::DegenerateDimension { dim: 0 });
    }
    let values: Vec<BigInt> =
        lattice.row_iter().map(|row| row.iter().zip(functional).map(|(a, b)| a * b).sum()).collect();
    let gcd = values.iter().fold(BigInt::zero(), |g, v| g.gcd(v));
    if !gcd.is_one() {
        return Err(GeometryError::NonPrimitiveFunctional { gcd });
    }

    // u · values = (1, 0, …, 0)ᵀ with u unimodular: row 0 hits 1, the rest span the kernel.
    let column = IntMatrix::from_rows(1, values.iter().map(|v| vec![v.clone()]).collect())?;
    let u = hnf(&column).u;
    let kernel = canonical(&u.select_rows(&(1..d).collect::<Vec<_>>()).mul_matrix(&lattice)?);
    let mut first: Vec<BigInt> = u.row(0).to_vec();
    first = IntMatrix::from_rows(d, vec![first])?.mul_matrix(&lattice)?.row(0).to_vec();
    reduce_against(&mut first, &kernel);

    let mut rows = vec![first];
    rows.extend(kernel.to_rows());
    let directions = IntMatrix::from_rows(ambient, rows)?;
    let left_inverse = left_inverse(&directions.to_rational())?;
    let base = p.vertices()[0].clone();
    Ok(LatticeChart { base, directions, functional: functional.to_vec(), left_inverse })
}

fn canonical(rows: &IntMatrix) -> IntMatrix {
    let res = hnf(rows);
    res.h.select_rows(&(0..res.rank).collect::<Vec<_>>())
}

/// Reduces `v` modulo the HNF rows of `basis` at their pivots.
fn reduce_against(v: &mut [BigInt], basis: &IntMatrix) {
    for row in basis.row_iter() {
        let Some(pivot) = row.iter().position(|x| !x.is_zero()) else { continue };
        let q = v[pivot].div_floor(&row[pivot]);
        for (x, r) in v.iter_mut().zip(row) {
            *x -= &q * r;
        }
    }
}
