use super::GeometryError;
use crate::linalg::{left_inverse, rank, span_lattice_basis, IntMatrix, RatMatrix, Rational};

pub(crate) fn differences(points: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let Some(origin) = points.first() else { return Vec::new() };
    points[1..].iter().map(|p| p.iter().zip(origin).map(|(a, b)| a - b).collect()).collect()
}

/// Dimension of the affine hull; 0 for a single point or an empty set.
pub(crate) fn affine_rank(points: &[Vec<Rational>]) -> usize {
    let diffs = differences(points);
    let Some(width) = diffs.first().map(Vec::len) else { return 0 };
    rank(&RatMatrix::from_rows(width, diffs).expect("equal-length points"))
}

/// Integral coordinates on an affine hull: `x = origin + Σ c_i · basis_i`
/// where the basis rows generate the direction space intersected with the
/// integer lattice.
#[derive(Debug, Clone)]
pub(crate) struct LatticeFrame {
    origin: Vec<Rational>,
    basis: IntMatrix,
    left_inverse: RatMatrix,
}

impl LatticeFrame {
    pub(crate) fn new(points: &[Vec<Rational>]) -> Result<Self, GeometryError> {
        let origin = points.first().ok_or(GeometryError::Empty)?.clone();
        let basis = span_lattice_basis(&differences(points), origin.len())?;
        let left_inverse = if basis.rows() == 0 {
            RatMatrix::zeros(0, origin.len())
        } else {
            left_inverse(&basis.to_rational())?
        };
        Ok(Self { origin, basis, left_inverse })
    }

    pub(crate) fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub(crate) fn coordinates(&self, x: &[Rational]) -> Result<Vec<Rational>, GeometryError> {
        let shifted: Vec<Rational> = x.iter().zip(&self.origin).map(|(a, b)| a - b).collect();
        Ok(self.left_inverse.mul_vector(&shifted)?)
    }

    pub(crate) fn all_coordinates(&self, points: &[Vec<Rational>]) -> Result<Vec<Vec<Rational>>, GeometryError> {
        points.iter().map(|p| self.coordinates(p)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;

    fn pts(rows: &[Vec<i64>]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x, 1)).collect()).collect()
    }

    #[test]
    fn ranks() {
        assert_eq!(affine_rank(&pts(&[vec![1, 2]])), 0);
        assert_eq!(affine_rank(&pts(&[vec![0, 0], vec![1, 1], vec![2, 2]])), 1);
        assert_eq!(affine_rank(&pts(&[vec![0, 0, 0], vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0]])), 2);
    }

    #[test]
    fn frame_coordinates_are_lattice_steps() {
        let frame = LatticeFrame::new(&pts(&[vec![0, 0], vec![2, 2]])).unwrap();
        assert_eq!(frame.dim(), 1);
        assert_eq!(frame.coordinates(&[rat(2, 1), rat(2, 1)]).unwrap(), vec![rat(2, 1)]);
        let point = LatticeFrame::new(&pts(&[vec![3, 4]])).unwrap();
        assert_eq!(point.dim(), 0);
        assert!(point.coordinates(&[rat(3, 1), rat(4, 1)]).unwrap().is_empty());
    }
}
