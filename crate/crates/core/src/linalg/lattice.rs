use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::One;

use super::{hnf, inverse, nullspace, IntMatrix, LinalgError, RatMatrix, Rational};

/// Basis (as rows, in Hermite normal form) of `{x ∈ Z^n : a·x = 0}`.
pub fn integer_kernel(a: &IntMatrix) -> IntMatrix {
    let n = a.cols();
    let res = hnf(&a.transpose());
    let kernel_rows: Vec<usize> = (res.rank..n).collect();
    canonical_basis(&res.u.select_rows(&kernel_rows))
}

/// Basis (as rows, in Hermite normal form) of the lattice
/// `span_R(vectors) ∩ Z^dim`.
pub fn span_lattice_basis(vectors: &[Vec<Rational>], dim: usize) -> Result<IntMatrix, LinalgError> {
    let spanning = RatMatrix::from_rows(dim, vectors.to_vec())?;
    let complement: Vec<Vec<BigInt>> = nullspace(&spanning).iter().map(|v| clear_denominators(v)).collect();
    let equations = IntMatrix::from_rows(dim, complement)?;
    Ok(integer_kernel(&equations))
}

/// Scales a rational vector by the lcm of its denominators.
pub fn clear_denominators(v: &[Rational]) -> Vec<BigInt> {
    let lcm = v.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect()
}

fn canonical_basis(rows: &IntMatrix) -> IntMatrix {
    let res = hnf(rows);
    let keep: Vec<usize> = (0..res.rank).collect();
    res.h.select_rows(&keep)
}

/// Left inverse `(B Bᵀ)⁻¹ B` of a full-row-rank basis matrix.
pub fn left_inverse(basis: &RatMatrix) -> Result<RatMatrix, LinalgError> {
    let gram = basis.mul_matrix(&basis.transpose())?;
    inverse(&gram)?.mul_matrix(basis)
}

/// Coordinates `c` with `Σ c_i · basis_i = v`; errors when `v` is outside
/// the row span.
pub fn coordinates_in_basis(basis: &RatMatrix, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
    let c = left_inverse(basis)?.mul_vector(v)?;
    let back = basis.transpose().mul_vector(&c)?;
    if back != v {
        return Err(LinalgError::Singular);
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use num_traits::Zero;

    fn im(rows: &[Vec<i64>]) -> IntMatrix {
        IntMatrix::from_i64_rows(rows).unwrap()
    }

    #[test]
    fn kernel_of_single_equation() {
        // x + 2y + 3z = 0
        let k = integer_kernel(&im(&[vec![1, 2, 3]]));
        assert_eq!(k.rows(), 2);
        for row in k.row_iter() {
            let dot: BigInt = &row[0] + &row[1] * 2 + &row[2] * 3;
            assert!(dot.is_zero());
        }
        assert_eq!(k, im(&[vec![1, 1, -1], vec![0, 3, -2]]));
    }

    #[test]
    fn span_lattice_is_saturated() {
        let l = span_lattice_basis(&[vec![rat(2, 1), rat(4, 1)]], 2).unwrap();
        assert_eq!(l, im(&[vec![1, 2]]));
        let half = span_lattice_basis(&[vec![rat(0, 1), rat(3, 2)]], 2).unwrap();
        assert_eq!(half, im(&[vec![0, 1]]));
        let full = span_lattice_basis(&[vec![rat(1, 1), rat(0, 1)], vec![rat(1, 1), rat(1, 1)]], 2).unwrap();
        assert_eq!(full, IntMatrix::identity(2));
        let empty = span_lattice_basis(&[], 3).unwrap();
        assert_eq!(empty.rows(), 0);
    }

    #[test]
    fn coordinates_roundtrip() {
        let b = im(&[vec![1, 1, 0], vec![0, 1, 1]]).to_rational();
        let c = coordinates_in_basis(&b, &[rat(2, 1), rat(5, 1), rat(3, 1)]).unwrap();
        assert_eq!(c, vec![rat(2, 1), rat(3, 1)]);
        assert!(coordinates_in_basis(&b, &[rat(1, 1), rat(0, 1), rat(0, 1)]).is_err());
    }
}
