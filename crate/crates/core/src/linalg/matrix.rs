use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::{LinalgError, Rational};

/// Dense row-major matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RatMatrix = Matrix<Rational>;
pub type IntMatrix = Matrix<BigInt>;

impl<T> Matrix<T> {
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self, LinalgError> {
        if data.len() != rows * cols {
            return Err(LinalgError::DimensionMismatch { expected: rows * cols, found: data.len() });
        }
        Ok(Self { rows, cols, data })
    }

    /// Builds a matrix from rows, all of which must have `cols` entries.
    pub fn from_rows(cols: usize, rows: Vec<Vec<T>>) -> Result<Self, LinalgError> {
        let n_rows = rows.len();
        let mut data = Vec::with_capacity(n_rows * cols);
        for (row, entries) in rows.into_iter().enumerate() {
            if entries.len() != cols {
                return Err(LinalgError::Ragged { row, expected: cols, found: entries.len() });
            }
            data.extend(entries);
        }
        Ok(Self { rows: n_rows, cols, data })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> &T {
        &self.data[row * self.cols + col]
    }

    pub fn get_mut(&mut self, row: usize, col: usize) -> &mut T {
        &mut self.data[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[T] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[T]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<T: Clone> Matrix<T> {
    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c).clone());
            }
        }
        Self { rows: self.cols, cols: self.rows, data }
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.row_iter().map(<[T]>::to_vec).collect()
    }

    /// Keeps the listed rows, in the given order.
    pub fn select_rows(&self, rows: &[usize]) -> Self {
        let data = rows.iter().flat_map(|&r| self.row(r).iter().cloned()).collect();
        Self { rows: rows.len(), cols: self.cols, data }
    }
}

impl<T: Clone + Zero + One> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }
}

impl<T> Matrix<T>
where
    T: Clone + Zero,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    pub fn mul_matrix(&self, rhs: &Self) -> Result<Self, LinalgError> {
        if self.cols != rhs.rows {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: rhs.rows });
        }
        let mut data = Vec::with_capacity(self.rows * rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = T::zero();
                for k in 0..self.cols {
                    acc = acc + self.get(r, k) * rhs.get(k, c);
                }
                data.push(acc);
            }
        }
        Ok(Self { rows: self.rows, cols: rhs.cols, data })
    }

    pub fn mul_vector(&self, v: &[T]) -> Result<Vec<T>, LinalgError> {
        if self.cols != v.len() {
            return Err(LinalgError::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        Ok(self
            .row_iter()
            .map(|row| row.iter().zip(v).fold(T::zero(), |acc, (a, b)| acc + a * b))
            .collect())
    }
}

impl IntMatrix {
    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Result<Self, LinalgError> {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(cols, rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }

    pub fn to_rational(&self) -> RatMatrix {
        self.map(|x| Rational::from_integer(x.clone()))
    }
}

impl<T: fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.rows, self.cols)?;
        for r in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|c| self.data[r * self.cols + c].to_string()).collect();
            writeln!(f, "  [{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Determinant by Gaussian elimination over the rationals.
pub fn det_exact(m: &RatMatrix) -> Result<Rational, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    let mut a = m.clone();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !a.get(r, col).is_zero()) else {
            return Ok(Rational::zero());
        };
        if pivot != col {
            a.swap_rows(pivot, col);
            det = -det;
        }
        let p = a.get(col, col).clone();
        det *= &p;
        for r in col + 1..n {
            if a.get(r, col).is_zero() {
                continue;
            }
            let factor = a.get(r, col) / &p;
            for c in col..n {
                let delta = &factor * a.get(col, c);
                *a.get_mut(r, c) -= delta;
            }
        }
    }
    Ok(det)
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn det_int(m: &IntMatrix) -> Result<BigInt, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::NotSquare { rows: m.rows, cols: m.cols });
    }
    let n = m.rows;
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = m.clone();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a.get(k, k).is_zero() {
            let Some(pivot) = (k + 1..n).find(|&r| !a.get(r, k).is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap_rows(pivot, k);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let value = (a.get(i, j) * a.get(k, k) - a.get(i, k) * a.get(k, j)).div_floor(&prev);
                *a.get_mut(i, j) = value;
            }
        }
        prev = a.get(k, k).clone();
    }
    Ok(sign * a.get(n - 1, n - 1))
}

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(a: &mut RatMatrix) -> Vec<usize> {
    let (rows, cols) = (a.rows, a.cols);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a.get(i, c).is_zero()) else {
            continue;
        };
        a.swap_rows(p, r);
        let inv = a.get(r, c).recip();
        for j in c..cols {
            let v = a.get(r, j) * &inv;
            *a.get_mut(r, j) = v;
        }
        for i in 0..rows {
            if i == r || a.get(i, c).is_zero() {
                continue;
            }
            let factor = a.get(i, c).clone();
            for j in c..cols {
                let delta = &factor * a.get(r, j);
                *a.get_mut(i, j) -= delta;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

pub fn rank(m: &RatMatrix) -> usize {
    let mut a = m.clone();
    rref(&mut a).len()
}

/// Basis of the right kernel `{x : m x = 0}`, one vector per free column.
pub fn nullspace(m: &RatMatrix) -> Vec<Vec<Rational>> {
    let mut a = m.clone();
    let pivots = rref(&mut a);
    let free: Vec<usize> = (0..m.cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); m.cols];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -a.get(i, f).clone();
            }
            v
        })
        .collect()
}

/// Solves `a x = b` for invertible square `a`.
pub fn solve_exact(a: &RatMatrix, b: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare { rows: a.rows, cols: a.cols });
    }
    if b.len() != a.rows {
        return Err(LinalgError::DimensionMismatch { expected: a.rows, found: b.len() });
    }
    let n = a.rows;
    let mut aug = RatMatrix::zeros(n, n + 1);
    for r in 0..n {
        for c in 0..n {
            *aug.get_mut(r, c) = a.get(r, c).clone();
        }
        *aug.get_mut(r, n) = b[r].clone();
    }
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(LinalgError::Singular);
    }
    Ok((0..n).map(|r| aug.get(r, n).clone()).collect())
}

pub fn inverse(a: &RatMatrix) -> Result<RatMatrix, LinalgError> {
    if !a.is_square() {
        return Err(LinalgError::NotSquare { rows: a.rows, cols: a.cols });
    }
    let n = a.rows;
    let mut aug = RatMatrix::zeros(n, 2 * n);
    for r in 0..n {
        for c in 0..n {
            *aug.get_mut(r, c) = a.get(r, c).clone();
        }
        *aug.get_mut(r, n + r) = Rational::one();
    }
    let pivots = rref(&mut aug);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return Err(LinalgError::Singular);
    }
    let mut inv = RatMatrix::zeros(n, n);
    for r in 0..n {
        for c in 0..n {
            *inv.get_mut(r, c) = aug.get(r, n + c).clone();
        }
    }
    Ok(inv)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::rat;
    use proptest::prelude::*;

    fn rm(rows: &[Vec<i64>]) -> RatMatrix {
        IntMatrix::from_i64_rows(rows).unwrap().to_rational()
    }

    #[test]
    fn det_small_cases() {
        assert_eq!(det_exact(&RatMatrix::identity(3)).unwrap(), rat(1, 1));
        assert_eq!(det_exact(&rm(&[vec![0, 1], vec![1, 0]])).unwrap(), rat(-1, 1));
        assert_eq!(det_int(&IntMatrix::from_i64_rows(&[vec![0, 1], vec![1, 0]]).unwrap()).unwrap(), BigInt::from(-1));
        assert_eq!(det_exact(&rm(&[vec![1, 2], vec![2, 4]])).unwrap(), rat(0, 1));
    }

    #[test]
    fn det_rejects_non_square() {
        let m = RatMatrix::zeros(2, 3);
        assert_eq!(det_exact(&m), Err(LinalgError::NotSquare { rows: 2, cols: 3 }));
        assert!(det_int(&IntMatrix::zeros(3, 1)).is_err());
    }

    #[test]
    fn solve_examples() {
        let x = solve_exact(&RatMatrix::identity(2), &[rat(5, 1), rat(7, 1)]).unwrap();
        assert_eq!(x, vec![rat(5, 1), rat(7, 1)]);
        let two = rm(&[vec![2, 0], vec![0, 2]]);
        assert_eq!(solve_exact(&two, &[rat(1, 1), rat(1, 1)]).unwrap(), vec![rat(1, 2), rat(1, 2)]);
        let singular = rm(&[vec![1, 2], vec![2, 4]]);
        assert_eq!(solve_exact(&singular, &[rat(1, 1), rat(1, 1)]), Err(LinalgError::Singular));
    }

    #[test]
    fn nullspace_and_rank() {
        let m = rm(&[vec![1, 2, 3], vec![2, 4, 6]]);
        assert_eq!(rank(&m), 1);
        let ns = nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in ns {
            assert!(m.mul_vector(&v).unwrap().iter().all(Zero::is_zero));
        }
    }

    fn small_matrix(n: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
        prop::collection::vec(prop::collection::vec(-9i64..10, n), n)
    }

    proptest! {
        #[test]
        fn det_transpose_invariant(rows in (1usize..6).prop_flat_map(small_matrix)) {
            let m = rm(&rows);
            prop_assert_eq!(det_exact(&m).unwrap(), det_exact(&m.transpose()).unwrap());
            let im = IntMatrix::from_i64_rows(&rows).unwrap();
            prop_assert_eq!(Rational::from_integer(det_int(&im).unwrap()), det_exact(&m).unwrap());
        }

        #[test]
        fn solve_roundtrip(rows in (1usize..6).prop_flat_map(small_matrix), b in prop::collection::vec(-20i64..20, 6)) {
            let a = rm(&rows);
            let b: Vec<Rational> = b[..a.rows()].iter().map(|&x| rat(x, 1)).collect();
            match solve_exact(&a, &b) {
                Ok(x) => prop_assert_eq!(a.mul_vector(&x).unwrap(), b),
                Err(e) => {
                    prop_assert_eq!(e, LinalgError::Singular);
                    prop_assert!(det_exact(&a).unwrap().is_zero());
                }
            }
        }
    }
}
