//! The slicing matrix `V_n` and the unimodular basis built from it.
//!
//! `V_n` has a zero first row and column and `a(i, j) = (j - 1) · n^(i - 2)`
//! elsewhere. No edge direction of `B_n` is orthogonal to it, so slicing
//! along the functional `x ↦ V_n · x` meets every edge transversally. The
//! basis below spans the orthogonal hyperplane with `n² - 1` integer vectors
//! and adds `E(2, 2)` as the offset between consecutive slices.

use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::birkhoff::{self, enumerate_edge_directions, BirkhoffError, CycleMatrix, PermutationMatrix};
use crate::linalg::{det_int, inverse, IntMatrix, LinalgError, RatMatrix, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BasisError {
    #[error("order must be at least {min}, got {n}")]
    Order { n: usize, min: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    Dimension { expected: usize, found: usize },
    #[error("edge {edge:?} joins a vertex to itself")]
    DegenerateEdge { edge: (usize, usize) },
    #[error("edge {edge:?} references a missing vertex")]
    EdgeIndex { edge: (usize, usize) },
    #[error(transparent)]
    Birkhoff(#[from] BirkhoffError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
}

/// The matrix `V_n`, entries addressed 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SlicingVector {
    n: usize,
    entries: Vec<BigInt>,
}

impl SlicingVector {
    pub fn new(n: usize) -> Result<Self, BasisError> {
        if n == 0 {
            return Err(BasisError::Order { n, min: 1 });
        }
        if n == 1 {
            return Ok(Self { n, entries: vec![BigInt::one()] });
        }
        let base = BigInt::from(n);
        let mut entries = Vec::with_capacity(n * n);
        for i in 1..=n {
            for j in 1..=n {
                entries.push(if i == 1 { BigInt::zero() } else { BigInt::from(j - 1) * num_traits::pow(base.clone(), i - 2) });
            }
        }
        Ok(Self { n, entries })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `a(i, j)`.
    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn as_matrix(&self) -> IntMatrix {
        IntMatrix::new(self.n, self.n, self.entries.clone()).expect("n² entries")
    }

    /// Row-major entries; the covector of the slicing functional on `R^(n²)`.
    pub fn vectorized(&self) -> &[BigInt] {
        &self.entries
    }

    pub fn dot_cycle(&self, m: &CycleMatrix) -> Result<BigInt, BasisError> {
        if m.n() != self.n {
            return Err(BasisError::Dimension { expected: self.n, found: m.n() });
        }
        Ok(self.entries.iter().zip(m.entries()).filter(|(_, &e)| e != 0).map(|(a, &e)| a * BigInt::from(e)).sum())
    }
}

/// `V_n · P = Σ_i a(i, sigma(i))`.
pub fn slicing_coordinate(v: &SlicingVector, p: &PermutationMatrix) -> Result<BigInt, BasisError> {
    if p.n() != v.n() {
        return Err(BasisError::Dimension { expected: v.n(), found: p.n() });
    }
    Ok((1..=v.n()).map(|i| v.entry(i, p.image(i)).clone()).sum())
}

/// Outcome of checking `V_n · M ≠ 0` over every edge direction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalityReport {
    pub n: usize,
    pub cycles: usize,
    pub zero_products: usize,
    pub min_abs_product: Option<BigInt>,
    pub witness: Option<CycleMatrix>,
}

impl TransversalityReport {
    pub fn passed(&self) -> bool {
        self.zero_products == 0
    }
}

pub fn verify_theorem4(n: usize) -> Result<TransversalityReport, BasisError> {
    let v = SlicingVector::new(n)?;
    let cycles = enumerate_edge_directions(n)?;
    let mut report = TransversalityReport { n, cycles: cycles.len(), zero_products: 0, min_abs_product: None, witness: None };
    for m in &cycles {
        let product = v.dot_cycle(m)?.abs();
        if product.is_zero() {
            report.zero_products += 1;
            report.witness.get_or_insert_with(|| m.clone());
        }
        if report.min_abs_product.as_ref().is_none_or(|best| &product < best) {
            report.min_abs_product = Some(product);
        }
    }
    Ok(report)
}

/// The ordered change of basis for `B_n`.
///
/// Order: `E(1, j)` for `j = 1..n`, then `E(i, 1)` for `i = 2..n`, then for
/// every `(i, j)` with `i, j ≥ 2` except `(2, 2)` (row-major) the vector
/// `E(i, j) - a(i, j)·E(2, 2)`, and finally the offset `E(2, 2)`.
#[derive(Debug, Clone)]
pub struct SlicingBasis {
    n: usize,
    vectors: Vec<IntMatrix>,
    matrix: IntMatrix,
    transpose_inverse: OnceLock<RatMatrix>,
}

pub fn build_basis(n: usize) -> Result<SlicingBasis, BasisError> {
    if n < 2 {
        return Err(BasisError::Order { n, min: 2 });
    }
    let v = SlicingVector::new(n)?;
    let elementary = |i: usize, j: usize| {
        let mut m = IntMatrix::zeros(n, n);
        *m.get_mut(i - 1, j - 1) = BigInt::one();
        m
    };
    let mut vectors = Vec::with_capacity(n * n);
    vectors.extend((1..=n).map(|j| elementary(1, j)));
    vectors.extend((2..=n).map(|i| elementary(i, 1)));
    for i in 2..=n {
        for j in 2..=n {
            if (i, j) == (2, 2) {
                continue;
            }
            let mut m = elementary(i, j);
            *m.get_mut(1, 1) = -v.entry(i, j).clone();
            vectors.push(m);
        }
    }
    vectors.push(elementary(2, 2));

    let rows = vectors.iter().map(|m| m.entries().to_vec()).collect();
    let matrix = IntMatrix::from_rows(n * n, rows)?;
    Ok(SlicingBasis { n, vectors, matrix, transpose_inverse: OnceLock::new() })
}

impl SlicingBasis {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vectors(&self) -> &[IntMatrix] {
        &self.vectors
    }

    /// `n² × n²` matrix whose rows are the row-major basis vectors.
    pub fn matrix(&self) -> &IntMatrix {
        &self.matrix
    }

    /// Index of the offset vector `E(2, 2)`; also the slicing coordinate.
    pub fn offset_index(&self) -> usize {
        self.vectors.len() - 1
    }

    pub fn determinant(&self) -> BigInt {
        det_int(&self.matrix).expect("basis matrix is square")
    }

    fn transpose_inverse(&self) -> &RatMatrix {
        self.transpose_inverse
            .get_or_init(|| inverse(&self.matrix.transpose().to_rational()).expect("basis is unimodular"))
    }

    /// Inverse change of basis: `Σ x_k · b_k`, row-major.
    pub fn from_new_coordinates(&self, x: &[Rational]) -> Result<Vec<Rational>, BasisError> {
        Ok(self.matrix.transpose().to_rational().mul_vector(x)?)
    }
}

pub fn check_unimodular(b: &SlicingBasis) -> bool {
    b.determinant().abs().is_one()
}

/// The `x` with `matrixᵀ · x = point`, i.e. `point = Σ x_k · b_k`.
pub fn to_new_coordinates(b: &SlicingBasis, point: &[Rational]) -> Result<Vec<Rational>, BasisError> {
    let dim = b.n * b.n;
    if point.len() != dim {
        return Err(BasisError::Dimension { expected: dim, found: point.len() });
    }
    Ok(b.transpose_inverse().mul_vector(point)?)
}

/// A vertex of `B_n` written in the slicing basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransformedVertex {
    pub permutation: PermutationMatrix,
    pub coordinates: Vec<BigInt>,
    /// The offset coordinate, equal to `V_n · P`.
    pub slicing_coordinate: BigInt,
}

pub fn transform_vertex(b: &SlicingBasis, p: &PermutationMatrix) -> Result<TransformedVertex, BasisError> {
    if p.n() != b.n {
        return Err(BasisError::Dimension { expected: b.n, found: p.n() });
    }
    let point: Vec<Rational> = p.vectorize().into_iter().map(|x| Rational::from_integer(x.into())).collect();
    let coordinates: Vec<BigInt> = to_new_coordinates(b, &point)?
        .into_iter()
        .map(|x| {
            debug_assert!(x.is_integer(), "unimodular basis keeps lattice points integral");
            x.to_integer()
        })
        .collect();
    let slicing_coordinate = coordinates[b.offset_index()].clone();
    Ok(TransformedVertex { permutation: p.clone(), coordinates, slicing_coordinate })
}

/// All vertices of `B_n` in the slicing basis, lexicographic in `sigma`.
pub fn transformed_vertices(n: usize) -> Result<Vec<TransformedVertex>, BasisError> {
    let b = build_basis(n)?;
    birkhoff::enumerate_vertices(n)?.iter().map(|p| transform_vertex(&b, p)).collect()
}

/// Whether every edge has a nonzero component along coordinate `axis`.
pub fn is_1_general_position(
    vertices: &[Vec<Rational>],
    edges: &[(usize, usize)],
    axis: usize,
) -> Result<bool, BasisError> {
    for &(a, b) in edges {
        let (Some(p), Some(q)) = (vertices.get(a), vertices.get(b)) else {
            return Err(BasisError::EdgeIndex { edge: (a, b) });
        };
        if p.len() <= axis || q.len() <= axis {
            return Err(BasisError::Dimension { expected: axis + 1, found: p.len().min(q.len()) });
        }
        if p == q {
            return Err(BasisError::DegenerateEdge { edge: (a, b) });
        }
    }
    Ok(edges.iter().all(|&(a, b)| vertices[a][axis] != vertices[b][axis]))
}
