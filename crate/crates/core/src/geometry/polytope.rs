use num_bigint::BigInt;

use super::frame::affine_rank;
use super::hull::{extreme_and_edges, HullLimits};
use super::GeometryError;
use crate::birkhoff::{adjacent_pairs, enumerate_vertices, BirkhoffError};
use crate::linalg::Rational;

pub type Point = Vec<Rational>;

/// A polytope given by its vertices, optionally with its edge graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VPolytope {
    ambient_dim: usize,
    dim: usize,
    vertices: Vec<Point>,
    edges: Option<Vec<(usize, usize)>>,
}

impl VPolytope {
    /// Checks shapes, vertex distinctness and edge indices. Extremality is
    /// not checked here; see [`VPolytope::check_extreme`].
    pub fn new(vertices: Vec<Point>, edges: Option<Vec<(usize, usize)>>) -> Result<Self, GeometryError> {
        let first = vertices.first().ok_or(GeometryError::Empty)?;
        let ambient_dim = first.len();
        for (i, v) in vertices.iter().enumerate() {
            if v.len() != ambient_dim {
                return Err(GeometryError::Dimension { expected: ambient_dim, found: v.len() });
            }
            if vertices[..i].contains(v) {
                return Err(GeometryError::DuplicateVertex(i));
            }
        }
        if let Some(edges) = &edges {
            for &(a, b) in edges {
                if a >= vertices.len() || b >= vertices.len() {
                    return Err(GeometryError::EdgeIndex(a, b));
                }
                if a == b {
                    return Err(GeometryError::DegenerateEdge(a, b));
                }
            }
        }
        let dim = affine_rank(&vertices);
        Ok(Self { ambient_dim, dim, vertices, edges })
    }

    pub fn from_integer_rows(rows: &[Vec<i64>], edges: Option<Vec<(usize, usize)>>) -> Result<Self, GeometryError> {
        let vertices = rows.iter().map(|r| r.iter().map(|&x| Rational::from_integer(BigInt::from(x))).collect()).collect();
        Self::new(vertices, edges)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    /// Affine dimension.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn edges(&self) -> Option<&[(usize, usize)]> {
        self.edges.as_deref()
    }

    pub fn is_integral(&self) -> bool {
        self.vertices.iter().flatten().all(Rational::is_integer)
    }

    pub fn first_non_integral(&self) -> Option<usize> {
        self.vertices.iter().position(|v| !v.iter().all(Rational::is_integer))
    }

    /// Replaces the edge list with the one read off the convex hull.
    pub fn with_computed_edges(self, limits: &HullLimits) -> Result<Self, GeometryError> {
        let (_, edges) = extreme_and_edges(&self.vertices, limits)?;
        Ok(Self { edges: Some(edges), ..self })
    }

    /// Errors with the first listed point that is not a vertex of the hull.
    pub fn check_extreme(&self, limits: &HullLimits) -> Result<(), GeometryError> {
        let (extreme, _) = extreme_and_edges(&self.vertices, limits)?;
        match extreme.iter().position(|&e| !e) {
            Some(i) => Err(GeometryError::NotExtreme(i)),
            None => Ok(()),
        }
    }

    /// Same polytope with every vertex mapped through `f`; edges are kept.
    pub fn map_vertices(
        &self,
        mut f: impl FnMut(&[Rational]) -> Result<Point, GeometryError>,
    ) -> Result<Self, GeometryError> {
        let vertices = self.vertices.iter().map(|v| f(v)).collect::<Result<Vec<_>, _>>()?;
        Self::new(vertices, self.edges.clone())
    }

    pub fn translate(&self, by: &[Rational]) -> Result<Self, GeometryError> {
        if by.len() != self.ambient_dim {
            return Err(GeometryError::Dimension { expected: self.ambient_dim, found: by.len() });
        }
        self.map_vertices(|v| Ok(v.iter().zip(by).map(|(a, b)| a + b).collect()))
    }
}

/// `B_n` in `R^(n²)`: vectorized permutation matrices (lexicographic in
/// `sigma`) with the single-cycle edge graph.
pub fn birkhoff_polytope(n: usize) -> Result<VPolytope, BirkhoffError> {
    let perms = enumerate_vertices(n)?;
    let edges = if n >= 2 { adjacent_pairs(&perms)? } else { Vec::new() };
    let vertices = perms
        .iter()
        .map(|p| p.vectorize().into_iter().map(|x| Rational::from_integer(BigInt::from(x))).collect())
        .collect();
    Ok(VPolytope::new(vertices, Some(edges)).expect("permutation matrices are distinct"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_checks() {
        assert_eq!(VPolytope::new(vec![], None), Err(GeometryError::Empty));
        let square = [vec![0, 0], vec![1, 0], vec![0, 1], vec![1, 1]];
        let p = VPolytope::from_integer_rows(&square, None).unwrap();
        assert_eq!((p.ambient_dim(), p.dim()), (2, 2));
        assert!(p.is_integral());
        assert!(matches!(VPolytope::from_integer_rows(&[vec![0, 0], vec![0, 0]], None), Err(GeometryError::DuplicateVertex(1))));
        assert!(matches!(VPolytope::from_integer_rows(&[vec![0, 0], vec![1]], None), Err(GeometryError::Dimension { .. })));
        assert!(matches!(VPolytope::from_integer_rows(&square, Some(vec![(0, 4)])), Err(GeometryError::EdgeIndex(0, 4))));
        assert!(matches!(VPolytope::from_integer_rows(&square, Some(vec![(1, 1)])), Err(GeometryError::DegenerateEdge(1, 1))));
    }

    #[test]
    fn birkhoff_dimensions() {
        for (n, verts, edges, dim) in [(2, 2, 1, 1), (3, 6, 15, 4), (4, 24, 240, 9)] {
            let b = birkhoff_polytope(n).unwrap();
            assert_eq!(b.vertices().len(), verts);
            assert_eq!(b.edges().unwrap().len(), edges);
            assert_eq!(b.dim(), dim);
            assert_eq!(b.ambient_dim(), n * n);
        }
    }

    #[test]
    fn hull_edges_match_birkhoff_adjacency() {
        for n in 2..=4 {
            let b = birkhoff_polytope(n).unwrap();
            let combinatorial = b.edges().unwrap().to_vec();
            let geometric = b.clone().with_computed_edges(&HullLimits::default()).unwrap();
            assert_eq!(geometric.edges().unwrap(), combinatorial.as_slice(), "n = {n}");
            b.check_extreme(&HullLimits::default()).unwrap();
        }
    }

    #[test]
    fn detects_interior_point() {
        let p = VPolytope::from_integer_rows(&[vec![0, 0], vec![4, 0], vec![1, 1], vec![0, 4]], None).unwrap();
        assert_eq!(p.check_extreme(&HullLimits::default()), Err(GeometryError::NotExtreme(2)));
    }
}
