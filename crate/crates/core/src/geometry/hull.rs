//! Facet enumeration by the double description method.
//!
//! The facets of `conv(v_1, …, v_N) ⊂ R^m` are the extreme rays of the cone
//! `{(a, b) : a·v_i ≤ b for all i}`. Constraints are added one at a time;
//! after each, rays on opposite sides are combined when they are adjacent
//! (combinatorial test on their sets of tight constraints).

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::frame::{affine_rank, LatticeFrame};
use super::GeometryError;
use crate::linalg::{clear_denominators, inverse, rank, RatMatrix, Rational};

/// Size caps for exact hull computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HullLimits {
    pub max_dim: usize,
    pub max_vertices: usize,
}

impl Default for HullLimits {
    fn default() -> Self {
        Self { max_dim: 9, max_vertices: 5000 }
    }
}

impl HullLimits {
    pub(crate) fn check(&self, dim: usize, points: usize) -> Result<(), GeometryError> {
        if dim > self.max_dim {
            return Err(GeometryError::CapExceeded { what: "dimension", limit: self.max_dim, found: dim });
        }
        if points > self.max_vertices {
            return Err(GeometryError::CapExceeded { what: "vertex count", limit: self.max_vertices, found: points });
        }
        Ok(())
    }
}

/// `normal · x ≤ offset`, tight exactly at the listed input points.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Facet {
    pub vertices: Vec<usize>,
    pub normal: Vec<BigInt>,
    pub offset: BigInt,
}

#[derive(Clone, PartialEq, Eq)]
struct RowSet(Vec<u64>);

impl RowSet {
    fn new(len: usize) -> Self {
        Self(vec![0; len.div_ceil(64)])
    }

    fn insert(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    fn intersection(&self, other: &Self) -> Self {
        Self(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn is_subset(&self, other: &Self) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a & !b == 0)
    }

    fn len(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(w, &bits)| (0..64).filter(move |b| bits & (1 << b) != 0).map(move |b| w * 64 + b))
    }
}

struct Ray {
    coords: Vec<BigInt>,
    tight: RowSet,
}

fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if !g.is_zero() && g != BigInt::from(1) {
        for x in &mut v {
            *x = &*x / &g;
        }
    }
    v
}

/// Facets of a full-dimensional point set in `R^m`, `m ≥ 1`.
pub fn facets(points: &[Vec<Rational>], limits: &HullLimits) -> Result<Vec<Facet>, GeometryError> {
    let m = points.first().ok_or(GeometryError::Empty)?.len();
    limits.check(m, points.len())?;
    let dim = affine_rank(points);
    if dim != m || m == 0 {
        return Err(GeometryError::NotFullDimensional { dim, ambient: m });
    }

    // Constraint i: b - a·v_i ≥ 0, scaled to integers.
    let rows: Vec<Vec<BigInt>> = points
        .iter()
        .map(|v| {
            let mut row: Vec<Rational> = v.iter().map(|x| -x).collect();
            row.push(Rational::from_integer(1.into()));
            clear_denominators(&row)
        })
        .collect();

    let mut initial: Vec<usize> = Vec::with_capacity(m + 1);
    for i in 0..rows.len() {
        let mut trial: Vec<Vec<Rational>> = initial.iter().map(|&r| to_rat(&rows[r])).collect();
        trial.push(to_rat(&rows[i]));
        if rank(&RatMatrix::from_rows(m + 1, trial)?) == initial.len() + 1 {
            initial.push(i);
            if initial.len() == m + 1 {
                break;
            }
        }
    }
    let basis = RatMatrix::from_rows(m + 1, initial.iter().map(|&r| to_rat(&rows[r])).collect())?;
    let inv = inverse(&basis)?;

    let mut rays: Vec<Ray> = (0..=m)
        .map(|j| {
            let column: Vec<Rational> = (0..=m).map(|r| inv.get(r, j).clone()).collect();
            let mut tight = RowSet::new(rows.len());
            for (k, &r) in initial.iter().enumerate() {
                if k != j {
                    tight.insert(r);
                }
            }
            Ray { coords: primitive(clear_denominators(&column)), tight }
        })
        .collect();

    for (h, row) in rows.iter().enumerate() {
        if initial.contains(&h) {
            continue;
        }
        let values: Vec<BigInt> = rays.iter().map(|r| dot(row, &r.coords)).collect();
        let neg: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_negative()).collect();
        if neg.is_empty() {
            for (ray, value) in rays.iter_mut().zip(&values) {
                if value.is_zero() {
                    ray.tight.insert(h);
                }
            }
            continue;
        }
        let pos: Vec<usize> = (0..rays.len()).filter(|&i| values[i].is_positive()).collect();

        let mut created = Vec::new();
        for &p in &pos {
            for &q in &neg {
                let common = rays[p].tight.intersection(&rays[q].tight);
                if common.len() + 1 < m {
                    continue;
                }
                let blocked = rays
                    .iter()
                    .enumerate()
                    .any(|(k, r)| k != p && k != q && common.is_subset(&r.tight));
                if blocked {
                    continue;
                }
                let coords: Vec<BigInt> = rays[q]
                    .coords
                    .iter()
                    .zip(&rays[p].coords)
                    .map(|(cq, cp)| &values[p] * cq - &values[q] * cp)
                    .collect();
                let mut tight = common;
                tight.insert(h);
                created.push(Ray { coords: primitive(coords), tight });
            }
        }

        let mut kept = Vec::with_capacity(rays.len() + created.len());
        for (i, mut ray) in rays.into_iter().enumerate() {
            if values[i].is_zero() {
                ray.tight.insert(h);
                kept.push(ray);
            } else if values[i].is_positive() {
                kept.push(ray);
            }
        }
        kept.extend(created);
        rays = kept;
    }

    let mut out: Vec<Facet> = rays
        .into_iter()
        .map(|r| {
            let mut coords = r.coords;
            let offset = coords.pop().expect("m + 1 coordinates");
            Facet { vertices: r.tight.iter().collect(), normal: coords, offset }
        })
        .collect();
    out.sort();
    Ok(out)
}

fn to_rat(v: &[BigInt]) -> Vec<Rational> {
    v.iter().map(|x| Rational::from_integer(x.clone())).collect()
}

fn normal_rank(facets: &[&Facet]) -> usize {
    let Some(first) = facets.first() else { return 0 };
    let rows = facets.iter().map(|f| to_rat(&f.normal)).collect();
    rank(&RatMatrix::from_rows(first.normal.len(), rows).expect("equal-length normals"))
}

/// For each input point whether it is a vertex of the hull, and the edges
/// between vertices as sorted index pairs.
pub(crate) fn extreme_and_edges(
    points: &[Vec<Rational>],
    limits: &HullLimits,
) -> Result<(Vec<bool>, Vec<(usize, usize)>), GeometryError> {
    let frame = LatticeFrame::new(points)?;
    let m = frame.dim();
    limits.check(m, points.len())?;
    if m == 0 {
        return Ok((vec![true], Vec::new()));
    }
    let coords = frame.all_coordinates(points)?;
    let facets = facets(&coords, limits)?;
    let containing = |set: &[usize]| -> Vec<&Facet> {
        facets.iter().filter(|f| set.iter().all(|i| f.vertices.binary_search(i).is_ok())).collect()
    };
    let extreme: Vec<bool> = (0..points.len()).map(|i| normal_rank(&containing(&[i])) == m).collect();
    let mut edges = Vec::new();
    for a in 0..points.len() {
        for b in a + 1..points.len() {
            if extreme[a] && extreme[b] && normal_rank(&containing(&[a, b])) == m - 1 {
                edges.push((a, b));
            }
        }
    }
    Ok((extreme, edges))
}
