use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use super::IntMatrix;

/// Row-style Hermite normal form `h = u · a`.
///
/// Pivots are positive, entries above each pivot lie in `[0, pivot)`, and
/// the `rank` nonzero rows come first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hnf {
    pub h: IntMatrix,
    pub u: IntMatrix,
    pub rank: usize,
    pub pivot_cols: Vec<usize>,
}

/// `row[dst] -= q * row[src]`, applied to both matrices.
fn sub_row(h: &mut IntMatrix, u: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for c in 0..h.cols() {
        let delta = q * h.get(src, c);
        *h.get_mut(dst, c) -= delta;
    }
    for c in 0..u.cols() {
        let delta = q * u.get(src, c);
        *u.get_mut(dst, c) -= delta;
    }
}

fn negate_row(h: &mut IntMatrix, u: &mut IntMatrix, row: usize) {
    for c in 0..h.cols() {
        let v = -h.get(row, c).clone();
        *h.get_mut(row, c) = v;
    }
    for c in 0..u.cols() {
        let v = -u.get(row, c).clone();
        *u.get_mut(row, c) = v;
    }
}

pub fn hnf(a: &IntMatrix) -> Hnf {
    let (rows, cols) = (a.rows(), a.cols());
    let mut h = a.clone();
    let mut u = IntMatrix::identity(rows);
    let mut pivot_cols = Vec::new();
    let mut r = 0;

    for c in 0..cols {
        if r == rows {
            break;
        }
        // Euclid on column c among rows r.., smallest magnitude becomes the pivot.
        loop {
            let best = (r..rows)
                .filter(|&i| !h.get(i, c).is_zero())
                .min_by(|&i, &j| h.get(i, c).abs().cmp(&h.get(j, c).abs()));
            let Some(best) = best else { break };
            h.swap_rows(r, best);
            u.swap_rows(r, best);
            let mut done = true;
            for i in r + 1..rows {
                if h.get(i, c).is_zero() {
                    continue;
                }
                let q = h.get(i, c).div_floor(h.get(r, c));
                sub_row(&mut h, &mut u, i, r, &q);
                if !h.get(i, c).is_zero() {
                    done = false;
                }
            }
            if done {
                break;
            }
        }
        if h.get(r, c).is_zero() {
            continue;
        }
        if h.get(r, c).is_negative() {
            negate_row(&mut h, &mut u, r);
        }
        let pivot = h.get(r, c).clone();
        for i in 0..r {
            let q = h.get(i, c).div_floor(&pivot);
            sub_row(&mut h, &mut u, i, r, &q);
        }
        pivot_cols.push(c);
        r += 1;
    }

    Hnf { h, u, rank: r, pivot_cols }
}
