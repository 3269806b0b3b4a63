use std::ops::Neg;

use super::BirkhoffError;

/// An edge direction of `B_n`: a `(-1, 0, 1)` matrix whose support is one
/// directed simple cycle of `K_{n,n}`.
///
/// `+1` at `(i, j)` is the arc `u_i → v_j`, `-1` is the arc `v_j → u_i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleMatrix {
    n: usize,
    entries: Vec<i8>,
}

impl CycleMatrix {
    /// Validates row-major `entries` of an `n × n` matrix.
    pub fn from_entries(n: usize, entries: Vec<i8>) -> Result<Self, BirkhoffError> {
        let invalid = |why: &str| Err(BirkhoffError::InvalidCycleMatrix(why.to_string()));
        if entries.len() != n * n {
            return invalid("entry count is not n²");
        }
        if entries.iter().any(|&e| !(-1..=1).contains(&e)) {
            return invalid("entries must be -1, 0 or 1");
        }
        let line_ok = |line: &mut dyn Iterator<Item = i8>| {
            let (mut plus, mut minus) = (0, 0);
            for e in line {
                match e {
                    1 => plus += 1,
                    -1 => minus += 1,
                    _ => {}
                }
            }
            (plus == 0 && minus == 0) || (plus == 1 && minus == 1)
        };
        for i in 0..n {
            if !line_ok(&mut (0..n).map(|j| entries[i * n + j])) {
                return invalid("a row must hold nothing or exactly one +1 and one -1");
            }
            if !line_ok(&mut (0..n).map(|r| entries[r * n + i])) {
                return invalid("a column must hold nothing or exactly one +1 and one -1");
            }
        }
        let support = entries.iter().filter(|&&e| e != 0).count();
        if support == 0 {
            return invalid("matrix is zero");
        }
        let m = Self { n, entries };
        let first = (0..n * n).find(|&k| m.entries[k] != 0).expect("nonempty support");
        if m.traverse_from(first / n + 1, first % n + 1).len() != support {
            return invalid("support splits into more than one cycle");
        }
        Ok(m)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Entry at 1-based `(i, j)`.
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    pub fn entries(&self) -> &[i8] {
        &self.entries
    }

    /// Number of nonzero entries (the cycle length in `K_{n,n}`).
    pub fn len(&self) -> usize {
        self.entries.iter().filter(|&&e| e != 0).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Nonzero positions in cycle order starting at `(i, j)`: step to the
    /// other entry in the same row, then the other in that column, and so on.
    pub fn traverse_from(&self, i: usize, j: usize) -> Vec<(usize, usize)> {
        let mut out = vec![(i, j)];
        let (mut r, mut c) = (i, j);
        let mut along_row = true;
        loop {
            let next = if along_row {
                (1..=self.n).find(|&k| k != c && self.get(r, k) != 0).map(|k| (r, k))
            } else {
                (1..=self.n).find(|&k| k != r && self.get(k, c) != 0).map(|k| (k, c))
            };
            let Some(next) = next else { break };
            if next == (i, j) {
                break;
            }
            (r, c) = next;
            out.push(next);
            along_row = !along_row;
        }
        out
    }

    pub fn row_sums(&self) -> Vec<i64> {
        (1..=self.n).map(|i| (1..=self.n).map(|j| i64::from(self.get(i, j))).sum()).collect()
    }

    pub fn col_sums(&self) -> Vec<i64> {
        (1..=self.n).map(|j| (1..=self.n).map(|i| i64::from(self.get(i, j))).sum()).collect()
    }
}

impl Neg for &CycleMatrix {
    type Output = CycleMatrix;

    fn neg(self) -> CycleMatrix {
        CycleMatrix { n: self.n, entries: self.entries.iter().map(|e| -e).collect() }
    }
}

impl Neg for CycleMatrix {
    type Output = CycleMatrix;

    fn neg(self) -> CycleMatrix {
        -&self
    }
}

/// Every directed simple cycle of `K_{n,n}` as a [`CycleMatrix`].
///
/// Undirected cycles are found by depth-first search from their lowest row
/// vertex, leaving through the lower of its two column neighbours. Each is
/// emitted in that orientation followed by its negation.
pub fn enumerate_edge_directions(n: usize) -> Result<Vec<CycleMatrix>, BirkhoffError> {
    if n < 2 {
        return Err(BirkhoffError::OrderTooSmall { n, min: 2 });
    }
    let mut out = Vec::new();
    let mut search = CycleSearch { n, rows: Vec::new(), cols: Vec::new(), row_used: vec![false; n + 1], col_used: vec![false; n + 1] };
    for start in 1..=n {
        for first_col in 1..=n {
            search.rows = vec![start];
            search.cols = vec![first_col];
            search.row_used.fill(false);
            search.col_used.fill(false);
            search.row_used[start] = true;
            search.col_used[first_col] = true;
            search.extend(&mut out);
        }
    }
    Ok(out)
}

struct CycleSearch {
    n: usize,
    rows: Vec<usize>,
    cols: Vec<usize>,
    row_used: Vec<bool>,
    col_used: Vec<bool>,
}

impl CycleSearch {
    // Invariant: rows.len() == cols.len(); the path ends at column cols.last().
    fn extend(&mut self, out: &mut Vec<CycleMatrix>) {
        let start = self.rows[0];
        let last_col = *self.cols.last().expect("path has a column");
        if self.rows.len() >= 2 && last_col > self.cols[0] {
            let m = self.close();
            out.push(m.clone());
            out.push(-m);
        }
        for row in start + 1..=self.n {
            if self.row_used[row] {
                continue;
            }
            self.row_used[row] = true;
            self.rows.push(row);
            for col in 1..=self.n {
                if self.col_used[col] {
                    continue;
                }
                self.col_used[col] = true;
                self.cols.push(col);
                self.extend(out);
                self.cols.pop();
                self.col_used[col] = false;
            }
            self.rows.pop();
            self.row_used[row] = false;
        }
    }

    fn close(&self) -> CycleMatrix {
        let n = self.n;
        let k = self.rows.len();
        let mut entries = vec![0i8; n * n];
        for t in 0..k {
            let col = self.cols[t];
            entries[(self.rows[t] - 1) * n + col - 1] = 1;
            entries[(self.rows[(t + 1) % k] - 1) * n + col - 1] = -1;
        }
        CycleMatrix { n, entries }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn binom(n: u64, k: u64) -> u64 {
        (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
    }

    fn factorial(n: u64) -> u64 {
        (1..=n).product()
    }

    // Directed 2k-cycles of K_{n,n}: choose k rows and k columns, then
    // k!(k-1)! cyclic arrangements, each directed.
    fn directed_cycle_count(n: u64) -> u64 {
        (2..=n).map(|k| binom(n, k).pow(2) * factorial(k) * factorial(k - 1)).sum()
    }

    #[test]
    fn counts_match_closed_form() {
        assert_eq!(directed_cycle_count(2), 2);
        assert_eq!(directed_cycle_count(3), 30);
        assert_eq!(directed_cycle_count(4), 408);
        assert_eq!(directed_cycle_count(5), 7880);
        for n in 2..=5 {
            let cycles = enumerate_edge_directions(n).unwrap();
            assert_eq!(cycles.len() as u64, directed_cycle_count(n as u64), "n = {n}");
            let distinct: HashSet<_> = cycles.iter().collect();
            assert_eq!(distinct.len(), cycles.len());
        }
    }

    #[test]
    fn n2_cycles() {
        let cycles = enumerate_edge_directions(2).unwrap();
        let m = CycleMatrix::from_entries(2, vec![1, -1, -1, 1]).unwrap();
        assert_eq!(cycles, vec![m.clone(), -m]);
    }

    #[test]
    fn n3_by_length() {
        let cycles = enumerate_edge_directions(3).unwrap();
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 18);
        assert_eq!(cycles.iter().filter(|c| c.len() == 6).count(), 12);
    }

    #[test]
    fn enumerated_matrices_are_valid() {
        for n in 2..=4 {
            for m in enumerate_edge_directions(n).unwrap() {
                assert!(m.row_sums().iter().all(|&s| s == 0));
                assert!(m.col_sums().iter().all(|&s| s == 0));
                assert!(m.len() >= 4 && m.len() % 2 == 0);
                assert_eq!(CycleMatrix::from_entries(n, m.entries().to_vec()).unwrap(), m);
                assert!(!m.is_empty());
            }
        }
    }

    #[test]
    fn rejects_bad_matrices() {
        assert!(enumerate_edge_directions(1).is_err());
        assert!(CycleMatrix::from_entries(2, vec![0; 4]).is_err());
        assert!(CycleMatrix::from_entries(2, vec![1, 1, -1, -1]).is_err());
        assert!(CycleMatrix::from_entries(2, vec![2, -2, -2, 2]).is_err());
        // Two disjoint 4-cycles.
        #[rustfmt::skip]
        let two = vec![
            1, -1, 0, 0,
            -1, 1, 0, 0,
            0, 0, 1, -1,
            0, 0, -1, 1,
        ];
        assert!(CycleMatrix::from_entries(4, two).is_err());
    }

    #[test]
    fn traversal_alternates() {
        #[rustfmt::skip]
        let m = CycleMatrix::from_entries(4, vec![
            0, 0, 0, 0,
            0, 1, 0, -1,
            0, 0, 0, 0,
            0, -1, 0, 1,
        ]).unwrap();
        assert_eq!(m.traverse_from(4, 4), vec![(4, 4), (4, 2), (2, 2), (2, 4)]);
    }
}
