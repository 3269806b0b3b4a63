use super::{BirkhoffError, CycleMatrix};

/// A vertex of `B_n`: the permutation matrix with a 1 at `(i, sigma(i))`.
///
/// Rows and columns are numbered from 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationMatrix {
    sigma: Vec<usize>,
}

impl PermutationMatrix {
    pub fn new(sigma: Vec<usize>) -> Result<Self, BirkhoffError> {
        let n = sigma.len();
        if n == 0 {
            return Err(BirkhoffError::ZeroOrder);
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s == 0 || s > n || seen[s - 1] {
                return Err(BirkhoffError::InvalidPermutation(sigma));
            }
            seen[s - 1] = true;
        }
        Ok(Self { sigma })
    }

    pub fn identity(n: usize) -> Self {
        Self { sigma: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.sigma.len()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    /// Column of the 1 in row `i`.
    pub fn image(&self, i: usize) -> usize {
        self.sigma[i - 1]
    }

    pub fn entry(&self, i: usize, j: usize) -> i64 {
        i64::from(self.sigma[i - 1] == j)
    }

    pub fn to_rows(&self) -> Vec<Vec<i64>> {
        (1..=self.n()).map(|i| (1..=self.n()).map(|j| self.entry(i, j)).collect()).collect()
    }

    /// Row-major concatenation of the matrix rows.
    pub fn vectorize(&self) -> Vec<i64> {
        self.to_rows().concat()
    }

    /// Entrywise `self - other`.
    pub fn difference(&self, other: &Self) -> Result<Vec<i8>, BirkhoffError> {
        if self.n() != other.n() {
            return Err(BirkhoffError::OrderMismatch { left: self.n(), right: other.n() });
        }
        let n = self.n();
        let mut out = vec![0i8; n * n];
        for i in 0..n {
            out[i * n + self.sigma[i] - 1] += 1;
            out[i * n + other.sigma[i] - 1] -= 1;
        }
        Ok(out)
    }
}

/// All `n!` permutation matrices, in lexicographic order of `sigma`.
pub fn enumerate_vertices(n: usize) -> Result<Vec<PermutationMatrix>, BirkhoffError> {
    if n == 0 {
        return Err(BirkhoffError::ZeroOrder);
    }
    let mut current: Vec<usize> = (1..=n).collect();
    let mut out = vec![PermutationMatrix { sigma: current.clone() }];
    while next_permutation(&mut current) {
        out.push(PermutationMatrix { sigma: current.clone() });
    }
    Ok(out)
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Vertices `p` and `q` of `B_n` span an edge iff `p - q` is a single
/// cycle in `K_{n,n}`, i.e. `q ∘ p⁻¹` moves its support as one cycle.
pub fn are_adjacent(p: &PermutationMatrix, q: &PermutationMatrix) -> Result<bool, BirkhoffError> {
    if p.n() != q.n() {
        return Err(BirkhoffError::OrderMismatch { left: p.n(), right: q.n() });
    }
    if p == q {
        return Err(BirkhoffError::IdenticalVertices);
    }
    let n = p.n();
    let mut row_of_p_col = vec![0usize; n + 1];
    for i in 1..=n {
        row_of_p_col[p.image(i)] = i;
    }
    let moved: Vec<usize> = (1..=n).filter(|&i| p.image(i) != q.image(i)).collect();
    // Walk row -> q's column -> the row where p has that column.
    let start = moved[0];
    let mut row = start;
    let mut length = 0;
    loop {
        row = row_of_p_col[q.image(row)];
        length += 1;
        if row == start {
            break;
        }
    }
    Ok(length == moved.len())
}

/// Index pairs `(a, b)`, `a < b`, of adjacent vertices in `vertices`.
pub fn adjacent_pairs(vertices: &[PermutationMatrix]) -> Result<Vec<(usize, usize)>, BirkhoffError> {
    let mut edges = Vec::new();
    for a in 0..vertices.len() {
        for b in a + 1..vertices.len() {
            if are_adjacent(&vertices[a], &vertices[b])? {
                edges.push((a, b));
            }
        }
    }
    Ok(edges)
}

impl TryFrom<(&PermutationMatrix, &PermutationMatrix)> for CycleMatrix {
    type Error = BirkhoffError;

    fn try_from((p, q): (&PermutationMatrix, &PermutationMatrix)) -> Result<Self, Self::Error> {
        CycleMatrix::from_entries(p.n(), p.difference(q)?)
    }
}
