use super::bits::BitVec;

/// Sparse GF(2) matrix stored column-wise; each column is a strictly
/// increasing list of row indices holding a 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatGF2 {
    rows: usize,
    cols: Vec<Vec<u32>>,
}

/// Result of [`affine_solve`]. `solution` is `None` when `Ax = b` has no
/// solution; the kernel basis is returned either way.
#[derive(Clone, Debug)]
pub struct AffineSolution {
    pub solution: Option<BitVec>,
    pub kernel: Vec<BitVec>,
    pub rank: usize,
}

impl SparseMatGF2 {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols: vec![Vec::new(); cols],
        }
    }

    /// Builds a matrix from `(row, col)` positions. A position listed twice
    /// cancels, matching addition over GF(2).
    pub fn from_entries<I: IntoIterator<Item = (usize, usize)>>(
        rows: usize,
        cols: usize,
        entries: I,
    ) -> Self {
        let mut m = Self::zeros(rows, cols);
        for (r, c) in entries {
            assert!(r < rows && c < cols, "entry ({r},{c}) out of bounds");
            m.cols[c].push(r as u32);
        }
        for col in &mut m.cols {
            normalize(col);
        }
        m
    }

    pub fn from_dense(rows: &[Vec<u8>]) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, Vec::len);
        Self::from_entries(
            nr,
            nc,
            rows.iter().enumerate().flat_map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, &x)| x & 1 == 1)
                    .map(move |(j, _)| (i, j))
            }),
        )
    }

    /// Builds a matrix from already-normalized columns.
    pub fn from_columns(rows: usize, cols: Vec<Vec<u32>>) -> Self {
        debug_assert!(cols
            .iter()
            .all(|c| c.windows(2).all(|w| w[0] < w[1]) && c.iter().all(|&r| (r as usize) < rows)));
        Self { rows, cols }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn column(&self, j: usize) -> &[u32] {
        &self.cols[j]
    }

    pub fn columns(&self) -> &[Vec<u32>] {
        &self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> bool {
        self.cols[c].binary_search(&(r as u32)).is_ok()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.cols
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |&r| (r as usize, c)))
    }

    pub fn nnz(&self) -> usize {
        self.cols.iter().map(Vec::len).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = vec![Vec::new(); self.rows];
        for (c, col) in self.cols.iter().enumerate() {
            for &r in col {
                t[r as usize].push(c as u32);
            }
        }
        Self {
            rows: self.cols.len(),
            cols: t,
        }
    }

    pub fn mul_vec(&self, x: &BitVec) -> BitVec {
        assert_eq!(x.len(), self.ncols());
        let mut y = BitVec::zeros(self.rows);
        for j in x.ones() {
            for &r in &self.cols[j] {
                y.flip(r as usize);
            }
        }
        y
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &SparseMatGF2) -> SparseMatGF2 {
        assert_eq!(self.ncols(), other.nrows());
        let cols = other
            .cols
            .iter()
            .map(|oc| {
                let mut acc = Vec::new();
                for &k in oc {
                    acc.extend_from_slice(&self.cols[k as usize]);
                }
                normalize(&mut acc);
                acc
            })
            .collect();
        SparseMatGF2 {
            rows: self.rows,
            cols,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.cols.iter().all(Vec::is_empty)
    }

    /// Dense bit-packed rows.
    pub fn to_dense_rows(&self) -> Vec<BitVec> {
        let mut rows = vec![BitVec::zeros(self.ncols()); self.rows];
        for (r, c) in self.entries() {
            rows[r].flip(c);
        }
        rows
    }

    pub fn rank(&self) -> usize {
        affine_solve(self, &BitVec::zeros(self.rows)).rank
    }
}

/// Sorts and cancels repeated indices in pairs.
pub(crate) fn normalize(col: &mut Vec<u32>) {
    col.sort_unstable();
    let mut out = 0;
    let mut i = 0;
    while i < col.len() {
        if i + 1 < col.len() && col[i] == col[i + 1] {
            i += 2;
        } else {
            col[out] = col[i];
            out += 1;
            i += 1;
        }
    }
    col.truncate(out);
}

/// Solves `Ax = b` over GF(2) by dense Gauss-Jordan elimination on
/// bit-packed augmented rows. Free variables are set to zero in the
/// returned particular solution; the kernel basis has one vector per free
/// column, in increasing column order.
pub fn affine_solve(a: &SparseMatGF2, b: &BitVec) -> AffineSolution {
    assert_eq!(b.len(), a.nrows(), "right-hand side length mismatch");
    let n = a.ncols();
    let mut rows: Vec<BitVec> = vec![BitVec::zeros(n + 1); a.nrows()];
    for (r, c) in a.entries() {
        rows[r].flip(c);
    }
    for r in b.ones() {
        rows[r].flip(n);
    }

    let mut pivot_cols = Vec::new();
    let mut next = 0;
    for c in 0..n {
        let Some(p) = (next..rows.len()).find(|&i| rows[i].get(c)) else {
            continue;
        };
        rows.swap(next, p);
        let pivot = std::mem::take(&mut rows[next]);
        let w = c / 64;
        for (i, row) in rows.iter_mut().enumerate() {
            if i != next && row.get(c) {
                row.xor_assign_from(&pivot, w);
            }
        }
        rows[next] = pivot;
        pivot_cols.push(c);
        next += 1;
    }
    let rank = next;

    let consistent = rows[rank..].iter().all(|r| !r.get(n));
    let solution = consistent.then(|| {
        let mut x = BitVec::zeros(n);
        for (i, &c) in pivot_cols.iter().enumerate() {
            if rows[i].get(n) {
                x.set(c, true);
            }
        }
        x
    });

    let mut is_pivot = vec![false; n];
    for &c in &pivot_cols {
        is_pivot[c] = true;
    }
    let kernel = (0..n)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = BitVec::zeros(n);
            v.set(f, true);
            for (i, &c) in pivot_cols.iter().enumerate() {
                if rows[i].get(f) {
                    v.set(c, true);
                }
            }
            v
        })
        .collect();

    AffineSolution {
        solution,
        kernel,
        rank,
    }
}
