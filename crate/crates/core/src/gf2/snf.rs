//! Smith normal form over the principal ideal domain `F[T]`.
//!
//! The reduction pivots on an entry of minimal degree, clears its row and
//! column by exact division, and restores the divisibility chain by adding
//! an offending row into the pivot row. Every elementary operation is
//! mirrored into the transformation matrices and their inverses, so the
//! output can be checked by multiplication alone.

use super::poly::PolyT;
use std::fmt;

/// Dense matrix over `F[T]`, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct PolyMat {
    rows: usize,
    cols: usize,
    data: Vec<PolyT>,
}

impl PolyMat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![PolyT::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = PolyT::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<PolyT>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Self {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn mul(&self, other: &PolyMat) -> PolyMat {
        assert_eq!(self.cols, other.rows);
        let mut out = PolyMat::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] = &out[(i, j)] + &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self[(i, j)].is_zero()))
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    /// `row[dst] += q * row[src]`
    fn add_row(&mut self, dst: usize, src: usize, q: &PolyT) {
        for j in 0..self.cols {
            let s = &self[(src, j)];
            if !s.is_zero() {
                let v = &self[(dst, j)] + &(q * s);
                self[(dst, j)] = v;
            }
        }
    }

    /// `col[dst] += q * col[src]`
    fn add_col(&mut self, dst: usize, src: usize, q: &PolyT) {
        for i in 0..self.rows {
            let s = &self[(i, src)];
            if !s.is_zero() {
                let v = &self[(i, dst)] + &(q * s);
                self[(i, dst)] = v;
            }
        }
    }
}

impl std::ops::Index<(usize, usize)> for PolyMat {
    type Output = PolyT;
    fn index(&self, (i, j): (usize, usize)) -> &PolyT {
        &self.data[i * self.cols + j]
    }
}

impl std::ops::IndexMut<(usize, usize)> for PolyMat {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut PolyT {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for PolyMat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self[(i, j)].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Smith form `U·M·V = D` with inverse certificates.
#[derive(Clone, Debug)]
pub struct Snf {
    pub d: PolyMat,
    pub u: PolyMat,
    pub u_inv: PolyMat,
    pub v: PolyMat,
    pub v_inv: PolyMat,
    /// Number of nonzero invariant factors.
    pub rank: usize,
}

impl Snf {
    /// The nonzero diagonal entries, each dividing the next.
    pub fn invariant_factors(&self) -> Vec<PolyT> {
        (0..self.rank).map(|i| self.d[(i, i)].clone()).collect()
    }

    /// Checks every certificate by multiplication: `U·M·V = D`, `D` diagonal
    /// with a divisibility chain, and `U·U⁻¹ = I`, `V·V⁻¹ = I`.
    pub fn verify(&self, m: &PolyMat) -> bool {
        let (r, c) = (m.nrows(), m.ncols());
        let chain = (1..self.rank).all(|i| self.d[(i - 1, i - 1)].divides(&self.d[(i, i)]));
        let tail_zero = (self.rank..r.min(c)).all(|i| self.d[(i, i)].is_zero());
        self.u.mul(m).mul(&self.v) == self.d
            && self.d.is_diagonal()
            && chain
            && tail_zero
            && self.u.mul(&self.u_inv) == PolyMat::identity(r)
            && self.v.mul(&self.v_inv) == PolyMat::identity(c)
    }
}

/// Smith normal form of a matrix over `F[T]`.
pub fn snf_fu(m: &PolyMat) -> Snf {
    let (r, c) = (m.nrows(), m.ncols());
    let mut a = m.clone();
    let mut u = PolyMat::identity(r);
    let mut u_inv = PolyMat::identity(r);
    let mut v = PolyMat::identity(c);
    let mut v_inv = PolyMat::identity(c);

    // Row op `row[dst] += q row[src]` is left multiplication by
    // E = I + q e_{dst,src}, whose inverse over GF(2) is E itself.
    let row_op = |a: &mut PolyMat, u: &mut PolyMat, u_inv: &mut PolyMat, dst, src, q: &PolyT| {
        a.add_row(dst, src, q);
        u.add_row(dst, src, q);
        u_inv.add_col(src, dst, q);
    };
    let col_op = |a: &mut PolyMat, v: &mut PolyMat, v_inv: &mut PolyMat, dst, src, q: &PolyT| {
        a.add_col(dst, src, q);
        v.add_col(dst, src, q);
        v_inv.add_row(src, dst, q);
    };

    let mut rank = 0;
    for t in 0..r.min(c) {
        loop {
            let mut best: Option<(u32, usize, usize)> = None;
            for i in t..r {
                for j in t..c {
                    if let Some(deg) = a[(i, j)].degree() {
                        if best.is_none_or(|(bd, _, _)| deg < bd) {
                            best = Some((deg, i, j));
                        }
                    }
                }
            }
            let Some((_, pi, pj)) = best else {
                return Snf {
                    d: a,
                    u,
                    u_inv,
                    v,
                    v_inv,
                    rank,
                };
            };
            a.swap_rows(t, pi);
            u.swap_rows(t, pi);
            u_inv.swap_cols(t, pi);
            a.swap_cols(t, pj);
            v.swap_cols(t, pj);
            v_inv.swap_rows(t, pj);

            let p = a[(t, t)].clone();
            let mut dirty = false;
            for i in t + 1..r {
                if a[(i, t)].is_zero() {
                    continue;
                }
                let (q, rem) = a[(i, t)].div_rem(&p);
                row_op(&mut a, &mut u, &mut u_inv, i, t, &q);
                dirty |= !rem.is_zero();
            }
            for j in t + 1..c {
                if a[(t, j)].is_zero() {
                    continue;
                }
                let (q, rem) = a[(t, j)].div_rem(&p);
                col_op(&mut a, &mut v, &mut v_inv, j, t, &q);
                dirty |= !rem.is_zero();
            }
            if dirty {
                continue;
            }
            let offender = (t + 1..r).find(|&i| (t + 1..c).any(|j| !p.divides(&a[(i, j)])));
            match offender {
                Some(i) => row_op(&mut a, &mut u, &mut u_inv, t, i, &PolyT::one()),
                None => break,
            }
        }
        rank += 1;
    }
    Snf {
        d: a,
        u,
        u_inv,
        v,
        v_inv,
        rank,
    }
}
