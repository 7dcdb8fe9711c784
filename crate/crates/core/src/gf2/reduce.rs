//! Sparse column reduction of GF(2) boundary matrices.
//!
//! Columns are reduced left to right with the pivot of a column taken to be
//! its largest row index. For any ordering of the coordinates the zero
//! columns `Z` index a cycle basis with distinct leading terms, the pivot
//! rows `L` index a boundary basis with distinct leading terms, and every
//! pivot row lies in `Z`. Positions in `Z \ L` are the essential ones: the
//! prefix `0..=k` carries exactly `|(Z \ L) ∩ [0,k]|` independent homology
//! classes. Sorting coordinates by a level function therefore reads off the
//! level at which each homology class is first realized.

use super::sparse::{normalize, SparseMatGF2};

const NONE: u32 = u32::MAX;

/// `a ^= b` for strictly increasing index lists, using `scratch` as the
/// output buffer.
#[inline]
fn xor_into(a: &mut Vec<u32>, b: &[u32], scratch: &mut Vec<u32>) {
    scratch.clear();
    scratch.reserve(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        let (x, y) = (a[i], b[j]);
        if x < y {
            scratch.push(x);
            i += 1;
        } else if y < x {
            scratch.push(y);
            j += 1;
        } else {
            i += 1;
            j += 1;
        }
    }
    scratch.extend_from_slice(&a[i..]);
    scratch.extend_from_slice(&b[j..]);
    std::mem::swap(a, scratch);
}

/// A homology class that survives the whole reduction, together with the
/// ordering position where it first appears.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Essential {
    /// Coordinate index in the caller's numbering.
    pub index: usize,
    pub level: i64,
    pub parity: bool,
}

/// Essential coordinates of the complex with boundary columns `boundary`
/// (column `j` lists the coordinates of `∂e_j`), after ordering coordinates
/// by `level` descending with ties broken by index.
///
/// `parity` must be a Z/2 grading that the boundary flips; it enables the
/// clearing optimization and is reported back with each essential class.
pub fn essential_classes(boundary: &[Vec<u32>], level: &[i64], parity: &[bool]) -> Vec<Essential> {
    let n = boundary.len();
    assert_eq!(level.len(), n);
    assert_eq!(parity.len(), n);

    let mut order: Vec<u32> = (0..n as u32).collect();
    order.sort_by(|&a, &b| level[b as usize].cmp(&level[a as usize]).then(a.cmp(&b)));
    let mut pos = vec![0u32; n];
    for (p, &i) in order.iter().enumerate() {
        pos[i as usize] = p as u32;
    }

    // Columns in position space.
    let cols: Vec<Vec<u32>> = order
        .iter()
        .map(|&i| {
            let mut c: Vec<u32> = boundary[i as usize]
                .iter()
                .map(|&r| pos[r as usize])
                .collect();
            normalize(&mut c);
            c
        })
        .collect();

    let mut low_owner = vec![NONE; n];
    let mut reduced: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut is_zero = vec![false; n];
    let mut cleared = vec![false; n];
    let mut scratch = Vec::new();

    // Reduce the parity with more boundary entries first: its pivots clear
    // columns of the other parity.
    let weight = |p: bool| -> usize {
        (0..n)
            .filter(|&q| parity[order[q] as usize] == p)
            .map(|q| cols[q].len())
            .sum()
    };
    let first = weight(true) >= weight(false);

    for pass in [first, !first] {
        for p in 0..n {
            if parity[order[p] as usize] != pass {
                continue;
            }
            if cleared[p] {
                is_zero[p] = true;
                continue;
            }
            let mut col = cols[p].clone();
            while let Some(&low) = col.last() {
                let owner = low_owner[low as usize];
                if owner == NONE {
                    break;
                }
                xor_into(&mut col, &reduced[owner as usize], &mut scratch);
            }
            match col.last() {
                None => is_zero[p] = true,
                Some(&low) => {
                    low_owner[low as usize] = p as u32;
                    cleared[low as usize] = true;
                    reduced[p] = col;
                }
            }
        }
    }

    (0..n)
        .filter(|&p| is_zero[p] && low_owner[p] == NONE)
        .map(|p| {
            let i = order[p] as usize;
            Essential {
                index: i,
                level: level[i],
                parity: parity[i],
            }
        })
        .collect()
}

/// Rank of the homology of the complex with the given boundary columns.
pub fn homology_rank(boundary: &[Vec<u32>], parity: &[bool]) -> usize {
    let level = vec![0i64; boundary.len()];
    essential_classes(boundary, &level, parity).len()
}

/// A basis of homology representatives: for each essential coordinate, a
/// cycle whose leading coordinate is that one. Cycles are returned as
/// sorted coordinate lists in the caller's numbering.
pub fn homology_representatives(boundary: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let n = boundary.len();
    let mut low_owner = vec![NONE; n];
    let mut reduced: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut track: Vec<Vec<u32>> = vec![Vec::new(); n];
    let mut zero = vec![false; n];
    let mut scratch = Vec::new();
    for j in 0..n {
        let mut col = boundary[j].clone();
        normalize(&mut col);
        let mut v = vec![j as u32];
        while let Some(&low) = col.last() {
            let owner = low_owner[low as usize];
            if owner == NONE {
                break;
            }
            xor_into(&mut col, &reduced[owner as usize], &mut scratch);
            xor_into(&mut v, &track[owner as usize], &mut scratch);
        }
        match col.last() {
            None => zero[j] = true,
            Some(&low) => {
                low_owner[low as usize] = j as u32;
                reduced[j] = col;
            }
        }
        track[j] = v;
    }
    (0..n)
        .filter(|&j| zero[j] && low_owner[j] == NONE)
        .map(|j| std::mem::take(&mut track[j]))
        .collect()
}

/// Column space of a sparse matrix in reduced form, for repeated
/// membership queries.
pub struct ColumnSpace {
    low_owner: Vec<u32>,
    reduced: Vec<Vec<u32>>,
}

impl ColumnSpace {
    pub fn new(m: &SparseMatGF2) -> Self {
        let mut low_owner = vec![NONE; m.nrows()];
        let mut reduced: Vec<Vec<u32>> = Vec::new();
        let mut scratch = Vec::new();
        for c in m.columns() {
            let mut col = c.clone();
            while let Some(&low) = col.last() {
                let owner = low_owner[low as usize];
                if owner == NONE {
                    break;
                }
                xor_into(&mut col, &reduced[owner as usize], &mut scratch);
            }
            if let Some(&low) = col.last() {
                low_owner[low as usize] = reduced.len() as u32;
                reduced.push(col);
            }
        }
        Self { low_owner, reduced }
    }

    pub fn rank(&self) -> usize {
        self.reduced.len()
    }

    /// Whether the vector with the given support lies in the span.
    pub fn contains(&self, support: &[u32]) -> bool {
        let mut col = support.to_vec();
        normalize(&mut col);
        let mut scratch = Vec::new();
        while let Some(&low) = col.last() {
            let owner = self.low_owner[low as usize];
            if owner == NONE {
                return false;
            }
            xor_into(&mut col, &self.reduced[owner as usize], &mut scratch);
        }
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::bits::BitVec;
    use crate::gf2::sparse::affine_solve;
    use proptest::prelude::*;

    // Staircase S_1 at V = 1, U = 0: coordinates y_{-1}, y_0, y_1 with
    // ∂y_0 = y_1.
    #[test]
    fn small_staircase_quotient() {
        let boundary = vec![vec![], vec![2], vec![]];
        let parity = vec![false, true, false];
        assert_eq!(homology_rank(&boundary, &parity), 1);
        let reps = homology_representatives(&boundary);
        assert_eq!(reps, vec![vec![0]]);
    }

    #[test]
    fn level_order_picks_highest_birth() {
        // ∂e1 = e0 + e2; homology spanned by [e0] = [e2].
        let boundary = vec![vec![], vec![0, 2], vec![]];
        let parity = vec![false, true, false];
        let ess = essential_classes(&boundary, &[5, 4, 3], &parity);
        assert_eq!(ess.len(), 1);
        assert_eq!(ess[0].level, 5);
        let ess = essential_classes(&boundary, &[3, 4, 5], &parity);
        assert_eq!(ess[0].level, 5);
        assert_eq!(ess[0].index, 2);
    }

    /// Random chain complex: a random invertible change of basis applied to
    /// a direct sum of `pairs` acyclic pairs and `free` isolated cycles.
    fn random_complex(
        pairs: usize,
        free: usize,
        mixes: &[(usize, usize)],
    ) -> (Vec<Vec<u32>>, Vec<bool>) {
        let n = 2 * pairs + free;
        // Dense matrices over GF(2) as row bitsets: d[i] = column i.
        let mut d = vec![BitVec::zeros(n); n];
        let mut parity = vec![false; n];
        for k in 0..pairs {
            d[2 * k + 1].flip(2 * k);
            parity[2 * k + 1] = true;
        }
        for k in 0..free {
            parity[2 * pairs + k] = k % 2 == 1;
        }
        // Change of basis e_a <- e_a + e_b within one parity: conjugate.
        for &(a, b) in mixes.iter().filter(|_| n > 0) {
            let (a, b) = (a % n, b % n);
            if a == b || parity[a] != parity[b] {
                continue;
            }
            // New basis: f_a = e_a + e_b. In new coordinates the matrix is
            // P^{-1} D P with P = I + E_{ba}; over GF(2) P^{-1} = P.
            let col_b = d[b].clone();
            d[a].xor_assign(&col_b);
            for col in d.iter_mut() {
                if col.get(a) {
                    col.flip(b);
                }
            }
        }
        let cols = d
            .iter()
            .map(|c| c.ones().map(|x| x as u32).collect())
            .collect();
        (cols, parity)
    }

    proptest! {
        #[test]
        fn rank_matches_construction(
            pairs in 0usize..6,
            free in 0usize..4,
            mixes in proptest::collection::vec((0usize..20, 0usize..20), 0..30),
        ) {
            let (cols, parity) = random_complex(pairs, free, &mixes);
            let m = SparseMatGF2::from_columns(cols.len(), cols.clone());
            prop_assert!(m.mul(&m).is_zero());
            prop_assert_eq!(homology_rank(&cols, &parity), free);
            let reps = homology_representatives(&cols);
            prop_assert_eq!(reps.len(), free);
            let space = ColumnSpace::new(&m);
            for r in &reps {
                let v = BitVec::from_ones(cols.len(), r.iter().map(|&x| x as usize));
                prop_assert!(m.mul_vec(&v).is_zero());
                prop_assert!(!space.contains(r));
                let dense = affine_solve(&m, &v);
                prop_assert!(dense.solution.is_none());
            }
        }
    }
}
