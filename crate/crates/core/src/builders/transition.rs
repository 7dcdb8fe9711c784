//! Local chain maps between knot-like complexes, found by solving a linear
//! system over GF(2).

use super::staircase::staircase_dual;
use crate::complex::{collapsed_columns, verify_chain_map, BigradedComplex, ChainMap, Term};
use crate::gf2::{affine_solve, homology_representatives, BitVec, ColumnSpace, SparseMatGF2};
use std::collections::HashMap;

/// Cycle generating `H(C|_{U=V=1})`, which is one-dimensional for
/// knot-like complexes.
fn collapsed_generator(c: &BigradedComplex) -> Option<Vec<u32>> {
    let reps = homology_representatives(&collapsed_columns(c));
    (reps.len() == 1).then(|| reps.into_iter().next().unwrap())
}

/// Cocycle pairing to one with the homology generator of `C|_{U=V=1}`.
fn collapsed_cogenerator(c: &BigradedComplex) -> Option<Vec<u32>> {
    let m = SparseMatGF2::from_columns(c.len(), collapsed_columns(c));
    let reps = homology_representatives(m.transpose().columns());
    (reps.len() == 1).then(|| reps.into_iter().next().unwrap())
}

/// Whether `f` is nonzero on localized homology.
pub fn is_local(f: &ChainMap, source: &BigradedComplex, target: &BigradedComplex) -> bool {
    let Some(z) = collapsed_generator(source) else {
        return false;
    };
    let image: Vec<Term> = f.apply(
        &z.iter()
            .map(|&i| Term::new(i as usize, 0, 0))
            .collect::<Vec<_>>(),
    );
    let mut support: Vec<u32> = image.iter().map(|t| t.target).collect();
    crate::gf2::sparse::normalize(&mut support);
    let boundaries = SparseMatGF2::from_columns(target.len(), collapsed_columns(target));
    !ColumnSpace::new(&boundaries).contains(&support)
}

/// Some local chain map `source → target` of the given bidegree, or `None`
/// if there is none. Among all solutions the one with free coordinates set
/// to zero is returned, so the output is deterministic.
pub fn solve_local_map(
    source: &BigradedComplex,
    target: &BigradedComplex,
    bidegree: (i64, i64),
) -> Option<ChainMap> {
    let (p, q) = bidegree;
    // Unknown c_{x,y}: coefficient of the unique monomial times y in f(x).
    let mut vars: Vec<(usize, Term)> = Vec::new();
    let mut var_of: HashMap<(usize, usize), usize> = HashMap::new();
    for (x, gx) in source.gens().iter().enumerate() {
        for (y, gy) in target.gens().iter().enumerate() {
            let (dw, dz) = (gy.grw - gx.grw - p, gy.grz - gx.grz - q);
            if dw >= 0 && dz >= 0 && dw % 2 == 0 && dz % 2 == 0 {
                var_of.insert((x, y), vars.len());
                vars.push((x, Term::new(y, (dw / 2) as u32, (dz / 2) as u32)));
            }
        }
    }

    // One equation per (x, z): coefficient of z in ∂f(x) + f(∂x).
    let mut eq_of: HashMap<(usize, usize), usize> = HashMap::new();
    let mut entries: Vec<(usize, usize)> = Vec::new();
    let mut eq = |x: usize, z: usize, var: usize, entries: &mut Vec<(usize, usize)>| {
        let n = eq_of.len();
        let row = *eq_of.entry((x, z)).or_insert(n);
        entries.push((row, var));
    };
    for (k, &(x, t)) in vars.iter().enumerate() {
        for s in target.diff(t.target as usize) {
            eq(x, s.target as usize, k, &mut entries);
        }
    }
    for x in 0..source.len() {
        for w in source.diff(x) {
            for z in 0..target.len() {
                if let Some(&k) = var_of.get(&(w.target as usize, z)) {
                    eq(x, z, k, &mut entries);
                }
            }
        }
    }

    // Locality: φ(f(z)) = 1.
    let z = collapsed_generator(source)?;
    let phi = collapsed_cogenerator(target)?;
    let local_row = eq_of.len();
    for &x in &z {
        for &y in &phi {
            if let Some(&k) = var_of.get(&(x as usize, y as usize)) {
                entries.push((local_row, k));
            }
        }
    }

    let a = SparseMatGF2::from_entries(local_row + 1, vars.len(), entries);
    let b = BitVec::from_ones(local_row + 1, [local_row]);
    let sol = affine_solve(&a, &b).solution?;
    let mut matrix = vec![Vec::new(); source.len()];
    for k in sol.ones() {
        let (x, t) = vars[k];
        matrix[x].push(t);
    }
    let f = ChainMap::new(matrix, target.len(), false);
    debug_assert_eq!(
        verify_chain_map(&f, source, target).map(|d| d.unwrap_or(bidegree)),
        Ok(bidegree)
    );
    Some(f)
}

/// The maps `Π: S_{n+1}^∨ → S_n^∨` of bidegree `(-2,-2)` and
/// `I: S_n^∨ → S_{n+1}^∨` of bidegree `(0,0)`, both local.
pub fn staircase_transition_maps(n: u32) -> (ChainMap, ChainMap) {
    let (small, big) = (staircase_dual(n), staircase_dual(n + 1));
    let pi = solve_local_map(&big, &small, (-2, -2)).expect("Π exists for every n");
    let inc = solve_local_map(&small, &big, (0, 0)).expect("I exists for every n");
    (pi, inc)
}
