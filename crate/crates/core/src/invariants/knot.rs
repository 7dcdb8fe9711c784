//! Knot invariants read from the `A_s` complexes and from the `UV = 0`
//! reduction.

use super::fu::{a_s_subcomplex, d_invariant, FUComplex};
use crate::builders::staircase_dual;
use crate::complex::{reduce, tensor_product, BigradedComplex, ReduceMode, Term};
use crate::error::{Error, Result};
use crate::gf2::{
    affine_solve, essential_classes, homology_representatives, BitVec, ColumnSpace, SparseMatGF2,
};
use std::collections::HashMap;

fn grw_parity(c: &BigradedComplex) -> Vec<bool> {
    c.gens().iter().map(|g| g.grw.rem_euclid(2) == 1).collect()
}

fn grz_parity(c: &BigradedComplex) -> Vec<bool> {
    c.gens().iter().map(|g| g.grz.rem_euclid(2) == 1).collect()
}

/// Boundary columns of `C|_{U=0,V=1}` or `C|_{V=0,U=1}`.
fn tower_columns(c: &BigradedComplex, mode: ReduceMode) -> Vec<Vec<u32>> {
    reduce(c, mode).boundary_columns()
}

/// Rank of the homology of `C/U` localized at `V`, and of `C/V` localized
/// at `U`.
pub fn tower_ranks(c: &BigradedComplex) -> (usize, usize) {
    let v = crate::gf2::homology_rank(&tower_columns(c, ReduceMode::U0V1), &grw_parity(c));
    let u = crate::gf2::homology_rank(&tower_columns(c, ReduceMode::V0U1), &grz_parity(c));
    (v, u)
}

pub fn is_knotlike(c: &BigradedComplex) -> bool {
    tower_ranks(c) == (1, 1)
}

fn require_knotlike(c: &BigradedComplex) -> Result<()> {
    if is_knotlike(c) {
        Ok(())
    } else {
        let (v, u) = tower_ranks(c);
        Err(Error::NotKnotLike(format!(
            "{}: localized ranks {v} (V) and {u} (U), expected 1 and 1",
            c.name()
        )))
    }
}

/// [`a_s_subcomplex`] after checking that `C` is knot-like.
pub fn a_s_checked(c: &BigradedComplex, s: i64) -> Result<FUComplex> {
    require_knotlike(c)?;
    Ok(a_s_subcomplex(c, s))
}

/// `V_s = -d(A_s)/2`.
pub fn v_invariant(c: &BigradedComplex, s: i64) -> Result<i64> {
    let d = d_invariant(&a_s_subcomplex(c, s))?;
    if d.rem_euclid(2) != 0 {
        return Err(Error::Internal(format!("odd d-invariant {d} at s = {s}")));
    }
    Ok(-d / 2)
}

/// `Y_n = V_0(C ⊗ S_n^∨)`.
pub fn y_invariant(c: &BigradedComplex, n: u32) -> Result<i64> {
    v_invariant(&tensor_product(c, &staircase_dual(n)), 0)
}

/// Default search cap for `ν⁺` and `ω⁺`.
pub fn default_cap(c: &BigradedComplex) -> i64 {
    4 * c.max_alexander().max(0) + 4
}

/// First `s ≥ 0` with `V_s = 0`.
pub fn nu_plus(c: &BigradedComplex, cap: Option<i64>) -> Result<i64> {
    let cap = cap.unwrap_or_else(|| default_cap(c));
    for s in 0..=cap {
        if v_invariant(c, s)? == 0 {
            return Ok(s);
        }
    }
    Err(Error::CapExceeded {
        what: "nu_plus",
        cap,
    })
}

/// First `n ≥ 0` with `Y_n = 0`.
pub fn omega_plus(c: &BigradedComplex, cap: Option<i64>) -> Result<i64> {
    let cap = cap.unwrap_or_else(|| default_cap(c));
    for n in 0..=cap {
        if y_invariant(c, n as u32)? == 0 {
            return Ok(n);
        }
    }
    Err(Error::CapExceeded {
        what: "omega_plus",
        cap,
    })
}

/// Alexander grading of the generator of `H(C/U)` modulo `V`-torsion.
///
/// In `C|_{U=0,V=1}` the Alexander-`s` part of `C/U` becomes the span of
/// generators with `A ≤ s`, so the answer is the level at which the
/// essential class appears when generators are sorted by increasing `A`.
pub fn tau_invariant(c: &BigradedComplex) -> Result<i64> {
    let level: Vec<i64> = (0..c.len()).map(|i| -c.alexander(i)).collect();
    let ess = essential_classes(&tower_columns(c, ReduceMode::U0V1), &level, &grw_parity(c));
    match ess.as_slice() {
        [e] => Ok(-e.level),
        _ => Err(Error::NotKnotLike(format!(
            "{}: V-localized rank {}",
            c.name(),
            ess.len()
        ))),
    }
}

/// A cocycle of the field complex `mode` pairing to one with its homology
/// generator.
fn cogenerator(c: &BigradedComplex, mode: ReduceMode) -> Result<Vec<u32>> {
    let m = SparseMatGF2::from_columns(c.len(), tower_columns(c, mode));
    let mut reps = homology_representatives(m.transpose().columns());
    if reps.len() != 1 {
        return Err(Error::NotKnotLike(format!(
            "{}: localized rank {}",
            c.name(),
            reps.len()
        )));
    }
    Ok(reps.pop().unwrap())
}

/// Whether `H(Â_s) → H(C|_{U=0,V=1})` is onto.
///
/// The map sends `V^j x` to `x` and kills `U`-multiples. It is onto iff the
/// pulled-back cogenerator `ψ` is nonzero on some cycle, i.e. iff `ψ` is not
/// in the row space of `∂`.
fn nu_feasible(c: &BigradedComplex, phi: &[u32], s: i64) -> bool {
    let a = a_s_subcomplex(c, s);
    let psi: Vec<u32> = phi
        .iter()
        .copied()
        .filter(|&x| a.origin()[x as usize].u == 0)
        .collect();
    let d = SparseMatGF2::from_columns(a.len(), a.hat_columns());
    !ColumnSpace::new(&d.transpose()).contains(&psi)
}

/// The invariant `ν`: least `s` for which `H(Â_s)` surjects onto the
/// `V`-tower. Always `τ` or `τ + 1`.
pub fn nu_hat(c: &BigradedComplex) -> Result<i64> {
    let tau = tau_invariant(c)?;
    let phi = cogenerator(c, ReduceMode::U0V1)?;
    if nu_feasible(c, &phi, tau - 1) {
        return Err(Error::Internal(format!("ν < τ = {tau}")));
    }
    for s in [tau, tau + 1] {
        if nu_feasible(c, &phi, s) {
            return Ok(s);
        }
    }
    Err(Error::Internal(format!("ν > τ + 1 = {}", tau + 1)))
}

/// Cycles realizing `ω`: `z_i` at bigrading `(-n+i, -n-i)` for
/// `i = n, n-2, …, -n`, listed in that order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OmegaCertificate {
    pub n: i64,
    pub cycles: Vec<Vec<Term>>,
}

/// Elements of `C/UV` at a fixed bigrading: at most one monomial per
/// generator.
fn slot(c: &BigradedComplex, gw: i64, gz: i64) -> Vec<Term> {
    c.gens()
        .iter()
        .enumerate()
        .filter_map(|(i, g)| {
            let (a2, b2) = (g.grw - gw, g.grz - gz);
            (a2 >= 0 && b2 >= 0 && a2 % 2 == 0 && b2 % 2 == 0 && (a2 == 0 || b2 == 0))
                .then(|| Term::new(i, (a2 / 2) as u32, (b2 / 2) as u32))
        })
        .collect()
}

/// Solves for the `ω` cycles at a given `n` as a single affine system over
/// `C/UV`. Unknowns are the coefficients of `z_i` and of chains `w_i` with
/// `∂w_i = Uz_i + Vz_{i-2}`.
fn omega_system(
    c: &BigradedComplex,
    phi_v: &[u32],
    phi_u: &[u32],
    n: i64,
) -> Option<OmegaCertificate> {
    let uv0 = reduce(c, ReduceMode::UV0);
    let idx: Vec<i64> = (0..=n).map(|k| n - 2 * k).collect();

    let mut vars: Vec<Term> = Vec::new();
    let mut z_vars: Vec<std::ops::Range<usize>> = Vec::new();
    let mut w_vars: Vec<std::ops::Range<usize>> = Vec::new();
    for &i in &idx {
        let start = vars.len();
        vars.extend(slot(c, -n + i, -n - i));
        z_vars.push(start..vars.len());
    }
    for &i in &idx[..idx.len() - 1] {
        let start = vars.len();
        vars.extend(slot(c, -n + i - 1, -n - i + 1));
        w_vars.push(start..vars.len());
    }

    let mut rows: HashMap<(usize, u32), usize> = HashMap::new();
    let mut entries: Vec<(usize, usize)> = Vec::new();
    let mut push = |eq: usize, t: Term, var: usize, entries: &mut Vec<(usize, usize)>| {
        if t.u > 0 && t.v > 0 {
            return;
        }
        let len = rows.len();
        let row = *rows.entry((eq, t.target)).or_insert(len);
        entries.push((row, var));
    };
    let boundary = |x: &Term| -> Vec<Term> {
        uv0.diff[x.target as usize]
            .iter()
            .map(|t| t.times(x.u, x.v))
            .collect()
    };

    // ∂z_i = 0
    for (k, r) in z_vars.iter().enumerate() {
        for var in r.clone() {
            for t in boundary(&vars[var]) {
                push(k, t, var, &mut entries);
            }
        }
    }
    // U z_i + V z_{i-2} + ∂w_i = 0
    let base = z_vars.len();
    for (k, r) in w_vars.iter().enumerate() {
        let eq = base + k;
        for var in z_vars[k].clone() {
            push(eq, vars[var].times(1, 0), var, &mut entries);
        }
        for var in z_vars[k + 1].clone() {
            push(eq, vars[var].times(0, 1), var, &mut entries);
        }
        for var in r.clone() {
            for t in boundary(&vars[var]) {
                push(eq, t, var, &mut entries);
            }
        }
    }

    // Localization conditions.
    let n_rows = rows.len();
    let (row_v, row_u) = (n_rows, n_rows + 1);
    for var in z_vars[0].clone() {
        let t = vars[var];
        if t.u == 0 && phi_v.binary_search(&t.target).is_ok() {
            entries.push((row_v, var));
        }
    }
    for var in z_vars[z_vars.len() - 1].clone() {
        let t = vars[var];
        if t.v == 0 && phi_u.binary_search(&t.target).is_ok() {
            entries.push((row_u, var));
        }
    }

    let a = SparseMatGF2::from_entries(n_rows + 2, vars.len(), entries);
    let b = BitVec::from_ones(n_rows + 2, [row_v, row_u]);
    let sol = affine_solve(&a, &b).solution?;
    let cycles = z_vars
        .iter()
        .map(|r| r.clone().filter(|&v| sol.get(v)).map(|v| vars[v]).collect())
        .collect();
    Some(OmegaCertificate { n, cycles })
}

/// The invariant `ω` with the cycles realizing it.
///
/// The search starts at `max(τ, 0)` and must succeed within one step.
pub fn omega_hat_certified(c: &BigradedComplex) -> Result<OmegaCertificate> {
    let tau = tau_invariant(c)?;
    let mut phi_v = cogenerator(c, ReduceMode::U0V1)?;
    let mut phi_u = cogenerator(c, ReduceMode::V0U1)?;
    phi_v.sort_unstable();
    phi_u.sort_unstable();
    let n0 = tau.max(0);
    if n0 > 0 && omega_system(c, &phi_v, &phi_u, n0 - 1).is_some() {
        return Err(Error::Internal(format!("ω < max(τ, 0) = {n0}")));
    }
    for n in [n0, n0 + 1] {
        if let Some(cert) = omega_system(c, &phi_v, &phi_u, n) {
            return Ok(cert);
        }
    }
    Err(Error::Internal(format!("ω > max(τ, 0) + 1 = {}", n0 + 1)))
}

pub fn omega_hat(c: &BigradedComplex) -> Result<i64> {
    omega_hat_certified(c).map(|cert| cert.n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::{hedden_watson, staircase};
    use crate::complex::{dual_complex, Generator};

    #[test]
    fn trefoil() {
        let s = staircase(1);
        assert!(is_knotlike(&s));
        assert_eq!(tau_invariant(&s).unwrap(), 1);
        assert_eq!(nu_hat(&s).unwrap(), 1);
        let cert = omega_hat_certified(&s).unwrap();
        assert_eq!(cert.n, 1);
        // z_1 = y_{-1}, z_{-1} = y_1
        assert_eq!(
            cert.cycles,
            vec![vec![Term::new(0, 0, 0)], vec![Term::new(2, 0, 0)]]
        );
        assert_eq!(v_invariant(&s, 0).unwrap(), 1);
        assert_eq!(v_invariant(&s, 1).unwrap(), 0);
        assert_eq!(nu_plus(&s, None).unwrap(), 1);
        assert_eq!(omega_plus(&s, None).unwrap(), 1);
    }

    #[test]
    fn mirror_trefoil() {
        let s = dual_complex(&staircase(1));
        assert_eq!(tau_invariant(&s).unwrap(), -1);
        assert_eq!(nu_hat(&s).unwrap(), 0);
        assert_eq!(omega_hat(&s).unwrap(), 0);
        assert_eq!(v_invariant(&s, 0).unwrap(), 0);
        assert_eq!(nu_plus(&s, None).unwrap(), 0);
    }

    #[test]
    fn unknot() {
        let u = BigradedComplex::unknot();
        assert_eq!(tau_invariant(&u).unwrap(), 0);
        assert_eq!(nu_hat(&u).unwrap(), 0);
        assert_eq!(omega_hat(&u).unwrap(), 0);
        assert_eq!(omega_plus(&u, None).unwrap(), 0);
        assert_eq!(y_invariant(&u, 0).unwrap(), 0);
    }

    #[test]
    fn hedden_watson_values() {
        let c = hedden_watson();
        assert!(is_knotlike(&c));
        assert_eq!(tau_invariant(&c).unwrap(), 2);
        assert_eq!(nu_hat(&c).unwrap(), 2);
        assert_eq!(omega_hat(&c).unwrap(), 3);
        assert_eq!(v_invariant(&c, 0).unwrap(), 2);
    }

    #[test]
    fn two_free_generators_not_knotlike() {
        let c = BigradedComplex::new(
            "F2",
            vec![Generator::new("a", 0, 0), Generator::new("b", 0, 0)],
            vec![vec![], vec![]],
        )
        .unwrap();
        assert!(!is_knotlike(&c));
        assert!(a_s_checked(&c, 0).is_err());
        assert!(tau_invariant(&c).is_err());
    }
}
