//! Free graded complexes over `F[T]`, `T = UV` of degree `-2`, and their
//! d-invariants.

use crate::complex::BigradedComplex;
use crate::error::{Error, Result};
use crate::gf2::{essential_classes, snf_fu, PolyMat, PolyT};

/// `T^k` times basis element `target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TTerm {
    pub target: u32,
    pub k: u32,
}

/// Where a basis element of an `A_s` complex comes from: the generator
/// index and the minimal monomial `U^u V^v` multiplying it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BasisOrigin {
    pub gen: u32,
    pub u: u32,
    pub v: u32,
}

/// A free complex over `F[T]` with graded basis. `∂` lowers the grading by
/// one, so a term `T^k e_i` of `∂e_j` has `r_i - 2k = r_j - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FUComplex {
    r: Vec<i64>,
    diff: Vec<Vec<TTerm>>,
    origin: Vec<BasisOrigin>,
}

impl FUComplex {
    /// Validates homogeneity and `∂² = 0`.
    pub fn new(r: Vec<i64>, mut diff: Vec<Vec<TTerm>>) -> Result<Self> {
        let n = r.len();
        diff.resize(n, Vec::new());
        for (j, d) in diff.iter_mut().enumerate() {
            d.sort_unstable();
            if d.windows(2).any(|w| w[0].target == w[1].target) {
                return Err(Error::Internal(format!("repeated target in ∂e{j}")));
            }
            for t in d.iter() {
                let i = t.target as usize;
                if i >= n || r[i] - 2 * t.k as i64 != r[j] - 1 {
                    return Err(Error::Internal(format!(
                        "term T^{}·e{} of ∂e{j} is not homogeneous",
                        t.k, t.target
                    )));
                }
            }
        }
        let c = Self {
            r,
            diff,
            origin: Vec::new(),
        };
        if !c.square_is_zero() {
            return Err(Error::Internal("∂² ≠ 0 over F[T]".into()));
        }
        Ok(c)
    }

    pub fn len(&self) -> usize {
        self.r.len()
    }

    pub fn is_empty(&self) -> bool {
        self.r.is_empty()
    }

    pub fn grading(&self, i: usize) -> i64 {
        self.r[i]
    }

    pub fn gradings(&self) -> &[i64] {
        &self.r
    }

    pub fn diff(&self, j: usize) -> &[TTerm] {
        &self.diff[j]
    }

    /// Source generator and monomial of each basis element, when the
    /// complex came from [`a_s_subcomplex`].
    pub fn origin(&self) -> &[BasisOrigin] {
        &self.origin
    }

    pub fn square_is_zero(&self) -> bool {
        self.diff.iter().all(|d| {
            let mut sq: Vec<TTerm> = d
                .iter()
                .flat_map(|t| {
                    self.diff[t.target as usize].iter().map(move |s| TTerm {
                        target: s.target,
                        k: s.k + t.k,
                    })
                })
                .collect();
            sq.sort_unstable();
            sq.chunk_by(|a, b| a == b).all(|c| c.len() % 2 == 0)
        })
    }

    /// Boundary columns after setting `T = 1`.
    pub fn collapsed_columns(&self) -> Vec<Vec<u32>> {
        self.diff
            .iter()
            .map(|d| d.iter().map(|t| t.target).collect())
            .collect()
    }

    /// Matrix of `∂` over `F[T]`, rows indexed by targets.
    pub fn poly_matrix(&self) -> PolyMat {
        let n = self.len();
        let mut m = PolyMat::zeros(n, n);
        for (j, d) in self.diff.iter().enumerate() {
            for t in d {
                m[(t.target as usize, j)] = PolyT::monomial(t.k);
            }
        }
        m
    }

    /// The same complex with `∂` restricted to `T^0` terms, i.e. tensored
    /// with `F[T]/T`.
    pub fn hat_columns(&self) -> Vec<Vec<u32>> {
        self.diff
            .iter()
            .map(|d| d.iter().filter(|t| t.k == 0).map(|t| t.target).collect())
            .collect()
    }
}

/// The Alexander-level-`s` part of `C`: one basis element per generator
/// `x`, namely `U^{A(x)-s} x` if `A(x) ≥ s` and `V^{s-A(x)} x` otherwise,
/// graded by the `grw` of that monomial.
pub fn a_s_subcomplex(c: &BigradedComplex, s: i64) -> FUComplex {
    let origin: Vec<BasisOrigin> = c
        .gens()
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let a = g.alexander();
            let (u, v) = if a >= s {
                ((a - s) as u32, 0)
            } else {
                (0, (s - a) as u32)
            };
            BasisOrigin {
                gen: i as u32,
                u,
                v,
            }
        })
        .collect();
    let r: Vec<i64> = origin
        .iter()
        .map(|o| c.gen(o.gen as usize).grw - 2 * o.u as i64)
        .collect();
    let diff = origin
        .iter()
        .map(|o| {
            let mut col: Vec<TTerm> = c
                .diff(o.gen as usize)
                .iter()
                .map(|t| {
                    let m = &origin[t.target as usize];
                    // U^{t.u + o.u} V^{t.v + o.v} y = T^k U^{m.u} V^{m.v} y
                    let k = t.u + o.u - m.u;
                    debug_assert_eq!(k, t.v + o.v - m.v);
                    TTerm {
                        target: t.target,
                        k,
                    }
                })
                .collect();
            col.sort_unstable();
            col
        })
        .collect();
    FUComplex { r, diff, origin }
}

fn parity(r: i64) -> bool {
    r.rem_euclid(2) == 1
}

/// Top grading of a `T`-non-torsion homology class.
///
/// A degree-`r` element of the complex corresponds, after `T = 1`, to a
/// vector supported on basis elements of grading at least `r` and of the
/// same parity. The answer is therefore the grading at which the unique
/// essential class of the `T = 1` complex appears when the basis is
/// ordered by decreasing grading.
pub fn d_invariant(f: &FUComplex) -> Result<i64> {
    let cols = f.collapsed_columns();
    let par: Vec<bool> = f.r.iter().map(|&r| parity(r)).collect();
    let ess = essential_classes(&cols, &f.r, &par);
    match ess.as_slice() {
        [e] => Ok(e.level),
        _ => Err(Error::LocalizedRank {
            rank: ess.len(),
            expected: 1,
        }),
    }
}

/// The same invariant computed from Smith normal forms. Used as an
/// independent check of [`d_invariant`].
///
/// The kernel of `∂` is spanned by the last columns of `V` in `U∂V = D`;
/// rewriting the image in that basis and taking a second Smith form exposes
/// the free summand of homology and its grading.
pub fn d_invariant_snf(f: &FUComplex) -> Result<i64> {
    let n = f.len();
    let m = f.poly_matrix();
    let s1 = snf_fu(&m);
    if !s1.verify(&m) {
        return Err(Error::Internal("Smith form certificate failed".into()));
    }
    let k = s1.rank;

    // Grading of a homogeneous vector given by a column of polynomials.
    let label = |col: &dyn Fn(usize) -> PolyT, labels: &[i64]| -> Result<i64> {
        let mut g = None;
        for (i, &li) in labels.iter().enumerate() {
            let p = col(i);
            if p.is_zero() {
                continue;
            }
            let e = p
                .as_monomial()
                .ok_or_else(|| Error::Internal("inhomogeneous basis vector".into()))?;
            let gi = li - 2 * e as i64;
            if *g.get_or_insert(gi) != gi {
                return Err(Error::Internal("inhomogeneous basis vector".into()));
            }
        }
        g.ok_or_else(|| Error::Internal("zero basis vector".into()))
    };

    let kernel_labels: Vec<i64> = (k..n)
        .map(|j| label(&|i| s1.v[(i, j)].clone(), &f.r))
        .collect::<Result<_>>()?;

    // Image of ∂ in kernel coordinates: rows k.. of V⁻¹∂.
    let vd = s1.v_inv.mul(&m);
    if (0..k).any(|i| (0..n).any(|j| !vd[(i, j)].is_zero())) {
        return Err(Error::Internal("image not contained in kernel".into()));
    }
    let m2 = PolyMat::from_rows(
        (k..n)
            .map(|i| (0..n).map(|j| vd[(i, j)].clone()).collect())
            .collect(),
    );
    let s2 = snf_fu(&m2);
    if !s2.verify(&m2) {
        return Err(Error::Internal("Smith form certificate failed".into()));
    }
    let free: Vec<usize> = (s2.rank..n - k).collect();
    if free.len() != 1 {
        return Err(Error::LocalizedRank {
            rank: free.len(),
            expected: 1,
        });
    }
    // The free generator is column `free[0]` of U2⁻¹ in kernel coordinates.
    label(&|l| s2.u_inv[(l, free[0])].clone(), &kernel_labels)
}
