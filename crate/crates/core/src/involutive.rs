//! The involution `ι` on staircases and connected sums, the mapping cone
//! `AI_0 = Cone(A_0 → Q·A_0)` of `Q(1+ι)`, and the involutive correction
//! terms.

use crate::builders::{load_complex, named_complex, torus_knot_complex, KnotExpr};
use crate::complex::{
    basepoint_phi_psi, dual_complex, tensor_product, verify_chain_map, BigradedComplex, ChainMap,
    Term,
};
use crate::error::{Error, Result};
use crate::gf2::essential_classes;
use crate::invariants::{a_s_subcomplex, d_invariant, FUComplex, TTerm};
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    StaircaseReflection,
    ConnectedSum,
    Mirror,
    UserFile,
    Builtin,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::StaircaseReflection => "staircase-reflection",
            Provenance::ConnectedSum => "connected-sum",
            Provenance::Mirror => "mirror",
            Provenance::UserFile => "user-file",
            Provenance::Builtin => "builtin",
        })
    }
}

/// Order of the factors in the connected-sum formula.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum IotaOrder {
    /// `(ι₁⊗ι₂)∘(1 + Φ₁⊗Ψ₂)`.
    #[default]
    IotaLast,
    /// `(1 + Φ₁⊗Ψ₂)∘(ι₁⊗ι₂)`.
    IotaFirst,
}

/// A complex with a verified involution.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IotaData {
    pub complex: BigradedComplex,
    pub iota: ChainMap,
    pub provenance: Provenance,
}

/// Checks that `ι` is a skew chain map preserving the swapped gradings.
pub fn verify_iota(c: &BigradedComplex, iota: &ChainMap) -> Result<()> {
    if !iota.skew {
        return Err(Error::BadIota("map is not marked skew".into()));
    }
    match verify_chain_map(iota, c, c) {
        Ok(Some((0, 0))) => Ok(()),
        Ok(Some(d)) => Err(Error::BadIota(format!("bidegree {d:?}, expected (0, 0)"))),
        Ok(None) => Err(Error::BadIota("zero map".into())),
        Err(v) => Err(Error::BadIota(v.to_string())),
    }
}

impl IotaData {
    pub fn new(complex: BigradedComplex, iota: ChainMap, provenance: Provenance) -> Result<Self> {
        verify_iota(&complex, &iota)?;
        Ok(Self {
            complex,
            iota,
            provenance,
        })
    }
}

/// The reflection `g_i ↦ g_{N-1-i}` of a staircase. Fails unless the
/// reflection is a grading-swapping skew chain map.
pub fn staircase_iota(c: &BigradedComplex) -> Result<IotaData> {
    let n = c.len();
    let iota = ChainMap::new(
        (0..n).map(|i| vec![Term::new(n - 1 - i, 0, 0)]).collect(),
        n,
        true,
    );
    verify_iota(c, &iota)
        .map_err(|e| Error::BadIota(format!("{} is not a symmetric staircase: {e}", c.name())))?;
    Ok(IotaData {
        complex: c.clone(),
        iota,
        provenance: Provenance::StaircaseReflection,
    })
}

/// The involution of the dual complex: the transpose of `ι` with conjugated
/// coefficients.
pub fn dual_iota(d: &IotaData) -> Result<IotaData> {
    let c = dual_complex(&d.complex);
    let mut matrix = vec![Vec::new(); c.len()];
    for (j, col) in d.iota.matrix.iter().enumerate() {
        for t in col {
            matrix[t.target as usize].push(Term::new(j, t.v, t.u));
        }
    }
    let iota = ChainMap::new(matrix, c.len(), true);
    IotaData::new(c, iota, Provenance::Mirror)
}

/// The involution on `C₁ ⊗ C₂` built from the factors' involutions and the
/// basepoint maps `Φ₁`, `Ψ₂`.
pub fn connected_sum_iota(a: &IotaData, b: &IotaData, order: IotaOrder) -> Result<IotaData> {
    let c = tensor_product(&a.complex, &b.complex);
    let (phi1, _) = basepoint_phi_psi(&a.complex);
    let (_, psi2) = basepoint_phi_psi(&b.complex);
    let corr = ChainMap::identity(c.len()).add(&ChainMap::tensor(&phi1, &psi2));
    let ii = ChainMap::tensor(&a.iota, &b.iota);
    let iota = match order {
        IotaOrder::IotaLast => ii.compose(&corr),
        IotaOrder::IotaFirst => corr.compose(&ii),
    };
    IotaData::new(c, iota, Provenance::ConnectedSum)
}

/// Complex and involution of a knot expression. The complex is identical to
/// the one produced by [`realize_expr`](crate::builders::realize_expr).
pub fn realize_with_iota(e: &KnotExpr, order: IotaOrder) -> Result<IotaData> {
    let d = match e {
        KnotExpr::TorusKnot(p, q) => staircase_iota(&torus_knot_complex(*p, *q)?)?,
        KnotExpr::Mirror(inner) => dual_iota(&realize_with_iota(inner, order)?)?,
        KnotExpr::Sum(parts) => {
            let mut acc: Option<IotaData> = None;
            for part in parts {
                let d = realize_with_iota(part, order)?;
                acc = Some(match acc {
                    None => d,
                    Some(a) => connected_sum_iota(&a, &d, order)?,
                });
            }
            match acc {
                Some(d) => d,
                None => IotaData::new(
                    BigradedComplex::unknot(),
                    ChainMap::identity(1).into_skew(),
                    Provenance::Builtin,
                )?,
            }
        }
        KnotExpr::Named(name) => {
            let (c, iota) = named_complex(name)?;
            IotaData::new(c, iota, Provenance::Builtin)?
        }
        KnotExpr::File(path) => {
            let loaded = load_complex(path)?;
            let iota = loaded
                .iota
                .ok_or_else(|| Error::MissingIota(format!("{path}: file has no iota block")))?;
            IotaData::new(loaded.complex, iota, Provenance::UserFile)?
        }
    };
    Ok(IotaData {
        complex: d.complex.with_name(e.to_string()),
        ..d
    })
}

/// `AI_0`: the cone of `Q(1+ι)` on `A_0`. Basis elements `0..n` are the
/// `A_0` part and `n..2n` the `Q` part, one grading lower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeComplex {
    pub cone: FUComplex,
    pub a0: FUComplex,
    /// `ι` restricted to `A_0`.
    pub iota_a0: Vec<Vec<TTerm>>,
}

impl ConeComplex {
    /// Multiplication by `Q`, which sends `a_i` to `Q a_i` and kills the
    /// `Q` part.
    pub fn q_action(&self, i: usize) -> Option<usize> {
        let n = self.a0.len();
        (i < n).then_some(i + n)
    }
}

/// Restricts `ι` to `A_0` in its minimal-monomial basis.
fn iota_on_a0(c: &BigradedComplex, iota: &ChainMap, a0: &FUComplex) -> Result<Vec<Vec<TTerm>>> {
    let origin = a0.origin();
    let mut out = Vec::with_capacity(origin.len());
    for o in origin {
        let mut col = Vec::new();
        for t in &iota.matrix[o.gen as usize] {
            // ι(U^u V^v x) = U^v V^u ι(x)
            let (eu, ev) = (t.u + o.v, t.v + o.u);
            let m = origin[t.target as usize];
            if eu < m.u || ev < m.v || eu - m.u != ev - m.v {
                return Err(Error::BadIota(format!(
                    "ι does not preserve A_0 at generator {}: term {}",
                    c.gen(o.gen as usize).id,
                    c.gen(t.target as usize).id
                )));
            }
            col.push(TTerm {
                target: t.target,
                k: eu - m.u,
            });
        }
        col.sort_unstable();
        out.push(col);
    }
    Ok(out)
}

/// Toggles `t` in a sorted term list.
fn toggle(col: &mut Vec<TTerm>, t: TTerm) {
    match col.binary_search(&t) {
        Ok(i) => {
            col.remove(i);
        }
        Err(i) => col.insert(i, t),
    }
}

pub fn ai0_cone(d: &IotaData) -> Result<ConeComplex> {
    let a0 = a_s_subcomplex(&d.complex, 0);
    let iota_a0 = iota_on_a0(&d.complex, &d.iota, &a0)?;
    let n = a0.len();
    let shift = |t: &TTerm| TTerm {
        target: t.target + n as u32,
        k: t.k,
    };
    let mut r = a0.gradings().to_vec();
    r.extend(a0.gradings().iter().map(|x| x - 1));
    let mut diff = Vec::with_capacity(2 * n);
    for (i, col_iota) in iota_a0.iter().enumerate() {
        let mut q: Vec<TTerm> = Vec::new();
        toggle(
            &mut q,
            TTerm {
                target: i as u32,
                k: 0,
            },
        );
        for t in col_iota {
            toggle(&mut q, *t);
        }
        let mut col: Vec<TTerm> = a0.diff(i).to_vec();
        col.extend(q.iter().map(shift));
        diff.push(col);
    }
    for i in 0..n {
        diff.push(a0.diff(i).iter().map(shift).collect());
    }
    let cone = FUComplex::new(r, diff)?;
    Ok(ConeComplex { cone, a0, iota_a0 })
}

/// `(d̄, d̲)` of the cone.
///
/// After `T = 1` the cone has two essential classes of opposite parity.
/// The one in the parity of `d(A_0)` lies outside the image of `Q` and gives
/// `d̲`; the other is a `Q` multiple and sits one below `d̄`.
pub fn d_bar_under(cone: &ConeComplex) -> Result<(i64, i64)> {
    let d0 = d_invariant(&cone.a0)?;
    let f = &cone.cone;
    let r = f.gradings();
    let par: Vec<bool> = r.iter().map(|x| x.rem_euclid(2) == 1).collect();
    let ess = essential_classes(&f.collapsed_columns(), r, &par);
    let want = d0.rem_euclid(2) == 1;
    match ess.as_slice() {
        [a, b] if a.parity != b.parity => {
            let (main, q) = if a.parity == want { (a, b) } else { (b, a) };
            Ok((q.level + 1, main.level))
        }
        _ => Err(Error::LocalizedRank {
            rank: ess.len(),
            expected: 2,
        }),
    }
}

/// `(V̄₀, V̲₀) = (-d̄/2, -d̲/2)`.
pub fn v0_bar_under(d: &IotaData) -> Result<(i64, i64)> {
    let (dbar, dunder) = d_bar_under(&ai0_cone(d)?)?;
    if dbar.rem_euclid(2) != 0 || dunder.rem_euclid(2) != 0 {
        return Err(Error::Internal(format!(
            "odd involutive correction terms ({dbar}, {dunder})"
        )));
    }
    Ok((-dbar / 2, -dunder / 2))
}
