use super::{fmt_term, normalize_terms, BigradedComplex, Term};
use std::fmt;

/// An `F[U,V]`-module map between free complexes, one term list per source
/// generator. When `skew` is set the map is conjugation-skew linear:
/// `f(U^a V^b x) = U^b V^a f(x)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainMap {
    pub matrix: Vec<Vec<Term>>,
    pub n_target: usize,
    pub skew: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MapViolation {
    Shape {
        expected: (usize, usize),
        found: (usize, usize),
    },
    Bidegree {
        from: String,
        term: String,
        found: (i64, i64),
        expected: (i64, i64),
    },
    NotChain {
        from: String,
        d_f: String,
        f_d: String,
    },
}

impl fmt::Display for MapViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MapViolation::Shape { expected, found } => write!(
                f,
                "map has shape {}x{}, complexes need {}x{}",
                found.0, found.1, expected.0, expected.1
            ),
            MapViolation::Bidegree {
                from,
                term,
                found,
                expected,
            } => write!(
                f,
                "term {term} of f(`{from}`) has bidegree {found:?}, other terms have {expected:?}"
            ),
            MapViolation::NotChain { from, d_f, f_d } => {
                write!(f, "at `{from}`: ∂f = {d_f} but f∂ = {f_d}")
            }
        }
    }
}

impl ChainMap {
    pub fn new(matrix: Vec<Vec<Term>>, n_target: usize, skew: bool) -> Self {
        let mut matrix = matrix;
        for col in &mut matrix {
            normalize_terms(col);
        }
        Self {
            matrix,
            n_target,
            skew,
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::new((0..n).map(|i| vec![Term::new(i, 0, 0)]).collect(), n, false)
    }

    /// The same matrix read as a skew map.
    pub fn into_skew(mut self) -> Self {
        self.skew = true;
        self
    }

    pub fn zero(n_source: usize, n_target: usize, skew: bool) -> Self {
        Self::new(vec![Vec::new(); n_source], n_target, skew)
    }

    pub fn n_source(&self) -> usize {
        self.matrix.len()
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().all(Vec::is_empty)
    }

    /// Image of a module element.
    pub fn apply(&self, x: &[Term]) -> Vec<Term> {
        let mut out = Vec::new();
        for t in x {
            let (u, v) = if self.skew { (t.v, t.u) } else { (t.u, t.v) };
            out.extend(self.matrix[t.target as usize].iter().map(|s| s.times(u, v)));
        }
        normalize_terms(&mut out);
        out
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &ChainMap) -> ChainMap {
        assert_eq!(f.n_target, self.n_source());
        ChainMap::new(
            f.matrix.iter().map(|col| self.apply(col)).collect(),
            self.n_target,
            self.skew != f.skew,
        )
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        assert_eq!(self.skew, other.skew);
        assert_eq!(self.n_target, other.n_target);
        ChainMap::new(
            self.matrix
                .iter()
                .zip(&other.matrix)
                .map(|(a, b)| a.iter().chain(b).copied().collect())
                .collect(),
            self.n_target,
            self.skew,
        )
    }

    /// `f ⊗ g` on tensor products indexed as in
    /// [`tensor_product`](super::tensor_product). Both factors must have
    /// the same linearity.
    pub fn tensor(f: &ChainMap, g: &ChainMap) -> ChainMap {
        assert_eq!(f.skew, g.skew, "tensor of linear and skew maps");
        let m = g.n_target;
        let mut matrix = Vec::with_capacity(f.n_source() * g.n_source());
        for fc in &f.matrix {
            for gc in &g.matrix {
                let mut col = Vec::with_capacity(fc.len() * gc.len());
                for a in fc {
                    for b in gc {
                        col.push(Term::new(
                            a.target as usize * m + b.target as usize,
                            a.u + b.u,
                            a.v + b.v,
                        ));
                    }
                }
                matrix.push(col);
            }
        }
        ChainMap::new(matrix, f.n_target * m, f.skew)
    }

    /// The common bidegree of all terms, or `None` for the zero map. For a
    /// skew map the shift is measured against the swapped gradings of the
    /// source.
    pub fn bidegree(
        &self,
        source: &BigradedComplex,
        target: &BigradedComplex,
    ) -> Result<Option<(i64, i64)>, MapViolation> {
        self.check_shape(source, target)?;
        let mut found: Option<(i64, i64)> = None;
        for (i, col) in self.matrix.iter().enumerate() {
            let g = source.gen(i);
            let (w, z) = if self.skew {
                (g.grz, g.grw)
            } else {
                (g.grw, g.grz)
            };
            for t in col {
                let h = target.gen(t.target as usize);
                let shift = (h.grw - 2 * t.u as i64 - w, h.grz - 2 * t.v as i64 - z);
                match found {
                    None => found = Some(shift),
                    Some(e) if e != shift => {
                        return Err(MapViolation::Bidegree {
                            from: g.id.clone(),
                            term: fmt_term(&h.id, t.u, t.v),
                            found: shift,
                            expected: e,
                        })
                    }
                    _ => {}
                }
            }
        }
        Ok(found)
    }

    fn check_shape(
        &self,
        source: &BigradedComplex,
        target: &BigradedComplex,
    ) -> Result<(), MapViolation> {
        if self.n_source() != source.len() || self.n_target != target.len() {
            return Err(MapViolation::Shape {
                expected: (target.len(), source.len()),
                found: (self.n_target, self.n_source()),
            });
        }
        Ok(())
    }
}

fn fmt_element(c: &BigradedComplex, x: &[Term]) -> String {
    if x.is_empty() {
        return "0".into();
    }
    x.iter()
        .map(|t| fmt_term(&c.gen(t.target as usize).id, t.u, t.v))
        .collect::<Vec<_>>()
        .join(" + ")
}

/// Checks homogeneity and `∂f = f∂`, using the skew rule when the map is
/// flagged skew. Returns the bidegree (`None` for the zero map).
pub fn verify_chain_map(
    f: &ChainMap,
    source: &BigradedComplex,
    target: &BigradedComplex,
) -> Result<Option<(i64, i64)>, MapViolation> {
    let bideg = f.bidegree(source, target)?;
    for i in 0..source.len() {
        let d_f = target.apply(&f.matrix[i]);
        let f_d = f.apply(source.diff(i));
        if d_f != f_d {
            return Err(MapViolation::NotChain {
                from: source.gen(i).id.clone(),
                d_f: fmt_element(target, &d_f),
                f_d: fmt_element(target, &f_d),
            });
        }
    }
    Ok(bideg)
}

/// The basepoint maps as formal derivatives of the differential:
/// `Φ = ∂(∂)/∂U` and `Ψ = ∂(∂)/∂V`, coefficients mod 2.
pub fn basepoint_phi_psi(c: &BigradedComplex) -> (ChainMap, ChainMap) {
    let n = c.len();
    let phi = c
        .diffs()
        .iter()
        .map(|d| {
            d.iter()
                .filter(|t| t.u % 2 == 1)
                .map(|t| Term::new(t.target as usize, t.u - 1, t.v))
                .collect()
        })
        .collect();
    let psi = c
        .diffs()
        .iter()
        .map(|d| {
            d.iter()
                .filter(|t| t.v % 2 == 1)
                .map(|t| Term::new(t.target as usize, t.u, t.v - 1))
                .collect()
        })
        .collect();
    (ChainMap::new(phi, n, false), ChainMap::new(psi, n, false))
}
