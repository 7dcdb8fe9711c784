use super::{normalize_terms, BigradedComplex, Generator, Term};

/// `C ⊗ D` over `F[U,V]`: generator `x|y` at the summed bigrading with the
/// Leibniz differential. Generator `(i, j)` has index `i * |D| + j`.
pub fn tensor_product(c: &BigradedComplex, d: &BigradedComplex) -> BigradedComplex {
    let m = d.len();
    let mut gens = Vec::with_capacity(c.len() * m);
    let mut diff = Vec::with_capacity(c.len() * m);
    for (i, x) in c.gens().iter().enumerate() {
        for (j, y) in d.gens().iter().enumerate() {
            gens.push(Generator::new(
                format!("{}|{}", x.id, y.id),
                x.grw + y.grw,
                x.grz + y.grz,
            ));
            let mut terms: Vec<Term> = c
                .diff(i)
                .iter()
                .map(|t| Term::new(t.target as usize * m + j, t.u, t.v))
                .chain(
                    d.diff(j)
                        .iter()
                        .map(|t| Term::new(i * m + t.target as usize, t.u, t.v)),
                )
                .collect();
            terms.sort_unstable();
            diff.push(terms);
        }
    }
    BigradedComplex::from_trusted(format!("{}#{}", c.name(), d.name()), gens, diff)
}

/// The dual complex `Hom(C, F[U,V])`: generator `x*` at `(-grw, -grz)` with
/// the transposed differential. For a knot complex this is the complex of
/// the mirror.
pub fn dual_complex(c: &BigradedComplex) -> BigradedComplex {
    let gens = c
        .gens()
        .iter()
        .map(|g| Generator::new(format!("{}*", g.id), -g.grw, -g.grz))
        .collect();
    let mut diff = vec![Vec::new(); c.len()];
    for (i, d) in c.diffs().iter().enumerate() {
        for t in d {
            diff[t.target as usize].push(Term::new(i, t.u, t.v));
        }
    }
    for d in &mut diff {
        d.sort_unstable();
    }
    BigradedComplex::from_trusted(format!("-({})", c.name()), gens, diff)
}

/// Boundary columns of `C` with `U = V = 1`. For a knot-like complex the
/// homology is one-dimensional, matching the rank of the localization.
pub fn collapsed_columns(c: &BigradedComplex) -> Vec<Vec<u32>> {
    c.diffs()
        .iter()
        .map(|d| {
            let mut col: Vec<u32> = d.iter().map(|t| t.target).collect();
            crate::gf2::sparse::normalize(&mut col);
            col
        })
        .collect()
}

/// Quotients of the ground ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ReduceMode {
    /// `F[U,V]/(UV)`: mixed monomials vanish.
    UV0,
    /// `F[V]`: terms with a positive `U` power vanish.
    U0,
    /// `F[U]`: terms with a positive `V` power vanish.
    V0,
    /// `F[U,V]/(U, V-1)`: a finite-dimensional complex over `F`.
    U0V1,
    /// `F[U,V]/(V, U-1)`.
    V0U1,
}

impl ReduceMode {
    fn keeps(self, t: &Term) -> bool {
        match self {
            ReduceMode::UV0 => t.u == 0 || t.v == 0,
            ReduceMode::U0 | ReduceMode::U0V1 => t.u == 0,
            ReduceMode::V0 | ReduceMode::V0U1 => t.v == 0,
        }
    }

    /// Whether the mode sets the surviving variable to one.
    pub fn is_field(self) -> bool {
        matches!(self, ReduceMode::U0V1 | ReduceMode::V0U1)
    }
}

/// A complex over a quotient of `F[U,V]`, sharing generators with its
/// source. In the field modes every surviving term is stored with zero
/// exponents.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReducedComplex<'a> {
    pub source: &'a BigradedComplex,
    pub mode: ReduceMode,
    pub diff: Vec<Vec<Term>>,
}

pub fn reduce(c: &BigradedComplex, mode: ReduceMode) -> ReducedComplex<'_> {
    let diff = c.diffs().iter().map(|d| reduce_terms(d, mode)).collect();
    ReducedComplex {
        source: c,
        mode,
        diff,
    }
}

fn reduce_terms(d: &[Term], mode: ReduceMode) -> Vec<Term> {
    let mut out: Vec<Term> = d
        .iter()
        .filter(|t| mode.keeps(t))
        .map(|t| {
            if mode.is_field() {
                Term::new(t.target as usize, 0, 0)
            } else {
                *t
            }
        })
        .collect();
    normalize_terms(&mut out);
    out
}

impl ReducedComplex<'_> {
    /// Passes to a further quotient. Valid when the new ideal contains the
    /// current one, e.g. `UV0` followed by `U0`.
    pub fn further(&self, mode: ReduceMode) -> Self {
        Self {
            source: self.source,
            mode,
            diff: self.diff.iter().map(|d| reduce_terms(d, mode)).collect(),
        }
    }

    /// Boundary columns over `F`. Only meaningful in the field modes.
    pub fn boundary_columns(&self) -> Vec<Vec<u32>> {
        debug_assert!(self.mode.is_field());
        self.diff
            .iter()
            .map(|d| d.iter().map(|t| t.target).collect())
            .collect()
    }

    /// `∂² = 0` in the quotient ring.
    pub fn square_is_zero(&self) -> bool {
        self.diff.iter().all(|d| {
            let mut sq: Vec<Term> = d
                .iter()
                .flat_map(|t| {
                    self.diff[t.target as usize]
                        .iter()
                        .map(|s| s.times(t.u, t.v))
                })
                .filter(|t| self.mode.keeps(t))
                .map(|t| {
                    if self.mode.is_field() {
                        Term::new(t.target as usize, 0, 0)
                    } else {
                        t
                    }
                })
                .collect();
            normalize_terms(&mut sq);
            sq.is_empty()
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf2::homology_rank;

    fn s1() -> BigradedComplex {
        BigradedComplex::new(
            "S1",
            vec![
                Generator::new("y-1", 0, -2),
                Generator::new("y0", -1, -1),
                Generator::new("y1", -2, 0),
            ],
            vec![vec![], vec![Term::new(0, 1, 0), Term::new(2, 0, 1)], vec![]],
        )
        .unwrap()
    }

    #[test]
    fn unit_of_tensor() {
        let c = s1();
        let t = tensor_product(&c, &BigradedComplex::unknot());
        assert!(t.same_up_to_renaming(&c));
        let t = tensor_product(&BigradedComplex::unknot(), &c);
        assert!(t.same_up_to_renaming(&c));
    }

    #[test]
    fn square_of_trefoil_complex() {
        let t = tensor_product(&s1(), &s1());
        assert_eq!(t.len(), 9);
        assert!(t.violations().is_empty());
        let mid = t.index_of("y0|y0").unwrap();
        assert_eq!((t.gen(mid).grw, t.gen(mid).grz), (-2, -2));
    }

    #[test]
    fn dual_gradings() {
        let d = dual_complex(&s1());
        let gr: Vec<(i64, i64)> = d.gens().iter().map(|g| (g.grw, g.grz)).collect();
        assert_eq!(gr, vec![(0, 2), (1, 1), (2, 0)]);
        assert_eq!(d.diff(0), &[Term::new(1, 1, 0)]);
        assert_eq!(d.diff(2), &[Term::new(1, 0, 1)]);
        assert!(d.diff(1).is_empty());
        assert!(d.violations().is_empty());
        assert!(dual_complex(&d).same_up_to_renaming(&s1()));
        assert!(dual_complex(&BigradedComplex::unknot())
            .same_up_to_renaming(&BigradedComplex::unknot()));
    }

    #[test]
    fn field_quotient_of_staircase() {
        let c = s1();
        let r = reduce(&c, ReduceMode::U0V1);
        assert_eq!(r.diff[1], vec![Term::new(2, 0, 0)]);
        let parity: Vec<bool> = c.gens().iter().map(|g| g.grw.rem_euclid(2) == 1).collect();
        assert_eq!(homology_rank(&r.boundary_columns(), &parity), 1);
    }

    #[test]
    fn uv0_kills_mixed_terms() {
        let t = tensor_product(&s1(), &s1());
        let r = reduce(&t, ReduceMode::UV0);
        assert!(r.diff.iter().flatten().all(|t| t.u == 0 || t.v == 0));
        assert!(r.square_is_zero());
        assert_eq!(r.further(ReduceMode::U0), reduce(&t, ReduceMode::U0));
    }
}
