//! Bigraded complexes over `F[U,V]`.
//!
//! `U` has bigrading `(-2, 0)` and `V` has `(0, -2)`; the differential lowers
//! both gradings by one. Homogeneity forces every matrix entry to be a single
//! monomial, so differentials are stored as lists of [`Term`]s.

mod maps;
mod ops;

pub use maps::{basepoint_phi_psi, verify_chain_map, ChainMap, MapViolation};
pub use ops::{
    collapsed_columns, dual_complex, reduce, tensor_product, ReduceMode, ReducedComplex,
};

use crate::gf2::PolyUV;
use std::collections::HashMap;
use std::fmt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Generator {
    pub id: String,
    pub grw: i64,
    pub grz: i64,
}

impl Generator {
    pub fn new(id: impl Into<String>, grw: i64, grz: i64) -> Self {
        Self {
            id: id.into(),
            grw,
            grz,
        }
    }

    /// Alexander grading `(grw - grz) / 2`.
    pub fn alexander(&self) -> i64 {
        (self.grw - self.grz).div_euclid(2)
    }

    /// δ-grading `(grw + grz) / 2`.
    pub fn delta(&self) -> i64 {
        (self.grw + self.grz).div_euclid(2)
    }
}

/// The monomial `U^u V^v` times generator number `target`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Term {
    pub target: u32,
    pub u: u32,
    pub v: u32,
}

impl Term {
    pub fn new(target: usize, u: u32, v: u32) -> Self {
        Self {
            target: target as u32,
            u,
            v,
        }
    }

    pub fn times(self, u: u32, v: u32) -> Self {
        Self {
            target: self.target,
            u: self.u + u,
            v: self.v + v,
        }
    }
}

/// Sorts a term list and cancels equal terms in pairs.
pub fn normalize_terms(terms: &mut Vec<Term>) {
    terms.sort_unstable();
    let mut out = 0;
    let mut i = 0;
    while i < terms.len() {
        if i + 1 < terms.len() && terms[i] == terms[i + 1] {
            i += 2;
        } else {
            terms[out] = terms[i];
            out += 1;
            i += 1;
        }
    }
    terms.truncate(out);
}

/// A reason a complex fails validation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    DuplicateId(String),
    HalfIntegerAlexander {
        id: String,
        grw: i64,
        grz: i64,
    },
    UnknownTarget {
        from: String,
        target: usize,
    },
    Inhomogeneous {
        from: String,
        to: String,
        u: u32,
        v: u32,
    },
    SquareNonzero {
        from: String,
        to: String,
        via: Vec<String>,
        coeff: PolyUV,
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DuplicateId(id) => write!(f, "duplicate generator id `{id}`"),
            Violation::HalfIntegerAlexander { id, grw, grz } => write!(
                f,
                "generator `{id}` at ({grw},{grz}) has half-integer Alexander grading"
            ),
            Violation::UnknownTarget { from, target } => {
                write!(
                    f,
                    "differential of `{from}` refers to missing generator #{target}"
                )
            }
            Violation::Inhomogeneous { from, to, u, v } => write!(
                f,
                "term {} in ∂`{from}` is not homogeneous of degree (-1,-1)",
                fmt_term(to, *u, *v)
            ),
            Violation::SquareNonzero {
                from,
                to,
                via,
                coeff,
            } => write!(
                f,
                "∂²`{from}` has coefficient {coeff} on `{to}` (paths through {})",
                via.iter()
                    .map(|s| format!("`{s}`"))
                    .collect::<Vec<_>>()
                    .join(", ")
            ),
        }
    }
}

pub(crate) fn fmt_term(id: &str, u: u32, v: u32) -> String {
    let mono = PolyUV::monomial(u, v).to_string();
    if mono == "1" {
        format!("`{id}`")
    } else {
        format!("{mono}·`{id}`")
    }
}

/// A finitely generated free bigraded complex over `F[U,V]`.
///
/// Instances are validated on construction and immutable afterwards.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedComplex {
    name: String,
    gens: Vec<Generator>,
    diff: Vec<Vec<Term>>,
}

impl BigradedComplex {
    /// Validates and builds a complex. Term lists are normalized first, so a
    /// monomial listed twice cancels.
    pub fn new(
        name: impl Into<String>,
        gens: Vec<Generator>,
        mut diff: Vec<Vec<Term>>,
    ) -> Result<Self, Vec<Violation>> {
        diff.resize(gens.len(), Vec::new());
        for d in &mut diff {
            normalize_terms(d);
        }
        let c = Self {
            name: name.into(),
            gens,
            diff,
        };
        let v = c.violations();
        if v.is_empty() {
            Ok(c)
        } else {
            Err(v)
        }
    }

    /// Builds a complex whose validity follows from how it was produced.
    /// Debug builds still run the full check.
    pub(crate) fn from_trusted(name: String, gens: Vec<Generator>, diff: Vec<Vec<Term>>) -> Self {
        let c = Self { name, gens, diff };
        debug_assert!(
            c.gens.len() > 20_000 || c.violations().is_empty(),
            "{:?}",
            c.violations()
        );
        c
    }

    /// The one-generator complex of the unknot.
    pub fn unknot() -> Self {
        Self::from_trusted(
            "unknot".into(),
            vec![Generator::new("1", 0, 0)],
            vec![vec![]],
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    /// Renames generators; `f` must be injective.
    pub fn rename(mut self, mut f: impl FnMut(usize, &Generator) -> String) -> Self {
        for i in 0..self.gens.len() {
            let id = f(i, &self.gens[i]);
            self.gens[i].id = id;
        }
        self
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn gens(&self) -> &[Generator] {
        &self.gens
    }

    pub fn gen(&self, i: usize) -> &Generator {
        &self.gens[i]
    }

    pub fn diff(&self, i: usize) -> &[Term] {
        &self.diff[i]
    }

    pub fn diffs(&self) -> &[Vec<Term>] {
        &self.diff
    }

    pub fn index_of(&self, id: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.id == id)
    }

    /// Map from generator id to index.
    pub fn id_index(&self) -> HashMap<&str, usize> {
        self.gens
            .iter()
            .enumerate()
            .map(|(i, g)| (g.id.as_str(), i))
            .collect()
    }

    pub fn alexander(&self, i: usize) -> i64 {
        self.gens[i].alexander()
    }

    pub fn max_alexander(&self) -> i64 {
        self.gens
            .iter()
            .map(Generator::alexander)
            .max()
            .unwrap_or(0)
    }

    pub fn min_alexander(&self) -> i64 {
        self.gens
            .iter()
            .map(Generator::alexander)
            .min()
            .unwrap_or(0)
    }

    pub fn num_terms(&self) -> usize {
        self.diff.iter().map(Vec::len).sum()
    }

    /// `∂x` grouped by target as polynomials.
    pub fn diff_poly(&self, i: usize) -> Vec<(usize, PolyUV)> {
        let mut out: Vec<(usize, PolyUV)> = Vec::new();
        for t in &self.diff[i] {
            match out.last_mut() {
                Some((j, p)) if *j == t.target as usize => p.toggle((t.u, t.v)),
                _ => out.push((t.target as usize, PolyUV::monomial(t.u, t.v))),
            }
        }
        out
    }

    /// Applies `∂` to a module element given as a term list.
    pub fn apply(&self, x: &[Term]) -> Vec<Term> {
        let mut out = Vec::new();
        for t in x {
            out.extend(
                self.diff[t.target as usize]
                    .iter()
                    .map(|s| s.times(t.u, t.v)),
            );
        }
        normalize_terms(&mut out);
        out
    }

    /// Whether `U^u V^v · y` is a homogeneous term of `∂x`.
    pub fn term_is_homogeneous(&self, x: usize, t: &Term) -> bool {
        let (gx, gy) = (&self.gens[x], &self.gens[t.target as usize]);
        gy.grw == gx.grw - 1 + 2 * t.u as i64 && gy.grz == gx.grz - 1 + 2 * t.v as i64
    }

    /// All validation failures: duplicate ids, half-integer Alexander
    /// gradings, dangling targets, inhomogeneous terms, and `∂² ≠ 0`.
    pub fn violations(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let mut seen = HashMap::new();
        for g in &self.gens {
            if seen.insert(g.id.as_str(), ()).is_some() {
                out.push(Violation::DuplicateId(g.id.clone()));
            }
            if (g.grw - g.grz).rem_euclid(2) != 0 {
                out.push(Violation::HalfIntegerAlexander {
                    id: g.id.clone(),
                    grw: g.grw,
                    grz: g.grz,
                });
            }
        }
        let n = self.gens.len();
        let mut dangling = false;
        for (i, d) in self.diff.iter().enumerate() {
            for t in d {
                if t.target as usize >= n {
                    dangling = true;
                    out.push(Violation::UnknownTarget {
                        from: self.gens[i].id.clone(),
                        target: t.target as usize,
                    });
                } else if !self.term_is_homogeneous(i, t) {
                    out.push(Violation::Inhomogeneous {
                        from: self.gens[i].id.clone(),
                        to: self.gens[t.target as usize].id.clone(),
                        u: t.u,
                        v: t.v,
                    });
                }
            }
        }
        if dangling {
            return out;
        }
        for i in 0..n {
            let mut sq: Vec<(Term, u32)> = Vec::new();
            for t in &self.diff[i] {
                for s in &self.diff[t.target as usize] {
                    sq.push((s.times(t.u, t.v), t.target));
                }
            }
            sq.sort_unstable();
            let mut bad: HashMap<u32, (PolyUV, Vec<u32>)> = HashMap::new();
            let mut k = 0;
            while k < sq.len() {
                let mut j = k;
                while j < sq.len() && sq[j].0 == sq[k].0 {
                    j += 1;
                }
                if (j - k) % 2 == 1 {
                    let term = sq[k].0;
                    let e = bad.entry(term.target).or_default();
                    e.0.toggle((term.u, term.v));
                    e.1.extend(sq[k..j].iter().map(|p| p.1));
                }
                k = j;
            }
            let mut bad: Vec<_> = bad.into_iter().collect();
            bad.sort_by_key(|(t, _)| *t);
            for (target, (coeff, mut via)) in bad {
                via.sort_unstable();
                via.dedup();
                out.push(Violation::SquareNonzero {
                    from: self.gens[i].id.clone(),
                    to: self.gens[target as usize].id.clone(),
                    via: via
                        .iter()
                        .map(|&v| self.gens[v as usize].id.clone())
                        .collect(),
                    coeff,
                });
            }
        }
        out
    }

    /// Whether `other` equals `self` after a bijective renaming that keeps
    /// generator order.
    pub fn same_up_to_renaming(&self, other: &Self) -> bool {
        self.gens.len() == other.gens.len()
            && self
                .gens
                .iter()
                .zip(&other.gens)
                .all(|(a, b)| a.grw == b.grw && a.grz == b.grz)
            && self.diff == other.diff
    }
}

impl fmt::Display for BigradedComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} ({} generators)", self.name, self.gens.len())?;
        for (i, g) in self.gens.iter().enumerate() {
            write!(f, "  {} ({},{})", g.id, g.grw, g.grz)?;
            if !self.diff[i].is_empty() {
                let terms: Vec<String> = self.diff[i]
                    .iter()
                    .map(|t| fmt_term(&self.gens[t.target as usize].id, t.u, t.v))
                    .collect();
                write!(f, "  ∂ = {}", terms.join(" + "))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s1_with(diff: Vec<Term>) -> Result<BigradedComplex, Vec<Violation>> {
        BigradedComplex::new(
            "S1",
            vec![
                Generator::new("y-1", 0, -2),
                Generator::new("y0", -1, -1),
                Generator::new("y1", -2, 0),
            ],
            vec![vec![], diff, vec![]],
        )
    }

    #[test]
    fn staircase_one_is_valid() {
        assert!(s1_with(vec![Term::new(0, 1, 0), Term::new(2, 0, 1)]).is_ok());
    }

    #[test]
    fn hedden_watson_is_valid() {
        let c = BigradedComplex::new(
            "HW",
            vec![
                Generator::new("a", 0, -4),
                Generator::new("b", -3, -3),
                Generator::new("c", -4, 0),
            ],
            vec![vec![], vec![Term::new(0, 2, 0), Term::new(2, 0, 2)], vec![]],
        );
        assert!(c.is_ok());
    }

    #[test]
    fn wrong_variable_is_inhomogeneous() {
        let err = s1_with(vec![Term::new(0, 1, 0), Term::new(2, 1, 0)]).unwrap_err();
        assert_eq!(
            err,
            vec![Violation::Inhomogeneous {
                from: "y0".into(),
                to: "y1".into(),
                u: 1,
                v: 0
            }]
        );
    }

    #[test]
    fn half_integer_alexander_rejected() {
        let err = BigradedComplex::new("x", vec![Generator::new("a", 0, 1)], vec![]).unwrap_err();
        assert!(matches!(err[0], Violation::HalfIntegerAlexander { .. }));
    }

    #[test]
    fn square_nonzero_names_path() {
        // a -> b -> c with unit coefficients.
        let err = BigradedComplex::new(
            "x",
            vec![
                Generator::new("a", 0, 0),
                Generator::new("b", -1, -1),
                Generator::new("c", -2, -2),
            ],
            vec![vec![Term::new(1, 0, 0)], vec![Term::new(2, 0, 0)], vec![]],
        )
        .unwrap_err();
        assert_eq!(
            err,
            vec![Violation::SquareNonzero {
                from: "a".into(),
                to: "c".into(),
                via: vec!["b".into()],
                coeff: PolyUV::one()
            }]
        );
    }

    #[test]
    fn duplicate_ids_rejected() {
        let err = BigradedComplex::new(
            "x",
            vec![Generator::new("a", 0, 0), Generator::new("a", 0, 0)],
            vec![],
        )
        .unwrap_err();
        assert_eq!(err, vec![Violation::DuplicateId("a".into())]);
    }
}
