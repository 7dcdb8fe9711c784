//! Polynomials over GF(2): the two-variable ring `F[U,V]` and the
//! one-variable ring `F[T]`.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::{Add, Mul};

/// An element of `F[U,V]`, stored as the set of exponent pairs `(a, b)`
/// of the monomials `U^a V^b` carrying coefficient 1.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PolyUV {
    terms: BTreeSet<(u32, u32)>,
}

impl PolyUV {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 0)
    }

    pub fn monomial(a: u32, b: u32) -> Self {
        let mut terms = BTreeSet::new();
        terms.insert((a, b));
        Self { terms }
    }

    /// Builds a polynomial from a list of monomials; repeated monomials
    /// cancel in pairs.
    pub fn from_terms<I: IntoIterator<Item = (u32, u32)>>(it: I) -> Self {
        let mut p = Self::zero();
        for t in it {
            p.toggle(t);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.terms.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn toggle(&mut self, t: (u32, u32)) {
        if !self.terms.remove(&t) {
            self.terms.insert(t);
        }
    }

    /// Swaps the roles of `U` and `V`.
    pub fn conjugate(&self) -> Self {
        Self {
            terms: self.terms.iter().map(|&(a, b)| (b, a)).collect(),
        }
    }

    /// Formal partial derivative in `U`, coefficients reduced mod 2.
    pub fn d_u(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|&&(a, _)| a % 2 == 1)
                .map(|&(a, b)| (a - 1, b)),
        )
    }

    /// Formal partial derivative in `V`, coefficients reduced mod 2.
    pub fn d_v(&self) -> Self {
        Self::from_terms(
            self.terms
                .iter()
                .filter(|&&(_, b)| b % 2 == 1)
                .map(|&(a, b)| (a, b - 1)),
        )
    }
}

impl Add for &PolyUV {
    type Output = PolyUV;
    fn add(self, rhs: &PolyUV) -> PolyUV {
        PolyUV {
            terms: self
                .terms
                .symmetric_difference(&rhs.terms)
                .copied()
                .collect(),
        }
    }
}

impl Add for PolyUV {
    type Output = PolyUV;
    fn add(self, rhs: PolyUV) -> PolyUV {
        &self + &rhs
    }
}

impl Mul for &PolyUV {
    type Output = PolyUV;
    fn mul(self, rhs: &PolyUV) -> PolyUV {
        let mut out = PolyUV::zero();
        for &(a, b) in &self.terms {
            for &(c, d) in &rhs.terms {
                out.toggle((a + c, b + d));
            }
        }
        out
    }
}

impl Mul for PolyUV {
    type Output = PolyUV;
    fn mul(self, rhs: PolyUV) -> PolyUV {
        &self * &rhs
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, vars: &[(&str, u32)]) -> fmt::Result {
    let mut wrote = false;
    for &(name, e) in vars {
        match e {
            0 => {}
            1 => {
                f.write_str(name)?;
                wrote = true;
            }
            _ => {
                write!(f, "{name}^{e}")?;
                wrote = true;
            }
        }
    }
    if !wrote {
        f.write_str("1")?;
    }
    Ok(())
}

impl fmt::Display for PolyUV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, &(a, b)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            fmt_monomial(f, &[("U", a), ("V", b)])?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyUV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An element of `F[T]`, bit-packed: bit `k` of the word vector is the
/// coefficient of `T^k`. Trailing zero words are never stored, so equality
/// is structural.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct PolyT {
    words: Vec<u64>,
}

impl PolyT {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    pub fn monomial(k: u32) -> Self {
        let mut p = Self::zero();
        p.toggle(k);
        p
    }

    pub fn from_exps<I: IntoIterator<Item = u32>>(it: I) -> Self {
        let mut p = Self::zero();
        for k in it {
            p.toggle(k);
        }
        p
    }

    fn trim(&mut self) {
        while self.words.last() == Some(&0) {
            self.words.pop();
        }
    }

    pub fn toggle(&mut self, k: u32) {
        let (w, b) = ((k / 64) as usize, k % 64);
        if self.words.len() <= w {
            self.words.resize(w + 1, 0);
        }
        self.words[w] ^= 1 << b;
        self.trim();
    }

    pub fn coeff(&self, k: u32) -> bool {
        let (w, b) = ((k / 64) as usize, k % 64);
        self.words.get(w).is_some_and(|x| x >> b & 1 == 1)
    }

    pub fn is_zero(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.words.len() == 1 && self.words[0] == 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        let last = *self.words.last()?;
        Some((self.words.len() as u32 - 1) * 64 + 63 - last.leading_zeros())
    }

    pub fn exps(&self) -> impl Iterator<Item = u32> + '_ {
        self.words.iter().enumerate().flat_map(|(i, &w)| {
            (0..64u32)
                .filter(move |b| w >> b & 1 == 1)
                .map(move |b| i as u32 * 64 + b)
        })
    }

    /// Single monomial `T^k`, if that is what this is.
    pub fn as_monomial(&self) -> Option<u32> {
        let mut it = self.exps();
        let k = it.next()?;
        it.next().is_none().then_some(k)
    }

    fn xor_shifted(&mut self, other: &PolyT, shift: u32) {
        let (ws, bs) = ((shift / 64) as usize, shift % 64);
        let need = other.words.len() + ws + 1;
        if self.words.len() < need {
            self.words.resize(need, 0);
        }
        for (i, &w) in other.words.iter().enumerate() {
            self.words[i + ws] ^= w << bs;
            if bs != 0 {
                self.words[i + ws + 1] ^= w >> (64 - bs);
            }
        }
        self.trim();
    }

    /// Euclidean division: `self = q * d + r` with `deg r < deg d`.
    ///
    /// Panics on division by zero.
    pub fn div_rem(&self, d: &PolyT) -> (PolyT, PolyT) {
        let dd = d.degree().expect("division by zero polynomial");
        let mut r = self.clone();
        let mut q = PolyT::zero();
        while let Some(rd) = r.degree() {
            if rd < dd {
                break;
            }
            let s = rd - dd;
            q.toggle(s);
            r.xor_shifted(d, s);
        }
        (q, r)
    }

    pub fn divides(&self, other: &PolyT) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    pub fn gcd(a: &PolyT, b: &PolyT) -> PolyT {
        let (mut x, mut y) = (a.clone(), b.clone());
        while !y.is_zero() {
            let r = x.div_rem(&y).1;
            x = y;
            y = r;
        }
        x
    }
}

impl Add for &PolyT {
    type Output = PolyT;
    fn add(self, rhs: &PolyT) -> PolyT {
        let mut out = self.clone();
        out.xor_shifted(rhs, 0);
        out
    }
}

impl Add for PolyT {
    type Output = PolyT;
    fn add(self, rhs: PolyT) -> PolyT {
        &self + &rhs
    }
}

impl Mul for &PolyT {
    type Output = PolyT;
    fn mul(self, rhs: &PolyT) -> PolyT {
        let mut out = PolyT::zero();
        for k in self.exps() {
            out.xor_shifted(rhs, k);
        }
        out
    }
}

impl Mul for PolyT {
    type Output = PolyT;
    fn mul(self, rhs: PolyT) -> PolyT {
        &self * &rhs
    }
}

impl fmt::Display for PolyT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let exps: Vec<u32> = self.exps().collect();
        for (i, &k) in exps.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            fmt_monomial(f, &[("T", k)])?;
        }
        Ok(())
    }
}

impl fmt::Debug for PolyT {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
