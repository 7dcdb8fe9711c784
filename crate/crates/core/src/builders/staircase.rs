use crate::complex::{dual_complex, BigradedComplex, Generator, Term};
use crate::error::{Error, Result};
use num_integer::Integer;

/// Alexander gradings `s_0 > s_1 > … > s_{2m}` of a staircase, symmetric
/// about zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepSequence {
    exps: Vec<i64>,
}

impl StepSequence {
    pub fn new(exps: Vec<i64>) -> Result<Self> {
        let ok = exps.len() % 2 == 1
            && exps.windows(2).all(|w| w[0] > w[1])
            && exps.iter().zip(exps.iter().rev()).all(|(a, b)| *a == -b);
        if ok {
            Ok(Self { exps })
        } else {
            Err(Error::Internal(format!(
                "{exps:?} is not a symmetric strictly decreasing sequence of odd length"
            )))
        }
    }

    /// The sequence `(n, n-1, …, -n)` of the staircase with unit steps.
    pub fn unit(n: u32) -> Self {
        let n = n as i64;
        Self {
            exps: (-n..=n).rev().collect(),
        }
    }

    pub fn exps(&self) -> &[i64] {
        &self.exps
    }

    /// The top Alexander grading, which is the genus for torus knots.
    pub fn genus(&self) -> i64 {
        self.exps[0]
    }

    pub fn len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.exps.is_empty()
    }
}

/// Integer polynomial product, coefficients indexed by exponent.
fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial; `None` if there is a remainder.
fn poly_div_exact(num: &[i64], den: &[i64]) -> Option<Vec<i64>> {
    let dd = den.len() - 1;
    assert_eq!(den[dd], 1);
    let mut r = num.to_vec();
    if r.len() < den.len() {
        return None;
    }
    let mut q = vec![0; r.len() - dd];
    for k in (0..q.len()).rev() {
        let c = r[k + dd];
        q[k] = c;
        for (j, d) in den.iter().enumerate() {
            r[k + j] -= c * d;
        }
    }
    r.iter().all(|&x| x == 0).then_some(q)
}

/// `t^k - 1` as a coefficient vector.
fn t_pow_minus_one(k: usize) -> Vec<i64> {
    let mut v = vec![0; k + 1];
    v[0] = -1;
    v[k] = 1;
    v
}

/// Exponents of the Alexander polynomial of `T(p,q)`, symmetrized.
///
/// Expands `(t^{pq}-1)(t-1)/((t^p-1)(t^q-1))` exactly, checks that the
/// nonzero coefficients alternate `+1, -1, …, +1` from the top, and shifts
/// by the genus `(p-1)(q-1)/2`.
pub fn alexander_exponents(p: i64, q: i64) -> Result<StepSequence> {
    if p < 2 || q < 2 || p.gcd(&q) != 1 {
        return Err(Error::BadTorusParameters { p, q });
    }
    let (pu, qu) = (p as usize, q as usize);
    let num = poly_mul(&t_pow_minus_one(pu * qu), &t_pow_minus_one(1));
    let den = poly_mul(&t_pow_minus_one(pu), &t_pow_minus_one(qu));
    let delta = poly_div_exact(&num, &den)
        .ok_or_else(|| Error::Internal(format!("Alexander polynomial of T({p},{q}) not exact")))?;
    let g = (p - 1) * (q - 1) / 2;
    let terms: Vec<(i64, i64)> = delta
        .iter()
        .enumerate()
        .rev()
        .filter(|(_, &c)| c != 0)
        .map(|(k, &c)| (k as i64 - g, c))
        .collect();
    let alternates = terms
        .iter()
        .enumerate()
        .all(|(i, &(_, c))| c == if i % 2 == 0 { 1 } else { -1 });
    if !alternates {
        return Err(Error::Internal(format!(
            "Alexander polynomial of T({p},{q}) has non-alternating coefficients"
        )));
    }
    StepSequence::new(terms.into_iter().map(|(e, _)| e).collect())
}

/// The staircase with the given step sequence: generators `g0 … g{2m}` with
/// `A(g^i) = s_i`, even-index generators cycles, and for odd `i`
/// `∂g^i = U^{s_{i-1}-s_i} g^{i-1} + V^{s_i-s_{i+1}} g^{i+1}`. The top
/// generator sits at `grw = 0`.
pub fn staircase_complex(seq: &StepSequence, name: impl Into<String>) -> BigradedComplex {
    let s = seq.exps();
    let mut gens = Vec::with_capacity(s.len());
    let mut grw = 0i64;
    for (i, &a) in s.iter().enumerate() {
        if i > 0 {
            grw += if i % 2 == 1 {
                1 - 2 * (s[i - 1] - a)
            } else {
                -1
            };
        }
        gens.push(Generator::new(format!("g{i}"), grw, grw - 2 * a));
    }
    let diff = (0..s.len())
        .map(|i| {
            if i % 2 == 0 {
                Vec::new()
            } else {
                vec![
                    Term::new(i - 1, (s[i - 1] - s[i]) as u32, 0),
                    Term::new(i + 1, 0, (s[i] - s[i + 1]) as u32),
                ]
            }
        })
        .collect();
    BigradedComplex::from_trusted(name.into(), gens, diff)
}

/// `S_n`: generators `y_{-n} … y_n` with `y_i` at `(-n-i, -n+i)` and
/// `∂y_{-n+2i+1} = U y_{-n+2i} + V y_{-n+2i+2}`.
pub fn staircase(n: u32) -> BigradedComplex {
    let ni = n as i64;
    staircase_complex(&StepSequence::unit(n), format!("S{n}"))
        .rename(|k, _| format!("y{}", k as i64 - ni))
}

/// `S_n^∨`, with `x_i` at `(n+i, n-i)` dual to `y_i`.
pub fn staircase_dual(n: u32) -> BigradedComplex {
    let ni = n as i64;
    dual_complex(&staircase(n))
        .with_name(format!("S{n}^"))
        .rename(|k, _| format!("x{}", k as i64 - ni))
}

pub fn torus_knot_complex(p: i64, q: i64) -> Result<BigradedComplex> {
    Ok(staircase_complex(
        &alexander_exponents(p, q)?,
        format!("T({p},{q})"),
    ))
}
