use super::Q;
use crate::builders::{torus_knot_complex, KnotExpr};
use crate::complex::BigradedComplex;
use crate::error::{Error, Result};
use num_rational::Ratio;
use num_traits::{Signed, Zero};

/// A continuous piecewise-linear function on `[0, 2]`, stored as its
/// breakpoints with values. Interior breakpoints are genuine corners.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PLFunction {
    points: Vec<(Q, Q)>,
}

fn q(n: i64) -> Q {
    Q::from_integer(n)
}

impl PLFunction {
    /// Builds from sample points that include both endpoints, with the
    /// function linear between consecutive samples.
    fn from_samples(mut pts: Vec<(Q, Q)>) -> Self {
        pts.sort_by_key(|p| p.0);
        pts.dedup_by(|a, b| a.0 == b.0);
        let mut out: Vec<(Q, Q)> = Vec::with_capacity(pts.len());
        for p in pts {
            while out.len() >= 2 {
                let (a, b) = (out[out.len() - 2], out[out.len() - 1]);
                if (b.1 - a.1) * (p.0 - b.0) == (p.1 - b.1) * (b.0 - a.0) {
                    out.pop();
                } else {
                    break;
                }
            }
            out.push(p);
        }
        Self { points: out }
    }

    pub fn zero() -> Self {
        Self::from_samples(vec![(q(0), q(0)), (q(2), q(0))])
    }

    /// Upper envelope of lines `t ↦ c + m t` on `[0, 2]`.
    pub fn max_of_lines(lines: &[(Q, Q)]) -> Self {
        assert!(!lines.is_empty());
        let mut ts = vec![q(0), q(2)];
        for (i, &(c1, m1)) in lines.iter().enumerate() {
            for &(c2, m2) in &lines[i + 1..] {
                if m1 != m2 {
                    let t = (c2 - c1) / (m1 - m2);
                    if t > q(0) && t < q(2) {
                        ts.push(t);
                    }
                }
            }
        }
        let pts = ts
            .into_iter()
            .map(|t| {
                let v = lines.iter().map(|&(c, m)| c + m * t).max().unwrap();
                (t, v)
            })
            .collect();
        Self::from_samples(pts)
    }

    pub fn points(&self) -> &[(Q, Q)] {
        &self.points
    }

    pub fn eval(&self, t: Q) -> Q {
        assert!(t >= q(0) && t <= q(2), "Υ is defined on [0, 2]");
        let i = self.points.partition_point(|p| p.0 < t);
        let (t1, v1) = self.points[i];
        if t1 == t {
            return v1;
        }
        let (t0, v0) = self.points[i - 1];
        v0 + (v1 - v0) * (t - t0) / (t1 - t0)
    }

    pub fn add(&self, other: &Self) -> Self {
        let pts = self
            .points
            .iter()
            .chain(&other.points)
            .map(|p| (p.0, self.eval(p.0) + other.eval(p.0)))
            .collect();
        Self::from_samples(pts)
    }

    pub fn neg(&self) -> Self {
        Self {
            points: self.points.iter().map(|&(t, v)| (t, -v)).collect(),
        }
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        Self {
            points: self.points.iter().map(|&(t, v)| (t, v * q(k))).collect(),
        }
    }

    /// Slope of the first segment, i.e. the right derivative at 0.
    pub fn slope_at_zero(&self) -> Q {
        let (t0, v0) = self.points[0];
        let (t1, v1) = self.points[1];
        (v1 - v0) / (t1 - t0)
    }

    /// `f(t) = f(2 - t)` at every breakpoint and its reflection.
    pub fn is_symmetric(&self) -> bool {
        self.points.iter().all(|&(t, v)| self.eval(q(2) - t) == v)
    }

    pub fn is_zero(&self) -> bool {
        self.points.iter().all(|p| p.1.is_zero())
    }

    /// Breakpoints in `[0, 1]` together with both endpoints.
    pub fn samples_on_unit_interval(&self) -> Vec<(Q, Q)> {
        let mut ts: Vec<Q> = self
            .points
            .iter()
            .map(|p| p.0)
            .filter(|&t| t <= q(1))
            .collect();
        ts.push(q(1));
        ts.dedup();
        ts.into_iter().map(|t| (t, self.eval(t))).collect()
    }

    /// `Υ(t)/t` on `(0, 1]` at the same samples, with its limit at `0⁺`.
    pub fn ratio_samples(&self) -> Vec<(Q, Q)> {
        self.samples_on_unit_interval()
            .into_iter()
            .map(|(t, v)| {
                (
                    t,
                    if t.is_zero() {
                        self.slope_at_zero()
                    } else {
                        v / t
                    },
                )
            })
            .collect()
    }
}

/// Extrema of `Υ(t)/t` over `(0, 1]` and their difference.
///
/// On each segment `Υ(t) = a + bt`, so `Υ(t)/t = a/t + b` is monotone and
/// the extrema occur at breakpoints, at `t = 1`, or in the limit `t → 0⁺`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RatioBound {
    pub max: (Q, Q),
    pub min: (Q, Q),
    pub bound: Q,
}

pub fn upsilon_ratio_bound(f: &PLFunction) -> RatioBound {
    let s = f.ratio_samples();
    let max = *s
        .iter()
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
        .unwrap();
    let min = *s
        .iter()
        .min_by(|a, b| a.1.cmp(&b.1).then(a.0.cmp(&b.0)))
        .unwrap();
    RatioBound {
        max,
        min,
        bound: max.1 - min.1,
    }
}

/// Whether `c` has the shape produced by the staircase constructors.
fn is_staircase(c: &BigradedComplex) -> bool {
    let n = c.len();
    n % 2 == 1
        && (0..n).all(|i| {
            let d = c.diff(i);
            if i % 2 == 0 {
                d.is_empty()
            } else {
                d.len() == 2
                    && d[0].target as usize == i - 1
                    && d[0].u > 0
                    && d[0].v == 0
                    && d[1].target as usize == i + 1
                    && d[1].u == 0
                    && d[1].v > 0
            }
        })
}

/// `Υ(t) = max (1 - t/2) grw(x) + (t/2) grz(x)` over the cycle generators
/// of a staircase.
pub fn upsilon_staircase(c: &BigradedComplex) -> Result<PLFunction> {
    if !is_staircase(c) {
        return Err(Error::NotTorusSum);
    }
    let lines: Vec<(Q, Q)> = c
        .gens()
        .iter()
        .step_by(2)
        .map(|g| (q(g.grw), Ratio::new(g.grz - g.grw, 2)))
        .collect();
    Ok(PLFunction::max_of_lines(&lines))
}

/// `Υ` of a sum of torus knots and mirrors, by additivity and
/// `Υ_{-K} = -Υ_K`.
pub fn upsilon_of_expr(e: &KnotExpr) -> Result<PLFunction> {
    let summands = e.torus_summands().ok_or(Error::NotTorusSum)?;
    let mut f = PLFunction::zero();
    for (p, qq, sign) in summands {
        let u = upsilon_staircase(&torus_knot_complex(p, qq)?)?;
        f = f.add(&u.scale(sign));
    }
    debug_assert!(f.points.iter().all(|p| !p.0.is_negative()));
    Ok(f)
}
