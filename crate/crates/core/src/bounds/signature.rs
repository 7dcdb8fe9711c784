use super::Q;
use crate::builders::KnotExpr;
use crate::error::{Error, Result};
use num_rational::Ratio;
use std::collections::BTreeMap;

/// An integer step function on `(0, 1)`, zero near `0`, given by its jumps.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct StepFunction {
    jumps: BTreeMap<Q, i64>,
}

impl StepFunction {
    pub fn jumps(&self) -> &BTreeMap<Q, i64> {
        &self.jumps
    }

    fn add_jump(&mut self, x: Q, size: i64) {
        let e = self.jumps.entry(x).or_insert(0);
        *e += size;
        if *e == 0 {
            self.jumps.remove(&x);
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&x, &s) in &other.jumps {
            out.add_jump(x, s);
        }
        out
    }

    pub fn neg(&self) -> Self {
        Self {
            jumps: self.jumps.iter().map(|(&x, &s)| (x, -s)).collect(),
        }
    }

    /// Value at a regular point, `None` at a jump.
    pub fn value_at(&self, x: Q) -> Option<i64> {
        if self.jumps.contains_key(&x) {
            return None;
        }
        Some(self.jumps.range(..x).map(|(_, s)| s).sum())
    }

    /// Values on the open intervals between consecutive jumps, in order.
    pub fn interval_values(&self) -> Vec<i64> {
        let mut acc = 0;
        let mut out = vec![0];
        for s in self.jumps.values() {
            acc += s;
            out.push(acc);
        }
        out
    }

    /// `σ(x) = σ(1 - x)` away from jumps.
    pub fn is_symmetric(&self) -> bool {
        self.jumps
            .iter()
            .all(|(&x, &s)| self.jumps.get(&(Q::from_integer(1) - x)) == Some(&-s))
    }
}

/// Maximum and minimum over regular points, and the clasp bound
/// `(max - min)/2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SignatureExtrema {
    pub max: i64,
    pub min: i64,
    pub bound: i64,
}

pub fn signature_extrema(s: &StepFunction) -> SignatureExtrema {
    let v = s.interval_values();
    let (max, min) = (*v.iter().max().unwrap(), *v.iter().min().unwrap());
    SignatureExtrema {
        max,
        min,
        bound: (max - min) / 2,
    }
}

/// Jumps of `σ_{T(p,q)}`: for `s = a/p + b/q` with `1 ≤ a < p`, `1 ≤ b < q`,
/// a jump of `-2` at `s - 1` when `s > 1` and of `+2` at `s` when `s < 1`.
pub fn torus_signature(p: i64, q: i64) -> StepFunction {
    let mut f = StepFunction::default();
    let one = Q::from_integer(1);
    for a in 1..p {
        for b in 1..q {
            let s = Ratio::new(a, p) + Ratio::new(b, q);
            if s > one {
                f.add_jump(s - one, -2);
            } else if s < one {
                f.add_jump(s, 2);
            }
        }
    }
    f
}

pub fn lt_signature_of_expr(e: &KnotExpr) -> Result<StepFunction> {
    let summands = e.torus_summands().ok_or(Error::NotTorusSum)?;
    let mut f = StepFunction::default();
    for (p, q, sign) in summands {
        let t = torus_signature(p, q);
        f = f.add(&if sign < 0 { t.neg() } else { t });
    }
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builders::parse_knot_expr;

    fn sig(s: &str) -> StepFunction {
        lt_signature_of_expr(&parse_knot_expr(s).unwrap()).unwrap()
    }

    #[test]
    fn trefoil() {
        let f = sig("T(2,3)");
        let jumps: Vec<(Q, i64)> = f.jumps().iter().map(|(&x, &s)| (x, s)).collect();
        assert_eq!(jumps, vec![(Ratio::new(1, 6), -2), (Ratio::new(5, 6), 2)]);
        assert_eq!(f.value_at(Ratio::new(1, 2)), Some(-2));
        assert_eq!(f.value_at(Ratio::new(1, 6)), None);
        assert_eq!(f.value_at(Ratio::new(9, 10)), Some(0));
    }

    #[test]
    fn classical_values() {
        assert_eq!(sig("T(3,4)").value_at(Ratio::new(1, 2)), Some(-6));
        assert_eq!(sig("T(2,5)").value_at(Ratio::new(1, 2)), Some(-4));
        assert_eq!(sig("-T(3,4)").value_at(Ratio::new(1, 2)), Some(6));
    }

    #[test]
    fn unknot() {
        let f = sig("unknot");
        assert_eq!(
            signature_extrema(&f),
            SignatureExtrema {
                max: 0,
                min: 0,
                bound: 0
            }
        );
    }

    #[test]
    fn slice_sum_vanishes() {
        assert!(sig("T(2,3)#-T(2,3)").jumps().is_empty());
    }
}
