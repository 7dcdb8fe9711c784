use super::signature::SignatureExtrema;
use super::upsilon::RatioBound;
use super::{fmt_exact, Q};
use crate::invariants::InvariantTable;
use num_traits::Zero;

/// One lower bound with the data that produces it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bound {
    pub source: &'static str,
    pub value: i64,
    pub certificate: String,
}

/// Lower bounds for `g₄`, `c₄`, `c₄⁺` and `c₄⁻`, one entry per source.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BoundsReport {
    pub genus: Vec<Bound>,
    pub clasp: Vec<Bound>,
    pub clasp_plus: Vec<Bound>,
    pub clasp_minus: Vec<Bound>,
}

fn best(v: &[Bound]) -> i64 {
    v.iter().map(|b| b.value).max().unwrap_or(0).max(0)
}

impl BoundsReport {
    pub fn max_genus(&self) -> i64 {
        best(&self.genus)
    }

    pub fn max_clasp(&self) -> i64 {
        best(&self.clasp)
    }

    pub fn max_clasp_plus(&self) -> i64 {
        best(&self.clasp_plus)
    }

    pub fn max_clasp_minus(&self) -> i64 {
        best(&self.clasp_minus)
    }
}

/// `max_n (n + 2x_n - 1)` over entries with `x_n ≥ 1`, which is the genus
/// forced by `x_n ≤ ⌈(g - n)/2⌉`. Ties go to the largest `n`.
fn parity_bound<K: Copy + Into<i64>>(
    source: &'static str,
    letter: &str,
    vals: impl Iterator<Item = (K, i64)>,
) -> Bound {
    let mut out = Bound {
        source,
        value: 0,
        certificate: "all values zero".into(),
    };
    for (n, x) in vals {
        let n: i64 = n.into();
        if n < 0 || x < 1 {
            continue;
        }
        let g = n + 2 * x - 1;
        if g >= out.value {
            out.value = g;
            out.certificate = format!("n = {n}, {letter}_{n} = {x}");
        }
    }
    out
}

/// Smallest `g ≥ 0` with `⌈(g + 1)/2⌉ ≥ v`, i.e. `max(2v - 2, 0)`.
fn involutive_floor(v: i64) -> i64 {
    (2 * v - 2).max(0)
}

pub fn genus_bounds(t: &InvariantTable, involutive: Option<(i64, i64)>) -> Vec<Bound> {
    let mut out = vec![
        Bound {
            source: "nu_plus",
            value: t.nu_plus,
            certificate: format!("V_{} = 0", t.nu_plus),
        },
        Bound {
            source: "omega_plus",
            value: t.omega_plus,
            certificate: format!("Y_{} = 0", t.omega_plus),
        },
        parity_bound("V", "V", t.v.iter().map(|(&n, &x)| (n, x))),
        parity_bound("Y", "Y", t.y.iter().map(|(&n, &x)| (n, x))),
    ];
    if let Some((vbar, vunder)) = involutive {
        let (a, b) = (involutive_floor(vunder), involutive_floor(-vbar));
        out.push(Bound {
            source: "involutive",
            value: a.max(b),
            certificate: format!("Vbar_0 = {vbar}, Vunder_0 = {vunder}"),
        });
    }
    out
}

/// Inputs to the clasp bounds besides the two invariant tables.
#[derive(Clone, Copy, Debug, Default)]
pub struct ClaspInputs {
    pub upsilon: Option<RatioBound>,
    pub signature: Option<SignatureExtrema>,
    pub involutive: Option<(i64, i64)>,
}

/// A sample point of `Υ(t)/t`; `t = 0` stands for the limit from the right.
fn at(t: Q) -> String {
    if t.is_zero() {
        "0+".into()
    } else {
        fmt_exact(t)
    }
}

pub fn bounds_report(
    k: &InvariantTable,
    mirror: &InvariantTable,
    extra: &ClaspInputs,
) -> BoundsReport {
    let genus = genus_bounds(k, extra.involutive);
    let mut clasp = vec![
        Bound {
            source: "BCG",
            value: k.nu_plus + mirror.nu_plus,
            certificate: format!("nu+(K) = {}, nu+(-K) = {}", k.nu_plus, mirror.nu_plus),
        },
        Bound {
            source: "omega_sum",
            value: k.omega_plus + mirror.omega_plus,
            certificate: format!(
                "omega+(K) = {}, omega+(-K) = {}",
                k.omega_plus, mirror.omega_plus
            ),
        },
    ];
    if let Some(r) = extra.upsilon {
        clasp.push(Bound {
            source: "upsilon_ratio",
            value: r.bound.ceil().to_integer(),
            certificate: format!(
                "max Upsilon(t)/t = {} at t = {}, min = {} at t = {}, difference {}",
                fmt_exact(r.max.1),
                at(r.max.0),
                fmt_exact(r.min.1),
                at(r.min.0),
                fmt_exact(r.bound)
            ),
        });
    }
    if let Some(s) = extra.signature {
        clasp.push(Bound {
            source: "signature",
            value: s.bound,
            certificate: format!("max sigma = {}, min sigma = {}", s.max, s.min),
        });
    }
    let g = best(&genus);
    clasp.push(Bound {
        source: "genus",
        value: g,
        certificate: "c4 >= g4".into(),
    });

    let mut clasp_plus = vec![parity_bound("Y", "Y", k.y.iter().map(|(&n, &x)| (n, x)))];
    let mut clasp_minus = vec![parity_bound(
        "Y_mirror",
        "Y(-K)",
        mirror.y.iter().map(|(&n, &x)| (n, x)),
    )];
    if let Some((vbar, vunder)) = extra.involutive {
        clasp_plus.push(Bound {
            source: "involutive",
            value: involutive_floor(vunder),
            certificate: format!("Vunder_0 = {vunder}"),
        });
        clasp_minus.push(Bound {
            source: "involutive",
            value: involutive_floor(-vbar),
            certificate: format!("Vbar_0 = {vbar}"),
        });
    }
    BoundsReport {
        genus,
        clasp,
        clasp_plus,
        clasp_minus,
    }
}
