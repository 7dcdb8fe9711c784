//! Upsilon and Levine-Tristram signatures of torus-knot sums, and the slice
//! genus and clasp number lower bounds assembled from all invariants.

mod report;
mod signature;
mod upsilon;

pub use report::{bounds_report, genus_bounds, Bound, BoundsReport, ClaspInputs};
pub use signature::{
    lt_signature_of_expr, signature_extrema, torus_signature, SignatureExtrema, StepFunction,
};
pub use upsilon::{
    upsilon_of_expr, upsilon_ratio_bound, upsilon_staircase, PLFunction, RatioBound,
};

/// Exact rationals.
pub type Q = num_rational::Rational64;

/// Exact text form: an integer, a terminating decimal, or `p/q`.
pub fn fmt_exact(x: Q) -> String {
    let (n, d) = (*x.numer(), *x.denom());
    if d == 1 {
        return n.to_string();
    }
    let (mut rest, mut twos, mut fives) = (d, 0u32, 0u32);
    while rest % 2 == 0 {
        rest /= 2;
        twos += 1;
    }
    while rest % 5 == 0 {
        rest /= 5;
        fives += 1;
    }
    if rest != 1 {
        return format!("{n}/{d}");
    }
    let digits = twos.max(fives);
    let scaled = n.unsigned_abs() as u128 * 10u128.pow(digits) / d as u128;
    let s = format!("{:0>width$}", scaled, width = digits as usize + 1);
    let (int, frac) = s.split_at(s.len() - digits as usize);
    format!("{}{int}.{frac}", if n < 0 { "-" } else { "" })
}
