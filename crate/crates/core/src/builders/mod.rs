//! Constructors: staircases, torus knots, named complexes, expressions, and
//! the complex file format.

mod expr;
mod io;
mod named;
mod staircase;
mod transition;

pub use expr::{parse_knot_expr, KnotExpr};
pub use io::{complex_to_string, load_complex, parse_complex, save_complex, LoadedComplex};
pub use named::{hedden_watson, hedden_watson_iota, named_complex};
pub use staircase::{
    alexander_exponents, staircase, staircase_complex, staircase_dual, torus_knot_complex,
    StepSequence,
};
pub use transition::{is_local, solve_local_map, staircase_transition_maps};

use crate::complex::{dual_complex, tensor_product, BigradedComplex};
use crate::error::Result;

/// The complex of a knot expression: torus knots become staircases, mirrors
/// duals, and sums tensor products.
pub fn realize_expr(e: &KnotExpr) -> Result<BigradedComplex> {
    let c = match e {
        KnotExpr::TorusKnot(p, q) => torus_knot_complex(*p, *q)?,
        KnotExpr::Mirror(inner) => dual_complex(&realize_expr(inner)?),
        KnotExpr::Sum(parts) => {
            let mut acc: Option<BigradedComplex> = None;
            for part in parts {
                let c = realize_expr(part)?;
                acc = Some(match acc {
                    None => c,
                    Some(a) => tensor_product(&a, &c),
                });
            }
            acc.unwrap_or_else(BigradedComplex::unknot)
        }
        KnotExpr::Named(name) => named_complex(name)?.0,
        KnotExpr::File(path) => load_complex(path)?.complex,
    };
    Ok(c.with_name(e.to_string()))
}
