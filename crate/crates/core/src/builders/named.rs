use crate::complex::{BigradedComplex, ChainMap, Generator, Term};
use crate::error::{Error, Result};

/// The three-generator complex with `∂b = U²a + V²c`, generators at
/// `(0,-4)`, `(-3,-3)` and `(-4,0)`.
pub fn hedden_watson() -> BigradedComplex {
    BigradedComplex::new(
        "HW",
        vec![
            Generator::new("a", 0, -4),
            Generator::new("b", -3, -3),
            Generator::new("c", -4, 0),
        ],
        vec![vec![], vec![Term::new(0, 2, 0), Term::new(2, 0, 2)], vec![]],
    )
    .expect("HW complex is valid")
}

/// The involution of [`hedden_watson`] exchanging `a` and `c` and fixing `b`.
pub fn hedden_watson_iota() -> ChainMap {
    ChainMap::new(
        vec![
            vec![Term::new(2, 0, 0)],
            vec![Term::new(1, 0, 0)],
            vec![Term::new(0, 0, 0)],
        ],
        3,
        true,
    )
}

/// Looks up a built-in complex and its involution.
pub fn named_complex(name: &str) -> Result<(BigradedComplex, ChainMap)> {
    match name {
        "HW" => Ok((hedden_watson(), hedden_watson_iota())),
        "unknot" | "U" => Ok((BigradedComplex::unknot(), ChainMap::identity(1).into_skew())),
        _ => Err(Error::UnknownName(name.to_string())),
    }
}
