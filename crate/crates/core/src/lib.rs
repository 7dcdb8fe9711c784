//! Exact computation of knot Floer concordance invariants over `F[U,V]`,
//! `F = GF(2)`.

pub mod bounds;
pub mod builders;
pub mod complex;
pub mod error;
pub mod gf2;
pub mod invariants;
pub mod involutive;

pub use error::{Error, Result};
