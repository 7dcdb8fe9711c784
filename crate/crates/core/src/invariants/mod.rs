//! Correction terms and concordance invariants of knot-like complexes.

mod fu;
mod knot;
mod table;

pub use fu::{a_s_subcomplex, d_invariant, d_invariant_snf, BasisOrigin, FUComplex, TTerm};
pub use knot::{
    a_s_checked, default_cap, is_knotlike, nu_hat, nu_plus, omega_hat, omega_hat_certified,
    omega_plus, tau_invariant, tower_ranks, v_invariant, y_invariant, OmegaCertificate,
};
pub use table::{InvariantTable, TableOptions};
