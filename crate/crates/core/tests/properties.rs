//! Structural laws on random connected sums of small torus knots.

mod common;

use cfk_core::bounds::{lt_signature_of_expr, upsilon_of_expr, Q};
use cfk_core::builders::{realize_expr, KnotExpr};
use cfk_core::complex::{tensor_product, Term};
use cfk_core::invariants::{nu_hat, omega_hat, tau_invariant, v_invariant, y_invariant};
use cfk_core::involutive::{realize_with_iota, v0_bar_under, IotaOrder};
use proptest::prelude::*;

fn torus_sum() -> impl Strategy<Value = KnotExpr> {
    prop::collection::vec((0..common::SMALL_TORUS.len(), any::<bool>()), 1..=3).prop_map(|parts| {
        let parts: Vec<KnotExpr> = parts
            .into_iter()
            .map(|(i, m)| {
                let (p, q) = common::SMALL_TORUS[i];
                let t = KnotExpr::TorusKnot(p, q);
                if m {
                    t.mirror()
                } else {
                    t
                }
            })
            .collect();
        KnotExpr::Sum(parts)
    })
}

fn small_sum() -> impl Strategy<Value = KnotExpr> {
    prop::collection::vec((0..3usize, any::<bool>()), 1..=2).prop_map(|parts| {
        KnotExpr::Sum(
            parts
                .into_iter()
                .map(|(i, m)| {
                    let (p, q) = common::SMALL_TORUS[i];
                    let t = KnotExpr::TorusKnot(p, q);
                    if m {
                        t.mirror()
                    } else {
                        t
                    }
                })
                .collect(),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn tensor_products_are_complexes(e in torus_sum()) {
        let c = realize_expr(&e).unwrap();
        prop_assert!(c.violations().is_empty());
        let again = tensor_product(&c, &realize_expr(&KnotExpr::TorusKnot(2, 3)).unwrap());
        prop_assert!(again.violations().is_empty());
    }

    #[test]
    fn upsilon_laws(a in torus_sum(), b in torus_sum()) {
        let (fa, fb) = (upsilon_of_expr(&a).unwrap(), upsilon_of_expr(&b).unwrap());
        prop_assert!(fa.is_symmetric());
        let sum = upsilon_of_expr(&KnotExpr::Sum(vec![a.clone(), b])).unwrap();
        prop_assert_eq!(sum, fa.add(&fb));
        prop_assert_eq!(upsilon_of_expr(&a.mirror()).unwrap(), fa.neg());
    }

    #[test]
    fn signature_laws(a in torus_sum()) {
        let s = lt_signature_of_expr(&a).unwrap();
        prop_assert!(s.is_symmetric());
        prop_assert_eq!(lt_signature_of_expr(&a.mirror()).unwrap(), s.neg());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn correction_terms(e in small_sum()) {
        let c = realize_expr(&e).unwrap();
        let v: Vec<i64> = (0..4).map(|s| v_invariant(&c, s).unwrap()).collect();
        let y: Vec<i64> = (0..4).map(|n| y_invariant(&c, n).unwrap()).collect();
        prop_assert_eq!(v[0], y[0]);
        for n in 0..4 {
            prop_assert!(v[n] <= y[n]);
        }
        for n in 0..3 {
            prop_assert!(v[n + 1] <= v[n] && v[n] <= v[n + 1] + 1);
            prop_assert!(y[n + 1] <= y[n] && y[n] <= y[n + 1] + 1);
        }
    }

    #[test]
    fn tau_nu_omega(e in small_sum()) {
        let c = realize_expr(&e).unwrap();
        let m = realize_expr(&e.clone().mirror()).unwrap();
        let tau = tau_invariant(&c).unwrap();
        let (nu, omega) = (nu_hat(&c).unwrap(), omega_hat(&c).unwrap());
        prop_assert_eq!(tau_invariant(&m).unwrap(), -tau);
        prop_assert!(nu == tau || nu == tau + 1);
        prop_assert!(tau.max(0) <= omega && omega <= (tau + 1).max(0));
        prop_assert!(nu <= omega);
    }

    #[test]
    fn involutive_sandwich(e in small_sum(), first in any::<bool>()) {
        let order = if first { IotaOrder::IotaFirst } else { IotaOrder::IotaLast };
        let d = realize_with_iota(&e, order).unwrap();
        let (vbar, vunder) = v0_bar_under(&d).unwrap();
        let v0 = v_invariant(&d.complex, 0).unwrap();
        prop_assert!(vbar <= v0 && v0 <= vunder);
    }

    #[test]
    fn iota_is_skew(e in small_sum(), picks in prop::collection::vec((any::<prop::sample::Index>(), 0u32..3, 0u32..3), 1..5)) {
        // ι(∂x) = ∂(ι x) and ι(U^a V^b x) = U^b V^a ι(x) on random elements.
        let d = realize_with_iota(&e, IotaOrder::default()).unwrap();
        let c = &d.complex;
        let mut x: Vec<Term> = picks.iter().map(|(i, a, b)| Term::new(i.index(c.len()), *a, *b)).collect();
        cfk_core::complex::normalize_terms(&mut x);
        prop_assert_eq!(d.iota.apply(&c.apply(&x)), c.apply(&d.iota.apply(&x)));
        let swapped: Vec<Term> = x.iter().map(|t| t.times(1, 2)).collect();
        let expect: Vec<Term> = d.iota.apply(&x).into_iter().map(|t| t.times(2, 1)).collect();
        prop_assert_eq!(d.iota.apply(&swapped), expect);
    }
}

#[test]
fn upsilon_at_zero_slope_is_minus_tau() {
    for (p, q) in common::SMALL_TORUS {
        let e = KnotExpr::TorusKnot(p, q);
        let tau = tau_invariant(&realize_expr(&e).unwrap()).unwrap();
        assert_eq!(
            upsilon_of_expr(&e).unwrap().slope_at_zero(),
            Q::from_integer(-tau)
        );
    }
}
