use cfk_core::builders::{hedden_watson, parse_knot_expr, realize_expr};
use cfk_core::complex::BigradedComplex;
use cfk_core::invariants::*;

fn realize(s: &str) -> BigradedComplex {
    realize_expr(&parse_knot_expr(s).unwrap()).unwrap()
}

#[test]
fn k_values() {
    let k = realize("T(2,3)#T(4,7)#-T(5,6)");
    let v: Vec<i64> = (0..4).map(|s| v_invariant(&k, s).unwrap()).collect();
    assert_eq!(v, vec![1, 0, 0, 0]);
    let y: Vec<i64> = (0..3).map(|n| y_invariant(&k, n).unwrap()).collect();
    assert_eq!(y, vec![1, 1, 0]);
    assert_eq!(omega_plus(&k, None).unwrap(), 2);
    let mk = realize("-(T(2,3)#T(4,7)#-T(5,6))");
    let v: Vec<i64> = (0..4).map(|s| v_invariant(&mk, s).unwrap()).collect();
    assert_eq!(v, vec![1, 0, 0, 0]);
    assert_eq!(tau_invariant(&mk).unwrap(), -tau_invariant(&k).unwrap());
}

#[test]
fn j_values() {
    let j = realize("T(2,11)#T(4,7)#-T(5,6)");
    let v: Vec<i64> = (0..6).map(|s| v_invariant(&j, s).unwrap()).collect();
    assert_eq!(v, vec![3, 2, 2, 1, 1, 0]);
    let y: Vec<i64> = (0..7).map(|n| y_invariant(&j, n).unwrap()).collect();
    assert_eq!(y, vec![3, 2, 2, 1, 1, 1, 0]);
}

#[test]
fn k1_values() {
    let k1 = realize("T(2,11)#-T(4,5)");
    assert_eq!(tau_invariant(&k1).unwrap(), -1);
    assert_eq!(nu_plus(&k1, None).unwrap(), 1);
    assert_eq!(nu_plus(&realize("-(T(2,11)#-T(4,5))"), None).unwrap(), 1);
}

#[test]
fn hw_values() {
    let c = hedden_watson();
    assert_eq!(
        (
            tau_invariant(&c).unwrap(),
            nu_hat(&c).unwrap(),
            omega_hat(&c).unwrap(),
            v_invariant(&c, 0).unwrap()
        ),
        (2, 2, 3, 2)
    );
}

#[test]
fn k_involutive() {
    use cfk_core::involutive::{realize_with_iota, v0_bar_under, IotaOrder};
    for order in [IotaOrder::IotaLast, IotaOrder::IotaFirst] {
        let d =
            realize_with_iota(&parse_knot_expr("T(2,3)#T(4,7)#-T(5,6)").unwrap(), order).unwrap();
        assert_eq!(v0_bar_under(&d).unwrap(), (1, 2), "{order:?}");
    }
}
