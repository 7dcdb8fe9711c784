use cfk_core::bounds::*;
use cfk_core::builders::{parse_knot_expr, realize_expr, KnotExpr};
use cfk_core::invariants::{InvariantTable, TableOptions};

fn expr(s: &str) -> KnotExpr {
    parse_knot_expr(s).unwrap()
}

#[test]
fn k1_upsilon() {
    let f = upsilon_of_expr(&expr("T(2,11)#-T(4,5)")).unwrap();
    assert_eq!(f.eval(Q::from_integer(1)), Q::from_integer(-1));
    assert_eq!(f.slope_at_zero(), Q::from_integer(1));
    assert_eq!(upsilon_ratio_bound(&f).bound, Q::from_integer(2));
    let k = "(T(2,11)#-T(4,5))";
    let f3 = upsilon_of_expr(&expr(&format!("{k}#{k}#{k}"))).unwrap();
    assert_eq!(upsilon_ratio_bound(&f3).bound, Q::from_integer(6));
}

#[test]
fn signature_extrema_of_k_and_j() {
    let k = signature_extrema(&lt_signature_of_expr(&expr("T(2,3)#T(4,7)#-T(5,6)")).unwrap());
    assert_eq!((k.max, k.min, k.bound), (2, -4, 3));
    let j = signature_extrema(&lt_signature_of_expr(&expr("T(2,11)#T(4,7)#-T(5,6)")).unwrap());
    assert_eq!((j.max, j.min, j.bound), (2, -10, 6));
}

#[test]
fn j_genus_report() {
    let j = realize_expr(&expr("T(2,11)#T(4,7)#-T(5,6)")).unwrap();
    let opts = TableOptions {
        v_range: 0..=5,
        y_range: 0..=6,
        cap: None,
    };
    let t = InvariantTable::compute(&j, &opts).unwrap();
    let g = genus_bounds(&t, None);
    let by = |s: &str| g.iter().find(|b| b.source == s).unwrap().clone();
    assert_eq!(by("V").value, 5);
    assert_eq!(by("V").certificate, "n = 4, V_4 = 1");
    assert_eq!(by("Y").value, 6);
    assert_eq!(by("Y").certificate, "n = 5, Y_5 = 1");
    assert_eq!(by("omega_plus").value, 6);
}
