//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any fails. All comparisons are exact.

#[path = "../../core/tests/common/mod.rs"]
mod common;

use cfk_core::bounds::{
    bounds_report, genus_bounds, lt_signature_of_expr, signature_extrema, upsilon_of_expr,
    upsilon_ratio_bound, ClaspInputs, Q,
};
use cfk_core::builders::{parse_knot_expr, realize_expr, KnotExpr};
use cfk_core::complex::BigradedComplex;
use cfk_core::invariants::{d_invariant, d_invariant_snf, InvariantTable, TableOptions};
use cfk_core::involutive::{realize_with_iota, v0_bar_under, IotaOrder};
use std::path::PathBuf;
use std::process::Command;
use std::time::{Duration, Instant};

const K: &str = "T(2,3)#T(4,7)#-T(5,6)";
const J: &str = "T(2,11)#T(4,7)#-T(5,6)";
const K1: &str = "T(2,11)#-T(4,5)";

type Check = Result<String, String>;
type Criterion = (&'static str, fn() -> Check, Duration);

fn expr(s: &str) -> KnotExpr {
    parse_knot_expr(s).unwrap()
}

fn complex(s: &str) -> BigradedComplex {
    realize_expr(&expr(s)).unwrap()
}

fn table(s: &str, v: i64, y: u32) -> InvariantTable {
    let opts = TableOptions {
        v_range: 0..=v,
        y_range: 0..=y,
        cap: None,
    };
    InvariantTable::compute(&complex(s), &opts).unwrap()
}

fn hw_expr() -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../core/data/hw.cfk");
    format!("@{}", p.display())
}

fn expect<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn values<K: Ord, V: Copy>(
    m: &std::collections::BTreeMap<K, V>,
    ks: impl IntoIterator<Item = K>,
) -> Vec<V> {
    ks.into_iter().map(|k| m[&k]).collect()
}

fn c1_k() -> Check {
    let c = complex(K);
    let t = table(K, 3, 3);
    let m = table(&format!("-({K})"), 3, 3);
    expect("V(K)", values(&t.v, 0..=3), vec![1, 0, 0, 0])?;
    expect("V(-K)", values(&m.v, 0..=3), vec![1, 0, 0, 0])?;
    expect("Y0,Y1", values(&t.y, 0..=1), vec![1, 1])?;
    expect("omega+", t.omega_plus, 2)?;
    Ok(format!(
        "|K| = {}, V = (1,0,0,0), V(-K) = (1,0,0,0), Y = (1,1), omega+ = 2",
        c.len()
    ))
}

fn c2_j() -> Check {
    let t = table(J, 5, 6);
    expect("V", values(&t.v, 0..=5), vec![3, 2, 2, 1, 1, 0])?;
    expect("Y", values(&t.y, 0..=6), vec![3, 2, 2, 1, 1, 1, 0])?;
    let g = genus_bounds(&t, None);
    let by = |s: &str| g.iter().find(|b| b.source == s).map(|b| b.value);
    expect("V-bound", by("V"), Some(5))?;
    expect("Y-bound", by("Y"), Some(6))?;
    Ok("V = (3,2,2,1,1,0), Y = (3,2,2,1,1,1,0), V-bound 5, Y-bound 6".into())
}

fn c3_hw() -> Check {
    let t = table(&hw_expr(), 0, 0);
    expect(
        "(tau, nu, omega, V0)",
        (t.tau, t.nu_hat, t.omega_hat, t.v[&0]),
        (2, 2, 3, 2),
    )?;
    Ok("tau = 2, nu = 2, omega = 3, V0 = 2".into())
}

fn c4_involutive() -> Check {
    let mut parts = Vec::new();
    for order in [IotaOrder::IotaLast, IotaOrder::IotaFirst] {
        let tt = v0_bar_under(&realize_with_iota(&expr("T(2,3)#T(2,3)"), order).unwrap()).unwrap();
        expect("Vunder0(T(2,3)#T(2,3))", tt.1, 2)?;
        let k = v0_bar_under(&realize_with_iota(&expr(K), order).unwrap()).unwrap();
        expect("(Vbar0, Vunder0)(K)", k, (1, 2))?;
        parts.push(format!("{order:?}"));
    }
    let u =
        v0_bar_under(&realize_with_iota(&expr("unknot"), IotaOrder::default()).unwrap()).unwrap();
    expect("unknot", u, (0, 0))?;
    Ok(format!(
        "Vunder0(T(2,3)#T(2,3)) = 2, K -> (1,2), unknot -> (0,0) [{}]",
        parts.join(", ")
    ))
}

fn c5_upsilon() -> Check {
    let tau = table(K1, 0, 0).tau;
    expect("tau(K1)", tau, -1)?;
    let f = upsilon_of_expr(&expr(K1)).unwrap();
    expect(
        "Upsilon(1)",
        f.eval(Q::from_integer(1)),
        Q::from_integer(-1),
    )?;
    expect("slope at 0+", f.slope_at_zero(), Q::from_integer(1))?;
    expect(
        "ratio bound",
        upsilon_ratio_bound(&f).bound,
        Q::from_integer(2),
    )?;
    let triple = upsilon_of_expr(&expr(&format!("({K1})#({K1})#({K1})"))).unwrap();
    expect(
        "triple ratio bound",
        upsilon_ratio_bound(&triple).bound,
        Q::from_integer(6),
    )?;
    Ok("tau = -1, Upsilon(1) = -1, slope 1, ratio bound 2, triple sum 6".into())
}

/// Signature of a sum of torus knots at `e^{2 pi i theta}` from lattice
/// points: each `(i, j)` with `0 < i < p`, `0 < j < q` contributes -1 if
/// `theta < i/p + j/q < theta + 1` and +1 otherwise.
fn lattice_signature(summands: &[(i64, i64, i64)], num: i64, den: i64) -> i64 {
    let mut total = 0;
    for &(p, q, sign) in summands {
        for i in 1..p {
            for j in 1..q {
                let x = (i * q + j * p) * den;
                let inside = num * p * q < x && x < (num + den) * p * q;
                total += sign * if inside { -1 } else { 1 };
            }
        }
    }
    total
}

/// Extrema over the midpoints of a grid containing every jump.
fn lattice_extrema(summands: &[(i64, i64, i64)]) -> (i64, i64) {
    let l = summands.iter().fold(1, |l, &(p, q, _)| num_lcm(l, p * q));
    let vals: Vec<i64> = (0..l)
        .map(|k| lattice_signature(summands, 2 * k + 1, 2 * l))
        .collect();
    (*vals.iter().max().unwrap(), *vals.iter().min().unwrap())
}

fn num_lcm(a: i64, b: i64) -> i64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

fn c6_signature() -> Check {
    let half = Q::new(1, 2);
    for (p, q, want) in [(2, 3, -2), (3, 4, -6)] {
        let s = lt_signature_of_expr(&KnotExpr::TorusKnot(p, q)).unwrap();
        expect(
            "lattice oracle",
            lattice_signature(&[(p, q, 1)], 1, 2),
            want,
        )?;
        expect(
            &format!("sigma_T({p},{q})(1/2)"),
            s.value_at(half),
            Some(want),
        )?;
    }
    for (name, e, want) in [("K", K, (2, -4)), ("J", J, (2, -10))] {
        let e = expr(e);
        let x = signature_extrema(&lt_signature_of_expr(&e).unwrap());
        expect(
            &format!("{name} oracle"),
            lattice_extrema(&e.torus_summands().unwrap()),
            want,
        )?;
        expect(&format!("{name} extrema"), (x.max, x.min), want)?;
    }
    Ok("J (2,-10), K (2,-4), T(2,3)(1/2) = -2, T(3,4)(1/2) = -6".into())
}

fn c7_nu_plus() -> Check {
    let t = table(K1, 1, 1);
    let m = table(&format!("-({K1})"), 1, 1);
    expect("(nu+(K1), nu+(-K1))", (t.nu_plus, m.nu_plus), (1, 1))?;
    let r = bounds_report(&t, &m, &ClaspInputs::default());
    let bcg = r.clasp.iter().find(|b| b.source == "BCG").map(|b| b.value);
    expect("BCG clasp bound", bcg, Some(2))?;
    Ok("nu+(K1) = nu+(-K1) = 1, BCG bound 2".into())
}

fn c8_properties() -> Check {
    let mut rng = common::rng(0x5eed);
    for _ in 0..100 {
        let e = common::random_torus_sum(&mut rng);
        let c = realize_expr(&e).unwrap();
        if let Some(v) = c.violations().first() {
            return Err(format!("{e}: {v}"));
        }
    }

    let hw = hw_expr();
    let corpus = ["T(2,3)", "T(2,5)", "T(3,4)", "T(4,5)", K, K1, hw.as_str()];
    for s in corpus {
        let t = table(s, 5, 5);
        let m = table(&format!("-({s})"), 0, 0);
        expect(&format!("{s}: Y0 = V0"), t.y[&0], t.v[&0])?;
        for n in 0..=5u32 {
            let (v, y) = (t.v[&(n as i64)], t.y[&n]);
            if v > y {
                return Err(format!("{s}: V_{n} = {v} > Y_{n} = {y}"));
            }
        }
        for n in 0..5u32 {
            let (v0, v1) = (t.v[&(n as i64)], t.v[&(n as i64 + 1)]);
            let (y0, y1) = (t.y[&n], t.y[&(n + 1)]);
            if !(v1 <= v0 && v0 <= v1 + 1 && y1 <= y0 && y0 <= y1 + 1) {
                return Err(format!("{s}: monotonicity fails at n = {n}"));
            }
        }
        let (tau, nu, om) = (t.tau, t.nu_hat, t.omega_hat);
        if !((nu == tau || nu == tau + 1) && (om == tau || om == tau + 1) && nu <= om) {
            return Err(format!("{s}: tau = {tau}, nu = {nu}, omega = {om}"));
        }
        expect(&format!("{s}: tau(-K)"), m.tau, -tau)?;
        let (vb, vu) =
            v0_bar_under(&realize_with_iota(&expr(s), IotaOrder::default()).unwrap()).unwrap();
        if !(vb <= t.v[&0] && t.v[&0] <= vu) {
            return Err(format!(
                "{s}: Vbar0 = {vb}, V0 = {}, Vunder0 = {vu}",
                t.v[&0]
            ));
        }
    }

    for _ in 0..100 {
        let (a, b) = (
            common::random_torus_sum(&mut rng),
            common::random_torus_sum(&mut rng),
        );
        let (fa, fb) = (upsilon_of_expr(&a).unwrap(), upsilon_of_expr(&b).unwrap());
        if !fa.is_symmetric() {
            return Err(format!("Upsilon of {a} is not symmetric"));
        }
        if upsilon_of_expr(&KnotExpr::Sum(vec![a.clone(), b.clone()])).unwrap() != fa.add(&fb) {
            return Err(format!("Upsilon not additive on {a} # {b}"));
        }
        if upsilon_of_expr(&a.clone().mirror()).unwrap() != fa.neg() {
            return Err(format!("Upsilon(-K) != -Upsilon(K) for {a}"));
        }
    }

    for i in 0..1000 {
        let (f, top) = common::random_fu_case(&mut rng);
        let (d, snf) = (d_invariant(&f).unwrap(), d_invariant_snf(&f).unwrap());
        if d != top || snf != top {
            return Err(format!("case {i}: tower {d}, snf {snf}, expected {top}"));
        }
    }
    Ok("100 tensor products, 7-knot corpus laws, 100 Upsilon pairs, 1000 d-oracle cases".into())
}

fn c9_determinism() -> Check {
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_cfk"))
            .args(["report", "--expr", K, "--format", "json-like"])
            .output()
            .map_err(|e| e.to_string())
    };
    let (a, b) = (run()?, run()?);
    if !a.status.success() {
        return Err(String::from_utf8_lossy(&a.stderr).into_owned());
    }
    if a.stdout != b.stdout {
        return Err("outputs differ".into());
    }
    Ok(format!("{} identical bytes", a.stdout.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("K correction terms", c1_k, Duration::from_secs(120)),
        (
            "J correction terms and genus bounds",
            c2_j,
            Duration::from_secs(1800),
        ),
        (
            "Hedden-Watson complex from file",
            c3_hw,
            Duration::from_secs(1),
        ),
        (
            "involutive correction terms",
            c4_involutive,
            Duration::from_secs(600),
        ),
        ("Upsilon clasp bound", c5_upsilon, Duration::from_secs(5)),
        (
            "Levine-Tristram signature",
            c6_signature,
            Duration::from_secs(1),
        ),
        (
            "nu+ of K1 and its mirror",
            c7_nu_plus,
            Duration::from_secs(10),
        ),
        ("property suites", c8_properties, Duration::MAX),
        ("deterministic report", c9_determinism, Duration::MAX),
    ];
    let mut failed = 0;
    for (i, (name, check, target)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(check).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .unwrap_or_else(|| "panicked".into()))
        });
        let took = start.elapsed();
        let slow = if took > *target {
            " (over time target)"
        } else {
            ""
        };
        match result {
            Ok(msg) => println!("PASS {} {name}: {msg} [{took:.2?}{slow}]", i + 1),
            Err(msg) => {
                failed += 1;
                println!("FAIL {} {name}: {msg} [{took:.2?}]", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failed} failed",
        criteria.len() - failed
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
