//! Random inputs shared by the property suites.
#![allow(dead_code)]

use cfk_core::builders::KnotExpr;
use cfk_core::gf2::PolyT;
use cfk_core::invariants::{FUComplex, TTerm};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

/// A tower at grading `top` plus pairs `∂x = T^k y` (given as `(r_y, k)`),
/// conjugated by random homogeneous elementary basis changes and a
/// permutation. Its d-invariant is `top`.
pub fn random_fu_complex(top: i64, pairs: &[(i64, u32)], seed: u64) -> FUComplex {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut r = vec![top];
    let mut edges = Vec::new();
    for &(ry, k) in pairs {
        let y = r.len();
        r.push(ry);
        r.push(ry - 2 * k as i64 + 1);
        edges.push((y, y + 1, k));
    }
    let n = r.len();
    let mut m = vec![vec![PolyT::zero(); n]; n];
    for &(y, x, k) in &edges {
        m[y][x] = PolyT::monomial(k);
    }

    // e_a ← e_a + T^j e_b with r_a = r_b - 2j; conjugation by an involution.
    for _ in 0..rng.gen_range(0..12) {
        let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
        let diff = r[b] - r[a];
        if a == b || diff < 0 || diff % 2 != 0 {
            continue;
        }
        let t = PolyT::monomial((diff / 2) as u32);
        for row in m.iter_mut() {
            let add = row[b].clone() * t.clone();
            row[a] = row[a].clone() + add;
        }
        let row_a = m[a].clone();
        for (j, e) in row_a.into_iter().enumerate() {
            m[b][j] = m[b][j].clone() + e * t.clone();
        }
    }

    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.gen_range(0..=i));
    }
    let mut rp = vec![0; n];
    let mut diff = vec![Vec::new(); n];
    for old in 0..n {
        rp[perm[old]] = r[old];
        for (tgt, row) in m.iter().enumerate() {
            if let Some(k) = row[old].as_monomial() {
                diff[perm[old]].push(TTerm {
                    target: perm[tgt] as u32,
                    k,
                });
            } else {
                assert!(
                    row[old].is_zero(),
                    "homogeneous changes keep entries monomial"
                );
            }
        }
    }
    FUComplex::new(rp, diff).expect("conjugate of a valid complex is valid")
}

/// A random case with at most 8 basis elements and its expected d.
pub fn random_fu_case(rng: &mut StdRng) -> (FUComplex, i64) {
    let top = rng.gen_range(-6..6);
    let pairs: Vec<(i64, u32)> = (0..rng.gen_range(0..4))
        .map(|_| (rng.gen_range(-6..6), rng.gen_range(0..3)))
        .collect();
    (random_fu_complex(top, &pairs, rng.gen()), top)
}

pub const SMALL_TORUS: [(i64, i64); 5] = [(2, 3), (2, 5), (3, 4), (2, 7), (3, 5)];

/// A sum of one to three small torus knots, each possibly mirrored.
pub fn random_torus_sum(rng: &mut StdRng) -> KnotExpr {
    let parts: Vec<KnotExpr> = (0..rng.gen_range(1..=3))
        .map(|_| {
            let (p, q) = SMALL_TORUS[rng.gen_range(0..SMALL_TORUS.len())];
            let t = KnotExpr::TorusKnot(p, q);
            if rng.gen_bool(0.5) {
                t.mirror()
            } else {
                t
            }
        })
        .collect();
    if parts.len() == 1 {
        parts.into_iter().next().unwrap()
    } else {
        KnotExpr::Sum(parts)
    }
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}
