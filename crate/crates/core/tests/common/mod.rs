#![allow(dead_code)]

use num_complex::Complex64;
use proptest::prelude::*;
use riesz_lab::circle::{normalize, ArcUnion, Rational};
use riesz_lab::HermitianMatrix;

/// Arc unions built from up to four raw arcs with endpoints on `Z/64`.
pub fn arc_union() -> impl Strategy<Value = ArcUnion> {
    prop::collection::vec((0i64..64, 1i64..48), 1..=4).prop_map(|raw| {
        let pairs: Vec<(Rational, Rational)> = raw
            .into_iter()
            .map(|(s, l)| (Rational::new(s, 64), Rational::new(s + l, 64)))
            .collect();
        normalize(&pairs, true).unwrap()
    })
}

/// Eigenvalues of a Hermitian matrix by cyclic Jacobi rotations on the real
/// symmetric embedding `[[A, -B], [B, A]]`. Each eigenvalue appears twice in
/// the embedding; every second one is returned.
pub fn jacobi_eigenvalues(h: &HermitianMatrix) -> Vec<f64> {
    let n = h.dim();
    let m = 2 * n;
    let mut a = vec![vec![0.0f64; m]; m];
    for j in 0..n {
        for k in 0..n {
            let z = h.get(j, k);
            a[j][k] = z.re;
            a[j + n][k + n] = z.re;
            a[j][k + n] = -z.im;
            a[j + n][k] = z.im;
        }
    }
    for _sweep in 0..100 {
        let off: f64 = (0..m)
            .flat_map(|i| (0..m).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i][j] * a[i][j])
            .sum();
        if off < 1e-30 {
            break;
        }
        for p in 0..m {
            for q in p + 1..m {
                if a[p][q].abs() < 1e-300 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for row in a.iter_mut() {
                    let (x, y) = (row[p], row[q]);
                    row[p] = c * x - s * y;
                    row[q] = s * x + c * y;
                }
                for k in 0..m {
                    let (x, y) = (a[p][k], a[q][k]);
                    a[p][k] = c * x - s * y;
                    a[q][k] = s * x + c * y;
                }
            }
        }
    }
    let mut d: Vec<f64> = (0..m).map(|i| a[i][i]).collect();
    d.sort_by(f64::total_cmp);
    d.into_iter().step_by(2).collect()
}

/// `∫_S e^{-2πikt} dt` by composite Simpson on `2^14` panels. Arc endpoints
/// must lie on the grid so each arc is integrated on whole panels.
pub fn simpson_coefficient(set: &ArcUnion, k: i64) -> Complex64 {
    const N: i64 = 1 << 14;
    let h = 1.0 / N as f64;
    let f = |t: f64| Complex64::from_polar(1.0, -2.0 * std::f64::consts::PI * k as f64 * t);
    let mut total = Complex64::new(0.0, 0.0);
    for arc in set.arcs() {
        let a = arc.start() * Rational::from_integer(N);
        let b = arc.end() * Rational::from_integer(N);
        assert!(a.is_integer() && b.is_integer(), "endpoints off the grid");
        let (a, b) = (a.to_integer(), b.to_integer());
        for i in a..b {
            let t0 = i as f64 * h;
            total += (f(t0) + f(t0 + h / 2.0) * 4.0 + f(t0 + h)) * (h / 6.0);
        }
    }
    total
}
