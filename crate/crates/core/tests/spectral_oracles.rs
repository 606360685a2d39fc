mod common;

use common::{arc_union, jacobi_eigenvalues};
use proptest::prelude::*;
use riesz_lab::circle::{ArcUnion, Rational};
use riesz_lab::sequence::{generate, Generator, IndexSet, Window};
use riesz_lab::spectral::{
    gram_from_indices, hermitian_eigenvalues, projection_sum_matrix, riesz_trend,
    TrendThresholds,
};

fn distinct_indices(max_len: usize) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::btree_set(-30i64..30, 1..=max_len).prop_map(|s| s.into_iter().collect())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn small_spectra_match_jacobi(s in arc_union(), idx in distinct_indices(6)) {
        let g = gram_from_indices(&s, &idx).unwrap();
        let fast = hermitian_eigenvalues(&g).unwrap();
        let slow = jacobi_eigenvalues(&g);
        for (a, b) in fast.iter().zip(&slow) {
            prop_assert!((a - b).abs() < 1e-7, "{:?} vs {:?}", fast, slow);
        }
    }

    #[test]
    fn trace_is_count_times_measure(s in arc_union(), idx in distinct_indices(40)) {
        let g = gram_from_indices(&s, &idx).unwrap();
        let values = hermitian_eigenvalues(&g).unwrap();
        let expected = idx.len() as f64 * s.measure_f64();
        prop_assert!((values.iter().sum::<f64>() - expected).abs() < 1e-8);
        prop_assert!((g.trace() - expected).abs() < 1e-10);
    }

    #[test]
    fn spectra_lie_in_unit_interval(s in arc_union(), idx in distinct_indices(24)) {
        let values = hermitian_eigenvalues(&gram_from_indices(&s, &idx).unwrap()).unwrap();
        prop_assert!(values[0] >= -1e-10);
        prop_assert!(*values.last().unwrap() <= 1.0 + 1e-10);
    }
}

#[test]
fn projection_sum_three_by_three() {
    let s = ArcUnion::interval(Rational::new(0, 1), Rational::new(1, 2)).unwrap();
    let w = Window::symmetric(1);
    let m = IndexSet::explicit(w, [0]);
    let h = projection_sum_matrix(&s, &m, w);
    // Toeplitz(χ̂_S) has χ̂(±1) = ∓i/π, χ̂(±2) = 0; the diagonal gets 1/2 + 1_M.
    let pi = std::f64::consts::PI;
    assert!((h.get(1, 1).re - 1.5).abs() < 1e-15);
    assert!((h.get(0, 0).re - 0.5).abs() < 1e-15);
    assert!((h.get(0, 1).norm() - 1.0 / pi).abs() < 1e-15);
    assert!(h.get(0, 2).norm() < 1e-15);
    let fast = hermitian_eigenvalues(&h).unwrap();
    let slow = jacobi_eigenvalues(&h);
    for (a, b) in fast.iter().zip(&slow) {
        assert!((a - b).abs() < 1e-10);
    }
    // Block structure: x = e_1 + e_3 direction decouples.
    assert!(fast.iter().any(|v| (v - 0.5).abs() < 1e-10));
    assert!(fast.iter().all(|v| *v >= -1e-12 && *v <= 2.0 + 1e-12));
}

#[test]
fn landau_failure_implies_decay() {
    let cases = [
        (Rational::new(1, 4), Generator::periodic(1, 0)),
        (Rational::new(1, 3), Generator::periodic(2, 0)),
    ];
    for (mu, g) in cases {
        let s = ArcUnion::interval(Rational::new(0, 1), mu).unwrap();
        let windows = [Window::new(0, 15).unwrap(), Window::new(0, 127).unwrap()];
        let trend = riesz_trend(&s, &g, &windows, &TrendThresholds::default()).unwrap();
        let lo = generate(&g, Window::new(0, 127).unwrap()).unwrap();
        let landau = riesz_lab::criteria::landau_necessary(&s, &lo).unwrap();
        assert_eq!(landau.verdict, riesz_lab::Verdict::Fail);
        assert_eq!(trend.classification.to_string(), "decaying");
        assert!(trend.interlacing_ok);
    }
}
