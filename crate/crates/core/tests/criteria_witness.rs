use riesz_lab::circle::{cantor_stage, ArcUnion, CantorScheme, CantorStage, Rational};
use riesz_lab::criteria::{
    arithmetic_riesz_basis, greedy_riesz_subset, landau_necessary, montgomery_vaughan_sufficient,
    syndetic_decomposition,
};
use riesz_lab::sequence::{generate, Generator, Window};
use riesz_lab::spectral::gram_spectrum;
use riesz_lab::witness::{witness_ratio, witness_sweep, BohrWitnessConfig};
use riesz_lab::Verdict;

fn interval(a: (i64, i64), b: (i64, i64)) -> ArcUnion {
    ArcUnion::interval(Rational::new(a.0, a.1), Rational::new(b.0, b.1)).unwrap()
}

#[test]
fn mv_margin_bounds_lambda_min() {
    let cases = [
        (interval((0, 1), (3, 5)), 4u64, 0i64),
        (interval((1, 4), (1, 1)), 2, 1),
        (interval((9, 10), (3, 10)), 3, -1),
        (interval((0, 1), (1, 2)), 3, 0),
    ];
    for (s, n, m) in cases {
        for radius in [16, 48, 96] {
            let lambda = generate(&Generator::periodic(n, m), Window::symmetric(radius)).unwrap();
            let mv = montgomery_vaughan_sufficient(&s, &lambda).unwrap();
            assert_eq!(mv.verdict, Verdict::Pass, "{s} with {n}Z+{m}");
            let report = gram_spectrum(&s, &lambda).unwrap();
            assert!(report.lambda_min >= mv.margin.unwrap() - 1e-9, "{s} {n} {radius}");
        }
    }
}

#[test]
fn mv_inconclusive_when_arc_too_short() {
    let s = interval((0, 1), (1, 5));
    let lambda = generate(&Generator::periodic(4, 0), Window::symmetric(32)).unwrap();
    let mv = montgomery_vaughan_sufficient(&s, &lambda).unwrap();
    assert_eq!(mv.verdict, Verdict::Inconclusive);
    assert_eq!(mv.margin, None);
}

#[test]
fn landau_margin_for_even_integers() {
    let s = interval((0, 1), (1, 4));
    let lambda = generate(&Generator::periodic(2, 0), Window::symmetric(600)).unwrap();
    let rep = landau_necessary(&s, &lambda).unwrap();
    assert_eq!(rep.verdict, Verdict::Fail);
    assert_eq!(rep.margin, Some(-0.25));
}

#[test]
fn basis_condition_matches_measure_count() {
    // Translates by 1/n of an arc cover T iff the arc has length >= 1/n.
    for n in 1..=6u64 {
        for num in 1..12i64 {
            let s = interval((0, 1), (num, 12));
            let rep = arithmetic_riesz_basis(&s, n, 0).unwrap();
            let covers = num * n as i64 >= 12;
            assert_eq!(rep.verdict == Verdict::Pass, covers, "n={n} len={num}/12");
            assert_eq!(rep.params["tiles"] == "true", num * n as i64 == 12);
        }
    }
}

#[test]
fn decomposition_translates_are_spectrally_identical() {
    let s = interval((0, 1), (1, 3));
    let lambda = generate(&Generator::periodic(4, 3), Window::symmetric(40)).unwrap();
    let dec = syndetic_decomposition(&lambda, 10).unwrap();
    assert_eq!(dec.gap, 4);
    assert!(dec.covers_window);
    let base = gram_spectrum(&s, &dec.translates[0]).unwrap().eigenvalues;
    for t in &dec.translates[1..] {
        let e = gram_spectrum(&s, t).unwrap().eigenvalues;
        assert_eq!(e.len(), base.len());
        for (a, b) in e.iter().zip(&base) {
            assert!((a - b).abs() < 1e-10);
        }
    }
}

#[test]
fn greedy_selection_meets_every_threshold() {
    let s = interval((0, 1), (1, 2));
    let w = Window::symmetric(24);
    for t in [0.1, 0.3, 0.45, 0.49] {
        let sel = greedy_riesz_subset(&s, w, t).unwrap();
        assert!(sel.lambda_min >= t);
        assert!(sel.set.contains(0));
        assert!(sel.density > 0.0 && sel.density <= 1.0);
    }
}

fn witness_config(m: usize, resolution: usize) -> BohrWitnessConfig {
    BohrWitnessConfig {
        alpha: 2f64.sqrt() - 1.0,
        delta: 0.05,
        m,
        grid_resolution: resolution,
        arc_length: Rational::new(1, 512),
    }
}

/// A small, thin Cantor stage: one wide gap, then a second stage that leaves
/// only short remnants.
fn thin_cantor() -> ArcUnion {
    let scheme = CantorScheme::new(vec![
        CantorStage { count: 1, gap: Rational::new(15, 16) },
        CantorStage { count: 1, gap: Rational::new(1, 64) },
    ])
    .unwrap();
    cantor_stage(&scheme, 2).unwrap()
}

#[test]
fn witness_ratio_is_grid_stable() {
    let s = thin_cantor();
    let a = witness_ratio(&s, &witness_config(10, 1 << 14)).unwrap();
    let b = witness_ratio(&s, &witness_config(10, 1 << 15)).unwrap();
    assert!((a.ratio - b.ratio).abs() < 1e-3, "{} vs {}", a.ratio, b.ratio);
}

#[test]
fn witness_ratio_collapses_on_thin_set() {
    let s = thin_cantor();
    let sweep = witness_sweep(&s, &witness_config(5, 1 << 14), &[5, 10, 20], 0.2).unwrap();
    for (_, row) in &sweep.rows {
        let w = row.as_ref().unwrap();
        assert!(w.ratio > 0.0 && w.ratio <= 1.0);
        assert!(w.alpha_tail >= 0.0 && w.beta_head > 0.0);
    }
    assert!(sweep.below_target, "min ratio {:?}", sweep.min_ratio);
}

#[test]
fn witness_full_circle_rows_are_one() {
    let sweep =
        witness_sweep(&ArcUnion::full(), &witness_config(5, 1 << 12), &[5, 10, 20], 0.2).unwrap();
    for (_, row) in &sweep.rows {
        assert!((row.as_ref().unwrap().ratio - 1.0).abs() < 1e-12);
    }
    assert!(!sweep.below_target);
}
