mod common;

use common::{arc_union, simpson_coefficient};
use num_traits::One;
use proptest::prelude::*;
use riesz_lab::circle::{cantor_stage, normalize, CantorScheme, Rational};
use riesz_lab::SetDescriptor;

proptest! {
    #[test]
    fn normalize_is_idempotent(s in arc_union()) {
        let pairs: Vec<(Rational, Rational)> =
            s.arcs().iter().map(|a| (a.start(), a.end())).collect();
        prop_assert_eq!(normalize(&pairs, false).unwrap(), s);
    }

    #[test]
    fn measure_and_complement_sum_to_one(s in arc_union()) {
        prop_assert_eq!(s.measure() + s.complement().measure(), Rational::one());
        prop_assert_eq!(s.complement().complement(), s);
    }

    #[test]
    fn fourier_bounds_and_symmetry(s in arc_union(), k in -200i64..200) {
        let c = s.fourier_coefficient(k);
        prop_assert!(c.norm() <= s.measure_f64() + 1e-12);
        let d = s.fourier_coefficient(-k);
        prop_assert!((c - d.conj()).norm() < 1e-14);
        prop_assert!((s.fourier_coefficient(0).re - s.measure_f64()).abs() < 1e-15);
    }

    #[test]
    fn rotation_preserves_measure(s in arc_union(), num in 0i64..97) {
        let r = s.rotate(Rational::new(num, 97));
        prop_assert_eq!(r.measure(), s.measure());
        let back = r.rotate(Rational::new(-num, 97));
        prop_assert_eq!(back, s);
    }

    #[test]
    fn set_descriptor_round_trip(s in arc_union()) {
        let pairs: Vec<(Rational, Rational)> =
            s.arcs().iter().map(|a| (a.start(), a.end())).collect();
        let d = SetDescriptor::Union(pairs);
        let back = SetDescriptor::parse(&d.to_string()).unwrap();
        prop_assert_eq!(&back, &d);
        prop_assert_eq!(back.build().unwrap(), s);
    }
}

#[test]
fn fourier_matches_quadrature() {
    let cases = [
        "interval 0 1/2",
        "interval 0 5/8",
        "union (1/8 3/16) (1/2 61/64)",
        "interval 7/8 1/16",
        "cantor 1:1/4,1:1/16 stage=2",
    ];
    for desc in cases {
        let Ok(s) = SetDescriptor::parse(desc).and_then(|d| d.build()) else {
            panic!("bad fixture {desc}");
        };
        for k in -32..=32 {
            let exact = s.fourier_coefficient(k);
            let quad = simpson_coefficient(&s, k);
            assert!((exact - quad).norm() < 1e-6, "{desc} k={k}: {exact} vs {quad}");
        }
    }
}

#[test]
fn cantor_stages_are_nested() {
    let schemes = [
        CantorScheme::middle_thirds(5),
        CantorScheme::self_similar(3, Rational::new(1, 32), 3).unwrap(),
        CantorScheme::self_similar(2, Rational::new(1, 10), 4).unwrap(),
    ];
    for scheme in &schemes {
        let mut prev = cantor_stage(scheme, 0).unwrap();
        assert!(prev.is_full());
        for n in 1..=scheme.depth() {
            let next = cantor_stage(scheme, n).unwrap();
            assert!(next.measure() < prev.measure());
            for arc in next.arcs() {
                assert!(prev.contains_arc(arc), "stage {n} leaves stage {}", n - 1);
            }
            prev = next;
        }
    }
}

#[test]
fn middle_thirds_measure() {
    let scheme = CantorScheme::middle_thirds(4);
    for n in 0..=4 {
        let s = cantor_stage(&scheme, n).unwrap();
        assert_eq!(s.measure(), Rational::new(2i64.pow(n as u32), 3i64.pow(n as u32)));
        assert_eq!(s.arcs().len(), 1 << n);
    }
}
