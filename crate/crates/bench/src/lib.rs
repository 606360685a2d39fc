//! Shared fixtures for the benchmarks.

use riesz_lab::witness::BohrWitnessConfig;
use riesz_lab::{cantor_stage, generate, ArcUnion, CantorScheme, Generator, IndexSet, Rational, Window};

/// `[0, 1/2)`.
pub fn half_interval() -> ArcUnion {
    ArcUnion::interval(Rational::new(0, 1), Rational::new(1, 2)).expect("valid interval")
}

/// Second stage of a middle-thirds style scheme with 3 pieces per stage.
pub fn cantor_set() -> ArcUnion {
    let scheme = CantorScheme::self_similar(3, Rational::new(1, 32), 2).expect("valid scheme");
    cantor_stage(&scheme, 2).expect("valid stage")
}

/// One wide gap followed by a narrow one; thin enough for a witness arc.
pub fn thin_cantor() -> ArcUnion {
    let scheme = CantorScheme::new(vec![
        riesz_lab::CantorStage { count: 1, gap: Rational::new(15, 16) },
        riesz_lab::CantorStage { count: 1, gap: Rational::new(1, 64) },
    ])
    .expect("valid scheme");
    cantor_stage(&scheme, 2).expect("valid stage")
}

pub fn thue_morse() -> Generator {
    Generator::thue_morse()
}

/// `Λ ∩ [-half, half]` for Thue-Morse.
pub fn thue_morse_window(half: i64) -> IndexSet {
    generate(&thue_morse(), Window::new(-half, half).expect("valid window")).expect("generates")
}

pub fn witness_config(m: usize) -> BohrWitnessConfig {
    BohrWitnessConfig {
        alpha: 2f64.sqrt() - 1.0,
        delta: 0.05,
        m,
        grid_resolution: 1 << 14,
        arc_length: Rational::new(1, 512),
    }
}
