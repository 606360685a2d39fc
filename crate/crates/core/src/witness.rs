//! Numerical non-Riesz witness for Bohr sets `Λ = {k : dist(kα, Z) < δ}`.
//!
//! With `V = (−δ/2, δ/2)` and `f = χ_V * χ_{−V}`, the function `g(k) = f(kα)`
//! is supported in `Λ` and is the Fourier transform of the positive measure
//! `ν = Σ_m f̂(m) δ_{mα}` with `f̂(m) = |χ̂_V(m)|²`. For `h` supported on an arc
//! `I` whose translates `I + mα, |m| ≤ M` avoid `S`, the ratio
//! `‖P_S(ν∗h)‖ / ‖ν∗h‖` is small while `ν∗h` lies in the span of `E(Λ)`.
//! The ratio is evaluated directly by grid quadrature.

use std::f64::consts::PI;

use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::circle::{frac, to_f64, Arc, ArcUnion, Rational};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BohrWitnessConfig {
    pub alpha: f64,
    pub delta: f64,
    /// Head size: `Γ₁ = {m : |m| ≤ M}`.
    pub m: usize,
    pub grid_resolution: usize,
    pub arc_length: Rational,
}

pub const MIN_GRID_RESOLUTION: usize = 1 << 12;

impl BohrWitnessConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::BadConfig(format!("alpha {} outside (0, 1)", self.alpha)));
        }
        if !(self.delta > 0.0 && self.delta <= 0.25) {
            return Err(Error::BadDelta(self.delta));
        }
        if !self.grid_resolution.is_power_of_two() || self.grid_resolution < MIN_GRID_RESOLUTION {
            return Err(Error::BadConfig(format!(
                "grid resolution {} must be a power of two >= {MIN_GRID_RESOLUTION}",
                self.grid_resolution
            )));
        }
        if self.arc_length <= Rational::zero() || self.arc_length >= Rational::from_integer(1) {
            return Err(Error::BadConfig(format!(
                "arc length {} outside (0, 1)",
                self.arc_length
            )));
        }
        let points = self.arc_length * Rational::from_integer(self.grid_resolution as i64);
        if points < Rational::from_integer(8) {
            return Err(Error::GridTooCoarse(format!(
                "arc of length {} covers {} grid points, need at least 8",
                self.arc_length, points
            )));
        }
        if !(points / Rational::from_integer(4)).is_integer() {
            return Err(Error::GridTooCoarse(format!(
                "arc length {} must be a multiple of 4/{}",
                self.arc_length, self.grid_resolution
            )));
        }
        Ok(())
    }

    /// Truncation of the tail `Γ₂` used in the quadrature.
    pub fn full_truncation(&self) -> usize {
        (8 * self.m).max(1024)
    }
}

/// Coefficients `f̂(m) = (sin(πmδ)/(πm))²`, `f̂(0) = δ²`, for `|m| ≤ M`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TriangleCoefficients {
    pub delta: f64,
    pub max_index: usize,
    coeffs: Vec<f64>,
    /// `2/(π²M) ≥ Σ_{|m|>M} 1/(π²m²) ≥ Σ_{|m|>M} f̂(m)`.
    pub tail_bound: f64,
}

impl TriangleCoefficients {
    pub fn get(&self, m: i64) -> f64 {
        self.coeffs[(m + self.max_index as i64) as usize]
    }

    pub fn iter(&self) -> impl Iterator<Item = (i64, f64)> + '_ {
        let off = self.max_index as i64;
        self.coeffs.iter().enumerate().map(move |(i, c)| (i as i64 - off, *c))
    }
}

pub fn triangle_coefficient(delta: f64, m: i64) -> f64 {
    if m == 0 {
        delta * delta
    } else {
        let x = PI * m as f64;
        let s = (x * delta).sin() / x;
        s * s
    }
}

/// Fourier coefficients of the triangle `χ_V * χ_{−V}`.
///
/// Accepts `δ ∈ (0, 1/2]`; the witness itself requires `δ ≤ 1/4` so that
/// `V − V ⊆ (−δ, δ)`.
pub fn triangle_coefficients(delta: f64, max_index: usize) -> Result<TriangleCoefficients> {
    if !(delta > 0.0 && delta <= 0.5) {
        return Err(Error::BadDelta(delta));
    }
    if max_index == 0 {
        return Err(Error::BadConfig("triangle coefficients need M >= 1".into()));
    }
    let m = max_index as i64;
    let coeffs = (-m..=m).map(|k| triangle_coefficient(delta, k)).collect();
    Ok(TriangleCoefficients {
        delta,
        max_index,
        coeffs,
        tail_bound: 2.0 / (PI * PI * max_index as f64),
    })
}

/// `mα mod 1` snapped to the grid `Z/R`, for `|m| ≤ M`, as exact rationals.
pub fn snapped_centers(alpha: f64, m: usize, resolution: usize) -> Vec<Rational> {
    let m = m as i64;
    (-m..=m)
        .map(|k| Rational::new(snap_index(alpha, k, resolution) as i64, resolution as i64))
        .collect()
}

fn snap_index(alpha: f64, k: i64, resolution: usize) -> usize {
    let x = (k as f64 * alpha).rem_euclid(1.0);
    ((x * resolution as f64).round() as usize) % resolution
}

fn circular_distance(a: Rational, b: Rational) -> Rational {
    let d = frac(a - b);
    d.min(Rational::from_integer(1) - d)
}

/// Default candidate spacing: a quarter of the arc length.
pub fn default_search_step(length: Rational) -> Rational {
    length / Rational::from_integer(4)
}

/// First-fit search for an arc `I = [s, s + length)` with `s` on the grid
/// `step·Z` such that `(I − c) ∩ S = ∅` for every center and for `c = 0`, and
/// the translates `I + c` are pairwise disjoint.
pub fn find_witness_arc_with_step(
    set: &ArcUnion,
    centers: &[Rational],
    length: Rational,
    step: Rational,
) -> Result<Arc> {
    let not_found = || Error::NoArcFound {
        length: length.to_string(),
    };
    if length <= Rational::zero() || length > Rational::from_integer(1) || step <= Rational::zero() {
        return Err(Error::BadConfig(format!(
            "arc length {length} and step {step} must be positive"
        )));
    }
    // Pairwise disjointness of I + c only depends on the center spacing.
    let mut sorted: Vec<Rational> = centers.iter().map(|c| frac(*c)).collect();
    sorted.sort();
    sorted.dedup();
    if sorted.len() < centers.len() {
        return Err(not_found());
    }
    if sorted.len() > 1 {
        let wrap = circular_distance(sorted[0], sorted[sorted.len() - 1]);
        let tight = sorted
            .windows(2)
            .map(|p| p[1] - p[0])
            .chain(std::iter::once(wrap))
            .any(|d| d < length);
        if tight {
            return Err(not_found());
        }
    }

    let mut shifts = sorted;
    if !shifts.contains(&Rational::zero()) {
        shifts.push(Rational::zero());
    }
    let one = Rational::from_integer(1);
    let mut start = Rational::zero();
    while start + length <= one {
        let ok = shifts.iter().all(|&c| {
            ArcUnion::interval(start - c, start - c + length)
                .map(|moved| moved.arcs().iter().all(|a| set.is_disjoint_from(a)))
                .unwrap_or(false)
        });
        if ok {
            return Arc::new(start, start + length);
        }
        start += step;
    }
    Err(not_found())
}

/// [`find_witness_arc_with_step`] with the default quarter-length step.
pub fn find_witness_arc(set: &ArcUnion, centers: &[Rational], length: Rational) -> Result<Arc> {
    find_witness_arc_with_step(set, centers, length, default_search_step(length))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct WitnessResult {
    pub m: usize,
    pub arc: Arc,
    /// `‖P_S(ν∗h)‖ / ‖ν∗h‖`.
    pub ratio: f64,
    /// Upper bound for `Σ_{|m|>M} f̂(m)`.
    pub alpha_tail: f64,
    /// `Σ_{|m|≤M} f̂(m)²`.
    pub beta_head: f64,
    pub stage: Option<usize>,
    pub grid_resolution: usize,
}

impl WitnessResult {
    pub fn with_stage(mut self, stage: Option<usize>) -> Self {
        self.stage = stage;
        self
    }
}

/// Grid indices `i` with `i/R ∈ S`.
fn grid_mask(set: &ArcUnion, resolution: usize) -> Vec<bool> {
    let mut mask = vec![false; resolution];
    let r = Rational::from_integer(resolution as i64);
    for arc in set.arcs() {
        let lo = (arc.start() * r).ceil().to_integer() as usize;
        let hi = (arc.end() * r).ceil().to_integer() as usize;
        for m in mask.iter_mut().take(hi.min(resolution)).skip(lo) {
            *m = true;
        }
    }
    mask
}

/// Evaluate the witness ratio for one head size `M`.
///
/// `h` is the L²-normalized indicator of the witness arc, `ν∗h` is summed over
/// `|m| ≤ max(8M, 1024)` with every atom snapped to the grid, and `P_S` is
/// pointwise multiplication by `χ_S` at the grid points.
pub fn witness_ratio(set: &ArcUnion, config: &BohrWitnessConfig) -> Result<WitnessResult> {
    config.validate()?;
    let res = config.grid_resolution;
    let centers = snapped_centers(config.alpha, config.m, res);
    // With S = T every h has ratio 1; only the disjointness of translates matters.
    let search_set = if set.is_full() {
        ArcUnion::empty()
    } else {
        set.clone()
    };
    let arc = find_witness_arc(&search_set, &centers, config.arc_length)?;

    let m2 = config.full_truncation();
    let coeffs = triangle_coefficients(config.delta, m2)?;
    let start_idx = (arc.start() * Rational::from_integer(res as i64)).to_integer() as usize;
    let points = (config.arc_length * Rational::from_integer(res as i64)).to_integer() as usize;
    let height = 1.0 / to_f64(config.arc_length).sqrt();

    let mut values = vec![0.0f64; res];
    for (m, c) in coeffs.iter() {
        let offset = snap_index(config.alpha, m, res);
        let amp = c * height;
        for p in 0..points {
            values[(start_idx + offset + p) % res] += amp;
        }
    }
    let mask = grid_mask(set, res);
    let (mut inside, mut total) = (0.0f64, 0.0f64);
    for (v, in_s) in values.iter().zip(&mask) {
        let sq = v * v;
        total += sq;
        if *in_s {
            inside += sq;
        }
    }
    let ratio = if total > 0.0 {
        (inside / total).sqrt().min(1.0)
    } else {
        0.0
    };

    let m = config.m as i64;
    let beta_head: f64 = (-m..=m).map(|k| coeffs.get(k).powi(2)).sum();
    let alpha_tail: f64 = coeffs
        .iter()
        .filter(|(k, _)| k.abs() > m)
        .map(|(_, c)| c)
        .sum::<f64>()
        + coeffs.tail_bound;

    Ok(WitnessResult {
        m: config.m,
        arc,
        ratio,
        alpha_tail,
        beta_head,
        stage: None,
        grid_resolution: res,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct WitnessSweep {
    pub rows: Vec<(usize, Result<WitnessResult>)>,
    pub target: f64,
    pub min_ratio: Option<f64>,
    pub below_target: bool,
}

/// Re-run the witness for each head size; failing cells are kept as errors.
pub fn witness_sweep(
    set: &ArcUnion,
    base: &BohrWitnessConfig,
    ms: &[usize],
    target: f64,
) -> Result<WitnessSweep> {
    if ms.windows(2).any(|p| p[1] <= p[0]) {
        return Err(Error::BadConfig("sweep head sizes must be increasing".into()));
    }
    let rows: Vec<(usize, Result<WitnessResult>)> = ms
        .iter()
        .map(|&m| {
            let cfg = BohrWitnessConfig { m, ..base.clone() };
            (m, witness_ratio(set, &cfg))
        })
        .collect();
    let min_ratio = rows
        .iter()
        .filter_map(|(_, r)| r.as_ref().ok().map(|w| w.ratio))
        .min_by(f64::total_cmp);
    Ok(WitnessSweep {
        below_target: min_ratio.is_some_and(|r| r < target),
        rows,
        target,
        min_ratio,
    })
}

/// Arc length as a float, for reporting.
pub fn arc_length_f64(arc: &Arc) -> f64 {
    arc.length().to_f64().unwrap_or(f64::NAN)
}
