//! Finite unions of half-open arcs on the circle `T = R/Z`.
//!
//! All endpoints are exact 64-bit rationals. Measures, complements and cover
//! tests are exact; only Fourier coefficients drop to `f64`, and even there the
//! phase reduction `k·x mod 1` is carried out in integer arithmetic first.

use std::cmp::Ordering;
use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, CheckedSub, ToPrimitive, Zero, One};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exact rational with 64-bit numerator and denominator.
pub type Rational = Ratio<i64>;

pub fn rational(numer: i64, denom: i64) -> Rational {
    Rational::new(numer, denom)
}

pub fn to_f64(r: Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Reduce a rational into `[0, 1)`.
pub fn frac(r: Rational) -> Rational {
    r - r.floor()
}

/// `frac(k * p / q)` computed without overflow, returned as a float in `[0, 1)`.
fn scaled_frac(k: i64, x: Rational) -> f64 {
    let q = *x.denom() as i128;
    let p = *x.numer() as i128;
    let r = (k as i128 * p).rem_euclid(q);
    r as f64 / q as f64
}

/// A half-open arc `[start, end)` with `0 <= start < end <= 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Arc {
    start: Rational,
    end: Rational,
}

impl Arc {
    pub fn new(start: Rational, end: Rational) -> Result<Self> {
        if start == end {
            return Err(Error::ZeroLengthArc {
                start: start.to_string(),
                end: end.to_string(),
            });
        }
        if start < Rational::zero() || end > Rational::one() || start > end {
            return Err(Error::OutOfRange(format!("[{start}, {end})")));
        }
        Ok(Arc { start, end })
    }

    pub fn start(&self) -> Rational {
        self.start
    }

    pub fn end(&self) -> Rational {
        self.end
    }

    pub fn length(&self) -> Rational {
        self.end - self.start
    }

    pub fn contains_point(&self, t: Rational) -> bool {
        self.start <= t && t < self.end
    }

    pub fn overlaps(&self, other: &Arc) -> bool {
        self.start < other.end && other.start < self.end
    }

    pub fn contains_arc(&self, other: &Arc) -> bool {
        self.start <= other.start && other.end <= self.end
    }

    /// `∫_{[a,b)} e^{-2πikt} dt = e^{-πik(a+b)} sin(πk(b-a)) / (πk)`.
    pub fn fourier_coefficient(&self, k: i64) -> Complex64 {
        if k == 0 {
            return Complex64::new(to_f64(self.length()), 0.0);
        }
        let mid = (self.start + self.end) / Rational::from_integer(2);
        let phase = scaled_frac(k, mid);
        // sin(π·x) only depends on x mod 2.
        let len = self.length();
        let two_q = 2 * *len.denom() as i128;
        let s = (k as i128 * *len.numer() as i128).rem_euclid(two_q) as f64 / *len.denom() as f64;
        let amplitude = (PI * s).sin() / (PI * k as f64);
        Complex64::from_polar(amplitude, -2.0 * PI * phase)
    }
}

impl fmt::Display for Arc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}, {})", self.start, self.end)
    }
}

/// Canonical finite union of arcs: sorted, pairwise disjoint, non-abutting.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ArcUnion {
    arcs: Vec<Arc>,
}

/// Merge an unordered list of arcs into canonical form.
fn canonicalize(mut arcs: Vec<Arc>) -> ArcUnion {
    arcs.sort_by(|a, b| a.start.cmp(&b.start).then(a.end.cmp(&b.end)));
    let mut out: Vec<Arc> = Vec::with_capacity(arcs.len());
    for arc in arcs {
        match out.last_mut() {
            Some(last) if arc.start <= last.end => {
                if arc.end > last.end {
                    last.end = arc.end;
                }
            }
            _ => out.push(arc),
        }
    }
    ArcUnion { arcs: out }
}

/// Split an arc of the given start and length (`0 < length <= 1`) at 0.
fn wrapped_pieces(start: Rational, length: Rational) -> Vec<Arc> {
    let s = frac(start);
    let e = s + length;
    if e <= Rational::one() {
        vec![Arc { start: s, end: e }]
    } else {
        let mut v = vec![Arc {
            start: s,
            end: Rational::one(),
        }];
        let tail = e - Rational::one();
        if !tail.is_zero() {
            v.push(Arc {
                start: Rational::zero(),
                end: tail,
            });
        }
        v
    }
}

/// Build a canonical arc union from raw `(start, end)` pairs.
///
/// Without `allow_wrap` every pair must satisfy `0 <= start < end <= 1`. With
/// it, `start` is reduced mod 1 and a pair with `end < start` is read as the arc
/// running forward from `start` through 0 to `end`.
pub fn normalize(raw: &[(Rational, Rational)], allow_wrap: bool) -> Result<ArcUnion> {
    let mut arcs = Vec::with_capacity(raw.len());
    for &(start, end) in raw {
        if start == end {
            return Err(Error::ZeroLengthArc {
                start: start.to_string(),
                end: end.to_string(),
            });
        }
        if !allow_wrap {
            arcs.push(Arc::new(start, end)?);
            continue;
        }
        let length = if end > start {
            end - start
        } else {
            end + Rational::one() - start
        };
        if length <= Rational::zero() || length > Rational::one() {
            return Err(Error::OutOfRange(format!("[{start}, {end})")));
        }
        arcs.extend(wrapped_pieces(start, length));
    }
    Ok(canonicalize(arcs))
}

impl ArcUnion {
    pub fn empty() -> Self {
        ArcUnion { arcs: Vec::new() }
    }

    pub fn full() -> Self {
        ArcUnion {
            arcs: vec![Arc {
                start: Rational::zero(),
                end: Rational::one(),
            }],
        }
    }

    /// `[a, b)`, wrapping through 0 when `b < a`.
    pub fn interval(a: Rational, b: Rational) -> Result<Self> {
        normalize(&[(a, b)], true)
    }

    pub fn from_arcs(arcs: Vec<Arc>) -> Self {
        canonicalize(arcs)
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn is_empty(&self) -> bool {
        self.arcs.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.measure() == Rational::one()
    }

    pub fn measure(&self) -> Rational {
        self.arcs
            .iter()
            .fold(Rational::zero(), |acc, a| acc + a.length())
    }

    pub fn measure_f64(&self) -> f64 {
        to_f64(self.measure())
    }

    pub fn complement(&self) -> ArcUnion {
        let mut out = Vec::with_capacity(self.arcs.len() + 1);
        let mut cursor = Rational::zero();
        for arc in &self.arcs {
            if arc.start > cursor {
                out.push(Arc {
                    start: cursor,
                    end: arc.start,
                });
            }
            cursor = arc.end;
        }
        if cursor < Rational::one() {
            out.push(Arc {
                start: cursor,
                end: Rational::one(),
            });
        }
        ArcUnion { arcs: out }
    }

    /// `χ̂_S(k) = ∫_S e^{-2πikt} dt`.
    pub fn fourier_coefficient(&self, k: i64) -> Complex64 {
        self.arcs
            .iter()
            .map(|a| a.fourier_coefficient(k))
            .fold(Complex64::zero(), |acc, z| acc + z)
    }

    /// `S + θ` on the circle.
    pub fn rotate(&self, theta: Rational) -> ArcUnion {
        let pieces = self
            .arcs
            .iter()
            .flat_map(|a| wrapped_pieces(a.start + theta, a.length()))
            .collect();
        canonicalize(pieces)
    }

    /// Length of the longest arc contained in `S`, joining the pieces that
    /// meet at 0.
    pub fn longest_arc_length(&self) -> Rational {
        let mut best = self
            .arcs
            .iter()
            .map(Arc::length)
            .max()
            .unwrap_or_else(Rational::zero);
        if let (Some(first), Some(last)) = (self.arcs.first(), self.arcs.last()) {
            if self.arcs.len() > 1 && first.start.is_zero() && last.end == Rational::one() {
                best = best.max(first.length() + last.length());
            }
        }
        best
    }

    pub fn contains_point(&self, t: Rational) -> bool {
        let t = frac(t);
        let idx = self.arcs.partition_point(|a| a.end <= t);
        self.arcs.get(idx).is_some_and(|a| a.contains_point(t))
    }

    /// Point membership for a float in `[0, 1)`.
    pub fn contains_f64(&self, t: f64) -> bool {
        let idx = self.arcs.partition_point(|a| to_f64(a.end) <= t);
        self.arcs
            .get(idx)
            .is_some_and(|a| to_f64(a.start) <= t && t < to_f64(a.end))
    }

    /// True when no arc of `self` overlaps `arc` in positive measure.
    pub fn is_disjoint_from(&self, arc: &Arc) -> bool {
        let idx = self.arcs.partition_point(|a| a.end <= arc.start);
        self.arcs.get(idx).is_none_or(|a| !a.overlaps(arc))
    }

    pub fn contains_arc(&self, arc: &Arc) -> bool {
        let idx = self.arcs.partition_point(|a| a.end <= arc.start);
        self.arcs.get(idx).is_some_and(|a| a.contains_arc(arc))
    }
}

impl fmt::Display for ArcUnion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, a) in self.arcs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "}}")
    }
}

/// One deletion round: from every surviving arc remove `count` equally spaced
/// open gaps of absolute length `gap`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CantorStage {
    pub count: u32,
    pub gap: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CantorScheme {
    pub stages: Vec<CantorStage>,
}

impl CantorScheme {
    pub fn new(stages: Vec<CantorStage>) -> Result<Self> {
        for s in &stages {
            if s.count == 0 || s.gap <= Rational::zero() {
                return Err(Error::BadDescriptor(format!(
                    "cantor stage needs count >= 1 and positive gap, got {}:{}",
                    s.count, s.gap
                )));
            }
        }
        Ok(CantorScheme { stages })
    }

    /// Middle-thirds style: one gap of length `3^{-n}` at stage `n`.
    pub fn middle_thirds(depth: usize) -> Self {
        let stages = (1..=depth)
            .map(|n| CantorStage {
                count: 1,
                gap: Rational::new(1, 3i64.pow(n as u32)),
            })
            .collect();
        CantorScheme { stages }
    }

    /// Repeat the first-stage pattern at every scale: the gap at stage `n` is
    /// `gap · r^{n-1}` with `r = (1 - count·gap)/(count + 1)` the remnant length.
    pub fn self_similar(count: u32, gap: Rational, depth: usize) -> Result<Self> {
        let ratio = (Rational::one() - gap * Rational::from_integer(count as i64))
            / Rational::from_integer(count as i64 + 1);
        if ratio <= Rational::zero() {
            return Err(Error::SchemeOverdelete {
                stage: 1,
                count,
                gap: gap.to_string(),
                arc_length: "1".into(),
            });
        }
        let mut stages = Vec::with_capacity(depth);
        let mut g = gap;
        for _ in 0..depth {
            stages.push(CantorStage { count, gap: g });
            g = g.checked_mul(&ratio).ok_or(Error::Overflow("cantor scheme"))?;
        }
        CantorScheme::new(stages)
    }

    pub fn depth(&self) -> usize {
        self.stages.len()
    }
}

/// Stage `n` of a Cantor scheme; stage 0 is the full circle.
pub fn cantor_stage(scheme: &CantorScheme, n: usize) -> Result<ArcUnion> {
    if n > scheme.stages.len() {
        return Err(Error::StageOutOfRange {
            requested: n,
            available: scheme.stages.len(),
        });
    }
    let mut arcs = ArcUnion::full().arcs;
    for (idx, stage) in scheme.stages.iter().take(n).enumerate() {
        let count = Rational::from_integer(stage.count as i64);
        let removed = stage
            .gap
            .checked_mul(&count)
            .ok_or(Error::Overflow("cantor stage"))?;
        let mut next = Vec::with_capacity(arcs.len() * (stage.count as usize + 1));
        for arc in &arcs {
            let len = arc.length();
            if removed >= len {
                return Err(Error::SchemeOverdelete {
                    stage: idx + 1,
                    count: stage.count,
                    gap: stage.gap.to_string(),
                    arc_length: len.to_string(),
                });
            }
            let remnant = len
                .checked_sub(&removed)
                .map(|r| r / (count + Rational::one()))
                .ok_or(Error::Overflow("cantor stage"))?;
            let step = remnant
                .checked_add(&stage.gap)
                .ok_or(Error::Overflow("cantor stage"))?;
            for i in 0..=stage.count as i64 {
                let s = step
                    .checked_mul(&Rational::from_integer(i))
                    .and_then(|o| arc.start.checked_add(&o))
                    .ok_or(Error::Overflow("cantor stage"))?;
                let e = s.checked_add(&remnant).ok_or(Error::Overflow("cantor stage"))?;
                next.push(Arc { start: s, end: e });
            }
        }
        arcs = next;
    }
    // Remnants are separated by positive gaps, so they are already canonical.
    Ok(ArcUnion { arcs })
}

/// Result of overlaying the translates `S + c` for a finite set of shifts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverReport {
    pub covers: bool,
    pub tiles: bool,
    pub uncovered_measure: Rational,
    pub max_multiplicity: usize,
}

/// Overlay `S + c` for every shift and report coverage and overlap.
///
/// Multiplicity is evaluated on the common refinement of all shifted endpoints,
/// so both flags are exact.
pub fn translate_cover_report(set: &ArcUnion, shifts: &[Rational]) -> CoverReport {
    let mut events: Vec<(Rational, i32)> = Vec::new();
    for &c in shifts {
        for arc in set.arcs() {
            for piece in wrapped_pieces(arc.start + c, arc.length()) {
                events.push((piece.start, 1));
                events.push((piece.end, -1));
            }
        }
    }
    events.sort_by(|a, b| match a.0.cmp(&b.0) {
        Ordering::Equal => a.1.cmp(&b.1),
        o => o,
    });

    let mut uncovered = Rational::zero();
    let mut max_mult = 0usize;
    let mut depth: i32 = 0;
    let mut cursor = Rational::zero();
    let mut i = 0;
    while i < events.len() {
        let pos = events[i].0;
        if pos > cursor {
            if depth == 0 {
                uncovered += pos - cursor;
            } else {
                max_mult = max_mult.max(depth as usize);
            }
            cursor = pos;
        }
        while i < events.len() && events[i].0 == pos {
            depth += events[i].1;
            i += 1;
        }
    }
    if cursor < Rational::one() {
        uncovered += Rational::one() - cursor;
    }
    let covers = uncovered.is_zero();
    CoverReport {
        covers,
        tiles: covers && max_mult == 1,
        uncovered_measure: uncovered,
        max_multiplicity: max_mult,
    }
}
