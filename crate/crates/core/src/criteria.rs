//! Decidable necessary and sufficient conditions for `B(S, Λ)` to be a Riesz
//! sequence, plus the constructive decompositions built on them.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::circle::{to_f64, translate_cover_report, ArcUnion, Rational};
use crate::error::{Error, Result};
use crate::sequence::{densities, generate, separation, syndetic_report, IndexSet, Window};
use crate::spectral::{gram_from_indices, hermitian_eigenvalues};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Inconclusive => "inconclusive",
        })
    }
}

/// Outcome of a single criterion. `Pass` carries a non-negative margin,
/// `Fail` a negative one, `Inconclusive` none.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CriterionReport {
    pub criterion: String,
    pub verdict: Verdict,
    pub margin: Option<f64>,
    pub params: BTreeMap<String, String>,
    pub notes: Vec<String>,
}

impl CriterionReport {
    fn new(criterion: &str, verdict: Verdict, margin: Option<f64>) -> Self {
        debug_assert!(match verdict {
            Verdict::Pass => margin.is_some_and(|m| m >= 0.0),
            Verdict::Fail => margin.is_some_and(|m| m < 0.0),
            Verdict::Inconclusive => margin.is_none(),
        });
        CriterionReport {
            criterion: criterion.to_string(),
            verdict,
            margin,
            params: BTreeMap::new(),
            notes: Vec::new(),
        }
    }

    fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    fn note(mut self, note: impl Into<String>) -> Self {
        self.notes.push(note.into());
        self
    }

    pub fn param_f64(&self, key: &str) -> Option<f64> {
        self.params.get(key)?.parse().ok()
    }
}

/// Necessary condition `D⁺(Λ) ≤ μ(S)`.
///
/// A fail certifies that `B(S, Λ)` is not a Riesz sequence, up to the
/// fixed-scale density estimate.
pub fn landau_necessary(set: &ArcUnion, lambda: &IndexSet) -> Result<CriterionReport> {
    let d = densities(lambda)?;
    let mu = set.measure_f64();
    let margin = mu - d.beurling_hi;
    let verdict = if margin >= 0.0 {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut report = CriterionReport::new("landau", verdict, Some(margin))
        .param("measure", mu)
        .param("beurling_hi", d.beurling_hi)
        .param("beurling_k", d.beurling_k)
        .note(format!(
            "upper density estimated at fixed scale k = {} on window {}",
            d.beurling_k,
            lambda.window()
        ));
    if verdict == Verdict::Pass {
        report = report.note("necessary condition only");
    }
    Ok(report)
}

/// Sufficient condition: an arc of length `T > 1/Δ(Λ)` inside `S` gives the
/// lower bound `ε₁ = T − 1/Δ(Λ)`.
pub fn montgomery_vaughan_sufficient(set: &ArcUnion, lambda: &IndexSet) -> Result<CriterionReport> {
    let delta = separation(lambda)?;
    let t = set.longest_arc_length();
    let slack = t - Rational::new(1, delta as i64);
    let report = if slack > Rational::zero() {
        CriterionReport::new("mv", Verdict::Pass, Some(to_f64(slack)))
            .note(format!("certified lower bound epsilon1 = {slack}"))
    } else {
        CriterionReport::new("mv", Verdict::Inconclusive, None)
            .note("longest arc too short for the separation; criterion is only sufficient")
    };
    Ok(report
        .param("longest_arc", t)
        .param("separation", delta)
        .param("slack", slack))
}

/// `B(S, nZ + m)` is a Riesz basis iff `S + {0, 1/n, …, (n-1)/n}` covers `T`
/// almost everywhere.
///
/// The verdict follows the cover reading; whether the translates also tile is
/// reported alongside, and a cover that is not a tiling is flagged.
pub fn arithmetic_riesz_basis(set: &ArcUnion, n: u64, m: i64) -> Result<CriterionReport> {
    if n == 0 {
        return Err(Error::BadDescriptor("arithmetic progression needs n >= 1".into()));
    }
    let shifts: Vec<Rational> = (0..n as i64).map(|k| Rational::new(k, n as i64)).collect();
    let cover = translate_cover_report(set, &shifts);
    let margin = -to_f64(cover.uncovered_measure);
    let verdict = if cover.covers {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    let mut report = CriterionReport::new("basis", verdict, Some(margin))
        .param("n", n)
        .param("m", m)
        .param("covers", cover.covers)
        .param("tiles", cover.tiles)
        .param("uncovered_measure", cover.uncovered_measure)
        .param("max_multiplicity", cover.max_multiplicity)
        .note("independent of the offset m");
    if cover.covers && !cover.tiles {
        report = report.note("ambiguous: translates cover but do not tile");
    }
    Ok(report)
}

/// Translates `Λ + k, k ∈ F_n` of a windowed-syndetic set.
///
/// Every translate is an exact shift of the same finite base set, carried on
/// its own shifted window, so the Gram spectra agree.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SyndeticDecomposition {
    pub gap: u64,
    pub translates: Vec<IndexSet>,
    /// Every window integer lies in some translate.
    pub covers_window: bool,
}

/// Split the window into the `n` translates of a set with gap bound `n`.
///
/// The base set is regenerated on a window extended by `n - 1` to the left so
/// that the translates together reach every integer of the original window.
pub fn syndetic_decomposition(lambda: &IndexSet, gap_budget: u64) -> Result<SyndeticDecomposition> {
    let rep = syndetic_report(lambda, gap_budget);
    let n = match (rep.syndetic, rep.max_gap.bound()) {
        (true, Some(n)) => n,
        _ => return Err(Error::NotSyndetic),
    };
    let w = lambda.window();
    let wide = Window::new(w.lo() - (n as i64 - 1), w.hi())?;
    let base = generate(lambda.generator(), wide)?;
    let translates: Vec<IndexSet> = (0..n as i64)
        .map(|k| base.shift(k))
        .collect::<Result<_>>()?;
    let covers_window = w
        .iter()
        .all(|x| translates.iter().any(|t| t.contains(x)));
    Ok(SyndeticDecomposition {
        gap: n,
        translates,
        covers_window,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GreedySelection {
    pub set: IndexSet,
    /// `λ_min` of the final Gram, from an independent eigensolve.
    pub lambda_min: f64,
    /// `|Λ| / |window|`.
    pub density: f64,
    pub threshold: f64,
}

/// Order `0, 1, -1, 2, -2, …` restricted to the window.
pub fn outward_scan(window: Window) -> impl Iterator<Item = i64> {
    let reach = window.hi().max(-window.lo());
    std::iter::once(0)
        .chain((1..=reach).flat_map(|k| [k, -k]))
        .filter(move |k| window.contains(*k))
}

/// Schur margin that must stay positive for a candidate to be accepted.
const GREEDY_SCHUR_TOLERANCE: f64 = 1e-10;

/// Greedy Riesz subset: scan the window outward from 0 and keep `k` whenever
/// the augmented Gram still has `λ_min ≥ threshold`.
///
/// The eigenvalue test is carried out through an incremental Cholesky factor
/// of `G − t·I`: the augmented matrix stays positive semidefinite exactly when
/// the new Schur complement is non-negative. A small positive tolerance keeps
/// the post-hoc eigensolve on the right side of the threshold.
pub fn greedy_riesz_subset(set: &ArcUnion, window: Window, threshold: f64) -> Result<GreedySelection> {
    let mu = set.measure_f64();
    if !(threshold > 0.0 && threshold <= 1.0) {
        return Err(Error::BadThreshold(threshold));
    }
    if mu - threshold <= GREEDY_SCHUR_TOLERANCE {
        return Err(Error::ThresholdTooHigh {
            threshold,
            measure: mu,
        });
    }
    let diag = mu - threshold;
    let span = (window.hi() - window.lo()) as usize;
    let coeffs: Vec<Complex64> = (0..=span as i64).map(|d| set.fourier_coefficient(d)).collect();
    let chi = |d: i64| -> Complex64 {
        if d >= 0 {
            coeffs[d as usize]
        } else {
            coeffs[(-d) as usize].conj()
        }
    };

    let mut selected: Vec<i64> = Vec::new();
    // Rows of the lower Cholesky factor of G − t·I.
    let mut factor: Vec<Vec<Complex64>> = Vec::new();
    for cand in outward_scan(window) {
        let a: Vec<Complex64> = selected.iter().map(|&l| chi(l - cand)).collect();
        let mut y = vec![Complex64::zero(); selected.len()];
        for i in 0..selected.len() {
            let mut acc = a[i];
            for (j, yj) in y.iter().enumerate().take(i) {
                acc -= factor[i][j] * yj;
            }
            y[i] = acc / factor[i][i];
        }
        let schur = diag - y.iter().map(|z| z.norm_sqr()).sum::<f64>();
        if schur > GREEDY_SCHUR_TOLERANCE {
            let mut row: Vec<Complex64> = y.iter().map(|z| z.conj()).collect();
            row.push(Complex64::new(schur.sqrt(), 0.0));
            factor.push(row);
            selected.push(cand);
        }
    }
    selected.sort_unstable();

    let g = gram_from_indices(set, &selected)?;
    let lambda_min = hermitian_eigenvalues(&g)?[0];
    let density = selected.len() as f64 / window.len().to_f64().unwrap_or(f64::NAN);
    Ok(GreedySelection {
        set: IndexSet::explicit(window, selected),
        lambda_min,
        density,
        threshold,
    })
}
