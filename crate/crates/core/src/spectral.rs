//! Gram sections of `B(S, Λ)`, projection-sum truncations and their spectra.
//!
//! The Gram matrix of `{χ_S e^{2πikt}}_{k∈Λ_f}` has entries
//! `G[j][k] = χ̂_S(λ_j − λ_k)`: it is the `Λ_f × Λ_f` block of the Laurent
//! operator with symbol `χ_S`. Its smallest eigenvalue is the squared lower
//! Riesz bound of the finite section.

use std::collections::HashMap;
use std::fmt::Write as _;

use nalgebra::{DMatrix, SymmetricEigen};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::circle::ArcUnion;
use crate::error::{Error, Result};
use crate::sequence::{generate, Generator, IndexSet, Window};

/// Largest dimension accepted by the dense eigensolver.
pub const MAX_DIMENSION: usize = 4096;

/// Iteration cap handed to the implicit QR sweeps.
pub const EIGEN_ITERATION_CAP: usize = 100_000;

/// Dense Hermitian matrix; only the upper triangle is stored.
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianMatrix {
    dim: usize,
    upper: Vec<Complex64>,
}

impl HermitianMatrix {
    /// Build from `f(j, k)` evaluated for `j <= k`. Diagonal imaginary parts
    /// are discarded.
    pub fn from_upper(dim: usize, mut f: impl FnMut(usize, usize) -> Complex64) -> Self {
        let mut upper = Vec::with_capacity(dim * (dim + 1) / 2);
        for j in 0..dim {
            for k in j..dim {
                let mut z = f(j, k);
                if j == k {
                    z.im = 0.0;
                }
                upper.push(z);
            }
        }
        HermitianMatrix { dim, upper }
    }

    pub fn identity(dim: usize) -> Self {
        Self::from_upper(dim, |j, k| {
            if j == k {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        })
    }

    pub fn diagonal(values: &[f64]) -> Self {
        Self::from_upper(values.len(), |j, k| {
            Complex64::new(if j == k { values[j] } else { 0.0 }, 0.0)
        })
    }

    /// Build from a dense matrix, keeping the upper triangle.
    pub fn from_dense(m: &DMatrix<Complex64>) -> Self {
        Self::from_upper(m.nrows(), |j, k| m[(j, k)])
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn offset(&self, j: usize, k: usize) -> usize {
        j * self.dim - j * (j + 1) / 2 + k
    }

    pub fn get(&self, j: usize, k: usize) -> Complex64 {
        if j <= k {
            self.upper[self.offset(j, k)]
        } else {
            self.upper[self.offset(k, j)].conj()
        }
    }

    pub fn to_dense(&self) -> DMatrix<Complex64> {
        DMatrix::from_fn(self.dim, self.dim, |j, k| self.get(j, k))
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|j| self.get(j, j).re).sum()
    }

    /// Frobenius norm.
    pub fn norm(&self) -> f64 {
        let mut s = 0.0;
        for j in 0..self.dim {
            for k in 0..self.dim {
                s += self.get(j, k).norm_sqr();
            }
        }
        s.sqrt()
    }

    /// `self + diag(values)`.
    pub fn add_diagonal(&self, values: &[f64]) -> HermitianMatrix {
        assert_eq!(values.len(), self.dim);
        Self::from_upper(self.dim, |j, k| {
            let z = self.get(j, k);
            if j == k {
                z + values[j]
            } else {
                z
            }
        })
    }

    /// Plain-text dump: `N` on the first line, then `N²` lines `re im`
    /// in row-major order.
    pub fn to_dump(&self) -> String {
        let mut s = format!("{}\n", self.dim);
        for j in 0..self.dim {
            for k in 0..self.dim {
                let z = self.get(j, k);
                writeln!(s, "{:e} {:e}", z.re, z.im).expect("write to string");
            }
        }
        s
    }

    /// Parse the dump format; the lower triangle must be the conjugate of the
    /// upper one up to `1e-12`.
    pub fn from_dump(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let dim: usize = tokens
            .next()
            .ok_or_else(|| Error::BadDump("missing dimension".into()))?
            .parse()
            .map_err(|e| Error::BadDump(format!("dimension: {e}")))?;
        let mut dense = DMatrix::zeros(dim, dim);
        for j in 0..dim {
            for k in 0..dim {
                let mut next = || -> Result<f64> {
                    tokens
                        .next()
                        .ok_or_else(|| Error::BadDump(format!("entry ({j}, {k}) missing")))?
                        .parse()
                        .map_err(|e| Error::BadDump(format!("entry ({j}, {k}): {e}")))
                };
                let re = next()?;
                let im = next()?;
                dense[(j, k)] = Complex64::new(re, im);
            }
        }
        if tokens.next().is_some() {
            return Err(Error::BadDump("trailing data".into()));
        }
        for j in 0..dim {
            for k in j..dim {
                if (dense[(j, k)] - dense[(k, j)].conj()).norm() > 1e-12 {
                    return Err(Error::BadDump(format!("entry ({j}, {k}) is not Hermitian")));
                }
            }
        }
        Ok(Self::from_dense(&dense))
    }
}

/// Gram matrix of `B(S, Λ_f)` for an explicit list of frequencies.
pub fn gram_from_indices(set: &ArcUnion, indices: &[i64]) -> Result<HermitianMatrix> {
    if indices.is_empty() {
        return Err(Error::EmptyIndexSet);
    }
    let mut cache: HashMap<i64, Complex64> = HashMap::new();
    Ok(HermitianMatrix::from_upper(indices.len(), |j, k| {
        let d = indices[j] - indices[k];
        *cache
            .entry(d)
            .or_insert_with(|| set.fourier_coefficient(d))
    }))
}

/// `G[j][k] = χ̂_S(λ_j − λ_k)` over the members of `lambda`.
pub fn gram_matrix(set: &ArcUnion, lambda: &IndexSet) -> Result<HermitianMatrix> {
    gram_from_indices(set, lambda.members())
}

/// Eigenvalues (ascending) and unit eigenvectors (columns, same order).
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    pub vectors: DMatrix<Complex64>,
}

impl EigenDecomposition {
    /// Largest `‖Hv − λv‖` over the returned pairs.
    pub fn max_residual(&self, h: &HermitianMatrix) -> f64 {
        let dense = h.to_dense();
        (0..self.values.len())
            .map(|i| {
                let v = self.vectors.column(i);
                (&dense * v - v * Complex64::new(self.values[i], 0.0)).norm()
            })
            .fold(0.0, f64::max)
    }
}

fn decompose(h: &HermitianMatrix) -> Result<SymmetricEigen<Complex64, nalgebra::Dyn>> {
    if h.dim() > MAX_DIMENSION {
        return Err(Error::DimensionTooLarge(h.dim()));
    }
    SymmetricEigen::try_new(h.to_dense(), f64::EPSILON, EIGEN_ITERATION_CAP)
        .ok_or(Error::ConvergenceFailure(EIGEN_ITERATION_CAP))
}

/// Full Hermitian eigendecomposition, sorted ascending.
pub fn hermitian_eigen(h: &HermitianMatrix) -> Result<EigenDecomposition> {
    if h.dim() == 0 {
        return Ok(EigenDecomposition {
            values: Vec::new(),
            vectors: DMatrix::zeros(0, 0),
        });
    }
    let eig = decompose(h)?;
    let mut order: Vec<usize> = (0..h.dim()).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[a].total_cmp(&eig.eigenvalues[b]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(h.dim(), h.dim(), |r, c| eig.eigenvectors[(r, order[c])]);
    Ok(EigenDecomposition { values, vectors })
}

/// Ascending eigenvalues of a Hermitian matrix.
pub fn hermitian_eigenvalues(h: &HermitianMatrix) -> Result<Vec<f64>> {
    Ok(hermitian_eigen(h)?.values)
}

/// What a spectrum was computed from.
#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub set: String,
    pub sequence: String,
    pub window: Option<Window>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<f64>,
    pub lambda_min: f64,
    pub lambda_max: f64,
    /// `√max(λ_min, 0)`: the lower bound in `‖P_S P_Λ h‖ ≥ ε₁‖P_Λ h‖` on the
    /// finite section.
    pub epsilon1: f64,
    pub provenance: Provenance,
}

impl SpectrumReport {
    pub fn from_eigenvalues(eigenvalues: Vec<f64>, provenance: Provenance) -> Self {
        let lambda_min = eigenvalues.first().copied().unwrap_or(f64::NAN);
        let lambda_max = eigenvalues.last().copied().unwrap_or(f64::NAN);
        SpectrumReport {
            epsilon1: lambda_min.max(0.0).sqrt(),
            eigenvalues,
            lambda_min,
            lambda_max,
            provenance,
        }
    }

    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }
}

/// Spectrum of the Gram section of `B(S, Λ ∩ window)`.
pub fn gram_spectrum(set: &ArcUnion, lambda: &IndexSet) -> Result<SpectrumReport> {
    let g = gram_matrix(set, lambda)?;
    let values = hermitian_eigenvalues(&g)?;
    Ok(SpectrumReport::from_eigenvalues(
        values,
        Provenance {
            set: set.to_string(),
            sequence: lambda_label(lambda.generator()),
            window: Some(lambda.window()),
        },
    ))
}

fn lambda_label(g: &Generator) -> String {
    crate::descriptor::SeqDescriptor(g.clone()).to_string()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum TrendClass {
    BoundedBelow,
    Decaying,
}

impl std::fmt::Display for TrendClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            TrendClass::BoundedBelow => "bounded-below",
            TrendClass::Decaying => "decaying",
        })
    }
}

/// Two-point decay classifier for `λ_min` across nested windows.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrendThresholds {
    /// Decaying when `last < ratio · first`.
    pub ratio: f64,
    /// `λ_min` at or below this is numerically zero and always decaying.
    pub zero_floor: f64,
    /// Allowed increase of `λ_min` between nested sections.
    pub interlacing_slack: f64,
}

impl Default for TrendThresholds {
    fn default() -> Self {
        TrendThresholds {
            ratio: 0.2,
            zero_floor: 1e-10,
            interlacing_slack: 1e-9,
        }
    }
}

impl TrendThresholds {
    pub fn classify(&self, first: f64, last: f64) -> TrendClass {
        if last <= self.zero_floor || last < self.ratio * first {
            TrendClass::Decaying
        } else {
            TrendClass::BoundedBelow
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TrendReport {
    pub reports: Vec<SpectrumReport>,
    pub classification: TrendClass,
    /// `λ_min` non-increasing and `λ_max` non-decreasing within the slack.
    pub interlacing_ok: bool,
}

impl TrendReport {
    fn from_reports(reports: Vec<SpectrumReport>, thresholds: &TrendThresholds) -> Self {
        let first = reports.first().map_or(f64::NAN, |r| r.lambda_min);
        let last = reports.last().map_or(f64::NAN, |r| r.lambda_min);
        let slack = thresholds.interlacing_slack;
        let interlacing_ok = reports.windows(2).all(|p| {
            p[1].lambda_min <= p[0].lambda_min + slack && p[1].lambda_max >= p[0].lambda_max - slack
        });
        TrendReport {
            classification: thresholds.classify(first, last),
            reports,
            interlacing_ok,
        }
    }

    pub fn lambda_mins(&self) -> Vec<f64> {
        self.reports.iter().map(|r| r.lambda_min).collect()
    }
}

fn check_nested(windows: &[Window]) -> Result<()> {
    let nested = windows
        .windows(2)
        .all(|p| p[1].contains_window(&p[0]) && p[1].len() > p[0].len());
    if windows.is_empty() || !nested {
        return Err(Error::WindowsNotNested);
    }
    Ok(())
}

/// `λ_min` of Gram sections over nested windows.
pub fn riesz_trend(
    set: &ArcUnion,
    lambda: &Generator,
    windows: &[Window],
    thresholds: &TrendThresholds,
) -> Result<TrendReport> {
    check_nested(windows)?;
    let reports = windows
        .iter()
        .map(|w| gram_spectrum(set, &generate(lambda, *w)?))
        .collect::<Result<Vec<_>>>()?;
    Ok(TrendReport::from_reports(reports, thresholds))
}

/// Truncation of `P_S + P_M` to `ℓ²(window)`:
/// `Toeplitz(χ̂_S(j − k)) + diag(1_M)`.
pub fn projection_sum_matrix(set: &ArcUnion, m: &IndexSet, window: Window) -> HermitianMatrix {
    let idx: Vec<i64> = window.iter().collect();
    let toeplitz = gram_from_indices(set, &idx).expect("window is nonempty");
    let diag: Vec<f64> = idx.iter().map(|&k| m.contains(k) as u8 as f64).collect();
    toeplitz.add_diagonal(&diag)
}

/// Spectrum of the `P_S + P_M` truncation; eigenvalues lie in `[0, 2]`.
///
/// With `M = Λ` this is the operator asked about for `P_S + P_Λ`; with
/// `M = Z ∖ Λ` a positive `λ_min` bounds `‖P_S h‖² + ‖P_{Z∖Λ} h‖²` from below.
pub fn projection_sum_spectrum(
    set: &ArcUnion,
    m: &IndexSet,
    window: Window,
) -> Result<SpectrumReport> {
    let h = projection_sum_matrix(set, m, window);
    let values = hermitian_eigenvalues(&h)?;
    Ok(SpectrumReport::from_eigenvalues(
        values,
        Provenance {
            set: set.to_string(),
            sequence: lambda_label(m.generator()),
            window: Some(window),
        },
    ))
}

/// Which index set is added to `P_S`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ProjectionReading {
    /// `P_S + P_Λ`.
    Lambda,
    /// `P_S + P_{Z∖Λ}`.
    Complement,
}

/// Projection-sum spectra over nested windows.
pub fn projection_sum_trend(
    set: &ArcUnion,
    lambda: &Generator,
    windows: &[Window],
    reading: ProjectionReading,
    thresholds: &TrendThresholds,
) -> Result<TrendReport> {
    check_nested(windows)?;
    let reports = windows
        .iter()
        .map(|w| {
            let l = generate(lambda, *w)?;
            let m = match reading {
                ProjectionReading::Lambda => l,
                ProjectionReading::Complement => l.complement_in_window(),
            };
            projection_sum_spectrum(set, &m, *w)
        })
        .collect::<Result<Vec<_>>>()?;
    // Compressions of P_S + P_M to nested windows interlace too.
    Ok(TrendReport::from_reports(reports, thresholds))
}

/// `ε₂ = ε₁ / √(1 + ε₁²)`.
pub fn epsilon_convert(eps1: f64) -> Result<f64> {
    if !eps1.is_finite() || eps1 <= 0.0 {
        return Err(Error::NonPositive(eps1));
    }
    Ok(eps1 / (1.0 + eps1 * eps1).sqrt())
}
