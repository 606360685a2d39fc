//! Cell-parallel evaluation of a sweep configuration.

use std::time::Instant;

use rayon::prelude::*;
use riesz_lab::criteria::{arithmetic_riesz_basis, landau_necessary, montgomery_vaughan_sufficient};
use riesz_lab::spectral::{projection_sum_trend, riesz_trend, ProjectionReading, TrendClass, TrendReport, TrendThresholds};
use riesz_lab::witness::{witness_sweep, BohrWitnessConfig};
use riesz_lab::{generate, ArcUnion, CriterionReport, Generator, SetDescriptor, Window};

use crate::config::{Cell, Criterion, SweepConfig, WitnessParams};
use crate::report::{fmt_num, ReportRow};

/// Number of nested windows used by the trend criteria.
pub const TREND_STEPS: u32 = 4;

/// `window`, `window/2`, `window/4`, … (smallest first), keeping only
/// strictly growing windows.
pub fn nested_windows(window: Window, steps: u32) -> Vec<Window> {
    let mut out: Vec<Window> = Vec::new();
    for j in (0..steps).rev() {
        let d = 1i64 << j;
        let w = Window::new(window.lo() / d, window.hi() / d).expect("0 stays inside");
        if w.len() >= 2 && out.last().is_none_or(|p| w.len() > p.len()) {
            out.push(w);
        }
    }
    if out.is_empty() {
        out.push(window);
    }
    out
}

/// Verdict, up to four values and notes for one (cell, criterion).
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Outcome {
    pub verdict: String,
    pub values: [String; 4],
    pub notes: Vec<String>,
}

fn from_report(r: &CriterionReport, values: [String; 4]) -> Outcome {
    Outcome {
        verdict: r.verdict.to_string(),
        values,
        notes: r.notes.clone(),
    }
}

fn param(r: &CriterionReport, key: &str) -> String {
    r.params.get(key).cloned().unwrap_or_default()
}

fn trend_outcome(t: &TrendReport) -> Outcome {
    let first = t.reports.first().expect("nonempty trend");
    let last = t.reports.last().expect("nonempty trend");
    let sizes: Vec<String> = t.reports.iter().map(|r| r.dim().to_string()).collect();
    Outcome {
        verdict: match t.classification {
            TrendClass::BoundedBelow => "pass",
            TrendClass::Decaying => "fail",
        }
        .into(),
        values: [
            fmt_num(last.lambda_min),
            fmt_num(first.lambda_min),
            fmt_num(last.lambda_max),
            t.interlacing_ok.to_string(),
        ],
        notes: vec![format!("{} over sizes {}", t.classification, sizes.join("/"))],
    }
}

fn witness_outcome(
    set: &ArcUnion,
    stage: Option<usize>,
    generator: &Generator,
    params: &WitnessParams,
) -> riesz_lab::Result<Outcome> {
    let Generator::Bohr { alpha, delta } = *generator else {
        return Err(riesz_lab::Error::BadConfig(
            "witness criterion needs a bohr sequence".into(),
        ));
    };
    let base = BohrWitnessConfig {
        alpha: alpha.rem_euclid(1.0),
        delta,
        m: params.ms.first().copied().unwrap_or(1),
        grid_resolution: params.grid,
        arc_length: params.arc_length,
    };
    base.validate()?;
    let sweep = witness_sweep(set, &base, &params.ms, params.target)?;
    let mut notes = Vec::new();
    let mut last = None;
    for (m, row) in &sweep.rows {
        match row {
            Ok(w) => {
                notes.push(format!("M={m} ratio={}", fmt_num(w.ratio)));
                last = Some(w.clone().with_stage(stage));
            }
            Err(e) => notes.push(format!("M={m} error: {e}")),
        }
    }
    let Some(last) = last else {
        return Err(riesz_lab::Error::NoArcFound {
            length: params.arc_length.to_string(),
        });
    };
    Ok(Outcome {
        verdict: if sweep.below_target { "fail" } else { "inconclusive" }.into(),
        values: [
            sweep.min_ratio.map(fmt_num).unwrap_or_default(),
            fmt_num(last.ratio),
            fmt_num(last.alpha_tail),
            last.arc.start().to_string(),
        ],
        notes,
    })
}

/// Evaluate one criterion on one cell.
pub fn evaluate(
    criterion: Criterion,
    set_desc: &SetDescriptor,
    set: &ArcUnion,
    generator: &Generator,
    window: Window,
    witness: &WitnessParams,
) -> riesz_lab::Result<Outcome> {
    let thresholds = TrendThresholds::default();
    match criterion {
        Criterion::Landau => {
            let r = landau_necessary(set, &generate(generator, window)?)?;
            Ok(from_report(
                &r,
                [
                    r.margin.map(fmt_num).unwrap_or_default(),
                    fmt_num(set.measure_f64()),
                    r.param_f64("beurling_hi").map(fmt_num).unwrap_or_default(),
                    param(&r, "beurling_k"),
                ],
            ))
        }
        Criterion::Mv => {
            let r = montgomery_vaughan_sufficient(set, &generate(generator, window)?)?;
            Ok(from_report(
                &r,
                [
                    r.margin.map(fmt_num).unwrap_or_default(),
                    param(&r, "longest_arc"),
                    param(&r, "separation"),
                    param(&r, "slack"),
                ],
            ))
        }
        Criterion::Basis => {
            let Generator::Periodic { period, offset } = *generator else {
                return Err(riesz_lab::Error::BadConfig(
                    "basis criterion needs a periodic sequence".into(),
                ));
            };
            let r = arithmetic_riesz_basis(set, period, offset)?;
            Ok(from_report(
                &r,
                [
                    r.margin.map(fmt_num).unwrap_or_default(),
                    param(&r, "covers"),
                    param(&r, "tiles"),
                    param(&r, "uncovered_measure"),
                ],
            ))
        }
        Criterion::GramTrend => {
            let t = riesz_trend(set, generator, &nested_windows(window, TREND_STEPS), &thresholds)?;
            Ok(trend_outcome(&t))
        }
        Criterion::ProjectionSum => {
            let t = projection_sum_trend(
                set,
                generator,
                &nested_windows(window, TREND_STEPS),
                ProjectionReading::Complement,
                &thresholds,
            )?;
            let mut o = trend_outcome(&t);
            o.notes.push("reading P_S + P_{Z\\Λ}".into());
            Ok(o)
        }
        Criterion::Witness => {
            let stage = match set_desc {
                SetDescriptor::Cantor { stage, .. } => Some(*stage),
                _ => None,
            };
            witness_outcome(set, stage, generator, witness)
        }
    }
}

fn run_cell(config: &SweepConfig, cell: &Cell, timing: bool) -> Vec<ReportRow> {
    let set_desc = &config.sets[cell.set];
    let seq_desc = &config.seqs[cell.seq];
    let built = set_desc.build();
    config
        .criteria
        .iter()
        .map(|&criterion| {
            let start = Instant::now();
            let outcome = built
                .as_ref()
                .map_err(Clone::clone)
                .and_then(|set| {
                    evaluate(
                        criterion,
                        set_desc,
                        set,
                        seq_desc.generator(),
                        cell.window,
                        &config.witness,
                    )
                })
                .unwrap_or_else(|e| Outcome {
                    verdict: "error".into(),
                    values: Default::default(),
                    notes: vec![e.to_string()],
                });
            let elapsed = start.elapsed().as_secs_f64() * 1e3;
            let [value1, value2, value3, value4] = outcome.values;
            ReportRow {
                row: 0,
                cell_id: cell.id,
                set: set_desc.to_string(),
                seq: seq_desc.to_string(),
                window_lo: cell.window.lo(),
                window_hi: cell.window.hi(),
                criterion: criterion.to_string(),
                verdict: outcome.verdict,
                value1,
                value2,
                value3,
                value4,
                notes: outcome.notes.join("; "),
                runtime_ms: if timing { format!("{elapsed:.3}") } else { String::new() },
            }
        })
        .collect()
}

/// Run every selected cell on a pool of `config.parallelism` workers.
///
/// Rows come back sorted by cell id and then criterion order, so the output
/// does not depend on the pool size. Wall-clock timings are only filled in
/// when `timing` is set, since they are the one non-deterministic column.
pub fn run_sweep(config: &SweepConfig, timing: bool) -> Vec<ReportRow> {
    let cells = config.cells();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.parallelism.max(1))
        .build()
        .expect("thread pool");
    let mut rows: Vec<ReportRow> = pool.install(|| {
        cells
            .par_iter()
            .flat_map_iter(|cell| run_cell(config, cell, timing))
            .collect()
    });
    let order = |c: &str| config.criteria.iter().position(|x| x.name() == c);
    rows.sort_by_key(|r| (r.cell_id, order(&r.criterion)));
    for (i, r) in rows.iter_mut().enumerate() {
        r.row = i + 1;
    }
    rows
}
