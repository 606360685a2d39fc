//! Argument parsing and subcommand dispatch.

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use riesz_lab::circle::to_f64;
use riesz_lab::criteria::{
    arithmetic_riesz_basis, greedy_riesz_subset, landau_necessary, montgomery_vaughan_sufficient,
    syndetic_decomposition, CriterionReport,
};
use riesz_lab::descriptor::parse_rational;
use riesz_lab::sequence::{
    almost_periodic_check, densities, sliding_block_code, syndetic_report, BlockCode,
    DEFAULT_GAP_BUDGET,
};
use riesz_lab::spectral::{
    gram_matrix, gram_spectrum, projection_sum_trend, riesz_trend, ProjectionReading,
    TrendReport, TrendThresholds,
};
use riesz_lab::witness::{witness_ratio, witness_sweep, BohrWitnessConfig, WitnessResult};
use riesz_lab::{generate, ArcUnion, Generator, IndexSet, SeqDescriptor, SetDescriptor, Window};

use crate::config::{parse_config, ConfigError, OutputFormat};
use crate::report::{fmt_num, write_csv, write_json};
use crate::sweep::{nested_windows, run_sweep, TREND_STEPS};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CELL_ERROR: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_IO: i32 = 3;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Config(#[from] ConfigError),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Compute(#[from] riesz_lab::Error),
    #[error("{path}: {source}")]
    Io { path: String, source: io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) | CliError::Usage(_) => EXIT_USAGE,
            CliError::Compute(_) => EXIT_CELL_ERROR,
            CliError::Io { .. } => EXIT_IO,
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Io {
        path: path.display().to_string(),
        source,
    }
}

#[derive(Debug, Parser)]
#[command(name = "riesz-lab", version, about = "Riesz sequences of exponentials on the circle")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Arc unions
    #[command(subcommand)]
    Set(SetCmd),
    /// Index sequences
    #[command(subcommand)]
    Seq(SeqCmd),
    /// Gram matrices and spectra
    #[command(subcommand)]
    Gram(GramCmd),
    /// Riesz criteria
    #[command(subcommand)]
    Check(CheckCmd),
    /// Non-Riesz witness for Bohr sets
    #[command(subcommand)]
    Witness(WitnessCmd),
    /// Config-driven batch run
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct OutArgs {
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SetArg {
    /// e.g. "interval 0 1/2", "union (0 1/4) (1/2 3/4)", "cantor 3:1/32 stage=1"
    #[arg(long = "set", value_parser = parse_set)]
    pub set: SetDescriptor,
}

#[derive(Debug, Args)]
pub struct SeqArg {
    /// e.g. "periodic 4 0", "thue-morse", "bohr 0.41421356 0.05"
    #[arg(long = "seq", value_parser = parse_seq)]
    pub seq: SeqDescriptor,
}

#[derive(Debug, Args)]
pub struct WindowArg {
    #[arg(long, num_args = 2, value_names = ["LO", "HI"], allow_hyphen_values = true, default_values_t = [-64i64, 64])]
    pub window: Vec<i64>,
}

impl WindowArg {
    fn get(&self) -> Result<Window, CliError> {
        Window::new(self.window[0], self.window[1]).map_err(|e| CliError::Usage(e.to_string()))
    }
}

fn parse_set(s: &str) -> Result<SetDescriptor, String> {
    SetDescriptor::parse(s).map_err(|e| e.to_string())
}

fn parse_seq(s: &str) -> Result<SeqDescriptor, String> {
    SeqDescriptor::parse(s).map_err(|e| e.to_string())
}

fn parse_code(s: &str) -> Result<BlockCode, String> {
    let (m, table) = s.split_once(':').ok_or("expected M:TABLE")?;
    let m: usize = m.parse().map_err(|_| format!("bad radius {m:?}"))?;
    let bits = table
        .bytes()
        .map(|b| match b {
            b'0' => Ok(0),
            b'1' => Ok(1),
            _ => Err(format!("bad table {table:?}")),
        })
        .collect::<Result<Vec<u8>, String>>()?;
    BlockCode::new(m, bits).map_err(|e| e.to_string())
}

fn parse_rational_arg(s: &str) -> Result<riesz_lab::Rational, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum SetCmd {
    /// Canonical form, arcs and measure
    Describe {
        #[command(flatten)]
        set: SetArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Exact measure
    Measure {
        #[command(flatten)]
        set: SetArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Fourier coefficients for |k| <= kmax
    Fourier {
        #[command(flatten)]
        set: SetArg,
        #[arg(long, default_value_t = 8)]
        kmax: i64,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Subcommand)]
pub enum SeqCmd {
    /// 0/1 string on the window
    Generate {
        #[command(flatten)]
        seq: SeqArg,
        #[command(flatten)]
        window: WindowArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Beurling and asymptotic density estimates
    Densities {
        #[command(flatten)]
        seq: SeqArg,
        #[command(flatten)]
        window: WindowArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Gap bound, thick run and piecewise-syndetic run
    Syndetic {
        #[command(flatten)]
        seq: SeqArg,
        #[command(flatten)]
        window: WindowArg,
        #[arg(long, default_value_t = DEFAULT_GAP_BUDGET)]
        gap_budget: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Return times of the central word of radius m
    ApCheck {
        #[command(flatten)]
        seq: SeqArg,
        #[command(flatten)]
        window: WindowArg,
        #[arg(long, default_value_t = 2)]
        radius: usize,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Apply a sliding block code M:TABLE
    Blockcode {
        #[command(flatten)]
        seq: SeqArg,
        #[command(flatten)]
        window: WindowArg,
        #[arg(long, value_parser = parse_code)]
        code: BlockCode,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Reading {
    /// Gram sections of B(S, Λ)
    Gram,
    /// P_S + P_Λ
    Lambda,
    /// P_S + P_{Z∖Λ}
    Complement,
}

#[derive(Debug, Subcommand)]
pub enum GramCmd {
    /// Write the Gram matrix in dump format
    Assemble {
        #[command(flatten)]
        set: SetArg,
        #[command(flatten)]
        seq: SeqArg,
        #[command(flatten)]
        window: WindowArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Eigenvalues of the Gram matrix
    Spectrum {
        #[command(flatten)]
        set: SetArg,
        #[command(flatten)]
        seq: SeqArg,
        #[command(flatten)]
        window: WindowArg,
        #[command(flatten)]
        out: OutArgs,
    },
    /// λ_min over nested windows ending at --window
    Trend {
        #[command(flatten)]
        set: SetArg,
        #[command(flatten)]
        seq: SeqArg,
        #[command(flatten)]
        window: WindowArg,
        #[arg(long, default_value_t = TREND_STEPS)]
        steps: u32,
        #[arg(long, value_enum, default_value_t = Reading::Gram)]
        reading: Reading,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub set: SetArg,
    #[command(flatten)]
    pub seq: SeqArg,
    #[command(flatten)]
    pub window: WindowArg,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Subcommand)]
pub enum CheckCmd {
    /// Necessary density condition
    Landau(CheckArgs),
    /// Sufficient arc-length condition
    Mv(CheckArgs),
    /// Riesz basis test for an arithmetic progression
    Basis(CheckArgs),
    /// Split a syndetic set into translates
    Decompose {
        #[command(flatten)]
        set: SetArg,
        #[command(flatten)]
        seq: SeqArg,
        #[command(flatten)]
        window: WindowArg,
        #[arg(long, default_value_t = DEFAULT_GAP_BUDGET)]
        gap_budget: u64,
        #[command(flatten)]
        out: OutArgs,
    },
    /// Greedy Riesz subset with λ_min >= threshold
    Greedy {
        #[command(flatten)]
        set: SetArg,
        #[command(flatten)]
        window: WindowArg,
        #[arg(long)]
        threshold: f64,
        #[command(flatten)]
        out: OutArgs,
    },
}

#[derive(Debug, Args)]
pub struct WitnessArgs {
    #[command(flatten)]
    pub set: SetArg,
    #[arg(long, default_value_t = std::f64::consts::SQRT_2 - 1.0)]
    pub alpha: f64,
    #[arg(long, default_value_t = 0.05)]
    pub delta: f64,
    #[arg(long, default_value_t = 1 << 14)]
    pub grid: usize,
    #[arg(long, value_parser = parse_rational_arg, default_value = "1/512")]
    pub arc_length: riesz_lab::Rational,
    #[command(flatten)]
    pub out: OutArgs,
}

#[derive(Debug, Subcommand)]
pub enum WitnessCmd {
    /// One head size M
    Single {
        #[command(flatten)]
        args: WitnessArgs,
        #[arg(long, default_value_t = 10)]
        m: usize,
    },
    /// Several head sizes
    Sweep {
        #[command(flatten)]
        args: WitnessArgs,
        #[arg(long, value_delimiter = ',', default_values_t = [5usize, 10, 20, 40])]
        ms: Vec<usize>,
        #[arg(long, default_value_t = 0.2)]
        target: f64,
    },
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long)]
    pub config: PathBuf,
    /// Overrides the config value
    #[arg(long)]
    pub parallelism: Option<usize>,
    /// Overrides the config value
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Overrides the config value
    #[arg(long, value_parser = ["csv", "json"])]
    pub format: Option<String>,
    /// Fill the runtime_ms column (output is then no longer reproducible)
    #[arg(long)]
    pub timing: bool,
}

/// Key/value lines plus an optional table.
#[derive(Debug, Default)]
pub struct Output {
    pub fields: Vec<(String, String)>,
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Output {
    fn field(mut self, key: &str, value: impl ToString) -> Self {
        self.fields.push((key.to_string(), value.to_string()));
        self
    }

    fn num(self, key: &str, value: f64) -> Self {
        self.field(key, fmt_num(value))
    }

    fn table(mut self, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        self.header = header.iter().map(|s| s.to_string()).collect();
        self.rows = rows;
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => {
                let mut s = String::new();
                for (k, v) in &self.fields {
                    s.push_str(&format!("{k} = {v}\n"));
                }
                if !self.header.is_empty() {
                    s.push_str(&format!("# {}\n", self.header.join(" ")));
                    for r in &self.rows {
                        s.push_str(&r.join(" "));
                        s.push('\n');
                    }
                }
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                if self.header.is_empty() {
                    w.write_record(["key", "value"]).expect("in-memory write");
                    for (k, v) in &self.fields {
                        w.write_record([k, v]).expect("in-memory write");
                    }
                } else {
                    w.write_record(&self.header).expect("in-memory write");
                    for r in &self.rows {
                        w.write_record(r).expect("in-memory write");
                    }
                }
                String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
            }
            Format::Json => {
                let mut obj = serde_json::Map::new();
                for (k, v) in &self.fields {
                    obj.insert(k.clone(), v.clone().into());
                }
                if !self.header.is_empty() {
                    let rows: Vec<serde_json::Value> = self
                        .rows
                        .iter()
                        .map(|r| {
                            let m: serde_json::Map<String, serde_json::Value> = self
                                .header
                                .iter()
                                .cloned()
                                .zip(r.iter().map(|v| v.clone().into()))
                                .collect();
                            m.into()
                        })
                        .collect();
                    obj.insert("rows".into(), rows.into());
                }
                let mut s = serde_json::to_string_pretty(&obj).expect("json");
                s.push('\n');
                s
            }
        }
    }
}

fn emit(text: &str, out: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, text).map_err(io_err(path)),
        None => stdout.write_all(text.as_bytes()).map_err(io_err(Path::new("<stdout>"))),
    }
}

fn report_output(r: &CriterionReport) -> Output {
    let mut o = Output::default()
        .field("criterion", &r.criterion)
        .field("verdict", r.verdict);
    if let Some(m) = r.margin {
        o = o.num("margin", m);
    }
    for (k, v) in &r.params {
        let v = v.parse::<f64>().map(fmt_num).unwrap_or_else(|_| v.clone());
        o = o.field(k, v);
    }
    for n in &r.notes {
        o = o.field("note", n);
    }
    o
}

fn trend_output(t: &TrendReport) -> Output {
    let rows = t
        .reports
        .iter()
        .map(|r| {
            let w = r.provenance.window.expect("windowed report");
            vec![
                w.lo().to_string(),
                w.hi().to_string(),
                r.dim().to_string(),
                fmt_num(r.lambda_min),
                fmt_num(r.lambda_max),
            ]
        })
        .collect();
    Output::default()
        .field("classification", t.classification)
        .field("interlacing_ok", t.interlacing_ok)
        .table(&["window_lo", "window_hi", "dim", "lambda_min", "lambda_max"], rows)
}

fn witness_row(w: &WitnessResult) -> Vec<String> {
    vec![
        w.m.to_string(),
        w.arc.start().to_string(),
        w.arc.length().to_string(),
        fmt_num(w.ratio),
        fmt_num(w.alpha_tail),
        fmt_num(w.beta_head),
        w.stage.map(|s| s.to_string()).unwrap_or_default(),
        w.grid_resolution.to_string(),
    ]
}

const WITNESS_HEADER: [&str; 8] = [
    "M",
    "arc_start",
    "arc_length",
    "ratio",
    "alpha_tail",
    "beta_head",
    "stage",
    "grid_resolution",
];

fn stage_of(d: &SetDescriptor) -> Option<usize> {
    match d {
        SetDescriptor::Cantor { stage, .. } => Some(*stage),
        _ => None,
    }
}

fn build(set: &SetArg) -> Result<ArcUnion, CliError> {
    Ok(set.set.build()?)
}

fn members(seq: &SeqArg, window: &WindowArg) -> Result<IndexSet, CliError> {
    Ok(generate(seq.seq.generator(), window.get()?)?)
}

fn set_cmd(cmd: SetCmd) -> Result<(Output, OutArgs), CliError> {
    Ok(match cmd {
        SetCmd::Describe { set, out } => {
            let s = build(&set)?;
            let rows = s
                .arcs()
                .iter()
                .map(|a| vec![a.start().to_string(), a.end().to_string(), a.length().to_string()])
                .collect();
            let o = Output::default()
                .field("descriptor", &set.set)
                .field("arcs", s.arcs().len())
                .field("measure", s.measure())
                .field("longest_arc", s.longest_arc_length())
                .table(&["start", "end", "length"], rows);
            (o, out)
        }
        SetCmd::Measure { set, out } => {
            let s = build(&set)?;
            let o = Output::default()
                .field("measure", s.measure())
                .num("measure_f64", to_f64(s.measure()));
            (o, out)
        }
        SetCmd::Fourier { set, kmax, out } => {
            let s = build(&set)?;
            let rows = (-kmax.abs()..=kmax.abs())
                .map(|k| {
                    let c = s.fourier_coefficient(k);
                    vec![k.to_string(), fmt_num(c.re), fmt_num(c.im), fmt_num(c.norm())]
                })
                .collect();
            (Output::default().table(&["k", "re", "im", "abs"], rows), out)
        }
    })
}

fn seq_cmd(cmd: SeqCmd) -> Result<(Output, OutArgs), CliError> {
    Ok(match cmd {
        SeqCmd::Generate { seq, window, out } => {
            let l = members(&seq, &window)?;
            let o = Output::default()
                .field("bits", l.to_bit_string())
                .field("count", l.len());
            (o, out)
        }
        SeqCmd::Densities { seq, window, out } => {
            let d = densities(&members(&seq, &window)?)?;
            let o = Output::default()
                .num("beurling_lo", d.beurling_lo)
                .num("beurling_hi", d.beurling_hi)
                .num("asymptotic_lo", d.asymptotic_lo)
                .num("asymptotic_hi", d.asymptotic_hi)
                .field(
                    "separation",
                    d.separation.map_or("none".to_string(), |s| s.to_string()),
                )
                .field("beurling_k", d.beurling_k)
                .field("asymptotic_center", d.asymptotic_center)
                .field("asymptotic_k", format!("{}..{}", d.asymptotic_k.0, d.asymptotic_k.1));
            (o, out)
        }
        SeqCmd::Syndetic {
            seq,
            window,
            gap_budget,
            out,
        } => {
            let r = syndetic_report(&members(&seq, &window)?, gap_budget);
            let mut o = Output::default()
                .field("max_gap", r.max_gap)
                .field("gap_budget", r.gap_budget)
                .field("syndetic", r.syndetic)
                .field("thick_run", r.thick_run);
            o = match r.piecewise {
                Some(p) => o
                    .field("piecewise_gap", p.gap_bound)
                    .field("piecewise_run", format!("[{}, {}]", p.start, p.end)),
                None => o.field("piecewise_gap", "none"),
            };
            (o, out)
        }
        SeqCmd::ApCheck {
            seq,
            window,
            radius,
            out,
        } => {
            let r = almost_periodic_check(&members(&seq, &window)?, radius)?;
            let returns: Vec<String> = r.return_set.members().iter().map(|k| k.to_string()).collect();
            let o = Output::default()
                .field("radius", r.radius)
                .field("gap", r.gap)
                .field("shift_window", r.return_set.window())
                .field("returns", returns.join(","));
            (o, out)
        }
        SeqCmd::Blockcode {
            seq,
            window,
            code,
            out,
        } => {
            let coded = sliding_block_code(&members(&seq, &window)?, &code)?;
            let o = Output::default()
                .field("window", coded.window())
                .field("bits", coded.to_bit_string())
                .field("descriptor", SeqDescriptor(coded.generator().clone()));
            (o, out)
        }
    })
}

fn spectrum_output(set: &ArcUnion, l: &IndexSet) -> Result<Output, CliError> {
    let r = gram_spectrum(set, l)?;
    let rows = r.eigenvalues.iter().map(|v| vec![fmt_num(*v)]).collect();
    Ok(Output::default()
        .field("dim", r.dim())
        .num("lambda_min", r.lambda_min)
        .num("lambda_max", r.lambda_max)
        .num("epsilon1", r.epsilon1)
        .table(&["eigenvalue"], rows))
}

fn gram_cmd(cmd: GramCmd, stdout: &mut dyn Write) -> Result<Option<(Output, OutArgs)>, CliError> {
    Ok(Some(match cmd {
        GramCmd::Assemble {
            set,
            seq,
            window,
            out,
        } => {
            let g = gram_matrix(&build(&set)?, &members(&seq, &window)?)?;
            emit(&g.to_dump(), out.as_deref(), stdout)?;
            return Ok(None);
        }
        GramCmd::Spectrum {
            set,
            seq,
            window,
            out,
        } => (spectrum_output(&build(&set)?, &members(&seq, &window)?)?, out),
        GramCmd::Trend {
            set,
            seq,
            window,
            steps,
            reading,
            out,
        } => {
            let s = build(&set)?;
            let windows = nested_windows(window.get()?, steps.max(1));
            let th = TrendThresholds::default();
            let g = seq.seq.generator();
            let t = match reading {
                Reading::Gram => riesz_trend(&s, g, &windows, &th)?,
                Reading::Lambda => {
                    projection_sum_trend(&s, g, &windows, ProjectionReading::Lambda, &th)?
                }
                Reading::Complement => {
                    projection_sum_trend(&s, g, &windows, ProjectionReading::Complement, &th)?
                }
            };
            (trend_output(&t), out)
        }
    }))
}

fn check_cmd(cmd: CheckCmd) -> Result<(Output, OutArgs), CliError> {
    Ok(match cmd {
        CheckCmd::Landau(a) => {
            let r = landau_necessary(&build(&a.set)?, &members(&a.seq, &a.window)?)?;
            (report_output(&r), a.out)
        }
        CheckCmd::Mv(a) => {
            let r = montgomery_vaughan_sufficient(&build(&a.set)?, &members(&a.seq, &a.window)?)?;
            let mut o = report_output(&r);
            if let Some(m) = r.margin {
                o = o.num("epsilon1", m);
            }
            (o, a.out)
        }
        CheckCmd::Basis(a) => {
            let Generator::Periodic { period, offset } = *a.seq.seq.generator() else {
                return Err(CliError::Usage("basis needs --seq \"periodic N M\"".into()));
            };
            let r = arithmetic_riesz_basis(&build(&a.set)?, period, offset)?;
            (report_output(&r), a.out)
        }
        CheckCmd::Decompose {
            set,
            seq,
            window,
            gap_budget,
            out,
        } => {
            let s = build(&set)?;
            let d = syndetic_decomposition(&members(&seq, &window)?, gap_budget)?;
            let rows = d
                .translates
                .iter()
                .enumerate()
                .map(|(k, t)| {
                    let report = gram_spectrum(&s, t)?;
                    Ok(vec![
                        k.to_string(),
                        t.len().to_string(),
                        fmt_num(report.lambda_min),
                        fmt_num(report.lambda_max),
                    ])
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let o = Output::default()
                .field("gap", d.gap)
                .field("covers_window", d.covers_window)
                .table(&["shift", "count", "lambda_min", "lambda_max"], rows);
            (o, out)
        }
        CheckCmd::Greedy {
            set,
            window,
            threshold,
            out,
        } => {
            let sel = greedy_riesz_subset(&build(&set)?, window.get()?, threshold)?;
            let m: Vec<String> = sel.set.members().iter().map(|k| k.to_string()).collect();
            let o = Output::default()
                .num("threshold", sel.threshold)
                .num("lambda_min", sel.lambda_min)
                .num("density", sel.density)
                .field("count", sel.set.len())
                .field("members", m.join(","));
            (o, out)
        }
    })
}

fn witness_config(a: &WitnessArgs, m: usize) -> BohrWitnessConfig {
    BohrWitnessConfig {
        alpha: a.alpha,
        delta: a.delta,
        m,
        grid_resolution: a.grid,
        arc_length: a.arc_length,
    }
}

/// Returns the output and whether any row failed.
fn witness_cmd(cmd: WitnessCmd) -> Result<(Output, OutArgs, bool), CliError> {
    Ok(match cmd {
        WitnessCmd::Single { args, m } => {
            let s = build(&args.set)?;
            let w = witness_ratio(&s, &witness_config(&args, m))?.with_stage(stage_of(&args.set.set));
            let o = Output::default().table(&WITNESS_HEADER, vec![witness_row(&w)]);
            (o, args.out, false)
        }
        WitnessCmd::Sweep { args, ms, target } => {
            let s = build(&args.set)?;
            let base = witness_config(&args, ms.first().copied().unwrap_or(1));
            let sweep = witness_sweep(&s, &base, &ms, target)?;
            let stage = stage_of(&args.set.set);
            let mut failed = false;
            let rows = sweep
                .rows
                .iter()
                .map(|(m, r)| match r {
                    Ok(w) => witness_row(&w.clone().with_stage(stage)),
                    Err(e) => {
                        failed = true;
                        let mut row = vec![String::new(); WITNESS_HEADER.len()];
                        row[0] = m.to_string();
                        row[3] = format!("error: {e}");
                        row
                    }
                })
                .collect();
            let o = Output::default()
                .field("target", fmt_num(target))
                .field("min_ratio", sweep.min_ratio.map(fmt_num).unwrap_or("none".into()))
                .field("below_target", sweep.below_target)
                .table(&WITNESS_HEADER, rows);
            (o, args.out, failed)
        }
    })
}

fn sweep_cmd(a: SweepArgs, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let text = fs::read_to_string(&a.config).map_err(io_err(&a.config))?;
    let mut config = parse_config(&text)?;
    if let Some(p) = a.parallelism {
        if p == 0 {
            return Err(CliError::Usage("--parallelism must be positive".into()));
        }
        config.parallelism = p;
    }
    if let Some(out) = a.out {
        config.out = Some(out);
    }
    if let Some(f) = a.format {
        config.format = if f == "json" { OutputFormat::Json } else { OutputFormat::Csv };
    }
    let rows = run_sweep(&config, a.timing);
    let mut buf = Vec::new();
    match config.format {
        OutputFormat::Csv => write_csv(&rows, &mut buf),
        OutputFormat::Json => write_json(&rows, &mut buf),
    }
    .map_err(io_err(Path::new("<buffer>")))?;
    let text = String::from_utf8(buf).expect("utf8 report");
    emit(&text, config.out.as_deref(), stdout)?;
    Ok(if rows.iter().any(|r| r.is_error()) {
        EXIT_CELL_ERROR
    } else {
        EXIT_OK
    })
}

/// Run a parsed command, writing results to `stdout` or `--out`.
pub fn execute(cli: Cli, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let (output, out, failed) = match cli.command {
        Command::Set(c) => {
            let (o, a) = set_cmd(c)?;
            (o, a, false)
        }
        Command::Seq(c) => {
            let (o, a) = seq_cmd(c)?;
            (o, a, false)
        }
        Command::Gram(c) => match gram_cmd(c, stdout)? {
            Some((o, a)) => (o, a, false),
            None => return Ok(EXIT_OK),
        },
        Command::Check(c) => {
            let (o, a) = check_cmd(c)?;
            (o, a, false)
        }
        Command::Witness(c) => witness_cmd(c)?,
        Command::Sweep(a) => return sweep_cmd(a, stdout),
    };
    emit(&output.render(out.format), out.out.as_deref(), stdout)?;
    Ok(if failed { EXIT_CELL_ERROR } else { EXIT_OK })
}

/// Parse `args` and run; returns the process exit code.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            if e.use_stderr() {
                let _ = stderr.write_all(rendered.as_bytes());
            } else {
                let _ = stdout.write_all(rendered.as_bytes());
            }
            return code;
        }
    };
    match execute(cli, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}
