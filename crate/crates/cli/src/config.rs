//! Flat `key = value` sweep configuration.
//!
//! ```text
//! # one descriptor per line; repeat keys for lists
//! set = interval 0 1/2
//! seq = periodic 3 0
//! window = -99 99
//! criterion = landau, mv
//! parallelism = 4
//! ```

use std::collections::BTreeSet;
use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use riesz_lab::descriptor::parse_rational;
use riesz_lab::{parse_window, Rational, SeqDescriptor, SetDescriptor, Window};
use serde::Serialize;

pub const DEFAULT_CELL_CAP: usize = 10_000;
pub const CELL_CAP_ENV: &str = "RIESZ_LAB_CELL_CAP";
pub const DEFAULT_WINDOW: (i64, i64) = (-64, 64);

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Criterion {
    Landau,
    Mv,
    Basis,
    GramTrend,
    ProjectionSum,
    Witness,
}

impl Criterion {
    pub const ALL: [Criterion; 6] = [
        Criterion::Landau,
        Criterion::Mv,
        Criterion::Basis,
        Criterion::GramTrend,
        Criterion::ProjectionSum,
        Criterion::Witness,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Criterion::Landau => "landau",
            Criterion::Mv => "mv",
            Criterion::Basis => "basis",
            Criterion::GramTrend => "gram-trend",
            Criterion::ProjectionSum => "projection-sum",
            Criterion::Witness => "witness",
        }
    }
}

impl fmt::Display for Criterion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Criterion {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        Criterion::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| format!("unknown criterion {s:?}"))
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            _ => Err(format!("unknown format {s:?}, expected csv or json")),
        }
    }
}

/// Parameters for the `witness` criterion.
#[derive(Clone, Debug, PartialEq)]
pub struct WitnessParams {
    pub ms: Vec<usize>,
    pub grid: usize,
    pub arc_length: Rational,
    pub target: f64,
}

impl Default for WitnessParams {
    fn default() -> Self {
        WitnessParams {
            ms: vec![5, 10, 20, 40],
            grid: 1 << 14,
            arc_length: Rational::new(1, 512),
            target: 0.2,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SweepConfig {
    pub sets: Vec<SetDescriptor>,
    pub seqs: Vec<SeqDescriptor>,
    pub windows: Vec<Window>,
    pub criteria: Vec<Criterion>,
    pub out: Option<PathBuf>,
    pub format: OutputFormat,
    pub parallelism: usize,
    /// Cell ids to keep; `None` keeps every cell.
    pub select: Option<BTreeSet<usize>>,
    pub witness: WitnessParams,
}

/// One point of the descriptor × window grid.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Cell {
    pub id: usize,
    pub set: usize,
    pub seq: usize,
    pub window: Window,
}

impl SweepConfig {
    pub fn cell_count(&self) -> usize {
        self.sets.len() * self.seqs.len() * self.windows.len()
    }

    /// Cells in id order, after `select` filtering.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        let mut id = 0;
        for set in 0..self.sets.len() {
            for seq in 0..self.seqs.len() {
                for &window in &self.windows {
                    if self.select.as_ref().is_none_or(|s| s.contains(&id)) {
                        out.push(Cell {
                            id,
                            set,
                            seq,
                            window,
                        });
                    }
                    id += 1;
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ConfigError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("{}", validation_text(.line, .column, .message))]
    Validation {
        line: Option<usize>,
        column: Option<usize>,
        message: String,
    },
}

fn validation_text(line: &Option<usize>, column: &Option<usize>, message: &str) -> String {
    match (line, column) {
        (Some(l), Some(c)) => format!("invalid config at line {l}, column {c}: {message}"),
        (Some(l), None) => format!("invalid config at line {l}: {message}"),
        _ => format!("invalid config: {message}"),
    }
}

fn validation(line: usize, column: usize, message: impl Into<String>) -> ConfigError {
    ConfigError::Validation {
        line: Some(line),
        column: Some(column),
        message: message.into(),
    }
}

fn global(message: impl Into<String>) -> ConfigError {
    ConfigError::Validation {
        line: None,
        column: None,
        message: message.into(),
    }
}

/// Cell cap from the environment, falling back to the default.
pub fn cell_cap_from_env() -> usize {
    std::env::var(CELL_CAP_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_CELL_CAP)
}

pub fn parse_config(text: &str) -> Result<SweepConfig, ConfigError> {
    parse_config_with_cap(text, cell_cap_from_env())
}

/// Split a list value on commas, yielding each token with its 1-based column.
fn list_tokens(value: &str, value_col: usize) -> impl Iterator<Item = (&str, usize)> {
    let base = value.as_ptr() as usize;
    value.split(',').filter_map(move |tok| {
        let t = tok.trim();
        if t.is_empty() {
            return None;
        }
        Some((t, value_col + (t.as_ptr() as usize - base)))
    })
}

pub fn parse_config_with_cap(text: &str, cell_cap: usize) -> Result<SweepConfig, ConfigError> {
    let mut sets = Vec::new();
    let mut seqs = Vec::new();
    let mut windows = Vec::new();
    let mut criteria: Vec<Criterion> = Vec::new();
    let mut out = None;
    let mut format = None;
    let mut parallelism = None;
    let mut select: Option<BTreeSet<usize>> = None;
    let mut witness = WitnessParams::default();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        if content.trim().is_empty() {
            continue;
        }
        let indent = content.len() - content.trim_start().len();
        let Some(eq) = content.find('=') else {
            return Err(ConfigError::Parse {
                line,
                column: indent + 1,
                message: "expected key = value".into(),
            });
        };
        let key = content[..eq].trim();
        let value_raw = &content[eq + 1..];
        let value = value_raw.trim();
        let value_col = eq + 2 + (value_raw.len() - value_raw.trim_start().len());
        let parse_err = |message: String| ConfigError::Parse {
            line,
            column: value_col,
            message,
        };
        if value.is_empty() {
            return Err(parse_err(format!("missing value for {key:?}")));
        }
        match key {
            "set" => sets.push(SetDescriptor::parse(value).map_err(|e| parse_err(e.to_string()))?),
            "seq" => seqs.push(SeqDescriptor::parse(value).map_err(|e| parse_err(e.to_string()))?),
            "window" => windows.push(parse_window(value).map_err(|e| parse_err(e.to_string()))?),
            "criterion" => {
                for (tok, col) in list_tokens(value, value_col) {
                    let c: Criterion = tok.parse().map_err(|m: String| validation(line, col, m))?;
                    if !criteria.contains(&c) {
                        criteria.push(c);
                    }
                }
            }
            "out" => out = Some(PathBuf::from(value)),
            "format" => {
                format = Some(
                    value
                        .parse::<OutputFormat>()
                        .map_err(|m| validation(line, value_col, m))?,
                )
            }
            "parallelism" => {
                let n: usize = value
                    .parse()
                    .map_err(|_| parse_err(format!("parallelism must be an integer, got {value:?}")))?;
                if n == 0 {
                    return Err(validation(line, value_col, "parallelism must be positive"));
                }
                parallelism = Some(n);
            }
            "select" => {
                let ids = select.get_or_insert_with(BTreeSet::new);
                for (tok, col) in list_tokens(value, value_col) {
                    let id = tok.parse::<usize>().map_err(|_| ConfigError::Parse {
                        line,
                        column: col,
                        message: format!("cell id must be a non-negative integer, got {tok:?}"),
                    })?;
                    ids.insert(id);
                }
            }
            "witness_m" => {
                let mut ms = Vec::new();
                for (tok, col) in list_tokens(value, value_col) {
                    let m = tok.parse::<usize>().map_err(|_| ConfigError::Parse {
                        line,
                        column: col,
                        message: format!("witness M must be a positive integer, got {tok:?}"),
                    })?;
                    if m == 0 || ms.last().is_some_and(|&p| p >= m) {
                        return Err(validation(line, col, "witness M values must be positive and increasing"));
                    }
                    ms.push(m);
                }
                witness.ms = ms;
            }
            "grid" => {
                witness.grid = value
                    .parse()
                    .map_err(|_| parse_err(format!("grid must be an integer, got {value:?}")))?;
            }
            "arc_length" => {
                witness.arc_length = parse_rational(value).map_err(|e| parse_err(e.to_string()))?;
            }
            "witness_target" => {
                witness.target = value
                    .parse()
                    .map_err(|_| parse_err(format!("witness target must be a number, got {value:?}")))?;
            }
            _ => {
                return Err(ConfigError::Parse {
                    line,
                    column: indent + 1,
                    message: format!("unknown key {key:?}"),
                })
            }
        }
    }

    if sets.is_empty() || seqs.is_empty() {
        return Err(global("no cells: need at least one set and one seq"));
    }
    if windows.is_empty() {
        windows.push(Window::new(DEFAULT_WINDOW.0, DEFAULT_WINDOW.1).expect("default window"));
    }
    if criteria.is_empty() {
        return Err(global("no criterion given"));
    }
    let config = SweepConfig {
        sets,
        seqs,
        windows,
        criteria,
        out,
        format: format.unwrap_or_default(),
        parallelism: parallelism.unwrap_or(1),
        select,
        witness,
    };
    if config.cell_count() > cell_cap {
        return Err(global(format!(
            "{} cells exceed the cell cap of {cell_cap} (set {CELL_CAP_ENV} to raise it)",
            config.cell_count()
        )));
    }
    Ok(config)
}
