//! Report rows and their CSV / JSON encodings.

use std::io::Write;

use serde::Serialize;

/// First header cell; doubles as the schema version.
pub const SCHEMA: &str = "riesz-lab-v1";

pub const HEADER: [&str; 14] = [
    SCHEMA,
    "cell_id",
    "set",
    "seq",
    "window_lo",
    "window_hi",
    "criterion",
    "verdict",
    "value1",
    "value2",
    "value3",
    "value4",
    "notes",
    "runtime_ms",
];

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportRow {
    /// 1-based position in the sorted output.
    pub row: usize,
    pub cell_id: usize,
    pub set: String,
    pub seq: String,
    pub window_lo: i64,
    pub window_hi: i64,
    pub criterion: String,
    pub verdict: String,
    pub value1: String,
    pub value2: String,
    pub value3: String,
    pub value4: String,
    pub notes: String,
    pub runtime_ms: String,
}

impl ReportRow {
    pub fn is_error(&self) -> bool {
        self.verdict == "error"
    }

    fn record(&self) -> [String; 14] {
        [
            self.row.to_string(),
            self.cell_id.to_string(),
            self.set.clone(),
            self.seq.clone(),
            self.window_lo.to_string(),
            self.window_hi.to_string(),
            self.criterion.clone(),
            self.verdict.clone(),
            self.value1.clone(),
            self.value2.clone(),
            self.value3.clone(),
            self.value4.clone(),
            self.notes.clone(),
            self.runtime_ms.clone(),
        ]
    }
}

pub fn write_csv<W: Write>(rows: &[ReportRow], out: W) -> std::io::Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for row in rows {
        w.write_record(row.record())?;
    }
    w.flush()
}

pub fn write_json<W: Write>(rows: &[ReportRow], mut out: W) -> std::io::Result<()> {
    serde_json::to_writer_pretty(&mut out, rows)?;
    writeln!(out)
}

/// `%.12g`: twelve significant digits, trailing zeros trimmed.
pub fn fmt_num(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{x:.11e}");
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..12).contains(&exp) {
        let decimals = (11 - exp).max(0) as usize;
        trim_zeros(&format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim_zeros(mantissa))
    }
}

fn trim_zeros(s: &str) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s.to_string()
    }
}
