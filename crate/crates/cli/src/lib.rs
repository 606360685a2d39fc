//! Command-line front end for `riesz_lab`: descriptor parsing, config-driven
//! sweeps and CSV / JSON reports.

pub mod app;
pub mod config;
pub mod report;
pub mod sweep;

pub use app::{run, Cli};
pub use config::{parse_config, ConfigError, SweepConfig};
pub use report::{ReportRow, HEADER};
pub use sweep::run_sweep;
