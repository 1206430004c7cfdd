//! Verification runner: suites, reports and the table cache.

pub mod cache;
pub mod config;
pub mod report;
pub mod suites;

use std::time::Instant;

pub use config::{Format, PointSpec, RunConfig, Suite};
pub use report::{Record, Report, ReportBody, Verdict};

/// Runs one suite. Errors are configuration or I/O problems; failed checks
/// are reported as `FAIL` records instead.
pub fn run_suite(cfg: &RunConfig) -> hecke_core::Result<Report> {
    cfg.validate()?;
    let start = Instant::now();
    let mut stats = cache::CacheStats::default();
    let records = suites::run(cfg, &mut stats)?;
    let body = ReportBody::new(cfg.suite.name(), &cfg.root_type.to_string(), cfg.to_json(), records);
    Ok(Report { body, timing_ms: start.elapsed().as_millis() as u64, cache: stats })
}
