//! Report records and their JSON/TSV renderings.

use serde::Serialize;
use serde_json::Value;

use crate::cache::CacheStats;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "REPORT-ONLY")]
    ReportOnly,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::ReportOnly => "REPORT-ONLY",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Record {
    /// The mathematical statement the check is tied to.
    pub anchor: String,
    pub check: String,
    pub inputs: Value,
    pub values: Value,
    pub verdict: Verdict,
}

impl Record {
    pub fn new(anchor: &str, check: impl Into<String>, inputs: Value, values: Value, verdict: Verdict) -> Self {
        Self { anchor: anchor.into(), check: check.into(), inputs, values, verdict }
    }
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub report_only: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportBody {
    pub schema_version: u32,
    pub suite: String,
    pub root_type: String,
    pub config: Value,
    pub records: Vec<Record>,
    pub summary: Summary,
}

impl ReportBody {
    pub fn new(suite: &str, root_type: &str, config: Value, records: Vec<Record>) -> Self {
        let mut summary = Summary::default();
        for r in &records {
            match r.verdict {
                Verdict::Pass => summary.pass += 1,
                Verdict::Fail => summary.fail += 1,
                Verdict::ReportOnly => summary.report_only += 1,
            }
        }
        Self {
            schema_version: SCHEMA_VERSION,
            suite: suite.into(),
            root_type: root_type.into(),
            config,
            records,
            summary,
        }
    }
}

/// A report body plus the run-dependent parts, which are kept outside the
/// body so that bodies are reproducible.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub body: ReportBody,
    pub timing_ms: u64,
    pub cache: CacheStats,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.body.summary.fail == 0
    }

    /// 0 when no record failed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        i32::from(!self.passed())
    }

    pub fn body_json(&self) -> String {
        serde_json::to_string_pretty(&self.body).expect("report serializes")
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// One line per record; census suites append their tables as extra rows.
    pub fn to_tsv(&self) -> String {
        let mut out = String::from("anchor\tcheck\tverdict\tinputs\tvalues\n");
        for r in &self.body.records {
            out.push_str(&format!("{}\t{}\t{}\t{}\t{}\n", r.anchor, r.check, r.verdict.as_str(), r.inputs, r.values));
        }
        out
    }

    pub fn records_with<'a>(&'a self, anchor: &'a str) -> impl Iterator<Item = &'a Record> + 'a {
        self.body.records.iter().filter(move |r| r.anchor == anchor)
    }
}
