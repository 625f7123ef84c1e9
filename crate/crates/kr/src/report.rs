//! Check reports as text lines and as JSON.

use std::time::Instant;

use kr_core::builders::Builder;
use kr_core::cartan::AffineSpec;
use kr_core::verify::{run_check, CheckReport, Status, Suite};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportRecord {
    pub suite: String,
    pub family: String,
    pub n: usize,
    pub r: usize,
    pub s: usize,
    pub status: String,
    pub checked: usize,
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportDocument {
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
    pub reports: Vec<ReportRecord>,
}

fn status_name(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "fail",
        Status::Skipped => "skip",
    }
}

impl From<&CheckReport> for ReportRecord {
    fn from(r: &CheckReport) -> Self {
        ReportRecord {
            suite: r.suite.name().to_string(),
            family: r.spec.family.name().to_string(),
            n: r.spec.n,
            r: r.spec.r,
            s: r.spec.s,
            status: status_name(r.status).to_string(),
            checked: r.checked,
            witness: r.witness.clone(),
        }
    }
}

/// Runs every suite on every spec, timing each check (build time included
/// in the first suite of a spec).
pub fn run_timed(builder: &mut Builder, grid: &[AffineSpec], suites: &[Suite]) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for &spec in grid {
        let start = Instant::now();
        let build = builder.build(spec);
        let build_us = start.elapsed().as_micros() as u64;
        for (k, &suite) in suites.iter().enumerate() {
            let mut rep = match &build {
                Ok(b) => {
                    let t = Instant::now();
                    let mut rep = run_check(suite, b);
                    rep.micros = Some(t.elapsed().as_micros() as u64);
                    rep
                }
                Err(e) => CheckReport {
                    suite,
                    spec,
                    status: Status::Fail,
                    checked: 0,
                    witness: Some(format!("build failed: {e}")),
                    micros: Some(0),
                },
            };
            if k == 0 {
                rep.micros = rep.micros.map(|m| m + build_us);
            }
            out.push(rep);
        }
    }
    out
}

pub fn all_passed(reports: &[CheckReport]) -> bool {
    reports.iter().all(|r| r.passed())
}

/// One line per report without timings, so output is byte-stable.
pub fn to_text(reports: &[CheckReport]) -> String {
    let mut out = String::new();
    for r in reports {
        let mut r = r.clone();
        r.micros = None;
        out.push_str(&r.to_string());
        out.push('\n');
    }
    let doc = summarize(reports);
    out.push_str(&format!("{} passed, {} failed, {} skipped\n", doc.passed, doc.failed, doc.skipped));
    out
}

pub fn summarize(reports: &[CheckReport]) -> ReportDocument {
    let count = |s| reports.iter().filter(|r| r.status == s).count();
    ReportDocument {
        passed: count(Status::Pass),
        failed: count(Status::Fail),
        skipped: count(Status::Skipped),
        reports: reports.iter().map(ReportRecord::from).collect(),
    }
}

pub fn to_json(reports: &[CheckReport]) -> String {
    let mut s = serde_json::to_string_pretty(&summarize(reports)).expect("reports serialize");
    s.push('\n');
    s
}

pub fn total_micros(reports: &[CheckReport]) -> u64 {
    reports.iter().filter_map(|r| r.micros).sum()
}
