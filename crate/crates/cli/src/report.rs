//! Report rendering. The body is a pure function of the check results
//! minus timings; timings live in a separate metadata block.

use std::fmt::Write as _;
use std::path::Path;

use serde::Serialize;
use serde_json::{json, Value};

use super::{CheckResult, RunOptions, Status, Suite};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Markdown,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckEntry {
    pub check_id: String,
    pub status: Status,
    pub paper_anchor: String,
    pub witness: Value,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportBody {
    pub suite: String,
    pub seed: u64,
    pub summary: Summary,
    pub checks: Vec<CheckEntry>,
}

pub fn report_body(suite: Suite, opts: &RunOptions, results: &[CheckResult]) -> ReportBody {
    let count = |s: Status| results.iter().filter(|r| r.status == s).count();
    ReportBody {
        suite: suite.name().to_string(),
        seed: opts.seed,
        summary: Summary {
            total: results.len(),
            passed: count(Status::Pass),
            failed: count(Status::Fail),
            skipped: count(Status::Skipped),
        },
        checks: results
            .iter()
            .map(|r| CheckEntry {
                check_id: r.check_id.clone(),
                status: r.status,
                paper_anchor: r.paper_anchor.clone(),
                witness: r.witness.clone(),
            })
            .collect(),
    }
}

fn metadata(opts: &RunOptions, results: &[CheckResult]) -> Value {
    let elapsed: serde_json::Map<String, Value> =
        results.iter().map(|r| (r.check_id.clone(), json!(r.elapsed.as_secs_f64() * 1e3))).collect();
    json!({
        "elapsed_ms": elapsed,
        "total_elapsed_ms": results.iter().map(|r| r.elapsed.as_secs_f64() * 1e3).sum::<f64>(),
        "workers": opts.workers,
        "budget_seconds": opts.budget.as_secs_f64(),
        "version": env!("CARGO_PKG_VERSION"),
    })
}

/// `{"body": ..., "metadata": ...}`, pretty-printed with sorted keys.
pub fn report_json(suite: Suite, opts: &RunOptions, results: &[CheckResult]) -> String {
    let doc = json!({ "body": report_body(suite, opts, results), "metadata": metadata(opts, results) });
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable");
    s.push('\n');
    s
}

fn slug(id: &str) -> String {
    id.chars().map(|c| if c.is_ascii_alphanumeric() { c.to_ascii_lowercase() } else { '-' }).collect()
}

pub fn markdown_report(suite: Suite, opts: &RunOptions, results: &[CheckResult]) -> String {
    let body = report_body(suite, opts, results);
    let mut s = String::new();
    let _ = writeln!(s, "# Verification report: {}\n", body.suite);
    let _ = writeln!(
        s,
        "Seed {}. {} checks: {} passed, {} failed, {} skipped.\n",
        body.seed, body.summary.total, body.summary.passed, body.summary.failed, body.summary.skipped
    );
    if !body.checks.is_empty() {
        s.push_str("| check | status | anchor |\n|---|---|---|\n");
        for c in &body.checks {
            let _ = writeln!(s, "| `{}` | {} | [{}](#{}) |", c.check_id, c.status, c.paper_anchor, slug(&c.check_id));
        }
        s.push_str("\n## Witnesses\n");
        for c in &body.checks {
            let witness = serde_json::to_string_pretty(&c.witness).expect("serializable");
            let _ = writeln!(s, "\n### {}\n\nAnchor: {}\n\n```json\n{}\n```", c.check_id, c.paper_anchor, witness);
        }
    }
    s.push_str("\n## Metadata\n\n");
    let _ = writeln!(s, "Workers {}, budget {} s per check.\n", opts.workers, opts.budget.as_secs_f64());
    if !results.is_empty() {
        s.push_str("| check | elapsed (ms) |\n|---|---|\n");
        for r in results {
            let _ = writeln!(s, "| `{}` | {:.1} |", r.check_id, r.elapsed.as_secs_f64() * 1e3);
        }
    }
    s
}

pub fn write_report(
    path: &Path,
    format: ReportFormat,
    suite: Suite,
    opts: &RunOptions,
    results: &[CheckResult],
) -> std::io::Result<()> {
    let text = match format {
        ReportFormat::Json => report_json(suite, opts, results),
        ReportFormat::Markdown => markdown_report(suite, opts, results),
    };
    std::fs::write(path, text)
}
