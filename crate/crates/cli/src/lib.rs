//! Named verification suites over `cremona-core`, with deterministic JSON and
//! markdown reports.

mod checks;
mod report;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{mpsc, Mutex};
use std::thread;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

pub use checks::{checks_for, Check};
pub use report::{CheckEntry, Summary};
pub use report::{markdown_report, report_body, report_json, write_report, ReportBody, ReportFormat};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Suite {
    Orders,
    Permutation,
    Characters,
    Invariants,
    Varieties,
    Fano,
    All,
}

impl Suite {
    pub const NAMES: [&'static str; 7] = ["orders", "permutation", "characters", "invariants", "varieties", "fano", "all"];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Orders => "orders",
            Suite::Permutation => "permutation",
            Suite::Characters => "characters",
            Suite::Invariants => "invariants",
            Suite::Varieties => "varieties",
            Suite::Fano => "fano",
            Suite::All => "all",
        }
    }

    /// The concrete suites `All` expands to, in report order.
    pub fn members(self) -> Vec<Suite> {
        match self {
            Suite::All => {
                vec![Suite::Orders, Suite::Permutation, Suite::Characters, Suite::Invariants, Suite::Varieties, Suite::Fano]
            }
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownSuite(pub String);

impl fmt::Display for UnknownSuite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown suite `{}` (expected one of: {})", self.0, Suite::NAMES.join(", "))
    }
}

impl std::error::Error for UnknownSuite {}

impl FromStr for Suite {
    type Err = UnknownSuite;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "orders" => Suite::Orders,
            "permutation" => Suite::Permutation,
            "characters" => Suite::Characters,
            "invariants" => Suite::Invariants,
            "varieties" => Suite::Varieties,
            "fano" => Suite::Fano,
            "all" => Suite::All,
            other => return Err(UnknownSuite(other.to_string())),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

/// Result of one check. A failing check's witness holds its inputs and the
/// observed and expected values.
#[derive(Clone, Debug, PartialEq)]
pub struct CheckResult {
    pub check_id: String,
    pub status: Status,
    pub witness: Value,
    pub paper_anchor: String,
    pub elapsed: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RunOptions {
    /// Wall-clock budget per check.
    pub budget: Duration,
    pub workers: usize,
    pub seed: u64,
}

impl Default for RunOptions {
    fn default() -> Self {
        RunOptions { budget: Duration::from_secs(600), workers: 1, seed: 0 }
    }
}

/// What a check body returns: pass/fail and the witness.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub pass: bool,
    pub witness: Value,
}

impl Outcome {
    /// Passes iff `observed == expected`; the witness records both.
    pub fn compare<T: Serialize + PartialEq>(inputs: Value, observed: T, expected: T) -> Outcome {
        let pass = observed == expected;
        Outcome { pass, witness: json!({ "inputs": inputs, "observed": observed, "expected": expected }) }
    }
}

fn run_one(check: &Check, opts: &RunOptions) -> CheckResult {
    let start = Instant::now();
    let (tx, rx) = mpsc::channel();
    let body = check.body;
    let seed = opts.seed;
    // A check that overruns its budget is reported and left detached.
    thread::spawn(move || {
        let _ = tx.send(body(seed));
    });
    let (status, witness) = match rx.recv_timeout(opts.budget) {
        Ok(Ok(o)) => (if o.pass { Status::Pass } else { Status::Fail }, o.witness),
        Ok(Err(e)) => (Status::Fail, json!({ "error": e })),
        Err(mpsc::RecvTimeoutError::Timeout) => {
            (Status::Fail, json!({ "error": "time budget exceeded", "budget_seconds": opts.budget.as_secs_f64() }))
        }
        Err(mpsc::RecvTimeoutError::Disconnected) => (Status::Fail, json!({ "error": "check panicked" })),
    };
    CheckResult {
        check_id: check.id.to_string(),
        status,
        witness,
        paper_anchor: check.anchor.to_string(),
        elapsed: start.elapsed(),
    }
}

/// Runs checks on up to `workers` threads; results keep the input order.
pub fn run_checks(checks: &[Check], opts: &RunOptions) -> Vec<CheckResult> {
    let next = AtomicUsize::new(0);
    let slots: Mutex<Vec<Option<CheckResult>>> = Mutex::new(vec![None; checks.len()]);
    thread::scope(|s| {
        for _ in 0..opts.workers.clamp(1, checks.len().max(1)) {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::SeqCst);
                let Some(check) = checks.get(i) else { break };
                let r = run_one(check, opts);
                slots.lock().expect("unpoisoned")[i] = Some(r);
            });
        }
    });
    slots.into_inner().expect("unpoisoned").into_iter().map(|r| r.expect("every check ran")).collect()
}

pub fn run_suite(suite: Suite, opts: &RunOptions) -> Vec<CheckResult> {
    run_checks(&checks_for(suite), opts)
}

/// Process exit code for a finished run: 0 if every check passed, else 1.
pub fn exit_code(results: &[CheckResult]) -> i32 {
    i32::from(results.iter().any(|r| r.status == Status::Fail))
}
