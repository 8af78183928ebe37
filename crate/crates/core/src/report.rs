//! Machine-readable check reports.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::Result;

pub const REPORT_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub check_id: String,
    pub n: Option<usize>,
    pub status: CheckStatus,
    pub expected: Value,
    pub actual: Value,
    pub runtime_ms: u64,
    pub details: String,
}

impl CheckReport {
    /// Pass exactly when `expected` and `actual` are equal as JSON values.
    pub fn compare(
        check_id: impl Into<String>,
        n: Option<usize>,
        expected: Value,
        actual: Value,
        details: impl Into<String>,
    ) -> Self {
        let status = if expected == actual {
            CheckStatus::Pass
        } else {
            CheckStatus::Fail
        };
        Self {
            check_id: check_id.into(),
            n,
            status,
            expected,
            actual,
            runtime_ms: 0,
            details: details.into(),
        }
    }

    pub fn error(
        check_id: impl Into<String>,
        n: Option<usize>,
        expected: Value,
        message: String,
    ) -> Self {
        Self {
            check_id: check_id.into(),
            n,
            status: CheckStatus::Error,
            expected,
            actual: Value::Null,
            runtime_ms: 0,
            details: message,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == CheckStatus::Pass
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub version: String,
    pub suite: String,
    pub checks: Vec<CheckReport>,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, checks: Vec<CheckReport>) -> Self {
        Self {
            version: REPORT_VERSION.to_string(),
            suite: suite.into(),
            checks,
        }
    }

    /// Every non-skipped check passed.
    pub fn all_passed(&self) -> bool {
        self.checks
            .iter()
            .all(|c| matches!(c.status, CheckStatus::Pass | CheckStatus::Skipped))
    }

    pub fn has_errors(&self) -> bool {
        self.checks.iter().any(|c| c.status == CheckStatus::Error)
    }

    pub fn find(&self, check_id: &str, n: Option<usize>) -> Option<&CheckReport> {
        self.checks
            .iter()
            .find(|c| c.check_id == check_id && c.n == n)
    }

    /// Copy with every `runtime_ms` zeroed, for byte-level comparisons.
    pub fn without_timings(&self) -> Self {
        let mut out = self.clone();
        out.checks.iter_mut().for_each(|c| c.runtime_ms = 0);
        out
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

pub(crate) fn json<T: Serialize>(value: T) -> Value {
    serde_json::to_value(value).expect("report values serialize")
}

/// Accumulates reports, timing each check.
#[derive(Default)]
pub(crate) struct Checks {
    pub(crate) out: Vec<CheckReport>,
}

impl Checks {
    pub(crate) fn run<E: Serialize, A: Serialize>(
        &mut self,
        id: &str,
        n: Option<usize>,
        expected: E,
        f: impl FnOnce() -> Result<(A, String)>,
    ) {
        let start = Instant::now();
        let outcome = f();
        let ms = start.elapsed().as_millis() as u64;
        let expected = json(expected);
        let mut report = match outcome {
            Ok((actual, details)) => CheckReport::compare(id, n, expected, json(actual), details),
            Err(e) => CheckReport::error(id, n, expected, e.to_string()),
        };
        report.runtime_ms = ms;
        self.out.push(report);
    }

    pub(crate) fn push(&mut self, mut report: CheckReport, ms: u64) {
        report.runtime_ms = ms;
        self.out.push(report);
    }
}
