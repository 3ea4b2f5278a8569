use std::time::Instant;

use serde::Serialize;
use serde_json::{Map, Value};

use crate::algebra::Element;
use crate::error::Result;

/// A failing pair, printed in the expression grammar so it can be replayed
/// with `prop-rewriter equal`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub lhs: String,
    pub rhs: String,
}

/// One checked identity. `counterexample` is present exactly when the check
/// failed; `error` additionally carries an engine error, if one occurred.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckInstance {
    pub name: String,
    pub paper_ref: String,
    pub params: Map<String, Value>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

impl CheckInstance {
    /// Builds an instance from a verdict on the pair `(lhs, rhs)`.
    pub fn judge(
        name: &str,
        anchor: &str,
        params: Value,
        lhs: &Element,
        rhs: &Element,
        verdict: Result<bool>,
    ) -> CheckInstance {
        let params = match params {
            Value::Object(m) => m,
            other => {
                let mut m = Map::new();
                m.insert("value".into(), other);
                m
            }
        };
        let (passed, error) = match verdict {
            Ok(ok) => (ok, None),
            Err(e) => (false, Some(e.to_string())),
        };
        CheckInstance {
            name: name.to_string(),
            paper_ref: anchor.to_string(),
            params,
            passed,
            counterexample: (!passed).then(|| Counterexample {
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }),
            error,
        }
    }

    /// Like [`CheckInstance::judge`] for numeric comparisons; the
    /// counterexample carries the two values as JSON.
    pub fn judge_values(name: &str, anchor: &str, params: Value, lhs: &Value, rhs: &Value, passed: bool) -> CheckInstance {
        let mut c = CheckInstance::judge(name, anchor, params, &Element::zero(), &Element::zero(), Ok(passed));
        if let Some(cx) = c.counterexample.as_mut() {
            cx.lhs = lhs.to_string();
            cx.rhs = rhs.to_string();
        }
        c
    }
}

/// The outcome of one suite.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub suite: String,
    pub bounds: Value,
    pub checks: Vec<CheckInstance>,
    pub passed: bool,
    pub elapsed_ms: u64,
}

impl Report {
    pub fn new(suite: &str, bounds: Value, checks: Vec<CheckInstance>, started: Instant) -> Report {
        Report {
            suite: suite.to_string(),
            bounds,
            passed: checks.iter().all(|c| c.passed),
            checks,
            elapsed_ms: started.elapsed().as_millis() as u64,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckInstance> {
        self.checks.iter().filter(|c| !c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    /// One line per report: suite, pass flag, counts and time.
    pub fn summary(&self) -> String {
        let failed = self.failures().count();
        format!(
            "{}: {} ({} checks, {} failed, {} ms)",
            self.suite,
            if self.passed { "pass" } else { "FAIL" },
            self.checks.len(),
            failed,
            self.elapsed_ms
        )
    }
}

/// A single report as an object, several as an array.
pub fn reports_to_json(reports: &[Report]) -> String {
    match reports {
        [one] => one.to_json(),
        many => serde_json::to_string_pretty(many).expect("reports serialize"),
    }
}
