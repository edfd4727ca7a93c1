use std::fmt::Write as _;

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    PaperAsserted,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::PaperAsserted => "paper-asserted",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub id: String,
    pub citation: String,
    pub status: Status,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Report {
    pub suite: String,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report {
            suite: suite.into(),
            checks: Vec::new(),
        }
    }

    /// Records `expected` against `actual`; equal strings pass.
    pub fn compare(
        &mut self,
        id: impl Into<String>,
        citation: &str,
        expected: impl ToString,
        actual: impl ToString,
    ) {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let status = if expected == actual {
            Status::Pass
        } else {
            Status::Fail
        };
        self.push(id, citation, status, expected, actual);
    }

    pub fn push(
        &mut self,
        id: impl Into<String>,
        citation: &str,
        status: Status,
        expected: String,
        actual: String,
    ) {
        self.checks.push(Check {
            id: id.into(),
            citation: citation.into(),
            status,
            expected,
            actual,
        });
    }

    /// A check whose computation failed outright.
    pub fn error(
        &mut self,
        id: impl Into<String>,
        citation: &str,
        expected: impl ToString,
        err: impl ToString,
    ) {
        self.push(
            id,
            citation,
            Status::Fail,
            expected.to_string(),
            format!("error: {}", err.to_string()),
        );
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn count(&self, s: Status) -> usize {
        self.checks.iter().filter(|c| c.status == s).count()
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.checks {
            let _ = write!(out, "{:<15} {}  ({})", c.status.as_str(), c.id, c.citation);
            if c.status == Status::Pass {
                let _ = writeln!(out, "  = {}", c.actual);
            } else {
                let _ = writeln!(
                    out,
                    "\n    expected: {}\n    actual:   {}",
                    c.expected, c.actual
                );
            }
        }
        let _ = writeln!(
            out,
            "{}: {} checks, {} pass, {} fail, {} paper-asserted",
            self.suite,
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::PaperAsserted)
        );
        out
    }
}
