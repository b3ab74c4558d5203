use std::fmt::Display;

use serde::Serialize;

/// Failures kept per report; further failures are only counted.
pub const FAILURE_CAP: usize = 100;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub params: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub suite: String,
    pub grid: String,
    pub cases: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    pub passed: bool,
}

impl VerificationReport {
    /// Combines shards of the same suite. Failures are ordered by their
    /// parameter string so the result does not depend on shard order.
    pub fn merge(
        suite: &str,
        grid: &str,
        shards: impl IntoIterator<Item = VerificationReport>,
    ) -> Self {
        let mut cases = 0;
        let mut failure_count = 0;
        let mut failures = Vec::new();
        for shard in shards {
            cases += shard.cases;
            failure_count += shard.failure_count;
            failures.extend(shard.failures);
        }
        failures.sort_by(|a, b| a.params.cmp(&b.params));
        failures.truncate(FAILURE_CAP);
        Self {
            suite: suite.to_string(),
            grid: grid.to_string(),
            cases,
            failure_count,
            passed: failure_count == 0,
            failures,
        }
    }

    /// Number of failures dropped beyond [`FAILURE_CAP`].
    pub fn truncated(&self) -> u64 {
        self.failure_count - self.failures.len() as u64
    }
}

#[derive(Debug)]
pub struct ReportBuilder {
    suite: String,
    grid: String,
    cases: u64,
    failure_count: u64,
    failures: Vec<Failure>,
}

impl ReportBuilder {
    pub fn new(suite: impl Into<String>, grid: impl Into<String>) -> Self {
        Self {
            suite: suite.into(),
            grid: grid.into(),
            cases: 0,
            failure_count: 0,
            failures: Vec::new(),
        }
    }

    /// Records one case; `params` is only rendered on failure.
    pub fn check<T, P>(&mut self, params: impl FnOnce() -> P, expected: &T, actual: &T) -> bool
    where
        T: PartialEq + Display + ?Sized,
        P: Display,
    {
        self.cases += 1;
        if expected == actual {
            return true;
        }
        self.failure_count += 1;
        if self.failures.len() < FAILURE_CAP {
            self.failures.push(Failure {
                params: params().to_string(),
                expected: expected.to_string(),
                actual: actual.to_string(),
            });
        }
        false
    }

    pub fn finish(self) -> VerificationReport {
        VerificationReport {
            passed: self.failure_count == 0,
            suite: self.suite,
            grid: self.grid,
            cases: self.cases,
            failure_count: self.failure_count,
            failures: self.failures,
        }
    }
}
