//! Verification suites and diagnostics over computed count tables.

mod asymptotic;
mod bounds;
mod hypotheses;

use std::fmt;

pub use asymptotic::{
    asymptotic_report, empirical_threshold, eventual_column_check, AsymptoticOptions,
};
pub use bounds::{bounds_check, orbit_check, stabilizer_check};
pub use hypotheses::{
    hypothesis_report, hypothesis_scan, ColumnComparison, Direction, FindingKind,
    HypothesisFinding, HypothesisScan,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Verdict {
    Pass,
    Fail,
    /// Informational; never counted as a failure.
    Diagnostic,
    /// The check could not run, typically after a resource refusal.
    Skipped,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Diagnostic => "diagnostic",
            Verdict::Skipped => "skipped",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReportItem {
    pub claim: String,
    pub params: String,
    pub expected: String,
    pub observed: String,
    pub verdict: Verdict,
}

impl ReportItem {
    /// Pass when `holds`, fail otherwise.
    pub fn check(
        claim: impl Into<String>,
        params: impl Into<String>,
        expected: impl Into<String>,
        observed: impl Into<String>,
        holds: bool,
    ) -> Self {
        ReportItem {
            claim: claim.into(),
            params: params.into(),
            expected: expected.into(),
            observed: observed.into(),
            verdict: if holds { Verdict::Pass } else { Verdict::Fail },
        }
    }

    /// Pass iff the rendered values are equal.
    pub fn equality(
        claim: impl Into<String>,
        params: impl Into<String>,
        expected: impl fmt::Display,
        observed: impl fmt::Display,
    ) -> Self {
        let (e, o) = (expected.to_string(), observed.to_string());
        let holds = e == o;
        Self::check(claim, params, e, o, holds)
    }

    pub fn diagnostic(
        claim: impl Into<String>,
        params: impl Into<String>,
        expected: impl Into<String>,
        observed: impl Into<String>,
    ) -> Self {
        ReportItem {
            claim: claim.into(),
            params: params.into(),
            expected: expected.into(),
            observed: observed.into(),
            verdict: Verdict::Diagnostic,
        }
    }

    pub fn with_params(mut self, params: impl Into<String>) -> Self {
        self.params = params.into();
        self
    }

    pub fn skipped(
        claim: impl Into<String>,
        params: impl Into<String>,
        reason: impl Into<String>,
    ) -> Self {
        ReportItem {
            claim: claim.into(),
            params: params.into(),
            expected: String::new(),
            observed: reason.into(),
            verdict: Verdict::Skipped,
        }
    }
}

impl fmt::Display for ReportItem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:<10} {} [{}]",
            self.verdict.as_str().to_uppercase(),
            self.claim,
            self.params
        )?;
        match self.verdict {
            Verdict::Skipped => write!(f, " {}", self.observed),
            _ if self.expected.is_empty() => write!(f, " observed={}", self.observed),
            _ => write!(f, " expected={} observed={}", self.expected, self.observed),
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub diagnostic: usize,
    pub skipped: usize,
}

impl fmt::Display for Summary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} passed, {} failed, {} diagnostic, {} skipped",
            self.pass, self.fail, self.diagnostic, self.skipped
        )
    }
}

/// Ordered list of check outcomes.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub items: Vec<ReportItem>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, item: ReportItem) {
        self.items.push(item);
    }

    pub fn summary(&self) -> Summary {
        let mut s = Summary::default();
        for item in &self.items {
            match item.verdict {
                Verdict::Pass => s.pass += 1,
                Verdict::Fail => s.fail += 1,
                Verdict::Diagnostic => s.diagnostic += 1,
                Verdict::Skipped => s.skipped += 1,
            }
        }
        s
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportItem> {
        self.items.iter().filter(|i| i.verdict == Verdict::Fail)
    }

    pub fn has_failures(&self) -> bool {
        self.failures().next().is_some()
    }

    pub fn with_verdict(&self, verdict: Verdict) -> impl Iterator<Item = &ReportItem> {
        self.items.iter().filter(move |i| i.verdict == verdict)
    }
}

impl Extend<ReportItem> for Report {
    fn extend<T: IntoIterator<Item = ReportItem>>(&mut self, iter: T) {
        self.items.extend(iter);
    }
}

impl FromIterator<ReportItem> for Report {
    fn from_iter<T: IntoIterator<Item = ReportItem>>(iter: T) -> Self {
        Report {
            items: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for item in &self.items {
            writeln!(f, "{item}")?;
        }
        write!(f, "{}", self.summary())
    }
}
