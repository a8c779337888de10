//! Certification reports: per-step records, overall verdict
//! aggregation, JSON serialization and a human-readable text rendering.
//!
//! A report is self-contained: every step carries its certificate text
//! (exact rationals as strings) and decimal previews, so a verdict can
//! be re-checked without rerunning the suites.

use serde::{Deserialize, Serialize};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Certified,
    Falsified,
    Indeterminate,
}

impl Verdict {
    /// Process exit code: 0 certified, 1 falsified, 2 indeterminate.
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Certified => 0,
            Verdict::Falsified => 1,
            Verdict::Indeterminate => 2,
        }
    }

    /// Aggregation: any falsified step falsifies the run; otherwise any
    /// indeterminate step leaves the run indeterminate.
    pub fn combine(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Falsified, _) | (_, Falsified) => Falsified,
            (Indeterminate, _) | (_, Indeterminate) => Indeterminate,
            _ => Certified,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Verdict::Certified => "certified",
            Verdict::Falsified => "falsified",
            Verdict::Indeterminate => "indeterminate",
        };
        write!(f, "{s}")
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct StepRecord {
    /// Stable machine identifier, e.g. "sign_list_p".
    pub id: String,
    /// Human description of what the step establishes.
    pub anchor: String,
    pub verdict: Verdict,
    /// Self-contained evidence: exact rationals, sign lists, counts.
    pub certificate: String,
    /// Decimal previews (10 significant digits) for visual comparison.
    pub decimals: Vec<String>,
    /// Elapsed wall time in milliseconds.
    pub ms: u128,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub suite: String,
    pub verdict: Verdict,
    pub steps: Vec<StepRecord>,
}

impl Report {
    pub fn new(suite: &str) -> Self {
        Report {
            suite: suite.to_string(),
            verdict: Verdict::Certified,
            steps: Vec::new(),
        }
    }

    pub fn push(&mut self, step: StepRecord) {
        self.verdict = self.verdict.combine(step.verdict);
        self.steps.push(step);
    }

    pub fn merge(&mut self, other: Report) {
        for s in other.steps {
            self.push(s);
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    /// Human-readable rendering, one block per step.
    pub fn render_text(&self) -> String {
        let mut out = format!("suite: {}\nverdict: {}\n\n", self.suite, self.verdict);
        for s in &self.steps {
            out.push_str(&format!(
                "[{}] {} ({} ms)\n  {}\n  {}\n",
                s.verdict, s.id, s.ms, s.anchor, s.certificate
            ));
            for d in &s.decimals {
                out.push_str(&format!("  ~ {d}\n"));
            }
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn step(id: &str, v: Verdict) -> StepRecord {
        StepRecord {
            id: id.into(),
            anchor: "test".into(),
            verdict: v,
            certificate: "ok".into(),
            decimals: vec![],
            ms: 1,
        }
    }

    #[test]
    fn verdict_aggregation() {
        use Verdict::*;
        assert_eq!(Certified.combine(Certified), Certified);
        assert_eq!(Certified.combine(Indeterminate), Indeterminate);
        assert_eq!(Indeterminate.combine(Falsified), Falsified);
        assert_eq!(Certified.exit_code(), 0);
        assert_eq!(Falsified.exit_code(), 1);
        assert_eq!(Indeterminate.exit_code(), 2);
    }

    #[test]
    fn report_roundtrip_and_verdict() {
        let mut r = Report::new("demo");
        r.push(step("a", Verdict::Certified));
        r.push(step("b", Verdict::Indeterminate));
        assert_eq!(r.verdict, Verdict::Indeterminate);
        let json = r.to_json();
        let back = Report::from_json(&json).unwrap();
        assert_eq!(back.steps.len(), 2);
        assert_eq!(back.verdict, Verdict::Indeterminate);
        assert!(r.render_text().contains("[indeterminate] b"));
    }
}
