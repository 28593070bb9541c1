//! Command reports: a verdict plus named checks, rendered as `key=value`
//! lines or JSON.

use std::fmt::Write as _;

use serde::Serialize;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Detail {
    pub name: String,
    /// `pass`, `fail`, or a value.
    pub status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Report {
    pub command: String,
    /// `pass`, `fail`, or the computed value (for example `true`).
    pub verdict: String,
    pub passed: bool,
    pub details: Vec<Detail>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            verdict: String::new(),
            passed: true,
            details: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn value(&mut self, name: impl Into<String>, value: impl ToString) {
        self.details.push(Detail {
            name: name.into(),
            status: value.to_string(),
            witness: None,
        });
    }

    /// Records a check; a failing check needs a witness and fails the report.
    pub fn check(&mut self, name: impl Into<String>, ok: bool, witness: impl FnOnce() -> String) {
        self.passed &= ok;
        self.details.push(Detail {
            name: name.into(),
            status: if ok { "pass" } else { "fail" }.to_string(),
            witness: (!ok).then(witness),
        });
    }

    /// Sets `verdict` to `pass`/`fail` from the recorded checks.
    pub fn finish(mut self) -> Self {
        self.verdict = if self.passed { "pass" } else { "fail" }.to_string();
        self
    }

    pub fn with_verdict(mut self, verdict: impl ToString) -> Self {
        self.verdict = verdict.to_string();
        self
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command={}", self.command).unwrap();
        writeln!(out, "verdict={}", self.verdict).unwrap();
        for d in &self.details {
            match &d.witness {
                Some(w) => writeln!(out, "{}={} witness={}", d.name, d.status, w).unwrap(),
                None => writeln!(out, "{}={}", d.name, d.status).unwrap(),
            }
        }
        if let Some(ms) = self.timing_ms {
            writeln!(out, "timing_ms={ms}").unwrap();
        }
        out
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_and_json() {
        let mut r = Report::new("validate");
        r.value("order", 3);
        r.check("associative", false, || "(a,b,c)".into());
        let r = r.finish();
        assert!(!r.passed);
        assert_eq!(
            r.to_text(),
            "command=validate\nverdict=fail\norder=3\nassociative=fail witness=(a,b,c)\n"
        );
        let v: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(v["details"][1]["witness"], "(a,b,c)");
        assert!(v.get("timing_ms").is_none());
    }
}
