//! Pass/fail records for individual claims.

use std::time::Instant;

use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        }
    }

    pub fn parse(s: &str) -> Option<Status> {
        match s {
            "pass" => Some(Status::Pass),
            "fail" => Some(Status::Fail),
            "skipped" => Some(Status::Skipped),
            _ => None,
        }
    }
}

/// One checked claim.
#[derive(Debug, Clone, PartialEq)]
pub struct ReportEntry {
    pub claim_id: String,
    pub status: Status,
    /// Counterexample data; always present on failure.
    pub witness: Option<Value>,
    /// Informational payload that is not a counterexample (dimensions, which convention held).
    pub detail: Option<Value>,
    pub timing_ms: u64,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VerificationReport {
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn pass(&mut self, claim_id: impl Into<String>) {
        self.record(claim_id, None, None, 0);
    }

    pub fn fail(&mut self, claim_id: impl Into<String>, witness: Value) {
        self.record(claim_id, Some(witness), None, 0);
    }

    pub fn skip(&mut self, claim_id: impl Into<String>, reason: &str) {
        self.entries.push(ReportEntry {
            claim_id: claim_id.into(),
            status: Status::Skipped,
            witness: None,
            detail: Some(json!({ "reason": reason })),
            timing_ms: 0,
        });
    }

    /// Records pass when `witness` is `None`, fail otherwise.
    pub fn record(
        &mut self,
        claim_id: impl Into<String>,
        witness: Option<Value>,
        detail: Option<Value>,
        timing_ms: u64,
    ) {
        let status = if witness.is_some() { Status::Fail } else { Status::Pass };
        self.entries.push(ReportEntry { claim_id: claim_id.into(), status, witness, detail, timing_ms });
    }

    /// Runs `f`, timing it; `f` returns a witness on failure.
    pub fn check<F>(&mut self, claim_id: impl Into<String>, f: F)
    where
        F: FnOnce() -> Option<Value>,
    {
        let start = Instant::now();
        let witness = f();
        let ms = start.elapsed().as_millis() as u64;
        self.record(claim_id, witness, None, ms);
    }

    pub fn check_with_detail<F>(&mut self, claim_id: impl Into<String>, f: F)
    where
        F: FnOnce() -> (Option<Value>, Value),
    {
        let start = Instant::now();
        let (witness, detail) = f();
        let ms = start.elapsed().as_millis() as u64;
        self.record(claim_id, witness, Some(detail), ms);
    }

    pub fn extend(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }

    /// Appends `other` with every claim id prefixed by `prefix/`.
    pub fn extend_prefixed(&mut self, prefix: &str, other: VerificationReport) {
        for mut e in other.entries {
            e.claim_id = format!("{}/{}", prefix, e.claim_id);
            self.entries.push(e);
        }
    }

    pub fn all_passed(&self) -> bool {
        self.entries.iter().all(|e| e.status != Status::Fail)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn get(&self, claim_id: &str) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.claim_id == claim_id)
    }

    pub fn status_of(&self, claim_id: &str) -> Option<Status> {
        self.get(claim_id).map(|e| e.status)
    }

    /// Sorts entries by claim id (stable) and reports duplicated ids.
    pub fn finalize(&mut self) -> Vec<String> {
        self.entries.sort_by(|a, b| a.claim_id.cmp(&b.claim_id));
        let mut dups = Vec::new();
        for w in self.entries.windows(2) {
            if w[0].claim_id == w[1].claim_id {
                dups.push(w[0].claim_id.clone());
            }
        }
        dups.dedup();
        dups
    }

    pub fn to_json(&self, with_timing: bool) -> Value {
        Value::Array(self.entries.iter().map(|e| entry_json(e, with_timing)).collect())
    }

    pub fn from_json(v: &Value) -> Option<VerificationReport> {
        let mut out = VerificationReport::new();
        for e in v.as_array()? {
            out.entries.push(ReportEntry {
                claim_id: e.get("claim_id")?.as_str()?.to_string(),
                status: Status::parse(e.get("status")?.as_str()?)?,
                witness: e.get("witness").cloned(),
                detail: e.get("detail").cloned(),
                timing_ms: e.get("timing_ms").and_then(|t| t.as_u64()).unwrap_or(0),
            });
        }
        Some(out)
    }

    pub fn summary_line(&self) -> String {
        let count = |s| self.entries.iter().filter(|e| e.status == s).count();
        format!(
            "{} claims: {} pass, {} fail, {} skipped",
            self.entries.len(),
            count(Status::Pass),
            count(Status::Fail),
            count(Status::Skipped)
        )
    }
}

fn entry_json(e: &ReportEntry, with_timing: bool) -> Value {
    let mut m = serde_json::Map::new();
    m.insert("claim_id".into(), json!(e.claim_id));
    m.insert("status".into(), json!(e.status.as_str()));
    if let Some(w) = &e.witness {
        m.insert("witness".into(), w.clone());
    }
    if let Some(d) = &e.detail {
        m.insert("detail".into(), d.clone());
    }
    if with_timing {
        m.insert("timing_ms".into(), json!(e.timing_ms));
    }
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failures_carry_witness() {
        let mut r = VerificationReport::new();
        r.pass("a/x");
        r.fail("a/y", json!({"index": 3}));
        assert!(!r.all_passed());
        assert!(r.failures().all(|e| e.witness.is_some()));
        assert_eq!(r.status_of("a/x"), Some(Status::Pass));
    }

    #[test]
    fn duplicates_detected_and_round_trip() {
        let mut r = VerificationReport::new();
        r.pass("b");
        r.pass("a");
        r.pass("b");
        assert_eq!(r.finalize(), vec!["b".to_string()]);
        assert_eq!(r.entries[0].claim_id, "a");
        let back = VerificationReport::from_json(&r.to_json(true)).unwrap();
        assert_eq!(back, r);
    }
}
