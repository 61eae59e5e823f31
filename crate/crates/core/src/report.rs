//! Outcome of a named exhaustive check.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde_json::{json, Map, Value};

/// A self-contained counterexample: named values in the text forms of
/// permutations and tableaux.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness {
    fields: Vec<(String, String)>,
}

impl Witness {
    pub fn new() -> Self {
        Witness::default()
    }

    pub fn with(mut self, name: &str, value: impl ToString) -> Self {
        self.fields.push((name.to_string(), value.to_string()));
        self
    }

    pub fn get(&self, name: &str) -> Option<&str> {
        self.fields
            .iter()
            .find(|(k, _)| k == name)
            .map(|(_, v)| v.as_str())
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }

    fn to_json(&self) -> Value {
        let map: Map<String, Value> = self
            .fields
            .iter()
            .map(|(k, v)| (k.clone(), Value::String(v.clone())))
            .collect();
        Value::Object(map)
    }
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for (i, (k, v)) in self.fields.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{k}={v}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub check: String,
    pub range: String,
    pub checked: u64,
    /// Cases outside the statement's hypothesis, counted but not checked.
    pub skipped: u64,
    /// Set for checks whose purpose is to reproduce a known counterexample.
    /// Such a check passes when it finds violations.
    pub expect_violations: bool,
    pub violations: Vec<Witness>,
    pub note: Option<String>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn new(check: &str, range: impl Into<String>) -> Self {
        VerificationReport {
            check: check.to_string(),
            range: range.into(),
            checked: 0,
            skipped: 0,
            expect_violations: false,
            violations: Vec::new(),
            note: None,
            elapsed: Duration::ZERO,
        }
    }

    pub fn passed(&self) -> bool {
        self.violations.is_empty() != self.expect_violations
    }

    pub(crate) fn timed<F: FnOnce(&mut VerificationReport)>(mut self, body: F) -> Self {
        let start = Instant::now();
        body(&mut self);
        self.elapsed = start.elapsed();
        self
    }

    /// Report fields as JSON. `elapsed_ms` is only included when
    /// `with_timing` is set, so that output without it is reproducible
    /// byte for byte.
    pub fn to_json(&self, with_timing: bool) -> Value {
        let mut obj = json!({
            "check": self.check,
            "range": self.range,
            "checked": self.checked,
            "passed": self.passed(),
            "violations": self.violations.iter().map(Witness::to_json).collect::<Vec<_>>(),
        });
        let map = obj.as_object_mut().expect("object literal");
        if self.skipped > 0 {
            map.insert("skipped".into(), json!(self.skipped));
        }
        if self.expect_violations {
            map.insert("expect_violations".into(), json!(true));
        }
        if let Some(note) = &self.note {
            map.insert("note".into(), json!(note));
        }
        if with_timing {
            map.insert("elapsed_ms".into(), json!(self.elapsed.as_millis() as u64));
        }
        obj
    }

    pub fn to_text(&self, with_timing: bool) -> String {
        let mut out = String::new();
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let _ = write!(
            out,
            "[{status}] {} ({}): checked {}, {} violation{}",
            self.check,
            self.range,
            self.checked,
            self.violations.len(),
            if self.violations.len() == 1 { "" } else { "s" }
        );
        if self.expect_violations {
            out.push_str(" (expected)");
        }
        if self.skipped > 0 {
            let _ = write!(out, ", {} skipped", self.skipped);
        }
        if with_timing {
            let _ = write!(out, " in {} ms", self.elapsed.as_millis());
        }
        out.push('\n');
        if let Some(note) = &self.note {
            let _ = writeln!(out, "  note: {note}");
        }
        for w in &self.violations {
            let _ = writeln!(out, "  witness: {w}");
        }
        out
    }
}
