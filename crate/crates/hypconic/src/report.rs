//! Verification report schema: `{theorem, cases: [{inputs, expected, got,
//! tol, pass}], pass}`. Pass/fail is decided only by the recorded
//! tolerances.

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CaseReport {
    pub inputs: Value,
    pub expected: Value,
    pub got: Value,
    pub tol: f64,
    pub pass: bool,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Report {
    pub theorem: String,
    pub cases: Vec<CaseReport>,
    pub pass: bool,
}

impl Report {
    pub fn new(theorem: impl Into<String>) -> Self {
        Self { theorem: theorem.into(), cases: Vec::new(), pass: true }
    }

    pub fn push(&mut self, inputs: Value, expected: Value, got: Value, tol: f64, pass: bool) {
        self.pass &= pass;
        self.cases.push(CaseReport { inputs, expected, got, tol, pass });
    }

    /// Numeric comparison case: passes when `|expected - got| <= tol`.
    pub fn check_value(&mut self, inputs: Value, expected: f64, got: f64, tol: f64) {
        let pass = (expected - got).abs() <= tol && got.is_finite();
        self.push(inputs, serde_json::json!(expected), serde_json::json!(got), tol, pass);
    }

    /// Threshold case: passes when `got <= tol`.
    pub fn check_below(&mut self, inputs: Value, got: f64, tol: f64) {
        let pass = got.is_finite() && got <= tol;
        self.push(inputs, serde_json::json!({"below": tol}), serde_json::json!(got), tol, pass);
    }

    /// Threshold case: passes when `got >= tol` (disagreement floors).
    pub fn check_above(&mut self, inputs: Value, got: f64, tol: f64) {
        let pass = got.is_finite() && got >= tol;
        self.push(inputs, serde_json::json!({"above": tol}), serde_json::json!(got), tol, pass);
    }

    pub fn check_bool(&mut self, inputs: Value, expected: bool, got: bool) {
        self.push(inputs, serde_json::json!(expected), serde_json::json!(got), 0.0, expected == got);
    }

    /// Merges a sub-report in.
    pub fn absorb(&mut self, other: Report) {
        self.pass &= other.pass;
        self.cases.extend(other.cases);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_flag_tracks_cases() {
        let mut r = Report::new("demo");
        r.check_value(serde_json::json!({"case": "a"}), 1.0, 1.0 + 1e-12, 1e-10);
        assert!(r.pass);
        r.check_value(serde_json::json!({"case": "b"}), 1.0, 2.0, 1e-10);
        assert!(!r.pass);
        assert_eq!(r.cases.len(), 2);
    }

    #[test]
    fn schema_fields() {
        let mut r = Report::new("demo");
        r.check_below(serde_json::json!({"case": "c"}), 0.5, 1.0);
        let v = serde_json::to_value(&r).unwrap();
        assert!(v.get("theorem").is_some());
        assert!(v.get("pass").is_some());
        let case = &v["cases"][0];
        for key in ["inputs", "expected", "got", "tol", "pass"] {
            assert!(case.get(key).is_some(), "missing {key}");
        }
    }
}
