use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use wordpoly::oracle::CheckOutcome;
use wordpoly::EnumerationBudget;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum VerdictStatus {
    Pass,
    Skipped,
    Fail,
}

/// The outcome of one theorem or identity check performed by a command.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub check: String,
    pub status: VerdictStatus,
    pub detail: String,
}

impl Verdict {
    pub fn new(check: &str, status: VerdictStatus, detail: impl Into<String>) -> Self {
        Verdict {
            check: check.into(),
            status,
            detail: detail.into(),
        }
    }

    pub fn pass(check: &str, detail: impl Into<String>) -> Self {
        Verdict::new(check, VerdictStatus::Pass, detail)
    }

    pub fn fail(check: &str, detail: impl Into<String>) -> Self {
        Verdict::new(check, VerdictStatus::Fail, detail)
    }

    pub fn skipped(check: &str, detail: impl Into<String>) -> Self {
        Verdict::new(check, VerdictStatus::Skipped, detail)
    }

    /// `Pass` when `holds`, `Fail` otherwise.
    pub fn expect(check: &str, holds: bool, detail: impl Into<String>) -> Self {
        let status = if holds { VerdictStatus::Pass } else { VerdictStatus::Fail };
        Verdict::new(check, status, detail)
    }

    pub fn from_outcome(check: &str, outcome: &CheckOutcome) -> Self {
        match outcome {
            CheckOutcome::Passed(d) => Verdict::pass(check, d.clone()),
            CheckOutcome::Skipped(d) => Verdict::skipped(check, d.clone()),
            CheckOutcome::Failed(d) => Verdict::fail(check, d.clone()),
        }
    }
}

/// Everything a command computed, in a form that renders identically for
/// identical inputs.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub command: String,
    pub argv: Vec<String>,
    pub inputs: BTreeMap<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub budget: Option<EnumerationBudget>,
    pub results: Value,
    pub verdicts: Vec<Verdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<f64>,
}

impl AnalysisReport {
    pub fn new(command: &str, argv: Vec<String>) -> Self {
        AnalysisReport {
            command: command.into(),
            argv,
            inputs: BTreeMap::new(),
            budget: None,
            results: Value::Null,
            verdicts: Vec::new(),
            timing_ms: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.into(), value.into());
        self
    }

    pub fn any_failed(&self) -> bool {
        self.verdicts.iter().any(|v| v.status == VerdictStatus::Fail)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports contain only JSON-representable values")
    }

    pub fn from_json(text: &str) -> serde_json::Result<Self> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        for (k, v) in &self.inputs {
            writeln!(out, "input {k}: {}", scalar(v)).unwrap();
        }
        if let Some(b) = &self.budget {
            let letters: Vec<String> = b.alphabet.iter().map(u32::to_string).collect();
            writeln!(
                out,
                "budget: alphabet {{{}}}, max total length {}",
                letters.join(","),
                b.max_total_length
            )
            .unwrap();
        }
        write_value(&mut out, "", &self.results, 0);
        for v in &self.verdicts {
            let tag = match v.status {
                VerdictStatus::Pass => "PASS",
                VerdictStatus::Skipped => "SKIP",
                VerdictStatus::Fail => "FAIL",
            };
            writeln!(out, "[{tag}] {}: {}", v.check, v.detail).unwrap();
        }
        if let Some(t) = self.timing_ms {
            writeln!(out, "time: {t:.3} ms").unwrap();
        }
        out
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    match v {
        Value::Array(a) => a.iter().all(|x| !x.is_array() && !x.is_object()),
        Value::Object(_) => false,
        _ => true,
    }
}

fn write_value(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Null if key.is_empty() => {}
        Value::Object(map) => {
            let inner = if key.is_empty() {
                depth
            } else {
                writeln!(out, "{pad}{key}:").unwrap();
                depth + 1
            };
            for (k, x) in map {
                write_value(out, k, x, inner);
            }
        }
        Value::Array(items) if !is_flat(v) || items.len() > 8 => {
            writeln!(out, "{pad}{key}: ({} items)", items.len()).unwrap();
            for x in items {
                if is_flat(x) {
                    writeln!(out, "{pad}  - {}", render_flat(x)).unwrap();
                } else {
                    writeln!(out, "{pad}  -").unwrap();
                    write_value(out, "", x, depth + 2);
                }
            }
        }
        _ => writeln!(out, "{pad}{key}: {}", render_flat(v)).unwrap(),
    }
}

fn render_flat(v: &Value) -> String {
    match v {
        Value::Array(a) => format!("[{}]", a.iter().map(scalar).collect::<Vec<_>>().join(", ")),
        other => scalar(other),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip() {
        let mut r = AnalysisReport::new("encode", vec!["encode".into(), "1212".into()]);
        r.input("word", "1212");
        r.budget = Some(EnumerationBudget::default());
        r.results = json!({"polynomial": "1 + 2X + X^2 + 2X^3", "terms": 4});
        r.verdicts.push(Verdict::pass("identity", "ok"));
        let back = AnalysisReport::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn text_lists_verdicts() {
        let mut r = AnalysisReport::new("x", vec![]);
        r.results = json!({"rows": [[1, 2], [3]], "n": 3});
        r.verdicts.push(Verdict::fail("bound", "exceeded"));
        let t = r.to_text();
        assert!(t.contains("n: 3"));
        assert!(t.contains("  - [1, 2]"));
        assert!(t.contains("[FAIL] bound: exceeded"));
        assert!(r.any_failed());
    }
}
