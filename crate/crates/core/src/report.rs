//! Versioned JSON reports and their human-readable rendering.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::Value;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub checks: usize,
    pub failures: usize,
}

/// The structured output of one command. Verdicts come only from exact
/// computations; nothing time- or machine-dependent is recorded.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub schema_version: u32,
    pub command: String,
    pub arguments: BTreeMap<String, Value>,
    pub results: Value,
    pub checks: Vec<Check>,
    pub summary: Summary,
    pub passed: bool,
}

impl Report {
    pub fn new(command: &str, arguments: BTreeMap<String, Value>, results: Value, checks: Vec<Check>) -> Self {
        let failures = checks.iter().filter(|c| !c.passed).count();
        Report {
            schema_version: SCHEMA_VERSION,
            command: command.to_string(),
            arguments,
            results,
            summary: Summary { checks: checks.len(), failures },
            passed: failures == 0,
            checks,
        }
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.passed {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports are plain JSON values") + "\n"
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    /// Plain-text rendering of the structured report.
    pub fn to_human(&self) -> String {
        let value = serde_json::to_value(self).expect("reports are plain JSON values");
        let mut out = String::new();
        let _ = writeln!(out, "command: {} (schema {})", scalar(&value["command"]), value["schema_version"]);
        let verdict = if self.passed { "pass" } else { "FAIL" };
        let _ = writeln!(out, "verdict: {verdict} ({} checks, {} failures)", self.summary.checks, self.summary.failures);
        if !self.checks.is_empty() {
            let _ = writeln!(out, "checks:");
            for c in &self.checks {
                let _ = writeln!(out, "  {:<4} {}", if c.passed { "ok" } else { "FAIL" }, c.name);
            }
        }
        render_entry(&mut out, "arguments", &value["arguments"], 0);
        render_entry(&mut out, "results", &value["results"], 0);
        out
    }
}

fn is_scalar(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".to_string(),
        other => other.to_string(),
    }
}

fn as_matrix(v: &Value) -> Option<Vec<Vec<String>>> {
    let rows = v.as_array()?;
    if rows.is_empty() {
        return None;
    }
    let width = rows[0].as_array()?.len();
    rows.iter()
        .map(|r| {
            let r = r.as_array()?;
            (r.len() == width && r.iter().all(is_scalar)).then(|| r.iter().map(scalar).collect())
        })
        .collect()
}

fn render(out: &mut String, value: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                render_entry(out, k, v, depth);
            }
        }
        Value::Array(items) => {
            for item in items {
                if is_scalar(item) {
                    let _ = writeln!(out, "{pad}- {}", scalar(item));
                } else {
                    let _ = writeln!(out, "{pad}-");
                    render(out, item, depth + 1);
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other));
        }
    }
}

fn render_entry(out: &mut String, key: &str, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    if is_scalar(v) {
        let _ = writeln!(out, "{pad}{key}: {}", scalar(v));
    } else if let Some(rows) = as_matrix(v) {
        let width = rows.iter().flatten().map(String::len).max().unwrap_or(0);
        let _ = writeln!(out, "{pad}{key}:");
        for row in rows {
            let cells: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            let _ = writeln!(out, "{pad}  [{}]", cells.join(" "));
        }
    } else if let Some(items) = v.as_array().filter(|a| a.iter().all(is_scalar)) {
        let cells: Vec<String> = items.iter().map(scalar).collect();
        let _ = writeln!(out, "{pad}{key}: [{}]", cells.join(", "));
    } else {
        let _ = writeln!(out, "{pad}{key}:");
        render(out, v, depth + 1);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn round_trip_and_verdict() {
        let r = Report::new(
            "demo",
            BTreeMap::from([("input".to_string(), json!("x.json"))]),
            json!({"matrix": [[1, -1], [0, "1/2"]], "list": [1, 2], "nested": {"a": null}}),
            vec![Check { name: "ok".into(), passed: true }, Check { name: "bad".into(), passed: false }],
        );
        assert_eq!(r.summary, Summary { checks: 2, failures: 1 });
        assert_eq!(r.exit_code(), 1);
        let back = Report::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        let human = r.to_human();
        assert!(human.starts_with("command: demo (schema 1)\nverdict: FAIL (2 checks, 1 failures)\n"), "{human}");
        assert!(human.contains("  FAIL bad\n"));
        assert!(human.contains("  matrix:\n    [  1  -1]\n    [  0 1/2]\n"), "{human}");
        assert!(human.contains("list: [1, 2]"));
        assert!(human.contains("a: -"));
    }
}
