use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{Map, Value};

/// Significant digits kept for every float in a report.
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Debug, Clone, Serialize)]
pub struct Report {
    pub command: String,
    pub parameters: Map<String, Value>,
    pub results: Map<String, Value>,
    pub pass: bool,
    pub tolerance: f64,
}

impl Report {
    pub fn new(command: &str, tolerance: f64) -> Self {
        Report {
            command: command.to_string(),
            parameters: Map::new(),
            results: Map::new(),
            pass: true,
            tolerance,
        }
    }

    pub fn param(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.parameters.insert(key.to_string(), to_value(value));
        self
    }

    pub fn result(&mut self, key: &str, value: impl Serialize) -> &mut Self {
        self.results.insert(key.to_string(), to_value(value));
        self
    }

    /// Records a residual and folds `residual < tolerance` into `pass`.
    pub fn check(&mut self, key: &str, residual: f64) -> &mut Self {
        self.pass &= residual < self.tolerance;
        self.result(key, residual)
    }

    pub fn require(&mut self, condition: bool) -> &mut Self {
        self.pass &= condition;
        self
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string_pretty(&to_value(self)).expect("report serializes");
        text.push('\n');
        text
    }

    pub fn to_text(&self) -> String {
        let doc = to_value(self);
        let mut out = String::new();
        writeln!(out, "command: {}", self.command).unwrap();
        for section in ["parameters", "results"] {
            writeln!(out, "{section}:").unwrap();
            if let Some(Value::Object(map)) = doc.get(section) {
                for (key, value) in map {
                    write_entry(&mut out, key, value);
                }
            }
        }
        writeln!(out, "tolerance: {}", doc["tolerance"]).unwrap();
        writeln!(out, "pass: {}", self.pass).unwrap();
        out
    }
}

fn write_entry(out: &mut String, key: &str, value: &Value) {
    match value {
        Value::Array(items)
            if items.iter().any(|v| v.is_array() || v.is_object()) && !is_complex(value) =>
        {
            writeln!(out, "  {key}:").unwrap();
            for item in items {
                writeln!(out, "    {}", inline(item)).unwrap();
            }
        }
        _ => writeln!(out, "  {key}: {}", inline(value)).unwrap(),
    }
}

fn is_complex(v: &Value) -> bool {
    matches!(v, Value::Array(a) if a.len() == 2 && a.iter().all(Value::is_number))
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn to_value(v: impl Serialize) -> Value {
    round_floats(serde_json::to_value(v).expect("report values serialize"))
}

pub fn round_sig(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { 0.0 } else { x };
    }
    format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x)
        .parse()
        .expect("formatted float parses")
}

fn round_floats(v: Value) -> Value {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = round_sig(n.as_f64().expect("f64"));
            serde_json::Number::from_f64(x).map_or(Value::Null, Value::Number)
        }
        Value::Array(items) => Value::Array(items.into_iter().map(round_floats).collect()),
        Value::Object(map) => {
            Value::Object(map.into_iter().map(|(k, v)| (k, round_floats(v))).collect())
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rounds_to_twelve_digits() {
        assert_eq!(round_sig(2.0 / 3.0), 0.666666666667);
        assert_eq!(round_sig(-1.234567890123456e-20), -1.23456789012e-20);
        assert_eq!(round_sig(-0.0).to_bits(), 0.0f64.to_bits());
    }

    #[test]
    fn check_folds_into_pass() {
        let mut r = Report::new("t", 1e-3);
        r.check("a", 1e-4);
        assert!(r.pass);
        r.check("b", 1e-2);
        assert!(!r.pass);
    }

    #[test]
    fn text_and_json_carry_the_same_numbers() {
        let mut r = Report::new("t", 1e-10);
        r.param("x", 1.0 / 3.0)
            .result("rows", vec![[1.0 / 7.0, 0.0]]);
        assert!(r.to_json().contains("0.333333333333"));
        assert!(r.to_text().contains("x: 0.333333333333"));
        assert!(r.to_text().contains("[0.142857142857,0.0]"));
    }
}
