use num_bigint::BigInt;
use serde_json::{json, Map, Value};

use crate::linalg::{fmt_fraction, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

/// Result of one command: a JSON payload plus a flat table for CSV output.
///
/// `timing_ms` is reported on stderr only, so rendered output stays
/// byte-identical across runs.
#[derive(Debug, Clone, PartialEq)]
pub struct RunReport {
    pub command: &'static str,
    pub parameters: Map<String, Value>,
    pub result: Value,
    pub table: Vec<Vec<String>>,
    pub passed: bool,
    pub timing_ms: u128,
}

impl RunReport {
    pub fn new(command: &'static str, parameters: Map<String, Value>) -> Self {
        Self { command, parameters, result: Value::Null, table: Vec::new(), passed: true, timing_ms: 0 }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let doc = json!({
                    "command": self.command,
                    "parameters": self.parameters,
                    "passed": self.passed,
                    "result": self.result,
                });
                let mut text = serde_json::to_string_pretty(&doc).expect("values serialize");
                text.push('\n');
                text
            }
            Format::Csv => self.table.iter().map(|row| csv_line(row) + "\n").collect(),
        }
    }
}

fn csv_line(row: &[String]) -> String {
    row.iter()
        .map(|cell| {
            if cell.contains([',', '"', '\n']) {
                format!("\"{}\"", cell.replace('"', "\"\""))
            } else {
                cell.clone()
            }
        })
        .collect::<Vec<_>>()
        .join(",")
}

/// JSON number when it fits in `i64`, decimal string otherwise.
pub fn int_json(value: &BigInt) -> Value {
    match i64::try_from(value) {
        Ok(v) => Value::from(v),
        Err(_) => Value::from(value.to_string()),
    }
}

pub fn rat_json(value: &Rational) -> Value {
    Value::from(fmt_fraction(value))
}

pub fn opt_int_json(value: &Option<BigInt>) -> Value {
    value.as_ref().map_or(Value::Null, int_json)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_line(&["a".into(), "b,c".into(), "say \"hi\"".into()]), "a,\"b,c\",\"say \"\"hi\"\"\"");
    }

    #[test]
    fn big_integers_become_strings() {
        assert_eq!(int_json(&BigInt::from(5)), Value::from(5));
        let big = BigInt::from(i64::MAX) * 4;
        assert_eq!(int_json(&big), Value::from(big.to_string()));
    }
}
