//! Machine-readable report documents.
//!
//! Every subcommand emits one [`ReportDocument`]: the command name, the
//! parameters it ran with, a list of verdicts (each carrying the numeric
//! deviation and the tolerance it was judged against), and an optional
//! payload with the requested matrices, vectors or tables.
//!
//! JSON output is canonicalized through `serde_json::Value`, whose object
//! maps are ordered, so keys are sorted and bytes are reproducible across
//! runs. Complex numbers are serialized as `{re, im}` objects with full
//! double precision. CSV dumps print every float with 17 significant digits
//! so that parsing them back recovers the exact bit pattern.

use std::collections::BTreeMap;

use dihedral_kinematics::verify::CheckResult;
use ndarray::{Array1, Array2};
use num_complex::Complex64;
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub check: String,
    pub pass: bool,
    pub max_deviation: f64,
    pub tolerance: f64,
}

impl From<&CheckResult> for Verdict {
    fn from(check: &CheckResult) -> Self {
        Verdict {
            check: check.name.clone(),
            pass: check.pass,
            max_deviation: check.max_deviation,
            tolerance: check.tolerance,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReportDocument {
    pub command: String,
    pub parameters: BTreeMap<String, Value>,
    pub verdicts: Vec<Verdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub payload: Option<Value>,
}

impl ReportDocument {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            parameters: BTreeMap::new(),
            verdicts: Vec::new(),
            payload: None,
        }
    }

    pub fn parameter(&mut self, key: &str, value: impl Into<Value>) {
        self.parameters.insert(key.to_string(), value.into());
    }

    pub fn verdict(&mut self, check: &str, max_deviation: f64, tolerance: f64) {
        self.verdicts.push(Verdict {
            check: check.to_string(),
            pass: max_deviation <= tolerance,
            max_deviation,
            tolerance,
        });
    }

    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    /// Canonical JSON: round-tripped through `Value` so every object's keys
    /// come out sorted.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serialization cannot fail");
        serde_json::to_string_pretty(&value).expect("value printing cannot fail")
    }
}

/// `{re, im}` object for one complex number.
pub fn complex_value(z: Complex64) -> Value {
    json!({ "re": z.re, "im": z.im })
}

pub fn vector_value(v: &Array1<Complex64>) -> Value {
    Value::Array(v.iter().map(|z| complex_value(*z)).collect())
}

pub fn matrix_value(m: &Array2<Complex64>) -> Value {
    Value::Array(
        m.rows()
            .into_iter()
            .map(|row| Value::Array(row.iter().map(|z| complex_value(*z)).collect()))
            .collect(),
    )
}

/// One float with 17 significant digits; parses back to the identical f64.
pub fn csv_float(x: f64) -> String {
    format!("{:.16e}", x)
}

/// Matrix as CSV: one row per line, each complex entry contributing the
/// adjacent fields `re, im`.
pub fn matrix_csv(m: &Array2<Complex64>) -> String {
    let mut out = String::new();
    for row in m.rows() {
        let fields: Vec<String> = row
            .iter()
            .flat_map(|z| [csv_float(z.re), csv_float(z.im)])
            .collect();
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

/// Vector as CSV: one component per line as `re, im`.
pub fn vector_csv(v: &Array1<Complex64>) -> String {
    let mut out = String::new();
    for z in v.iter() {
        out.push_str(&csv_float(z.re));
        out.push(',');
        out.push_str(&csv_float(z.im));
        out.push('\n');
    }
    out
}

/// Parses a matrix back from [`matrix_csv`] output.
#[cfg(test)]
pub fn parse_matrix_csv(text: &str) -> Result<Array2<Complex64>, String> {
    let mut rows: Vec<Vec<Complex64>> = Vec::new();
    for line in text.lines() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Vec<&str> = line.split(',').collect();
        if fields.len() % 2 != 0 {
            return Err(format!("odd field count in row {:?}", line));
        }
        let mut row = Vec::with_capacity(fields.len() / 2);
        for pair in fields.chunks(2) {
            let re: f64 = pair[0].trim().parse().map_err(|e| format!("{e}"))?;
            let im: f64 = pair[1].trim().parse().map_err(|e| format!("{e}"))?;
            row.push(Complex64::new(re, im));
        }
        rows.push(row);
    }
    let height = rows.len();
    let width = rows.first().map_or(0, |r| r.len());
    if rows.iter().any(|r| r.len() != width) {
        return Err("ragged rows".to_string());
    }
    Array2::from_shape_vec((height, width), rows.into_iter().flatten().collect())
        .map_err(|e| format!("{e}"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;
    use proptest::prelude::*;

    proptest! {
        #[test]
        fn seventeen_digit_floats_round_trip(bits in any::<u64>()) {
            let x = f64::from_bits(bits);
            prop_assume!(x.is_finite());
            let parsed: f64 = csv_float(x).parse().unwrap();
            prop_assert_eq!(parsed.to_bits(), x.to_bits());
        }
    }

    #[test]
    fn csv_round_trip_is_exact() {
        let m = array![
            [
                Complex64::new(1.0 / 3.0, -2.0 / 7.0),
                Complex64::new(std::f64::consts::PI, 1e-300)
            ],
            [
                Complex64::new(-0.0, f64::MIN_POSITIVE),
                Complex64::new(2.0_f64.sqrt(), -1.0)
            ]
        ];
        let text = matrix_csv(&m);
        let back = parse_matrix_csv(&text).unwrap();
        assert_eq!(m, back);
    }

    #[test]
    fn json_keys_are_sorted_and_stable() {
        let mut report = ReportDocument::new("demo");
        report.parameter("n", 3);
        report.parameter("element", "R1");
        report.verdict("unitarity", 0.0, 1e-12);
        report.payload = Some(complex_value(Complex64::new(0.5, -0.5)));
        let a = report.to_json();
        let b = report.to_json();
        assert_eq!(a, b);
        // object keys appear in sorted order
        let command_pos = a.find("\"command\"").unwrap();
        let parameters_pos = a.find("\"parameters\"").unwrap();
        let payload_pos = a.find("\"payload\"").unwrap();
        let verdicts_pos = a.find("\"verdicts\"").unwrap();
        assert!(command_pos < parameters_pos);
        assert!(parameters_pos < payload_pos);
        assert!(payload_pos < verdicts_pos);
        let im_pos = a.find("\"im\"").unwrap();
        let re_pos = a.find("\"re\"").unwrap();
        assert!(im_pos < re_pos);
    }
}
