use serde::Serialize;
use serde_json::{json, Value};

use crate::exact_linalg::{render_rational, ExactScalar, MatrixQ, MatrixQi};

use super::config::ConfigEcho;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

impl Verdict {
    pub fn new(name: impl Into<String>, pass: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            pass,
            detail: detail.into(),
        }
    }
}

/// A full report. Serializes to an object with keys `config`, `results`, `verdicts`, `version`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ReportDocument {
    pub config: ConfigEcho,
    pub results: Value,
    pub verdicts: Vec<Verdict>,
    pub version: &'static str,
}

impl ReportDocument {
    pub fn all_pass(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    /// `0` when every verdict passes, `1` otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_pass() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let c = &self.config;
        out.push_str(&format!(
            "spcoad {} {}  n={} r={}",
            self.version,
            c.command.name(),
            c.n,
            c.r
        ));
        if !c.lambdas.is_empty() {
            out.push_str(&format!(" lambdas=({})", c.lambdas.join(", ")));
        }
        out.push_str(&format!(" seed={} samples={}\n\n", c.seed, c.samples));
        render_text(&self.results, 0, &mut out);
        out.push('\n');
        for v in &self.verdicts {
            let tag = if v.pass { "PASS" } else { "FAIL" };
            if v.detail.is_empty() {
                out.push_str(&format!("{tag}  {}\n", v.name));
            } else {
                out.push_str(&format!("{tag}  {}: {}\n", v.name, v.detail));
            }
        }
        let passed = self.verdicts.iter().filter(|v| v.pass).count();
        out.push_str(&format!(
            "\n{passed}/{} verdicts pass\n",
            self.verdicts.len()
        ));
        out
    }
}

fn is_scalar_row(v: &Value) -> bool {
    matches!(v, Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()))
}

fn is_flat(v: &Value) -> bool {
    !v.is_array() || is_scalar_row(v)
}

fn inline(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(a) => format!("[{}]", a.iter().map(inline).collect::<Vec<_>>().join(", ")),
        other => other.to_string(),
    }
}

fn render_text(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render_text(x, indent + 1, out);
                    }
                    Value::Array(a) if !is_scalar_row(x) && !a.iter().all(is_scalar_row) => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        for item in a {
                            match item {
                                Value::Object(m)
                                    if m.values().all(|x| !x.is_object() && is_flat(x)) =>
                                {
                                    let fields: Vec<String> = m
                                        .iter()
                                        .map(|(k, x)| format!("{k}={}", inline(x)))
                                        .collect();
                                    out.push_str(&format!("{pad}  - {}\n", fields.join(" ")));
                                }
                                _ => {
                                    out.push_str(&format!("{pad}  -\n"));
                                    render_text(item, indent + 2, out);
                                }
                            }
                        }
                    }
                    _ => out.push_str(&format!("{pad}{k}: {}\n", inline(x))),
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", inline(other))),
    }
}

pub fn q_json(x: &ExactScalar) -> Value {
    Value::String(render_rational(x))
}

pub fn vec_json(v: &[ExactScalar]) -> Value {
    Value::Array(v.iter().map(q_json).collect())
}

/// Row-major nested arrays of `p/q` strings.
pub fn matrix_json(m: &MatrixQ) -> Value {
    Value::Array((0..m.rows()).map(|i| vec_json(m.row(i))).collect())
}

/// Real and imaginary parts as separate rational matrices.
pub fn complex_matrix_json(m: &MatrixQi) -> Value {
    json!({ "re": matrix_json(&m.real_part()), "im": matrix_json(&m.imag_part()) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact_linalg::{frac, q};

    #[test]
    fn rationals_render_exactly() {
        let m = MatrixQ::from_rows(vec![vec![q(1), frac(-3, 6)], vec![q(0), frac(7, 2)]]).unwrap();
        assert_eq!(matrix_json(&m), json!([["1", "-1/2"], ["0", "7/2"]]));
    }

    #[test]
    fn text_rendering_is_flat() {
        let mut out = String::new();
        render_text(
            &json!({"a": 1, "b": {"c": ["1/2", "3"]}, "d": [{"e": true, "w": ["1"]}]}),
            0,
            &mut out,
        );
        assert_eq!(out, "a: 1\nb:\n  c: [1/2, 3]\nd:\n  - e=true w=[1]\n");
    }
}
